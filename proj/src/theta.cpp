#include "rstk/theta.hpp"

#include <algorithm>
#include <cmath>

namespace rstk {

namespace {

double wrap_angle(double phi)
{
    if (!std::isfinite(phi))
        throw DomainError("CirclePoint: angle must be finite");
    double w = std::remainder(phi, 2.0 * pi);  // [-pi, pi]
    if (w >= pi)
        w -= 2.0 * pi;
    return w;
}

int theta_order(double nome, const TruncationPolicy& policy)
{
    if (!(nome >= 0.0 && nome < 1.0))
        throw DomainError("theta: nome must lie in [0,1)");
    if (nome == 0.0)
        return 0;
    const double tol = std::max(policy.abs_tol, 1e-300);
    const double l = std::ceil(std::sqrt(std::log(tol) / std::log(nome))) + 2.0;
    if (l > policy.max_terms)
        throw NonConvergence("theta: nome too close to 1 for the term budget");
    return static_cast<int>(l);
}

}  // namespace

CirclePoint::CirclePoint(double phi, const QParameter& q)
    : phi_(wrap_angle(phi)), q_(q), z_(-std::polar(1.0 / q.sqrt_q(), phi_))
{
}

namespace {

// nome = exp(-pi t). For t < 1 the Poisson-summed forms converge faster and keep theta3
// strictly positive:
//   theta3 = t^{-1/2} sum_k exp(-(x - pi k)^2 / (pi t))
//   theta1 = -t^{-1/2} sum_k (-1)^k exp(-(x - pi (k - 1/2))^2 / (pi t))
bool use_transform(double nome)
{
    return nome > std::exp(-pi);
}

// x is first reduced to |y| <= pi/2 (theta3 has period pi, theta1 flips sign). The
// terms are then summed in mirrored pairs so the parity in y holds exactly.
SeriesValue theta_transformed(double x, double nome, bool odd, const TruncationPolicy& policy)
{
    const double t = -std::log(nome) / pi;
    const double tol = std::max(policy.abs_tol, 1e-300);
    const int span = static_cast<int>(std::ceil(std::sqrt(-std::log(tol) * t / pi))) + 2;
    const double m = std::nearbyint(x / pi);
    const double y = x - m * pi;
    const double c = pi * t;
    double s = 0.0;
    if (odd) {
        const double ay = std::abs(y);
        for (int k = span + 1; k >= 1; --k) {
            const double a = pi * (k - 0.5);
            const double pair = -std::exp(-(ay - a) * (ay - a) / c) * std::expm1(-4.0 * ay * a / c);
            s += (k % 2 == 0) ? pair : -pair;
        }
        if (y > 0.0)
            s = -s;
        if (std::fmod(m, 2.0) != 0.0)
            s = -s;
    } else {
        for (int k = span; k >= 1; --k) {
            const double a = pi * k;
            s += std::exp(-(y - a) * (y - a) / c) + std::exp(-(y + a) * (y + a) / c);
        }
        s += std::exp(-y * y / c);
    }
    SeriesValue out;
    out.value = s / std::sqrt(t);
    out.terms = 2 * span + 1;
    // every dropped term sits at least (span + 1/2) pi from y
    const double lead = std::exp(-pi * (span + 0.5) * (span + 0.5) / t);
    out.error_bound = 2.0 * lead / (std::sqrt(t) * (1.0 - std::exp(-pi / t)));
    return out;
}

}  // namespace

SeriesValue theta3(double x, double nome, const TruncationPolicy& policy)
{
    if (nome < 1.0 && use_transform(nome))
        return theta_transformed(x, nome, false, policy);
    const int order = theta_order(nome, policy);
    SeriesValue out;
    double s = 0.0;
    for (int l = order; l >= 1; --l)
        s += std::pow(nome, double(l) * l) * std::cos(2.0 * l * x);
    out.value = 1.0 + 2.0 * s;
    out.terms = order + 1;
    if (nome > 0.0) {
        const double lead = std::pow(nome, double(order + 1) * (order + 1));
        out.error_bound = 2.0 * lead / (1.0 - std::pow(nome, 2.0 * order + 3.0));
    }
    return out;
}

SeriesValue theta1(double x, double nome, const TruncationPolicy& policy)
{
    if (nome < 1.0 && use_transform(nome))
        return theta_transformed(x, nome, true, policy);
    const int order = theta_order(nome, policy);
    SeriesValue out;
    if (nome == 0.0)
        return out;
    double s = 0.0;
    for (int l = order; l >= 0; --l) {
        const double h = l + 0.5;
        const double t = std::pow(nome, h * h) * std::sin((2.0 * l + 1.0) * x);
        s += (l % 2 == 0) ? t : -t;
    }
    out.value = 2.0 * s;
    out.terms = order + 1;
    const double h = order + 1.5;
    out.error_bound = 2.0 * std::pow(nome, h * h) / (1.0 - std::pow(nome, 2.0 * order + 4.0));
    return out;
}

double szego_measure(const CirclePoint& p)
{
    return theta3(0.5 * p.phi(), p.q().sqrt_q()).real();
}

cplx measure_decomposition(const CirclePoint& p)
{
    const double nome = p.q().sqrt_q();
    const double t0 = theta3(0.0, nome).real();
    const double t3 = theta3(0.25 * p.phi(), nome).real();
    const double t1 = theta1(0.25 * p.phi(), nome).real();
    return cplx(t3 * t3, t1 * t1) / (t0 * std::sqrt(t0));
}

SeriesValue ramanujan_f(cplx a, cplx b, const TruncationPolicy& policy)
{
    const cplx ab = a * b;
    const double rho = std::abs(ab);
    if (!(rho < 1.0))
        throw DomainError("ramanujan_f: |ab| must be < 1");

    // t_{l+1} = t_l a (ab)^l for l >= 0 and s_{k+1} = s_k b (ab)^k for the negative side
    auto one_side = [&](cplx first, cplx step) {
        SeriesValue side;
        cplx term = first;
        cplx ratio = step;
        cplx sum{};
        for (int l = 0; l < policy.max_terms; ++l) {
            sum += term;
            const double r = std::abs(ratio);
            if (term == cplx{} || (std::abs(term) < policy.abs_tol && r < 1.0)) {
                side.value = sum;
                side.terms = l + 1;
                side.error_bound = term == cplx{} ? 0.0 : std::abs(term) * r / (1.0 - r);
                return side;
            }
            term *= ratio;
            ratio *= ab;
        }
        throw NonConvergence("ramanujan_f: term budget exhausted");
    };

    const SeriesValue pos = one_side(cplx{1.0, 0.0}, a);
    const SeriesValue neg = one_side(b, b * ab);
    SeriesValue out;
    out.value = pos.value + neg.value;
    out.error_bound = pos.error_bound + neg.error_bound;
    out.terms = pos.terms + neg.terms;
    return out;
}

}  // namespace rstk
