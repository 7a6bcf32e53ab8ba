#include "rstk/rsfunctions.hpp"

#include <algorithm>
#include <cmath>

#include "rstk/polynomials.hpp"

namespace rstk {

namespace {

const cplx I{0.0, 1.0};

// z^s on the circle chart, z = q^{shift - 1/2} e^{i(phi + pi)}
cplx chart_power(const CirclePoint& p, int shift, double s)
{
    const double log_abs = (shift - 0.5) * p.q().log();
    return std::exp(s * cplx(log_abs, p.arg_z()));
}

cplx ipow(int r)
{
    switch (((r % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

}  // namespace

WeightValue weight(const CirclePoint& p)
{
    const double nome = p.q().sqrt_q();
    WeightValue w;
    w.F = theta3(0.25 * p.phi(), nome).value;
    w.G = theta1(0.25 * p.phi(), nome).value;
    w.M = measure_decomposition(p);
    return w;
}

namespace {

// a = log z^{1/2}
cplx f_series(double lq, cplx a, int order)
{
    cplx sum{};
    for (int l = -order; l <= order; ++l) {
        // (-i)^l q^{l(l+1/2)/2} z^{l/2}
        sum += std::exp(cplx(0.5 * l * (l + 0.5) * lq, -0.5 * pi * l) + double(l) * a);
    }
    return sum;
}

cplx g_series(double lq, cplx a, int order)
{
    cplx sum{};
    for (int l = -order; l <= order; ++l) {
        // i^{l+1/2} q^{(l+1/2)(l+1)/2} z^{(l+1/2)/2}, principal branch of i^{1/2}
        const double h = l + 0.5;
        sum += std::exp(cplx(0.5 * h * (l + 1.0) * lq, 0.5 * pi * h) + h * a);
    }
    return -sum;
}

}  // namespace

WeightValue weight_series(const CirclePoint& p, int shift)
{
    const double lq = p.q().log();
    // term magnitudes are q^{l^2/2 + l s/2}; the window covers the peak plus a Gaussian tail
    const int span = shift < 0 ? -shift : shift;
    const int order = span + static_cast<int>(std::ceil(std::sqrt(80.0 / -lq))) + 2;
    const cplx a(0.5 * (shift - 0.5) * lq, 0.5 * p.arg_z());

    WeightValue w;
    w.F = f_series(lq, a, order);
    w.G = g_series(lq, a, order);
    // F(-q^{-1/2}): phi = 0, no shift, arg z = pi
    const cplx f0 = f_series(lq, cplx(-0.25 * lq, 0.5 * pi), order);
    w.M = std::pow(f0, -1.5) * (w.F * w.F + I * w.G * w.G);
    return w;
}

cplx weight_at(const LatticePoint& p)
{
    const cplx m0 = measure_decomposition(p.base());
    const int r = p.shift();
    if (r == 0)
        return m0;
    const cplx z = p.base().z();
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    return sign * p.q().pow(-r * (r + 0.5)) * std::pow(z, -r) * m0;
}

cplx rs_function(int n, const CirclePoint& p)
{
    return rs_poly_normalized(n, p.z(), p.q()) * measure_decomposition(p);
}

cplx rs_function(int n, const LatticePoint& p)
{
    return rs_poly_normalized(n, p.z(), p.q()) * weight_at(p);
}

std::vector<cplx> rs_function_sequence(int count, const CirclePoint& p)
{
    std::vector<cplx> r = rs_poly_normalized_sequence(count, p.z(), p.q());
    const cplx m = measure_decomposition(p);
    for (cplx& v : r)
        v *= m;
    return r;
}

std::vector<cplx> rs_function_sequence(int count, const LatticePoint& p)
{
    std::vector<cplx> r = rs_poly_normalized_sequence(count, p.z(), p.q());
    const cplx m = weight_at(p);
    for (cplx& v : r)
        v *= m;
    return r;
}

Eigen::MatrixXcd rs_gram_matrix(const QParameter& q, int count, const QuadratureRule& rule)
{
    if (rule.kind() != RuleKind::periodic_trapezoid)
        throw DomainError("rs_gram_matrix: needs a periodic rule");
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(count, count);
    Eigen::VectorXcd v(count);
    const auto x = rule.nodes();
    const auto w = rule.weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::vector<cplx> psi = rs_function_sequence(count, CirclePoint(x[i], q));
        for (int k = 0; k < count; ++k)
            v(k) = psi[k];
        g.noalias() += w[i] * v.conjugate() * v.transpose();
    }
    return g;
}

ScalingResiduals scaling_relations_check(int r, const CirclePoint& p)
{
    const QParameter& q = p.q();
    const WeightValue w0 = weight_series(p, 0);
    const double scale_fg = std::abs(w0.F) + std::abs(w0.G);
    ScalingResiduals out;

    {
        const WeightValue ws = weight_series(p, 2 * r);
        const cplx pref = q.pow(-0.5 * r * (r + 0.5)) * chart_power(p, 0, -0.5 * r);
        out.F_even = std::abs(ws.F - ipow(r) * pref * w0.F) / (std::abs(pref) * scale_fg);
        out.G_even = std::abs(ws.G - ipow(-r) * pref * w0.G) / (std::abs(pref) * scale_fg);
        const cplx pref_m = (r % 2 == 0 ? 1.0 : -1.0) * q.pow(-r * (r + 0.5)) * chart_power(p, 0, -double(r));
        out.M_even = std::abs(ws.M - pref_m * w0.M) / std::abs(pref_m * w0.M);
    }
    {
        const double h = r + 0.5;
        const WeightValue ws = weight_series(p, 2 * r + 1);
        const cplx pref = q.pow(-0.5 * h * (r + 1.0)) * chart_power(p, 0, -0.5 * h);
        // i^{h}, (-i)^{h}, (-1)^{h} on the principal branch
        const cplx ih = std::polar(1.0, 0.5 * pi * h);
        const cplx mih = std::polar(1.0, -0.5 * pi * h);
        const cplx m1h = std::polar(1.0, pi * h);
        out.F_odd = std::abs(ws.F - ih * pref * w0.F) / (std::abs(pref) * scale_fg);
        out.G_odd = std::abs(ws.G - mih * pref * w0.G) / (std::abs(pref) * scale_fg);
        const cplx pref_m = q.pow(-h * (r + 1.0)) * chart_power(p, 0, -h);
        out.M_odd = std::abs(ws.M - m1h * pref_m * std::conj(w0.M)) / std::abs(pref_m * w0.M);
    }
    return out;
}

double rs_function_bound(const QParameter& q)
{
    // |R_n|^2 <= e_q(q^{1/2})^2 / (2 pi (q;q)_inf) on the circle, |M|^2 <= theta3(0|q^{1/2})
    const double e = q_exponential(q.sqrt_q(), q).real();
    const double qq = q_pochhammer_inf(q.value(), q).real();
    return e * e / (2.0 * pi * qq) * theta3(0.0, q.sqrt_q()).real();
}

cplx bilinear_kernel(double beta, double phi, double eps, const QParameter& q)
{
    if (!(eps >= 0.0 && eps < 1.0))
        throw DomainError("bilinear_kernel: eps must lie in [0,1)");
    const double qv = q.value();
    const double sq = q.sqrt_q();
    const cplx d = std::polar(1.0, phi - beta);
    const cplx num = q_pochhammer_inf(qv * eps * eps * d, q).value;
    const cplx den = q_pochhammer_inf(eps * d, q).value * q_pochhammer_inf(-sq * eps * std::polar(1.0, -beta), q).value *
                     q_pochhammer_inf(-sq * eps * std::polar(1.0, phi), q).value *
                     q_pochhammer_inf(qv * eps, q).value;
    const cplx eb = measure_decomposition(CirclePoint(beta, q));
    const cplx ep = measure_decomposition(CirclePoint(phi, q));
    return num * std::conj(eb) * ep / (2.0 * pi * den);
}

SeriesValue bilinear_kernel_series(double beta, double phi, double eps, const QParameter& q, int order, double tol)
{
    if (!(eps >= 0.0 && eps < 1.0))
        throw DomainError("bilinear_kernel_series: eps must lie in [0,1)");
    SeriesValue out;
    out.error_bound = std::pow(eps, order) / (1.0 - eps) * rs_function_bound(q);
    if (out.error_bound > tol)
        throw NonConvergence("bilinear_kernel_series: eps too close to 1 for the truncation order");
    const std::vector<cplx> a = rs_function_sequence(order, CirclePoint(beta, q));
    const std::vector<cplx> b = rs_function_sequence(order, CirclePoint(phi, q));
    double en = 1.0;
    for (int n = 0; n < order; ++n) {
        out.value += en * std::conj(a[n]) * b[n];
        en *= eps;
    }
    out.terms = order;
    return out;
}

double kernel_reproducing_check(int n, double phi, double eps, const QParameter& q, const QuadratureRule& rule)
{
    auto f = [&](double beta) { return bilinear_kernel(beta, phi, eps, q) * rs_function(n, CirclePoint(beta, q)); };
    const cplx lhs = integrate(f, rule, 1e-12).value;
    return std::abs(lhs - std::pow(eps, n) * rs_function(n, CirclePoint(phi, q)));
}

double kernel_semigroup_check(double gamma, double phi, double eps, double eps2, const QParameter& q,
                              const QuadratureRule& rule)
{
    auto f = [&](double beta) { return bilinear_kernel(beta, phi, eps, q) * bilinear_kernel(gamma, beta, eps2, q); };
    const cplx lhs = integrate(f, rule, 1e-12).value;
    return std::abs(lhs - bilinear_kernel(gamma, phi, eps * eps2, q));
}

DerivativeResiduals q_derivative_identities_check(int n, const CirclePoint& p)
{
    if (n < 0)
        throw DomainError("q_derivative_identities_check: negative degree");
    const QParameter& q = p.q();
    const double qv = q.value();
    const double sq = q.sqrt_q();
    const double q32 = qv * sq;
    const double q2 = qv * qv;
    const cplx z = p.z();
    const double qn = q.pow(n);
    const double nq = q_number(n, q);
    const double nq1 = q_number(n + 1, q);
    auto rel = [](cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)); };

    DerivativeResiduals out;
    {
        auto rn = [&](cplx x) { return rs_poly_normalized(n, x, q); };
        const cplx lhs = jackson_derivative(rn, z, q);
        const cplx rm1 = n > 0 ? rs_poly_normalized(n - 1, z, q) : cplx{};
        const cplx rhs = qv / (1.0 + qv) * nq * rn(z) +
                         std::sqrt(qv / (1.0 - qv)) * (1.0 - qv * z) / (1.0 + qv) * std::sqrt(nq) * rm1;
        out.poly = rel(lhs, rhs);
    }
    {
        // M(q^2 z) from the Laurent series, independent of the scaling identity
        const cplx m0 = weight_series(p, 0).M;
        const cplx m2 = weight_series(p, 2).M;
        const cplx lhs = (m0 - m2) / (z * (1.0 - q2));
        const cplx rhs = (1.0 + q32 * z) / (q32 * z * z * (1.0 - q2)) * m0;
        out.weight = rel(lhs, rhs);
    }
    {
        const LatticePoint lp(p, 0);
        auto psi = [&](const LatticePoint& x) { return rs_function(n, x); };
        const cplx d = lattice_q2_derivative(psi, lp);
        const cplx psi_n = psi(lp);
        const cplx psi_m = n > 0 ? rs_function(n - 1, lp) : cplx{};
        const cplx psi_p = rs_function(n + 1, lp);
        const cplx low = (1.0 - qv * z * (1.0 - sq - qn)) / (q32 * z * z * (1.0 - q2)) * psi_n -
                         std::sqrt(nq / (1.0 - qv)) * (1.0 - qv * z) / (qv * z * (1.0 + qv)) * psi_m;
        const cplx up = -(1.0 - qv * (z + sq + qn)) / (q32 * z * (1.0 - q2)) * psi_n +
                        std::sqrt(nq1 / (1.0 - qv)) * (1.0 - qv * z) / (q2 * z * z * (1.0 + qv)) * psi_p;
        out.lowering_form = rel(d, low);
        out.raising_form = rel(d, up);
    }
    return out;
}

}  // namespace rstk
