#include "rstk/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rstk/theta.hpp"

namespace rstk {

namespace {

cplx rs_poly_direct(int n, cplx z, const QParameter& q)
{
    cplx acc{};
    for (int k = n; k >= 0; --k)
        acc = acc * z + q_binomial(n, k, q);
    return acc;
}

cplx rs_poly_recurrence(int n, cplx z, const QParameter& q)
{
    cplx prev{1.0, 0.0};
    if (n == 0)
        return prev;
    cplx cur = 1.0 + z;
    for (int k = 1; k < n; ++k) {
        const cplx next = (1.0 + z) * cur - one_minus_qpow(k, q) * z * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

PolyEval rs_poly_eval(int n, cplx z, const QParameter& q, PolyMethod method)
{
    if (n < 0)
        throw DomainError("rs_poly: negative degree");
    if (method == PolyMethod::automatic)
        method = n > 16 ? PolyMethod::recurrence : PolyMethod::direct_sum;
    PolyEval e;
    e.n = n;
    e.z = z;
    e.method = method;
    e.value = method == PolyMethod::recurrence ? rs_poly_recurrence(n, z, q) : rs_poly_direct(n, z, q);
    return e;
}

cplx rs_poly(int n, cplx z, const QParameter& q, PolyMethod method)
{
    return rs_poly_eval(n, z, q, method).value;
}

std::vector<cplx> rs_poly_sequence(int count, cplx z, const QParameter& q)
{
    std::vector<cplx> h(std::max(count, 0));
    if (count > 0)
        h[0] = 1.0;
    if (count > 1)
        h[1] = 1.0 + z;
    for (int k = 1; k + 1 < count; ++k)
        h[k + 1] = (1.0 + z) * h[k] - one_minus_qpow(k, q) * z * h[k - 1];
    return h;
}

cplx rs_poly_normalized(int n, cplx z, const QParameter& q, PolyMethod method)
{
    const double c = std::sqrt(q.pow(n) / (2.0 * pi * q_pochhammer(q.value(), q, n)));
    return c * rs_poly(n, z, q, method);
}

std::vector<cplx> rs_poly_normalized_sequence(int count, cplx z, const QParameter& q)
{
    std::vector<cplx> r(std::max(count, 0));
    if (count == 0)
        return r;
    const double qv = q.value();
    r[0] = 1.0 / std::sqrt(2.0 * pi);
    if (count > 1)
        r[1] = std::sqrt(qv / one_minus_qpow(1, q)) * (1.0 + z) * r[0];
    for (int n = 1; n + 1 < count; ++n) {
        const double a = std::sqrt(qv / one_minus_qpow(n + 1, q));
        const double b = std::sqrt(qv * one_minus_qpow(n, q));
        r[n + 1] = a * ((1.0 + z) * r[n] - b * z * r[n - 1]);
    }
    return r;
}

NormalizedIdentityResiduals normalized_identities_check(int n, cplx z, const QParameter& q)
{
    if (n < 1)
        throw DomainError("normalized_identities_check: needs n >= 1");
    const double qv = q.value();
    const double c = std::sqrt(qv * one_minus_qpow(n, q));
    auto R = [&](int k, cplx x) { return rs_poly_normalized(k, x, q, PolyMethod::direct_sum); };
    auto rel = [](cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)); };
    const cplx qz = qv * z;
    const cplx q2z = qv * qz;

    NormalizedIdentityResiduals out;
    const cplx rec = std::sqrt(qv / one_minus_qpow(n + 1, q)) * ((1.0 + z) * R(n, z) - c * z * R(n - 1, z));
    out.recurrence = rel(R(n + 1, z), rec);
    out.shift_q = rel(R(n, z) - R(n, qz), c * z * R(n - 1, z));
    out.shift_q_scaled = rel(R(n, qz) - q.pow(n) * R(n, z), c * R(n - 1, qz));
    out.shift_q_pair = rel(R(n, qz) - R(n, q2z), c * qz * R(n - 1, qz));
    out.shift_q2 = rel(R(n, z) - R(n, q2z), qv * one_minus_qpow(n, q) * z * R(n, z) + c * (1.0 - qz) * z * R(n - 1, z));
    return out;
}

cplx sw_poly(int n, cplx x, const QParameter& q)
{
    if (n < 0)
        throw DomainError("sw_poly: negative degree");
    cplx acc{};
    for (int k = n; k >= 0; --k)
        acc = acc * x + q_binomial(n, k, q) * q.pow(double(k) * (k - n));
    return acc;
}

SeriesValue generating_function(cplx w, cplx z, const QParameter& q, int order)
{
    if (!(std::abs(w) < 1.0) || !(std::abs(w * z) < 1.0))
        throw DomainError("generating_function: need |w| < 1 and |wz| < 1");
    if (order < 0)
        throw DomainError("generating_function: negative order");
    const std::vector<cplx> h = rs_poly_sequence(order + 1, z, q);
    SeriesValue out;
    cplx wn{1.0, 0.0};
    for (int n = 0; n <= order; ++n) {
        out.value += h[n] * wn / q_pochhammer(q.value(), q, n);
        wn *= w;
    }
    out.terms = order + 1;
    // |H_n(z)| <= (n+1) max(1,|z|)^n / (q;q)_inf and 1/(q;q)_n <= 1/(q;q)_inf
    const double rho = std::abs(w) * std::max(1.0, std::abs(z));
    if (rho < 1.0) {
        const double qq = q_pochhammer_inf(q.value(), q).real();
        const double N = order;
        const double tail = std::pow(rho, N + 1.0) * ((N + 2.0) - (N + 1.0) * rho) / ((1.0 - rho) * (1.0 - rho));
        out.error_bound = tail / (qq * qq);
    } else {
        out.error_bound = std::numeric_limits<double>::infinity();
    }
    return out;
}

cplx generating_function_closed(cplx w, cplx z, const QParameter& q)
{
    if (!(std::abs(w) < 1.0) || !(std::abs(w * z) < 1.0))
        throw DomainError("generating_function_closed: need |w| < 1 and |wz| < 1");
    return 1.0 / (q_pochhammer_inf(w, q).value * q_pochhammer_inf(w * z, q).value);
}

MomentKernel::MomentKernel(KernelKind kind, double r, const QParameter& q) : kind_(kind), r_(r), q_(q)
{
    if (q.near_unit())
        throw DomainError("MomentKernel: q too close to 1, the kernel flattens");
    if (!std::isfinite(r))
        throw DomainError("MomentKernel: r must be finite");
}

double MomentKernel::log_density(double l) const
{
    const double m = q_.width();
    const double m2 = m * m;
    if (kind_ == KernelKind::P_r) {
        const double h = r_ - 0.5;
        return std::log(m / std::sqrt(pi)) + (r_ - 1.5) * l - h * h / (4.0 * m2) - m2 * l * l;
    }
    return std::log(m / std::sqrt(2.0 * pi)) + (0.5 * r_ - 1.0) * l - r_ * r_ / (8.0 * m2) - 0.5 * m2 * l * l;
}

double MomentKernel::density(double omega) const
{
    if (!(omega > 0.0))
        return 0.0;
    return std::exp(log_density(std::log(omega)));
}

double MomentKernel::center() const
{
    return kind_ == KernelKind::P_r ? 0.5 * (r_ - 0.5) : 0.5 * r_;
}

double MomentKernel::sigma() const
{
    const double m = q_.width();
    return kind_ == KernelKind::P_r ? m : std::sqrt(2.0) * m;
}

QuadratureRule MomentKernel::rule(int k, int nodes) const
{
    // omega^k shifts the Gaussian in x by k/2 (P_r) or k (Y_r)
    const double shift = kind_ == KernelKind::P_r ? 0.5 * k : double(k);
    return QuadratureRule::log_gaussian(q_.width(), center() + shift, sigma(), nodes);
}

double MomentKernel::exact_moment(int k) const
{
    const double e = kind_ == KernelKind::P_r ? -0.5 * k * (k - 1.0) - r_ * k : -double(k) * (k + r_);
    return q_.pow(e);
}

double kernel_moment(int k, const MomentKernel& kernel, const QuadratureRule& rule, double tol)
{
    if (rule.kind() != RuleKind::log_gaussian)
        throw DomainError("kernel_moment: needs a log_gaussian rule");
    auto f = [&](double omega) {
        const double l = std::log(omega);
        return std::exp(k * l + kernel.log_density(l));
    };
    return integrate(f, rule, tol).real();
}

RepresentationResult integral_representation(Representation kind, int n, cplx arg, const QParameter& q,
                                             const RepresentationParams& params)
{
    if (n < 0)
        throw DomainError("integral_representation: negative degree");
    RepresentationResult res;
    switch (kind) {
    case Representation::pochhammer_circle: {
        const int s = params.s, u = params.u;
        if (s <= 0 || u <= 0 || s % (2 * u) != 0)
            throw DomainError("integral_representation: s/(2u) must be a positive integer");
        const cplx ar = std::pow(arg, params.r);
        const double nome = q.pow(2.0 * u * u / (double(s) * s));
        const cplx c = -ar / q.sqrt_q();
        auto f = [&](double phi) {
            const cplx z = c * std::polar(1.0, s * phi);
            return rs_poly(n, z, q) * theta3(u * phi, nome).real() / (2.0 * pi);
        };
        res.lhs = integrate(f, QuadratureRule::periodic_trapezoid(256), 1e-13).value;
        res.rhs = q_pochhammer(ar, q, n);
        break;
    }
    case Representation::kernel_p: {
        const MomentKernel kernel(KernelKind::P_r, params.r, q);
        const cplx a = -q.pow(params.r) * arg;
        auto f = [&](double omega) {
            return q_pochhammer(a * omega, q, n) * kernel.density(omega);
        };
        res.lhs = integrate(f, kernel.rule(0), 1e-12).value;
        res.rhs = rs_poly(n, arg, q);
        break;
    }
    case Representation::kernel_y: {
        const MomentKernel kernel(KernelKind::Y_r, params.r, q);
        const cplx a = q.pow(n + params.r) * arg;
        auto f = [&](double omega) { return sw_poly(n, a * omega, q) * kernel.density(omega); };
        res.lhs = integrate(f, kernel.rule(0), 1e-12).value;
        res.rhs = rs_poly(n, arg, q);
        break;
    }
    }
    res.residual = std::abs(res.lhs - res.rhs);
    return res;
}

double integral_representation_check(Representation kind, int n, cplx arg, const QParameter& q,
                                     const RepresentationParams& params)
{
    return integral_representation(kind, n, arg, q, params).residual;
}

Eigen::MatrixXcd szego_gram_matrix(const QParameter& q, int count, const QuadratureRule& rule)
{
    if (rule.kind() != RuleKind::periodic_trapezoid)
        throw DomainError("szego_gram_matrix: needs a periodic rule");
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(count, count);
    Eigen::VectorXcd h(count);
    const auto x = rule.nodes();
    const auto w = rule.weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
        const CirclePoint p(x[i], q);
        const std::vector<cplx> seq = rs_poly_sequence(count, p.z(), q);
        for (int k = 0; k < count; ++k)
            h(k) = seq[k];
        const double weight = w[i] * szego_measure(p) / (2.0 * pi);
        g.noalias() += weight * h.conjugate() * h.transpose();
    }
    return g;
}

}  // namespace rstk
