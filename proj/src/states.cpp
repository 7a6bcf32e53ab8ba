#include "rstk/states.hpp"

#include <algorithm>
#include <cmath>

namespace rstk {

CoherentLabel::CoherentLabel(double mu_abs, double theta, const QParameter& q) : mu_abs_(mu_abs), theta_(theta), q_(q)
{
    if (!(mu_abs >= 0.0) || !std::isfinite(mu_abs) || !std::isfinite(theta))
        throw DomainError("CoherentLabel: |mu| must be finite and nonnegative");
    if (!((1.0 - q.value()) * mu_abs * mu_abs < 1.0))
        throw DomainError("CoherentLabel: needs (1-q)|mu|^2 < 1");
}

double CoherentLabel::normalization() const
{
    return q_exponential((1.0 - q_.value()) * mu2(), q_).real();
}

PhaseLabel::PhaseLabel(double gamma, PhaseKind kind) : gamma_(gamma), kind_(kind)
{
    if (!(gamma >= lower(kind) && gamma <= upper(kind)))
        throw DomainError("PhaseLabel: gamma outside the interval of its kind");
}

double PhaseLabel::lower(PhaseKind kind)
{
    return kind == PhaseKind::cosine ? 0.0 : -0.5 * pi;
}

double PhaseLabel::upper(PhaseKind kind)
{
    return kind == PhaseKind::cosine ? pi : 0.5 * pi;
}

StateVector coherent_coefficients(const CoherentLabel& label, const BasisTruncation& trunc)
{
    if (trunc.n_max < 1)
        throw DomainError("coherent_coefficients: empty truncation");
    const QParameter& q = label.q();
    const cplx mu = label.mu();
    StateVector v;
    v.coeffs.resize(trunc.n_max);
    cplx c = 1.0 / std::sqrt(label.normalization());
    double mass = 0.0;
    for (int n = 0; n < trunc.n_max; ++n) {
        if (n > 0)
            c *= mu / std::sqrt(q_number(n, q));
        v.coeffs(n) = c;
        mass += std::norm(c);
    }
    v.tail_mass = std::max(0.0, 1.0 - mass);
    v.truncation_warning = v.tail_mass > 1e-10;
    return v;
}

cplx coherent_function(const CoherentLabel& label, const CirclePoint& p)
{
    const QParameter& q = label.q();
    const cplx t = std::sqrt(q.value() * (1.0 - q.value())) * label.mu();
    const cplx z = p.z();
    if (!(std::abs(t) < 1.0) || !(std::abs(t * z) < 1.0))
        throw DomainError("coherent_function: products outside their convergence region");
    const cplx prod = q_pochhammer_inf(t, q).value * q_pochhammer_inf(t * z, q).value;
    return measure_decomposition(p) / (std::sqrt(2.0 * pi * label.normalization()) * prod);
}

cplx coherent_expansion(const CoherentLabel& label, const CirclePoint& p, const BasisTruncation& trunc)
{
    const StateVector v = coherent_coefficients(label, trunc);
    const std::vector<cplx> psi = rs_function_sequence(trunc.n_max, p);
    cplx sum{};
    for (int n = 0; n < trunc.n_max; ++n)
        sum += v.coeffs(n) * psi[n];
    return sum;
}

double coherent_eigen_residual(const CoherentLabel& label, const BasisTruncation& trunc)
{
    const StateVector v = coherent_coefficients(label, trunc);
    const Eigen::MatrixXcd b = build_operator(OperatorLabel::B, trunc, label.q()).matrix;
    const int k = trunc.interior();
    const Eigen::VectorXcd r = (b * v.coeffs - label.mu() * v.coeffs).head(k);
    return r.norm() / v.coeffs.norm();
}

cplx coherent_overlap(const CoherentLabel& nu, const CoherentLabel& mu)
{
    const QParameter& q = mu.q();
    if (q.value() != nu.q().value())
        throw DomainError("coherent_overlap: labels carry different q");
    const cplx x = (1.0 - q.value()) * std::conj(nu.mu()) * mu.mu();
    if (!(std::abs(x) < 1.0))
        throw DomainError("coherent_overlap: (1-q) conj(nu) mu outside the unit disk");
    return q_exponential(x, q).value / std::sqrt(nu.normalization() * mu.normalization());
}

cplx coherent_overlap_quadrature(const CoherentLabel& nu, const CoherentLabel& mu, const QuadratureRule& rule)
{
    auto f = [&](double phi) {
        const CirclePoint p(phi, mu.q());
        return std::conj(coherent_function(nu, p)) * coherent_function(mu, p);
    };
    return integrate(f, rule, 1e-13).value;
}

ResolutionResult resolution_of_unity(int n, const QParameter& q)
{
    if (n < 0 || n > 60)
        throw DomainError("resolution_of_unity: needs 0 <= n <= 60");
    const double qv = q.value();
    ResolutionResult r;
    r.exact = q_factorial(n, q);

    // |mu|^{2n} / e_q((1-q) q |mu|^2) = s^n ((1-q) q s; q)_inf
    auto g = [&](double s) {
        return std::pow(s, n) * q_pochhammer_inf((1.0 - qv) * qv * s, q).value;
    };
    TruncationPolicy policy;
    policy.abs_tol = 1e-18 * std::max(1.0, r.exact);
    r.jackson = jackson_integral(g, q, policy).value.real();

    // at s = q^k/(1-q) the product is (q;q)_inf/(q;q)_k
    double sum = 0.0;
    double term = 1.0;
    const double step = q.pow(n + 1.0);
    for (int k = 0; k < policy.max_terms; ++k) {
        sum += term;
        if (term < 1e-18 * sum)
            break;
        term *= step / one_minus_qpow(k + 1, q);
    }
    r.simplified = q_pochhammer_inf(qv, q).value.real() / std::pow(1.0 - qv, n) * sum;
    r.residual = std::abs(r.jackson - r.exact) / r.exact;
    r.simplified_residual = std::abs(r.simplified - r.exact) / r.exact;
    return r;
}

double resolution_of_unity_check(int n, const QParameter& q)
{
    return resolution_of_unity(n, q).residual;
}

namespace {

cplx phase_coefficient(PhaseKind kind, int n, double gamma)
{
    const double a = std::sqrt(2.0 / pi);
    if (kind == PhaseKind::cosine)
        return a * std::sin((n + 1) * gamma);
    // i e^{i(n+1)pi/2} = i^{n+2}
    static const cplx powers[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return powers[(n + 2) % 4] * a * std::sin((n + 1) * (gamma - 0.5 * pi));
}

}  // namespace

StateVector phase_state_coefficients(const PhaseLabel& label, const BasisTruncation& trunc)
{
    StateVector v;
    v.coeffs.resize(trunc.n_max);
    for (int n = 0; n < trunc.n_max; ++n)
        v.coeffs(n) = phase_coefficient(label.kind(), n, label.gamma());
    // not normalizable; no tail to report
    return v;
}

double phase_eigen_residual(const PhaseLabel& label, const BasisTruncation& trunc)
{
    const StateVector v = phase_state_coefficients(label, trunc);
    const bool cos_kind = label.kind() == PhaseKind::cosine;
    const OperatorMatrix x = build_operator(cos_kind ? OperatorLabel::C : OperatorLabel::S, trunc, QParameter(0.5));
    const double lambda = cos_kind ? std::cos(label.gamma()) : std::sin(label.gamma());
    const Eigen::VectorXcd r = (x.matrix * v.coeffs - lambda * v.coeffs).head(trunc.interior());
    return r.cwiseAbs().maxCoeff();
}

QuadratureRule phase_rule(PhaseKind kind, int panels)
{
    return QuadratureRule::gauss_legendre(PhaseLabel::lower(kind), PhaseLabel::upper(kind), 64, panels);
}

Eigen::MatrixXcd phase_gram(PhaseKind kind, const BasisTruncation& trunc, const QuadratureRule& rule)
{
    const int n = trunc.n_max;
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
    Eigen::VectorXcd c(n);
    const auto x = rule.nodes();
    const auto w = rule.weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (int k = 0; k < n; ++k)
            c(k) = phase_coefficient(kind, k, x[i]);
        g.noalias() += w[i] * c.conjugate() * c.transpose();
    }
    return g;
}

double phase_completeness_check(PhaseKind kind, const BasisTruncation& trunc, double beta, double phi,
                                const QParameter& q)
{
    const int n = trunc.n_max;
    const std::vector<cplx> pb = rs_function_sequence(n, CirclePoint(beta, q));
    const std::vector<cplx> pp = rs_function_sequence(n, CirclePoint(phi, q));
    cplx rhs{};
    for (int k = 0; k < n; ++k)
        rhs += std::conj(pb[k]) * pp[k];

    const QuadratureRule rule = phase_rule(kind, std::max(4, n / 8));
    auto f = [&](double gamma) {
        cplx xb{}, xp{};
        for (int k = 0; k < n; ++k) {
            const cplx c = phase_coefficient(kind, k, gamma);
            xb += c * pb[k];
            xp += c * pp[k];
        }
        return std::conj(xb) * xp;
    };
    const cplx lhs = quadrature_sum(f, rule);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

double phase_orthogonality_kernel(PhaseKind kind, double gamma1, double gamma2, const BasisTruncation& trunc)
{
    double sum = 0.0;
    for (int n = 0; n < trunc.n_max; ++n)
        sum += (std::conj(phase_coefficient(kind, n, gamma1)) * phase_coefficient(kind, n, gamma2)).real();
    return sum;
}

cplx phase_orthogonality_kernel_quadrature(PhaseKind kind, double gamma1, double gamma2,
                                           const BasisTruncation& trunc, const QParameter& q,
                                           const QuadratureRule& rule)
{
    const StateVector a = phase_state_coefficients(PhaseLabel(gamma1, kind), trunc);
    const StateVector b = phase_state_coefficients(PhaseLabel(gamma2, kind), trunc);
    auto f = [&](double phi) {
        const std::vector<cplx> psi = rs_function_sequence(trunc.n_max, CirclePoint(phi, q));
        cplx xa{}, xb{};
        for (int k = 0; k < trunc.n_max; ++k) {
            xa += a.coeffs(k) * psi[k];
            xb += b.coeffs(k) * psi[k];
        }
        return std::conj(xa) * xb;
    };
    return quadrature_sum(f, rule);
}

double phase_smearing(PhaseKind kind, double gamma, const BasisTruncation& trunc,
                      const std::function<double(double)>& f)
{
    // the kernel oscillates at frequency n_max; keep about 16 nodes per period
    const QuadratureRule rule = phase_rule(kind, std::max(4, trunc.n_max / 8));
    auto g = [&](double g2) { return phase_orthogonality_kernel(kind, gamma, g2, trunc) * f(g2); };
    return quadrature_sum(g, rule).real();
}

}  // namespace rstk
