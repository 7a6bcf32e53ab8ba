#pragma once

#include <Eigen/Dense>
#include <functional>

#include "rstk/operators.hpp"

namespace rstk {

// mu = mu_abs e^{i theta}; (1-q) mu_abs^2 < 1 is required for the states to normalize.
class CoherentLabel {
public:
    CoherentLabel(double mu_abs, double theta, const QParameter& q);

    double mu_abs() const noexcept { return mu_abs_; }
    double mu2() const noexcept { return mu_abs_ * mu_abs_; }
    double theta() const noexcept { return theta_; }
    const QParameter& q() const noexcept { return q_; }
    cplx mu() const { return std::polar(mu_abs_, theta_); }
    // e_q((1-q)|mu|^2)
    double normalization() const;

private:
    double mu_abs_;
    double theta_;
    QParameter q_;
};

enum class PhaseKind { cosine, sine };

// cosine: gamma in [0, pi]; sine: gamma in [-pi/2, pi/2]
class PhaseLabel {
public:
    PhaseLabel(double gamma, PhaseKind kind);

    double gamma() const noexcept { return gamma_; }
    PhaseKind kind() const noexcept { return kind_; }
    static double lower(PhaseKind kind);
    static double upper(PhaseKind kind);

private:
    double gamma_;
    PhaseKind kind_;
};

// Coefficients over Psi_0..Psi_{n_max-1}. tail_mass is 1 - sum |c_n|^2 for normalized
// states; truncation_warning is set when it exceeds 1e-10.
struct StateVector {
    Eigen::VectorXcd coeffs;
    double tail_mass = 0.0;
    bool truncation_warning = false;
};

StateVector coherent_coefficients(const CoherentLabel& label, const BasisTruncation& trunc);
// e_q^{-1/2} M(z) / [sqrt(2 pi) (t;q)_inf (tz;q)_inf], t = sqrt(q(1-q)) mu
cplx coherent_function(const CoherentLabel& label, const CirclePoint& p);
// sum of c_n Psi_n over the truncation
cplx coherent_expansion(const CoherentLabel& label, const CirclePoint& p, const BasisTruncation& trunc);
// ||B v - mu v|| / ||v|| over the interior rows
double coherent_eigen_residual(const CoherentLabel& label, const BasisTruncation& trunc);

// <nu|mu> = e_q((1-q) conj(nu) mu) / [e_q((1-q)|mu|^2) e_q((1-q)|nu|^2)]^{1/2}
cplx coherent_overlap(const CoherentLabel& nu, const CoherentLabel& mu);
// circle integral of conj(F_nu) F_mu dphi
cplx coherent_overlap_quadrature(const CoherentLabel& nu, const CoherentLabel& mu,
                                 const QuadratureRule& rule = QuadratureRule::periodic_trapezoid());

struct ResolutionResult {
    double jackson = 0.0;     // q-integral with the infinite product evaluated per node
    double simplified = 0.0;  // (q;q)_inf/(1-q)^n sum_k q^{k(n+1)}/(q;q)_k
    double exact = 0.0;       // [n]_q!
    double residual = 0.0;    // |jackson - exact| / exact
    double simplified_residual = 0.0;
};
// radial moment of the coherent-state measure over [0, 1/(1-q)) in |mu|^2
ResolutionResult resolution_of_unity(int n, const QParameter& q);
double resolution_of_unity_check(int n, const QParameter& q);

// cosine: c_n = sqrt(2/pi) sin((n+1) gamma)
// sine:   c_n = i sqrt(2/pi) e^{i(n+1)pi/2} sin((n+1)(gamma - pi/2))
StateVector phase_state_coefficients(const PhaseLabel& label, const BasisTruncation& trunc);
// max |(X v)_n - lambda v_n| over interior rows, X = C or S, lambda = cos or sin gamma
double phase_eigen_residual(const PhaseLabel& label, const BasisTruncation& trunc);

// Gamma-integrals of conj(c_m) c_n over the kind's interval, Gauss-Legendre.
Eigen::MatrixXcd phase_gram(PhaseKind kind, const BasisTruncation& trunc,
                            const QuadratureRule& rule);
QuadratureRule phase_rule(PhaseKind kind, int panels = 4);

// |gamma-integral of conj(X_gamma(beta)) X_gamma(phi) - sum_n conj(Psi_n(beta)) Psi_n(phi)|,
// relative to max(1, |rhs|)
double phase_completeness_check(PhaseKind kind, const BasisTruncation& trunc, double beta, double phi,
                                const QParameter& q);

// D(g1, g2) = sum_n conj(c_n(g1)) c_n(g2), the circle integral of conj(X_g1) X_g2
double phase_orthogonality_kernel(PhaseKind kind, double gamma1, double gamma2, const BasisTruncation& trunc);
// the same quantity from the circle quadrature of the two phase-state functions
cplx phase_orthogonality_kernel_quadrature(PhaseKind kind, double gamma1, double gamma2,
                                           const BasisTruncation& trunc, const QParameter& q,
                                           const QuadratureRule& rule = QuadratureRule::periodic_trapezoid());
// integral of D(gamma, g) f(g) dg over the kind's interval
double phase_smearing(PhaseKind kind, double gamma, const BasisTruncation& trunc,
                      const std::function<double(double)>& f);

}  // namespace rstk
