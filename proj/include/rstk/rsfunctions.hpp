#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rstk/numerics.hpp"
#include "rstk/theta.hpp"

namespace rstk {

struct WeightValue {
    cplx M{};
    cplx F{};
    cplx G{};
};

// Weight on the circle from the theta forms: F = theta3(phi/4), G = theta1(phi/4), nome q^{1/2}.
WeightValue weight(const CirclePoint& p);

// The Laurent series for F and G summed at q^{shift} z, z the circle point. Fractional
// powers use arg z = phi + pi from the circle chart. Used to cross-check the theta forms
// and the scaling relations.
WeightValue weight_series(const CirclePoint& p, int shift = 0);

// q^{2 shift} z for a circle point z. Values of the weight there come from the exact
// even scaling M(q^{2r} z) = (-1)^r q^{-r(r+1/2)} z^{-r} M(z).
class LatticePoint {
public:
    explicit LatticePoint(const CirclePoint& base, int shift = 0) : base_(base), shift_(shift) {}

    const CirclePoint& base() const noexcept { return base_; }
    int shift() const noexcept { return shift_; }
    const QParameter& q() const noexcept { return base_.q(); }
    cplx z() const noexcept { return base_.q().pow(2.0 * shift_) * base_.z(); }
    LatticePoint next() const { return LatticePoint(base_, shift_ + 1); }

private:
    CirclePoint base_;
    int shift_;
};

cplx weight_at(const LatticePoint& p);

// Psi_n = R_n M
cplx rs_function(int n, const CirclePoint& p);
cplx rs_function(int n, const LatticePoint& p);
std::vector<cplx> rs_function_sequence(int count, const CirclePoint& p);
std::vector<cplx> rs_function_sequence(int count, const LatticePoint& p);

// D_{q^2} f at a lattice point: [f(p) - f(p.next())] / [z (1 - q^2)]
template <class F>
cplx lattice_q2_derivative(F&& f, const LatticePoint& p)
{
    const double q2 = p.q().value() * p.q().value();
    return (cplx(f(p)) - cplx(f(p.next()))) / (p.z() * (1.0 - q2));
}

// Circle integrals of conj(Psi_m) Psi_n dphi
Eigen::MatrixXcd rs_gram_matrix(const QParameter& q, int count, const QuadratureRule& rule);

// Relative residuals of the six scaling relations for F, G, M under z -> q^{2r} z (even)
// and z -> q^{2r+1} z (odd). The even ones are identities. The odd ones are not: F and M
// hold only up to an error that shrinks as q -> 1, and G does not hold at all.
struct ScalingResiduals {
    double F_even = 0.0, G_even = 0.0, M_even = 0.0;
    double F_odd = 0.0, G_odd = 0.0, M_odd = 0.0;
};
ScalingResiduals scaling_relations_check(int r, const CirclePoint& p);

// sup over n and the circle of |Psi_n|^2
double rs_function_bound(const QParameter& q);

// K_eps(beta, phi) from the product formula
cplx bilinear_kernel(double beta, double phi, double eps, const QParameter& q);
// truncated sum_n eps^n conj(Psi_n(beta)) Psi_n(phi); throws NonConvergence when the tail bound exceeds tol
SeriesValue bilinear_kernel_series(double beta, double phi, double eps, const QParameter& q, int order,
                                   double tol = 1e-10);

// |integral of K_eps(beta, phi) Psi_n(beta) dbeta - eps^n Psi_n(phi)|
double kernel_reproducing_check(int n, double phi, double eps, const QParameter& q,
                                const QuadratureRule& rule = QuadratureRule::periodic_trapezoid());
// |integral of K_eps(beta, phi) K_eps2(gamma, beta) dbeta - K_{eps eps2}(gamma, phi)|
double kernel_semigroup_check(double gamma, double phi, double eps, double eps2, const QParameter& q,
                              const QuadratureRule& rule = QuadratureRule::periodic_trapezoid());

// Residuals (relative to max(1, |lhs|)) of: D R_n, D M, and both forms of D Psi_n
// (one through Psi_{n-1}, one through Psi_{n+1}).
struct DerivativeResiduals {
    double poly = 0.0;
    double weight = 0.0;
    double lowering_form = 0.0;
    double raising_form = 0.0;
};
DerivativeResiduals q_derivative_identities_check(int n, const CirclePoint& p);

}  // namespace rstk
