#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rstk/numerics.hpp"
#include "rstk/qcalc.hpp"

namespace rstk {

enum class PolyMethod { automatic, direct_sum, recurrence };

struct PolyEval {
    int n = 0;
    cplx z{};
    cplx value{};
    PolyMethod method = PolyMethod::direct_sum;
};

// H_n(z;q) = sum_k [n k]_q z^k. automatic uses the three-term recurrence above degree 16.
PolyEval rs_poly_eval(int n, cplx z, const QParameter& q, PolyMethod method = PolyMethod::automatic);
cplx rs_poly(int n, cplx z, const QParameter& q, PolyMethod method = PolyMethod::automatic);
// H_0..H_{count-1} by recurrence
std::vector<cplx> rs_poly_sequence(int count, cplx z, const QParameter& q);

// R_n = [q^n / (2 pi (q;q)_n)]^{1/2} H_n
cplx rs_poly_normalized(int n, cplx z, const QParameter& q, PolyMethod method = PolyMethod::automatic);
// R_0..R_{count-1} from the normalized recurrence
std::vector<cplx> rs_poly_normalized_sequence(int count, cplx z, const QParameter& q);

// Residuals of the normalized three-term recurrence and the four q- and q^2-shift
// relations linking R_n and R_{n-1}, each relative to max(1, |lhs|).
struct NormalizedIdentityResiduals {
    double recurrence = 0.0;
    double shift_q = 0.0;         // R_n(z) - R_n(qz)
    double shift_q_scaled = 0.0;  // R_n(qz) - q^n R_n(z)
    double shift_q_pair = 0.0;    // R_n(qz) - R_n(q^2 z)
    double shift_q2 = 0.0;        // R_n(z) - R_n(q^2 z)
};
NormalizedIdentityResiduals normalized_identities_check(int n, cplx z, const QParameter& q);

// G_n(x;q) = sum_k [n k]_q q^{k(k-n)} x^k
cplx sw_poly(int n, cplx x, const QParameter& q);

// Partial sum of H_n(z) w^n/(q;q)_n up to n = order; error_bound bounds the dropped tail.
SeriesValue generating_function(cplx w, cplx z, const QParameter& q, int order);
// 1/[(w;q)_inf (wz;q)_inf]
cplx generating_function_closed(cplx w, cplx z, const QParameter& q);

enum class KernelKind { P_r, Y_r };

// Log-normal kernels on (0, inf) whose moments are pure powers of q.
class MomentKernel {
public:
    MomentKernel(KernelKind kind, double r, const QParameter& q);

    KernelKind kind() const noexcept { return kind_; }
    double r() const noexcept { return r_; }
    const QParameter& q() const noexcept { return q_; }

    double log_density(double log_omega) const;
    double density(double omega) const;
    // Gaussian in x = m^2 ln(omega): mean and standard deviation
    double center() const;
    double sigma() const;
    // log_gaussian rule matched to omega^k times the kernel
    QuadratureRule rule(int k = 0, int nodes = 80) const;
    // q^{-k(k-1)/2 - r k} or q^{-k(k+r)}
    double exact_moment(int k) const;

private:
    KernelKind kind_;
    double r_;
    QParameter q_;
};

// integral of omega^k against the kernel on the given log_gaussian rule
double kernel_moment(int k, const MomentKernel& kernel, const QuadratureRule& rule, double tol = 1e-12);

enum class Representation {
    pochhammer_circle,  // theta3-weighted circle integral of H_n gives (a^r;q)_n
    kernel_p,           // (-q^r z w;q)_n against P_r gives H_n(z)
    kernel_y            // SW polynomial against Y_r gives H_n(z)
};

struct RepresentationParams {
    double r = 1.0;
    int s = 2;
    int u = 1;
};

struct RepresentationResult {
    cplx lhs{};
    cplx rhs{};
    double residual = 0.0;
};

// arg is a for pochhammer_circle and z for the kernel forms
RepresentationResult integral_representation(Representation kind, int n, cplx arg, const QParameter& q,
                                             const RepresentationParams& params = {});
double integral_representation_check(Representation kind, int n, cplx arg, const QParameter& q,
                                     const RepresentationParams& params = {});

// Matrix of circle integrals of H_m(conj z) H_n(z) theta3(phi/2|q^{1/2}) dphi/(2 pi), m,n < count
Eigen::MatrixXcd szego_gram_matrix(const QParameter& q, int count, const QuadratureRule& rule);

}  // namespace rstk
