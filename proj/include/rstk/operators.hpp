#pragma once

#include <Eigen/Dense>
#include <string>

#include "rstk/rsfunctions.hpp"

namespace rstk {

enum class OperatorLabel { B, Bdag, Nq, N, Eminus, Eplus, C, S };

std::string to_string(OperatorLabel label);

// basis indices 0..n_max-1
struct BasisTruncation {
    int n_max = 64;

    // rows/columns not touched by the top-row leak of the raising operators
    int interior() const noexcept { return n_max - 1; }
};

struct OperatorMatrix {
    OperatorLabel label;
    Eigen::MatrixXcd matrix;
};

// E_minus annihilates Psi_0; C = (E- + E+)/2, S = (E- - E+)/(2i).
OperatorMatrix build_operator(OperatorLabel label, const BasisTruncation& trunc, const QParameter& q);

// Function-level ladder actions. Lowering gives [n]^{1/2} Psi_{n-1}, raising gives
// [n+1]^{1/2} Psi_{n+1}, both from the q^2-difference of f along the lattice.
template <class F>
cplx lowering_action(int n, F&& f, const LatticePoint& p)
{
    const QParameter& q = p.q();
    const double qv = q.value();
    const cplx z = p.z();
    const double q32 = qv * q.sqrt_q();
    const cplx d = lattice_q2_derivative(f, p);
    const cplx num = (1.0 - qv * z * (1.0 - q.sqrt_q() - q.pow(n))) * cplx(f(p)) - q32 * z * z * (1.0 - qv * qv) * d;
    return num / (std::sqrt(qv * (1.0 - qv)) * (1.0 - qv * z) * z);
}

template <class F>
cplx raising_action(int n, F&& f, const LatticePoint& p)
{
    const QParameter& q = p.q();
    const double qv = q.value();
    const cplx z = p.z();
    const double q32 = qv * q.sqrt_q();
    const cplx d = lattice_q2_derivative(f, p);
    const cplx num = (1.0 - qv * (z + q.sqrt_q() + q.pow(n))) * cplx(f(p)) + q32 * z * (1.0 - qv * qv) * d;
    return q.sqrt_q() * z * num / (std::sqrt(1.0 - qv) * (1.0 - qv * z));
}

// Residuals relative to max(1, |rhs|). number is the raising form at n-1 applied to the
// lowering form at n, compared with [n] Psi_n. matrix_route compares the lowering form
// with B applied to the unit coefficient vector of Psi_n and summed against Psi_k.
struct LadderResiduals {
    double lowering = 0.0;
    double raising = 0.0;
    double number = 0.0;
    double matrix_route = 0.0;
};
LadderResiduals qdiff_ladder_check(int n, const CirclePoint& p);

// Max-abs residuals on the interior block
struct AlgebraResiduals {
    double q_commutator = 0.0;          // B B+ - q B+ B = 1
    double q_commutator_lower = 0.0;    // B Nq - q Nq B = B
    double q_commutator_raise = 0.0;    // Nq B+ - q B+ Nq = B+
    double commutator = 0.0;            // [B, B+] = 1 - (1-q) Nq
    double commutator_lower = 0.0;      // [Nq, B] = -(1 - (1-q) Nq) B
    double commutator_raise = 0.0;      // [Nq, B+] = B+ (1 - (1-q) Nq)
    double number_product = 0.0;        // Nq = B+ B
    double shift_products = 0.0;        // E- E+ = 1, E+ E- = 1 - |0><0|
    double phase_square_sum = 0.0;      // C^2 + S^2 = 1 - |0><0|/2
    double phase_commutator = 0.0;      // [C, S] = (i/2)|0><0|
    double heisenberg_weyl = 0.0;       // max |[B, B+] - 1|

    double max_relation() const;
};
AlgebraResiduals algebra_check(const BasisTruncation& trunc, const QParameter& q);

struct EnergyLevel {
    double energy = 0.0;
    double gap = 0.0;  // (E_{n+1} - E_n)/E_0
};
EnergyLevel energy_spectrum(int n, const QParameter& q, double e0 = 1.0);

}  // namespace rstk
