#pragma once

#include <vector>

#include "rstk/states.hpp"

namespace rstk {

// With w_n = |mu|^{2n}/[n]_q!:
//   Mq = sum w_n / [n+1]^{1/2}, Nq_series = sum w_n / ([n+2][n+1])^{1/2},
//   Lq = sum (2n+1) w_n / [n+1]^{1/2}
// plus the raw sums sum n^k w_n for k = 0, 1, 2.
struct AuxiliarySeries {
    double Mq = 0.0;
    double Nq_series = 0.0;
    double Lq = 0.0;
    double power_sums[3] = {0.0, 0.0, 0.0};
    int terms = 0;
};
AuxiliarySeries auxiliary_series(const CoherentLabel& label, const TruncationPolicy& policy = {});

// Means in the coherent state; CS - SC is purely imaginary, everything else real.
// meanNC, meanNS are the symmetrized products (NC + CN)/2 and (NS + SN)/2 with the
// nondeformed N.
struct MomentSet {
    double meanC = 0.0;
    double meanS = 0.0;
    double meanC2 = 0.0;
    double meanS2 = 0.0;
    double meanCSplus = 0.0;
    cplx meanCSminus{};
    double meanN = 0.0;
    double meanN2 = 0.0;
    double meanNC = 0.0;
    double meanNS = 0.0;
};

MomentSet moments_closed_form(const CoherentLabel& label);
// expectation values v^H X v with the truncated operator matrices; throws TruncationWarning
// when the coefficient tail exceeds 1e-10
MomentSet moments_matrix_route(const CoherentLabel& label, const BasisTruncation& trunc);
// largest componentwise difference
double moment_difference(const MomentSet& a, const MomentSet& b);

// <N^k> = e_q^{-1} sum n^k |mu|^{2n}/[n]_q!
double mean_number_power(const CoherentLabel& label, int k, const TruncationPolicy& policy = {});
// |C_n|^2 for n < n_max
std::vector<double> excitation_distribution(const CoherentLabel& label, int n_max);

struct CSUncertainty {
    double value = 0.0;  // V_C V_S - V_CS^2
    double bound = 0.0;  // |<[C,S]>|^2 / 4
    double a = 0.0, b = 0.0, c = 0.0;
};
// closed form (a - b)(a + b - c^2)
CSUncertainty uncertainty_cs(const CoherentLabel& label);
// the same product from the variances of a moment set
double uncertainty_cs_from_moments(const MomentSet& m);

// [V_N (V_C + V_S) - (V_NC^2 + V_NS^2)] / (<C>^2 + <S>^2); throws DegenerateLabel when
// the denominator vanishes
double uncertainty_symmetric(const MomentSet& m);
double uncertainty_symmetric(const CoherentLabel& label);

}  // namespace rstk
