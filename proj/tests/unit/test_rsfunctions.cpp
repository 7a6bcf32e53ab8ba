#include "doctest.h"

#include <cmath>
#include <random>

#include "frozen.hpp"
#include "rstk/polynomials.hpp"
#include "rstk/rsfunctions.hpp"

using namespace rstk;
using doctest::Approx;

TEST_CASE("weight from the theta forms")
{
    const QParameter q(0.5);
    const WeightValue w0 = weight(CirclePoint(0.0, q));
    CHECK(std::abs(w0.G) == 0.0);
    CHECK(w0.M.imag() == 0.0);
    CHECK(w0.M.real() > 0.0);
    for (double qv : {0.3, 0.6, 0.9})
        for (int i = 0; i < 721; ++i) {
            const CirclePoint p(-pi + 2.0 * pi * i / 720.0, QParameter(qv));
            const WeightValue w = weight(p);
            CHECK(std::norm(w.M) == Approx(szego_measure(p)).epsilon(1e-10));
            const cplx mirror = weight(CirclePoint(-p.phi(), QParameter(qv))).M;
            if (i > 0)
                CHECK(std::abs(w.M - mirror) < 1e-14);
        }
}

TEST_CASE("weight series agrees with the theta forms")
{
    for (double qv : {0.3, 0.6, 0.9})
        for (double phi : {-2.5, -0.4, 0.0, 1.1, 3.0}) {
            const CirclePoint p(phi, QParameter(qv));
            const WeightValue a = weight(p);
            const WeightValue b = weight_series(p);
            CHECK(std::abs(a.F - b.F) < 1e-10 * std::max(1.0, std::abs(a.F)));
            CHECK(std::abs(a.G - b.G) < 1e-10 * std::max(1.0, std::abs(a.G)));
            CHECK(std::abs(a.M - b.M) < 1e-10 * std::max(1.0, std::abs(a.M)));
        }
}

TEST_CASE("even scaling of the weight")
{
    const QParameter q(0.6);
    const CirclePoint p(0.9, q);
    const cplx m = measure_decomposition(p);
    // r = 1: M(q^2 z) = -q^{-3/2} z^{-1} M(z)
    CHECK(std::abs(weight_at(LatticePoint(p, 1)) - (-std::pow(0.6, -1.5) / p.z() * m)) < 1e-13);
    CHECK(std::abs(weight_at(LatticePoint(p, 1)) - weight_series(p, 2).M) < 1e-10 * std::abs(m) * 5.0);
    for (double qv : {0.3, 0.6, 0.9})
        for (double phi : {-2.0, 0.5, 2.9}) {
            const ScalingResiduals r = scaling_relations_check(2, CirclePoint(phi, QParameter(qv)));
            CHECK(r.F_even < 1e-9);
            CHECK(r.G_even < 1e-9);
            CHECK(r.M_even < 1e-9);
        }
    const ScalingResiduals zero = scaling_relations_check(0, p);
    CHECK(zero.F_even < 1e-13);
    CHECK(zero.M_even < 1e-13);
}

TEST_CASE("odd scaling shrinks as q grows")
{
    const ScalingResiduals lo = scaling_relations_check(1, CirclePoint(0.4, QParameter(0.3)));
    const ScalingResiduals hi = scaling_relations_check(1, CirclePoint(0.4, QParameter(0.9)));
    CHECK(hi.M_odd < lo.M_odd);
    CHECK(hi.F_odd < lo.F_odd);
    CHECK(hi.M_odd < 1e-9);
    CHECK(hi.F_odd < 1e-9);
}

TEST_CASE("RS functions")
{
    const QParameter q(0.7);
    CHECK(std::abs(rs_function(3, CirclePoint(0.8, q)) - oracle::psi3_phi08_q07) < 1e-14);
    for (double phi : {-1.0, 0.0, 2.2}) {
        const CirclePoint p(phi, q);
        CHECK(std::norm(rs_function(0, p)) == Approx(szego_measure(p) / (2.0 * pi)).epsilon(1e-13));
        const auto seq = rs_function_sequence(10, p);
        for (int n = 0; n < 10; ++n) {
            CHECK(std::abs(seq[n] - rs_function(n, p)) < 1e-13);
            CHECK(std::norm(rs_function(n, p)) == Approx(std::norm(rs_function(n, CirclePoint(-phi, q)))).epsilon(1e-12));
        }
        const LatticePoint l(p, 0);
        CHECK(std::abs(rs_function(4, l) - rs_function(4, p)) < 1e-15);
    }
    CHECK(rs_function_bound(q) > 0.0);
}

TEST_CASE("RS function orthonormality")
{
    for (double qv : {0.3, 0.6, 0.9}) {
        const auto g = rs_gram_matrix(QParameter(qv), 9, QuadratureRule::periodic_trapezoid(512));
        CHECK((g - Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-8);
    }
    CHECK_THROWS_AS(rs_gram_matrix(QParameter(0.5), 3, QuadratureRule::gauss_legendre(0.0, 1.0)), DomainError);
}

TEST_CASE("bilinear kernel")
{
    const QParameter q(0.6);
    CHECK(std::abs(bilinear_kernel(0.4, -1.3, 0.5, q) - oracle::kernel_b04_p_m13_eps05_q06) < 1e-13);
    const cplx k0 = bilinear_kernel(0.4, -1.3, 0.0, q);
    CHECK(std::abs(k0 - std::conj(rs_function(0, CirclePoint(0.4, q))) * rs_function(0, CirclePoint(-1.3, q))) < 1e-15);
    const SeriesValue s = bilinear_kernel_series(0.4, -1.3, 0.5, q, 80, 1e-12);
    CHECK(std::abs(s.value - bilinear_kernel(0.4, -1.3, 0.5, q)) < 1e-10);
    // Hermitian in the two angles
    CHECK(std::abs(bilinear_kernel(1.1, 0.2, 0.7, q) - std::conj(bilinear_kernel(0.2, 1.1, 0.7, q))) < 1e-12);
    CHECK_THROWS_AS(bilinear_kernel(0.0, 0.0, 1.0, q), DomainError);
    CHECK_THROWS_AS(bilinear_kernel_series(0.0, 0.0, 0.99, q, 5, 1e-12), NonConvergence);
}

TEST_CASE("kernel reproducing and semigroup")
{
    for (double qv : {0.3, 0.6, 0.9}) {
        const QParameter q(qv);
        for (int n = 0; n <= 6; ++n)
            CHECK(kernel_reproducing_check(n, 0.7, 0.5, q) < 1e-8);
        CHECK(kernel_semigroup_check(-0.9, 1.4, 0.6, 0.5, q) < 1e-8);
    }
}

TEST_CASE("q-derivative identities")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-pi, pi);
    for (double qv : {0.3, 0.6, 0.9})
        for (int trial = 0; trial < 10; ++trial) {
            const CirclePoint p(u(rng), QParameter(qv));
            for (int n = 0; n <= 10; ++n) {
                const DerivativeResiduals r = q_derivative_identities_check(n, p);
                CHECK(r.poly < 1e-8);
                CHECK(r.weight < 1e-8);
                CHECK(r.lowering_form < 1e-8);
                CHECK(r.raising_form < 1e-8);
            }
        }
    const DerivativeResiduals r = q_derivative_identities_check(3, CirclePoint(1.0, QParameter(0.5)));
    CHECK(r.lowering_form < 1e-9);
    CHECK(r.raising_form < 1e-9);
    CHECK(q_derivative_identities_check(0, CirclePoint(1.0, QParameter(0.5))).lowering_form < 1e-12);
}
