#include "doctest.h"

#include <cmath>
#include <random>

#include "rstk/operators.hpp"

using namespace rstk;
using doctest::Approx;

TEST_CASE("operator matrices")
{
    const QParameter q(0.5);
    const BasisTruncation t{12};
    const auto b = build_operator(OperatorLabel::B, t, q).matrix;
    const auto bd = build_operator(OperatorLabel::Bdag, t, q).matrix;
    CHECK(b(0, 1).real() == Approx(1.0).epsilon(1e-15));
    CHECK(b(2, 3).real() == Approx(std::sqrt(q_number(3, q))).epsilon(1e-15));
    CHECK((bd - b.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    for (auto l : {OperatorLabel::C, OperatorLabel::S, OperatorLabel::N, OperatorLabel::Nq}) {
        const auto m = build_operator(l, t, q).matrix;
        CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
    const auto nq = build_operator(OperatorLabel::Nq, t, q).matrix;
    const auto prod = bd * b;
    const int k = t.interior();
    CHECK((prod.topLeftCorner(k, k) - nq.topLeftCorner(k, k)).cwiseAbs().maxCoeff() < 1e-14);
    const auto em = build_operator(OperatorLabel::Eminus, t, q).matrix;
    CHECK(em.col(0).cwiseAbs().maxCoeff() == 0.0);
    CHECK(to_string(OperatorLabel::Eplus) == "Eplus");
    CHECK_THROWS_AS(build_operator(OperatorLabel::B, BasisTruncation{1}, q), DomainError);
}

TEST_CASE("ladder actions on the lattice")
{
    const QParameter q(0.5);
    const LadderResiduals r = qdiff_ladder_check(1, CirclePoint(0.8, q));
    CHECK(r.lowering < 1e-8);
    CHECK(r.raising < 1e-8);
    CHECK(r.number < 1e-8);
    CHECK(qdiff_ladder_check(0, CirclePoint(0.8, q)).lowering < 1e-12);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-pi, pi);
    for (double qv : {0.3, 0.6, 0.9})
        for (int trial = 0; trial < 10; ++trial) {
            const CirclePoint p(u(rng), QParameter(qv));
            for (int n = 0; n <= 10; ++n) {
                const LadderResiduals l = qdiff_ladder_check(n, p);
                CHECK(l.lowering < 1e-8);
                CHECK(l.raising < 1e-8);
                CHECK(l.number < 1e-8);
                CHECK(l.matrix_route < 1e-8);
            }
        }
}

TEST_CASE("lowering action is linear in f")
{
    const QParameter q(0.6);
    const LatticePoint p(CirclePoint(1.3, q));
    auto f = [](const LatticePoint& x) { return rs_function(2, x); };
    auto g = [](const LatticePoint& x) { return 3.0 * rs_function(2, x); };
    CHECK(std::abs(lowering_action(2, g, p) - 3.0 * lowering_action(2, f, p)) < 1e-12);
}

TEST_CASE("deformed algebra on the interior")
{
    for (double qv : {0.3, 0.6, 0.9}) {
        const AlgebraResiduals a = algebra_check(BasisTruncation{64}, QParameter(qv));
        CHECK(a.q_commutator < 1e-12);
        CHECK(a.q_commutator_lower < 1e-12);
        CHECK(a.q_commutator_raise < 1e-12);
        CHECK(a.commutator < 1e-12);
        CHECK(a.commutator_lower < 1e-12);
        CHECK(a.commutator_raise < 1e-12);
        CHECK(a.number_product < 1e-12);
        CHECK(a.shift_products < 1e-14);
        CHECK(a.phase_square_sum < 1e-14);
        CHECK(a.phase_commutator < 1e-14);
        CHECK(a.max_relation() < 1e-12);
    }
    CHECK(algebra_check(BasisTruncation{64}, QParameter(1.0 - 1e-8)).heisenberg_weyl < 1e-6);
    CHECK(algebra_check(BasisTruncation{64}, QParameter(0.5)).heisenberg_weyl > 0.1);
    CHECK_THROWS_AS(algebra_check(BasisTruncation{3}, QParameter(0.5)), DomainError);
}

TEST_CASE("energy spectrum")
{
    const QParameter q(0.7);
    CHECK(energy_spectrum(0, q).gap == Approx(1.7).epsilon(1e-15));
    for (int n = 0; n < 10; ++n) {
        const EnergyLevel a = energy_spectrum(n, q, 2.0);
        const EnergyLevel b = energy_spectrum(n + 1, q, 2.0);
        CHECK(b.energy - a.energy == Approx(a.gap * 2.0).epsilon(1e-12));
        CHECK(a.gap == Approx(1.7 * std::pow(0.7, n)).epsilon(1e-14));
    }
    CHECK(energy_spectrum(5, QParameter(1.0 - 1e-9)).gap == Approx(2.0).epsilon(1e-7));
    CHECK_THROWS_AS(energy_spectrum(-1, q), DomainError);
}
