#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>

#include "frozen.hpp"
#include "rstk/observables.hpp"

using namespace rstk;
using doctest::Approx;

TEST_CASE("auxiliary series")
{
    const QParameter q(0.8);
    const AuxiliarySeries zero = auxiliary_series(CoherentLabel(0.0, 0.0, q));
    CHECK(zero.Mq == Approx(1.0).epsilon(1e-15));
    CHECK(zero.Nq_series == Approx(1.0 / std::sqrt(q_number(2, q))).epsilon(1e-15));
    CHECK(zero.Lq == Approx(1.0).epsilon(1e-15));
    const AuxiliarySeries a = auxiliary_series(CoherentLabel(std::sqrt(2.0), 0.0, q));
    CHECK(a.Mq == Approx(oracle::aux_M_q08_mu2_2).epsilon(1e-13));
    CHECK(a.Nq_series == Approx(oracle::aux_N_q08_mu2_2).epsilon(1e-13));
    CHECK(a.Lq == Approx(oracle::aux_L_q08_mu2_2).epsilon(1e-13));
    double prev = 0.0;
    for (double mu2 : {0.5, 1.0, 2.0, 4.0}) {
        const AuxiliarySeries s = auxiliary_series(CoherentLabel(std::sqrt(mu2), 0.0, q));
        CHECK(s.Mq > prev);
        prev = s.Mq;
        // Lq against its term-by-term definition
        double l = 0.0, w = 1.0;
        for (int n = 0; n < 400; ++n) {
            l += (2 * n + 1) * w / std::sqrt(q_number(n + 1, q));
            w *= mu2 / q_number(n + 1, q);
        }
        CHECK(s.Lq == Approx(l).epsilon(1e-13));
    }
}

TEST_CASE("closed-form moments")
{
    const QParameter q(0.8);
    const MomentSet m = moments_closed_form(CoherentLabel(std::sqrt(2.0), pi / 3, q));
    CHECK(m.meanC == Approx(oracle::mom_C_q08_mu2_2).epsilon(1e-12));
    CHECK(m.meanS == Approx(oracle::mom_S_q08_mu2_2).epsilon(1e-12));
    CHECK(m.meanC2 == Approx(oracle::mom_C2_q08_mu2_2).epsilon(1e-12));
    CHECK(m.meanS2 == Approx(oracle::mom_S2_q08_mu2_2).epsilon(1e-12));
    CHECK(m.meanCSplus == Approx(oracle::mom_CS_q08_mu2_2).epsilon(1e-12));
    CHECK(m.meanN == Approx(oracle::mom_N_q08_mu2_2).epsilon(1e-12));
    CHECK(m.meanN2 == Approx(oracle::mom_N2_q08_mu2_2).epsilon(1e-12));
    CHECK(m.meanNC == Approx(oracle::mom_NC_q08_mu2_2).epsilon(1e-12));
    CHECK(m.meanNS == Approx(oracle::mom_NS_q08_mu2_2).epsilon(1e-12));
    // <C^2 - S^2>/<CS + SC> = cot(2 theta)
    CHECK((m.meanC2 - m.meanS2) / m.meanCSplus == Approx(1.0 / std::tan(2.0 * pi / 3)).epsilon(1e-12));
    CHECK(m.meanN2 >= m.meanN * m.meanN);
    // V_N differs from <N> away from the undeformed limit
    CHECK(std::abs((m.meanN2 - m.meanN * m.meanN) - m.meanN) > 0.1);

    const MomentSet vac = moments_closed_form(CoherentLabel(0.0, 0.0, q));
    CHECK(vac.meanC == 0.0);
    CHECK(vac.meanS == 0.0);
    CHECK(vac.meanC2 + vac.meanS2 == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("two-route moments")
{
    const QParameter q(0.8);
    const CoherentLabel l(std::sqrt(2.0), pi / 3, q);
    CHECK(moment_difference(moments_closed_form(l), moments_matrix_route(l, BasisTruncation{300})) < 1e-8);
    const CoherentLabel vac(0.0, 0.0, q);
    CHECK(moment_difference(moments_closed_form(vac), moments_matrix_route(vac, BasisTruncation{8})) < 1e-15);
    CHECK_THROWS_AS(moments_matrix_route(l, BasisTruncation{5}), TruncationWarning);
}

TEST_CASE("asymptotic moments")
{
    const MomentSet m = moments_closed_form(CoherentLabel(std::sqrt(50.0), pi / 3, QParameter(0.99)));
    CHECK(m.meanC == Approx(oracle::mom_C_q099_mu2_50).epsilon(1e-10));
    CHECK(std::abs(m.meanC - 0.5) < 0.05);
}

TEST_CASE("number moments and excitation distribution")
{
    const CoherentLabel l(std::sqrt(2.0), 0.0, QParameter(0.8));
    CHECK(mean_number_power(l, 0) == Approx(1.0).epsilon(1e-14));
    CHECK(mean_number_power(l, 1) == Approx(oracle::mom_N_q08_mu2_2).epsilon(1e-12));
    CHECK(mean_number_power(l, 2) == Approx(oracle::mom_N2_q08_mu2_2).epsilon(1e-12));
    const auto p = excitation_distribution(l, 41);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    CHECK(total <= 1.0 + 1e-15);
    CHECK(total > 0.999);
    const auto all = excitation_distribution(l, 200);
    CHECK(std::accumulate(all.begin(), all.end(), 0.0) == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("cosine-sine uncertainty")
{
    const QParameter q(0.8);
    const CSUncertainty vac = uncertainty_cs(CoherentLabel(0.0, 0.0, q));
    CHECK(vac.b == 0.0);
    CHECK(vac.c == 0.0);
    CHECK(vac.value == Approx(1.0 / 16).epsilon(1e-15));
    CHECK(vac.bound == Approx(1.0 / 16).epsilon(1e-15));

    const CoherentLabel l(std::sqrt(2.0), pi / 3, q);
    const CSUncertainty u = uncertainty_cs(l);
    CHECK(u.value == Approx(oracle::mom_ucs_q08_mu2_2).epsilon(1e-10));
    CHECK(u.value == Approx(uncertainty_cs_from_moments(moments_closed_form(l))).epsilon(1e-10));
    CHECK(u.value >= u.bound);
    for (double theta : {0.0, pi / 3, 1.7})
        CHECK(uncertainty_cs(CoherentLabel(std::sqrt(2.0), theta, q)).value == Approx(u.value).epsilon(1e-14));
    // the commutator bound fades as q -> 1 at large |mu|
    CHECK(uncertainty_cs(CoherentLabel(std::sqrt(50.0), 0.0, QParameter(0.99))).bound < 1e-6);
}

TEST_CASE("symmetric uncertainty")
{
    const QParameter q(0.8);
    const CoherentLabel l(std::sqrt(2.0), pi / 3, q);
    CHECK(uncertainty_symmetric(l) == Approx(oracle::mom_usym_q08_mu2_2).epsilon(1e-10));
    for (double theta : {0.0, 0.9, 2.4})
        CHECK(uncertainty_symmetric(CoherentLabel(std::sqrt(2.0), theta, q)) ==
              Approx(uncertainty_symmetric(l)).epsilon(1e-12));
    for (double qv : {0.8, 0.85, 0.9, 0.95})
        for (int i = 1; i <= 20; ++i)
            CHECK(uncertainty_symmetric(CoherentLabel(std::sqrt(0.2 * i), 0.3, QParameter(qv))) >= 0.25);
    const double far = uncertainty_symmetric(CoherentLabel(std::sqrt(50.0), pi / 3, QParameter(0.99)));
    CHECK(far == Approx(oracle::mom_usym_q099_mu2_50).epsilon(1e-10));
    CHECK(std::abs(far - 0.25) < 0.02);
    CHECK_THROWS_AS(uncertainty_symmetric(CoherentLabel(0.0, 0.0, q)), DegenerateLabel);
}
