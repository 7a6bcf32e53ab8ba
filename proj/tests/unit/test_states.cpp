#include "doctest.h"

#include <cmath>
#include <random>

#include "frozen.hpp"
#include "rstk/states.hpp"

using namespace rstk;
using doctest::Approx;

TEST_CASE("coherent label domain")
{
    const QParameter q(0.8);
    CHECK_NOTHROW(CoherentLabel(2.2, 0.0, q));
    CHECK_THROWS_AS(CoherentLabel(std::sqrt(5.5), 0.0, q), DomainError);
    CHECK_THROWS_AS(CoherentLabel(-1.0, 0.0, q), DomainError);
    const CoherentLabel l(1.5, 0.4, q);
    CHECK(l.mu2() == Approx(2.25).epsilon(1e-15));
    CHECK(std::abs(l.mu() - std::polar(1.5, 0.4)) < 1e-15);
    CHECK(l.normalization() == Approx(q_exponential(0.2 * 2.25, q).real()).epsilon(1e-15));
}

TEST_CASE("coherent coefficients")
{
    const QParameter q(0.8);
    const StateVector vac = coherent_coefficients(CoherentLabel(0.0, 0.0, q), BasisTruncation{10});
    CHECK(std::abs(vac.coeffs(0) - 1.0) < 1e-15);
    CHECK(vac.coeffs.tail(9).cwiseAbs().maxCoeff() == 0.0);

    const StateVector v = coherent_coefficients(CoherentLabel(std::sqrt(2.0), 0.3, q), BasisTruncation{200});
    CHECK(v.coeffs.squaredNorm() == Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(v.tail_mass) < 1e-10);
    CHECK_FALSE(v.truncation_warning);
    const StateVector short_v = coherent_coefficients(CoherentLabel(std::sqrt(2.0), 0.3, q), BasisTruncation{4});
    CHECK(short_v.truncation_warning);
    CHECK(coherent_eigen_residual(CoherentLabel(std::sqrt(2.0), 0.3, q), BasisTruncation{200}) < 1e-9);
}

TEST_CASE("coherent state function")
{
    const QParameter q(0.8);
    const CoherentLabel l(1.2, 0.0, q);
    const CirclePoint p(0.5, q);
    CHECK(std::abs(coherent_function(l, p) - oracle::coherent_q08_mu12_phi05) < 1e-12);
    CHECK(std::abs(coherent_function(l, p) - coherent_expansion(l, p, BasisTruncation{120})) < 1e-10);
    const CoherentLabel zero(0.0, 0.0, q);
    CHECK(std::abs(coherent_function(zero, p) - rs_function(0, p)) < 1e-15);
    CHECK(std::abs(coherent_overlap_quadrature(l, l) - 1.0) < 1e-10);
}

TEST_CASE("coherent overlap")
{
    const QParameter q(0.7);
    const CoherentLabel nu(0.9, -1.0, q), mu(1.1, 0.4, q);
    CHECK(std::abs(coherent_overlap(nu, mu) - oracle::overlap_q07) < 1e-13);
    CHECK(std::abs(coherent_overlap(mu, mu) - 1.0) < 1e-14);
    CHECK(std::abs(coherent_overlap(nu, mu) - coherent_overlap_quadrature(nu, mu)) < 1e-9);
    CHECK(std::abs(coherent_overlap(nu, mu) - std::conj(coherent_overlap(mu, nu))) < 1e-15);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> r(0.0, 1.8), t(-pi, pi);
    for (int i = 0; i < 100; ++i) {
        const CoherentLabel a(r(rng), t(rng), q), b(r(rng), t(rng), q);
        const double o = std::norm(coherent_overlap(a, b));
        CHECK(o > 0.0);
        CHECK(o <= 1.0 + 1e-14);
    }
    CHECK_THROWS_AS(coherent_overlap(nu, CoherentLabel(1.0, 0.0, QParameter(0.5))), DomainError);
}

TEST_CASE("resolution of unity moments")
{
    CHECK(resolution_of_unity(0, QParameter(0.5)).jackson == Approx(1.0).epsilon(1e-12));
    const ResolutionResult r3 = resolution_of_unity(3, QParameter(0.5));
    CHECK(r3.exact == Approx(2.625).epsilon(1e-15));
    CHECK(r3.jackson == Approx(2.625).epsilon(1e-10));
    CHECK(r3.simplified == Approx(2.625).epsilon(1e-10));
    for (double qv : {0.3, 0.6, 0.9})
        for (int n = 0; n <= 20; ++n) {
            const ResolutionResult r = resolution_of_unity(n, QParameter(qv));
            CHECK(r.residual < 1e-10);
            CHECK(r.simplified_residual < 1e-10);
        }
    CHECK_THROWS_AS(resolution_of_unity(61, QParameter(0.5)), DomainError);
}

TEST_CASE("phase labels")
{
    CHECK_NOTHROW(PhaseLabel(0.0, PhaseKind::cosine));
    CHECK_THROWS_AS(PhaseLabel(-0.1, PhaseKind::cosine), DomainError);
    CHECK_THROWS_AS(PhaseLabel(2.0, PhaseKind::sine), DomainError);
    CHECK(PhaseLabel::upper(PhaseKind::cosine) == Approx(pi));
    CHECK(PhaseLabel::lower(PhaseKind::sine) == Approx(-pi / 2));
}

TEST_CASE("phase states")
{
    const BasisTruncation t{64};
    const StateVector zero = phase_state_coefficients(PhaseLabel(0.0, PhaseKind::cosine), t);
    CHECK(zero.coeffs.cwiseAbs().maxCoeff() == 0.0);
    for (double g : {0.3, 1.0, 2.5})
        CHECK(phase_eigen_residual(PhaseLabel(g, PhaseKind::cosine), t) < 1e-10);
    for (double g : {-1.2, 0.2, 1.4})
        CHECK(phase_eigen_residual(PhaseLabel(g, PhaseKind::sine), t) < 1e-10);
}

TEST_CASE("trigonometric orthogonality")
{
    const BasisTruncation t{21};
    for (PhaseKind kind : {PhaseKind::cosine, PhaseKind::sine}) {
        const auto g = phase_gram(kind, t, phase_rule(kind));
        CHECK((g - Eigen::MatrixXcd::Identity(21, 21)).cwiseAbs().maxCoeff() < 1e-12);
    }
    const auto one = phase_gram(PhaseKind::cosine, BasisTruncation{1}, phase_rule(PhaseKind::cosine));
    CHECK(std::abs(one(0, 0) - 1.0) < 1e-14);
}

TEST_CASE("orthogonality kernel and smearing")
{
    const BasisTruncation t{40};
    for (PhaseKind kind : {PhaseKind::cosine, PhaseKind::sine}) {
        const double a = kind == PhaseKind::cosine ? 0.7 : -0.4;
        const double b = kind == PhaseKind::cosine ? 2.1 : 1.0;
        CHECK(phase_orthogonality_kernel(kind, a, b, t) == Approx(phase_orthogonality_kernel(kind, b, a, t)).epsilon(1e-14));
        const cplx quad = phase_orthogonality_kernel_quadrature(kind, a, b, t, QParameter(0.6));
        CHECK(std::abs(quad - phase_orthogonality_kernel(kind, a, b, t)) < 1e-9);
    }
    // the diagonal grows linearly with the truncation
    const double d1 = phase_orthogonality_kernel(PhaseKind::cosine, 1.0, 1.0, BasisTruncation{100});
    const double d2 = phase_orthogonality_kernel(PhaseKind::cosine, 1.0, 1.0, BasisTruncation{200});
    CHECK(d2 / d1 == Approx(2.0).epsilon(0.02));
    const double s = phase_smearing(PhaseKind::cosine, 1.0, BasisTruncation{200}, [](double g) { return std::sin(2.0 * g); });
    CHECK(std::abs(s - std::sin(2.0)) < 1e-3);
    const double s2 = phase_smearing(PhaseKind::sine, 0.5, BasisTruncation{200},
                                     [](double g) { return std::sin(2.0 * (g + pi / 2)); });
    CHECK(std::abs(s2 - std::sin(2.0 * (0.5 + pi / 2))) < 1e-3);
}

TEST_CASE("phase completeness")
{
    for (PhaseKind kind : {PhaseKind::cosine, PhaseKind::sine})
        CHECK(phase_completeness_check(kind, BasisTruncation{24}, 0.4, -1.1, QParameter(0.6)) < 1e-12);
}
