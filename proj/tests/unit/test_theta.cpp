#include "doctest.h"

#include <cmath>

#include "frozen.hpp"
#include "rstk/numerics.hpp"
#include "rstk/theta.hpp"

using namespace rstk;
using doctest::Approx;

TEST_CASE("theta3 values")
{
    CHECK(theta3(0.4, 1e-300).real() == 1.0);
    CHECK(theta3(0.0, 0.25).real() == Approx(oracle::theta3_0_quarter).epsilon(1e-15));
    CHECK(theta3(0.7, 0.6).real() == Approx(oracle::theta3_07_q06).epsilon(1e-14));
    CHECK(theta3(0.3, 0.5).real() == Approx(theta3(-0.3, 0.5).real()).epsilon(1e-15));
    CHECK(theta3(0.3, 0.5).real() == Approx(theta3(0.3 + pi, 0.5).real()).epsilon(1e-14));
    CHECK(theta3(0.1, 0.5).error_bound < 1e-14);
}

TEST_CASE("theta1 values")
{
    CHECK(theta1(0.0, 0.7).real() == 0.0);
    CHECK(theta1(-0.9, 0.4).real() == Approx(-theta1(0.9, 0.4).real()).epsilon(1e-15));
    CHECK(theta1(pi / 2, 0.25).real() == Approx(oracle::theta1_halfpi_quarter).epsilon(1e-15));
    CHECK(theta1(0.7, 0.6).real() == Approx(oracle::theta1_07_q06).epsilon(1e-14));
}

TEST_CASE("circle point")
{
    const QParameter q(0.5);
    const CirclePoint p(0.3, q);
    CHECK(std::abs(p.z() - (-std::polar(1.0, 0.3) / std::sqrt(0.5))) < 1e-15);
    CHECK(std::abs(std::abs(p.z()) - std::exp(p.log_abs_z())) < 1e-15);
    const CirclePoint w(0.3 + 2.0 * pi, q);
    CHECK(w.phi() == Approx(0.3).epsilon(1e-13));
    CHECK(CirclePoint(pi, q).phi() == Approx(-pi).epsilon(1e-15));
}

TEST_CASE("szego measure")
{
    const QParameter q(0.5);
    CHECK(szego_measure(CirclePoint(0.0, q)) == Approx(theta3(0.0, std::sqrt(0.5)).real()).epsilon(1e-15));
    for (double qv : {0.1, 0.5, 0.9}) {
        const QParameter qq(qv);
        double lo = 1e300;
        for (int i = 0; i < 1001; ++i)
            lo = std::min(lo, szego_measure(CirclePoint(-pi + 2.0 * pi * i / 1000.0, qq)));
        CHECK(lo > 0.0);
        CHECK(szego_measure(CirclePoint(0.8, qq)) == Approx(szego_measure(CirclePoint(-0.8, qq))).epsilon(1e-15));
        const auto mean = quadrature_sum([&](double phi) { return szego_measure(CirclePoint(phi, qq)); },
                                         QuadratureRule::periodic_trapezoid(512));
        CHECK(mean.real() / (2.0 * pi) == Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("measure decomposition")
{
    const QParameter q(0.5);
    const cplx e0 = measure_decomposition(CirclePoint(0.0, q));
    CHECK(e0.imag() == 0.0);
    CHECK(e0.real() > 0.0);
    CHECK(std::abs(measure_decomposition(CirclePoint(1.0, q)) - oracle::measure_decomp_phi1_q05) < 1e-15);
    for (double qv : {0.2, 0.6, 0.95})
        for (int i = 0; i < 37; ++i) {
            const CirclePoint p(-pi + 2.0 * pi * i / 36.0, QParameter(qv));
            CHECK(std::norm(measure_decomposition(p)) == Approx(szego_measure(p)).epsilon(1e-12));
        }
    // small q puts the imaginary peaks at the ends of the interval
    const QParameter small(0.1);
    double best = -1.0, at = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double phi = -pi + 2.0 * pi * i / 400.0;
        const double v = measure_decomposition(CirclePoint(phi, small)).imag();
        if (v > best) {
            best = v;
            at = phi;
        }
    }
    CHECK(std::abs(std::abs(at) - pi) < 0.05);
}

TEST_CASE("ramanujan theta")
{
    CHECK(ramanujan_f(0.0, 0.0).real() == 1.0);
    CHECK(ramanujan_f(0.0, 0.4).real() == Approx(1.4).epsilon(1e-15));
    CHECK(ramanujan_f(0.3, 0.4).real() == Approx(oracle::ramanujan_03_04).epsilon(1e-14));
    const cplx a{0.2, 0.3}, b{-0.1, 0.5};
    CHECK(std::abs(ramanujan_f(a, b).value - ramanujan_f(b, a).value) < 1e-15);
    const QParameter q(0.6);
    for (double phi : {-2.0, 0.0, 0.7, 3.0}) {
        const cplx x = q.sqrt_q() * std::polar(1.0, phi);
        const cplx y = q.sqrt_q() * std::polar(1.0, -phi);
        CHECK(ramanujan_f(x, y).real() == Approx(szego_measure(CirclePoint(phi, q))).epsilon(1e-13));
    }
    CHECK_THROWS_AS(ramanujan_f(1.0, 1.0), DomainError);
}
