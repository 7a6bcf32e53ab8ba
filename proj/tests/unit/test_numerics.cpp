#include "doctest.h"

#include <cmath>

#include "rstk/numerics.hpp"
#include "rstk/polynomials.hpp"
#include "rstk/theta.hpp"

using namespace rstk;
using doctest::Approx;

TEST_CASE("periodic trapezoid")
{
    const auto rule = QuadratureRule::periodic_trapezoid(64);
    CHECK(rule.size() == 64);
    CHECK(std::abs(quadrature_sum([](double x) { return std::cos(x); }, rule)) < 1e-14);
    CHECK(quadrature_sum([](double) { return 1.0; }, rule).real() == Approx(2.0 * pi).epsilon(1e-15));
    const double nome = std::sqrt(0.5);
    const auto v = integrate([&](double phi) { return theta3(phi / 2.0, nome).real() / (2.0 * pi); },
                             QuadratureRule::periodic_trapezoid(32));
    CHECK(v.real() == Approx(1.0).epsilon(1e-14));
    CHECK(rule.refined().size() == 128);
}

TEST_CASE("gauss-legendre")
{
    std::vector<double> x, w;
    gauss_legendre_unit(10, x, w);
    double s = 0.0, m8 = 0.0;
    for (int i = 0; i < 10; ++i) {
        s += w[i];
        m8 += w[i] * std::pow(x[i], 8);
    }
    CHECK(s == Approx(2.0).epsilon(1e-15));
    CHECK(m8 == Approx(2.0 / 9.0).epsilon(1e-14));
    const auto rule = QuadratureRule::gauss_legendre(0.0, pi, 16, 3);
    CHECK(rule.size() == 48);
    CHECK(quadrature_sum([](double t) { return std::sin(t); }, rule).real() == Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(QuadratureRule::gauss_legendre(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(gauss_legendre_unit(0, x, w), DomainError);
}

TEST_CASE("gauss-hermite")
{
    std::vector<double> t, sw;
    gauss_hermite(40, t, sw);
    double m0 = 0.0, m2 = 0.0, m4 = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double w = sw[i] * std::exp(-t[i] * t[i]);
        m0 += w;
        m2 += w * t[i] * t[i];
        m4 += w * std::pow(t[i], 4);
        CHECK(t[i] == Approx(-t[39 - i]).epsilon(1e-15));
    }
    CHECK(m0 == Approx(std::sqrt(pi)).epsilon(1e-14));
    CHECK(m2 == Approx(std::sqrt(pi) / 2.0).epsilon(1e-14));
    CHECK(m4 == Approx(3.0 * std::sqrt(pi) / 4.0).epsilon(1e-13));
    // large rules stay finite
    gauss_hermite(200, t, sw);
    for (double w : sw)
        CHECK(std::isfinite(w));
}

TEST_CASE("log-gaussian rule")
{
    const MomentKernel p(KernelKind::P_r, 1.0, QParameter(0.5));
    const auto v = integrate([&](double omega) { return p.density(omega); }, p.rule(0));
    CHECK(v.real() == Approx(1.0).epsilon(1e-12));
    CHECK(QuadratureRule::log_gaussian(1.0, 0.0, 1.0, 10).kind() == RuleKind::log_gaussian);
    CHECK_THROWS_AS(QuadratureRule::log_gaussian(0.0, 0.0, 1.0), DomainError);
}

TEST_CASE("integrate refines and fails loudly")
{
    // unresolvable on a coarse grid
    auto rough = [](double x) { return std::abs(x) < 1e-3 ? 1.0 : 0.0; };
    CHECK_THROWS_AS(integrate(rough, QuadratureRule::periodic_trapezoid(8), 1e-14), QuadratureFailure);
    const auto v = integrate([](double x) { return std::exp(std::cos(x)); }, QuadratureRule::periodic_trapezoid(4));
    CHECK(v.real() == Approx(2.0 * pi * 1.2660658777520082).epsilon(1e-13));
    CHECK(v.error_bound < 1e-10);
}
