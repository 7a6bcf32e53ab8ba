#pragma once

#include <cmath>
#include <complex>
#include <concepts>

#include "rstk/errors.hpp"

namespace rstk {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Deformation parameter 0 < q < 1 together with its width m, q = exp(-1/(2 m^2)).
class QParameter {
public:
    explicit QParameter(double q);
    static QParameter from_width(double m);

    double value() const noexcept { return q_; }
    double width() const noexcept { return m_; }
    double sqrt_q() const noexcept { return std::sqrt(q_); }
    double log() const noexcept { return log_q_; }
    double pow(double s) const noexcept { return std::exp(s * log_q_); }

    // q within 1e-8 of one; products still evaluate but need many terms.
    bool near_unit() const noexcept { return q_ > 1.0 - 1e-8; }

private:
    double q_;
    double log_q_;
    double m_;
};

struct TruncationPolicy {
    double abs_tol = 1e-17;
    int max_terms = 10000;
};

struct SeriesValue {
    cplx value{};
    double error_bound = 0.0;
    int terms = 0;
    bool near_unit_q = false;

    double real() const noexcept { return value.real(); }
};

// (a;q)_n
cplx q_pochhammer(cplx a, const QParameter& q, int n);
double q_pochhammer(double a, const QParameter& q, int n);

// (a;q)_inf with a bound on the dropped factors.
SeriesValue q_pochhammer_inf(cplx a, const QParameter& q, const TruncationPolicy& policy = {});

// Gaussian binomial, product form; zero outside 0 <= k <= n.
double q_binomial(int n, int k, const QParameter& q);

// [n]_q = (1 - q^n)/(1 - q)
double q_number(int n, const QParameter& q);
double q_factorial(int n, const QParameter& q);

// 1 - q^n without cancellation
double one_minus_qpow(double n, const QParameter& q);

// e_q(x) = 1/(x;q)_inf, |x| < 1
SeriesValue q_exponential(cplx x, const QParameter& q, const TruncationPolicy& policy = {});
// same quantity from sum x^n/(q;q)_n
SeriesValue q_exponential_series(cplx x, const QParameter& q, const TruncationPolicy& policy = {});

// [f(z) - f(q^2 z)] / [z (1 - q^2)]
template <class F>
    requires std::invocable<F, cplx>
cplx jackson_derivative(F&& f, cplx z, const QParameter& q)
{
    if (z == cplx{0.0, 0.0})
        throw SingularPoint("jackson_derivative: z = 0");
    const double q2 = q.value() * q.value();
    return (cplx(f(z)) - cplx(f(q2 * z))) / (z * (1.0 - q2));
}

// (1-q) U sum_k q^k g(U q^k), U defaults to 1/(1-q)
template <class G>
    requires std::invocable<G, double>
SeriesValue jackson_integral(G&& g, const QParameter& q, const TruncationPolicy& policy = {},
                             double upper = -1.0)
{
    const double qv = q.value();
    if (upper < 0.0)
        upper = 1.0 / (1.0 - qv);
    SeriesValue out;
    out.near_unit_q = q.near_unit();
    double qk = 1.0;
    cplx sum{};
    int quiet = 0;
    for (int k = 0; k < policy.max_terms; ++k) {
        const cplx term = qk * cplx(g(upper * qk));
        sum += term;
        out.terms = k + 1;
        // two consecutive small terms guard against an isolated zero of g
        quiet = std::abs(term) < policy.abs_tol ? quiet + 1 : 0;
        if (quiet >= 2) {
            out.value = (1.0 - qv) * upper * sum;
            out.error_bound = (1.0 - qv) * upper * std::abs(term) * qv / (1.0 - qv);
            return out;
        }
        qk *= qv;
    }
    throw NonConvergence("jackson_integral: term budget exhausted");
}

}  // namespace rstk
