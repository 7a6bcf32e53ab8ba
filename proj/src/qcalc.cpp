#include "rstk/qcalc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rstk {

QParameter::QParameter(double q) : q_(q), log_q_(0.0), m_(0.0)
{
    if (!(q > 0.0 && q < 1.0))
        throw DomainError("q must lie in the open interval (0,1), got " + std::to_string(q));
    log_q_ = std::log(q_);
    m_ = 1.0 / std::sqrt(-2.0 * log_q_);
}

QParameter QParameter::from_width(double m)
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw DomainError("width m must be positive and finite");
    QParameter p(std::exp(-1.0 / (2.0 * m * m)));
    p.m_ = m;
    return p;
}

double one_minus_qpow(double n, const QParameter& q)
{
    return -std::expm1(n * q.log());
}

cplx q_pochhammer(cplx a, const QParameter& q, int n)
{
    if (n < 0)
        throw DomainError("q_pochhammer: negative order");
    cplx p{1.0, 0.0};
    cplx t = a;
    for (int j = 0; j < n; ++j) {
        p *= 1.0 - t;
        t *= q.value();
    }
    return p;
}

double q_pochhammer(double a, const QParameter& q, int n)
{
    if (n < 0)
        throw DomainError("q_pochhammer: negative order");
    // (q;q)_n is the common case; use 1 - q^j without cancellation there
    double p = 1.0;
    if (a == q.value()) {
        for (int j = 1; j <= n; ++j)
            p *= one_minus_qpow(j, q);
        return p;
    }
    double t = a;
    for (int j = 0; j < n; ++j) {
        p *= 1.0 - t;
        t *= q.value();
    }
    return p;
}

SeriesValue q_pochhammer_inf(cplx a, const QParameter& q, const TruncationPolicy& policy)
{
    SeriesValue out;
    out.near_unit_q = q.near_unit();
    out.value = 1.0;
    if (a == cplx{0.0, 0.0})
        return out;
    const double qv = q.value();
    cplx t = a;
    for (int j = 0; j < policy.max_terms; ++j) {
        const double mag = std::abs(t);
        // sum_{i>=j} |a q^i| <= mag/(1-q); |log of the tail| is at most that over (1-mag)
        const double s = mag < 1.0 ? mag / ((1.0 - qv) * (1.0 - mag)) : 1.0;
        if (s < policy.abs_tol) {
            out.error_bound = std::abs(out.value) * std::expm1(s);
            out.terms = j;
            return out;
        }
        out.value *= 1.0 - t;
        t *= qv;
    }
    throw NonConvergence("q_pochhammer_inf: term budget exhausted for q = " + std::to_string(qv));
}

double q_binomial(int n, int k, const QParameter& q)
{
    if (n < 0 || k < 0 || k > n)
        return 0.0;
    if (k > n - k)
        k = n - k;
    double b = 1.0;
    for (int j = 1; j <= k; ++j)
        b *= one_minus_qpow(n - k + j, q) / one_minus_qpow(j, q);
    return b;
}

double q_number(int n, const QParameter& q)
{
    if (n < 0)
        throw DomainError("q_number: negative argument");
    return one_minus_qpow(n, q) / (1.0 - q.value());
}

double q_factorial(int n, const QParameter& q)
{
    if (n < 0)
        throw DomainError("q_factorial: negative argument");
    double f = 1.0;
    for (int j = 2; j <= n; ++j)
        f *= q_number(j, q);
    return f;
}

SeriesValue q_exponential(cplx x, const QParameter& q, const TruncationPolicy& policy)
{
    if (!(std::abs(x) < 1.0))
        throw DomainError("q_exponential: |x| must be < 1");
    SeriesValue p = q_pochhammer_inf(x, q, policy);
    SeriesValue out = p;
    out.value = 1.0 / p.value;
    out.error_bound = p.error_bound / (std::abs(p.value) * (std::abs(p.value) - p.error_bound));
    return out;
}

SeriesValue q_exponential_series(cplx x, const QParameter& q, const TruncationPolicy& policy)
{
    if (!(std::abs(x) < 1.0))
        throw DomainError("q_exponential_series: |x| must be < 1");
    SeriesValue out;
    out.near_unit_q = q.near_unit();
    cplx term{1.0, 0.0};
    cplx sum = term;
    const double ax = std::abs(x);
    for (int n = 1; n < policy.max_terms; ++n) {
        term *= x / one_minus_qpow(n, q);
        sum += term;
        // ratio of successive terms tends to |x| from above
        const double ratio = ax / one_minus_qpow(n + 1, q);
        if (std::abs(term) < policy.abs_tol * std::max(1.0, std::abs(sum)) && ratio < 1.0) {
            out.value = sum;
            out.terms = n + 1;
            out.error_bound = std::abs(term) * ratio / (1.0 - ratio);
            return out;
        }
    }
    throw NonConvergence("q_exponential_series: term budget exhausted");
}

}  // namespace rstk
