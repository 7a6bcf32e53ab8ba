#include "rstk/observables.hpp"

#include <algorithm>
#include <cmath>

namespace rstk {

AuxiliarySeries auxiliary_series(const CoherentLabel& label, const TruncationPolicy& policy)
{
    const QParameter& q = label.q();
    const double x = label.mu2();
    AuxiliarySeries s;
    double w = 1.0;
    double sq1 = 1.0;  // [n+1]^{1/2}
    for (int n = 0; n < policy.max_terms; ++n) {
        const double sq2 = std::sqrt(q_number(n + 2, q));
        const double m = w / sq1;
        s.Mq += m;
        s.Nq_series += m / sq2;
        s.Lq += (2.0 * n + 1.0) * m;
        s.power_sums[0] += w;
        s.power_sums[1] += n * w;
        s.power_sums[2] += double(n) * n * w;
        s.terms = n + 1;
        // ratio x/[n+1] tends to (1-q)x < 1; stop once the weighted terms are negligible
        if (n > 0 && double(n) * n * w <= policy.abs_tol * s.power_sums[2] && x / q_number(n + 1, q) < 1.0)
            return s;
        if (x == 0.0)
            return s;
        w *= x / q_number(n + 1, q);
        sq1 = sq2;
    }
    throw NonConvergence("auxiliary_series: term budget exhausted");
}

MomentSet moments_closed_form(const CoherentLabel& label)
{
    const AuxiliarySeries s = auxiliary_series(label);
    const double einv = 1.0 / label.normalization();
    const double r = label.mu_abs();
    const double x = label.mu2();
    const double th = label.theta();
    MomentSet m;
    m.meanC = r * einv * s.Mq * std::cos(th);
    m.meanS = r * einv * s.Mq * std::sin(th);
    m.meanC2 = 0.5 - 0.25 * einv + 0.5 * x * einv * s.Nq_series * std::cos(2.0 * th);
    m.meanS2 = 0.5 - 0.25 * einv - 0.5 * x * einv * s.Nq_series * std::cos(2.0 * th);
    m.meanCSplus = x * einv * s.Nq_series * std::sin(2.0 * th);
    m.meanCSminus = cplx(0.0, 0.5 * einv);
    m.meanN = einv * s.power_sums[1];
    m.meanN2 = einv * s.power_sums[2];
    m.meanNC = 0.5 * r * einv * s.Lq * std::cos(th);
    m.meanNS = 0.5 * r * einv * s.Lq * std::sin(th);
    return m;
}

MomentSet moments_matrix_route(const CoherentLabel& label, const BasisTruncation& trunc)
{
    const StateVector v = coherent_coefficients(label, trunc);
    if (v.truncation_warning)
        throw TruncationWarning("moments_matrix_route: coefficient tail above 1e-10, raise n_max");
    const QParameter& q = label.q();
    const Eigen::MatrixXcd c = build_operator(OperatorLabel::C, trunc, q).matrix;
    const Eigen::MatrixXcd s = build_operator(OperatorLabel::S, trunc, q).matrix;
    const Eigen::MatrixXcd n = build_operator(OperatorLabel::N, trunc, q).matrix;
    const Eigen::VectorXcd& u = v.coeffs;
    const Eigen::VectorXcd cu = c * u;
    const Eigen::VectorXcd su = s * u;
    const Eigen::VectorXcd nu = n * u;
    // all three matrices are Hermitian, so <X Y> = (X u)^H (Y u)
    const cplx cs = cu.dot(su);
    const cplx sc = su.dot(cu);
    MomentSet m;
    m.meanC = u.dot(cu).real();
    m.meanS = u.dot(su).real();
    m.meanC2 = cu.squaredNorm();
    m.meanS2 = su.squaredNorm();
    m.meanCSplus = (cs + sc).real();
    m.meanCSminus = cs - sc;
    m.meanN = u.dot(nu).real();
    m.meanN2 = nu.squaredNorm();
    m.meanNC = nu.dot(cu).real();
    m.meanNS = nu.dot(su).real();
    return m;
}

double moment_difference(const MomentSet& a, const MomentSet& b)
{
    return std::max({std::abs(a.meanC - b.meanC), std::abs(a.meanS - b.meanS), std::abs(a.meanC2 - b.meanC2),
                     std::abs(a.meanS2 - b.meanS2), std::abs(a.meanCSplus - b.meanCSplus),
                     std::abs(a.meanCSminus - b.meanCSminus), std::abs(a.meanN - b.meanN),
                     std::abs(a.meanN2 - b.meanN2), std::abs(a.meanNC - b.meanNC), std::abs(a.meanNS - b.meanNS)});
}

double mean_number_power(const CoherentLabel& label, int k, const TruncationPolicy& policy)
{
    if (k < 0)
        throw DomainError("mean_number_power: negative power");
    const QParameter& q = label.q();
    const double x = label.mu2();
    double w = 1.0 / label.normalization();
    double sum = k == 0 ? w : 0.0;
    for (int n = 1; n < policy.max_terms; ++n) {
        w *= x / q_number(n, q);
        const double t = std::pow(double(n), k) * w;
        sum += t;
        if (t <= policy.abs_tol * sum && x / q_number(n + 1, q) < 1.0)
            return sum;
        if (x == 0.0)
            return sum;
    }
    throw NonConvergence("mean_number_power: term budget exhausted");
}

std::vector<double> excitation_distribution(const CoherentLabel& label, int n_max)
{
    const StateVector v = coherent_coefficients(label, BasisTruncation{n_max});
    std::vector<double> p(n_max);
    for (int n = 0; n < n_max; ++n)
        p[n] = std::norm(v.coeffs(n));
    return p;
}

CSUncertainty uncertainty_cs(const CoherentLabel& label)
{
    const AuxiliarySeries s = auxiliary_series(label);
    const double einv = 1.0 / label.normalization();
    const double x = label.mu2();
    CSUncertainty u;
    u.a = 0.5 - 0.25 * einv;
    u.b = 0.5 * x * einv * s.Nq_series;
    u.c = label.mu_abs() * einv * s.Mq;
    u.value = (u.a - u.b) * (u.a + u.b - u.c * u.c);
    u.bound = 0.0625 * einv * einv;
    return u;
}

double uncertainty_cs_from_moments(const MomentSet& m)
{
    const double vc = m.meanC2 - m.meanC * m.meanC;
    const double vs = m.meanS2 - m.meanS * m.meanS;
    const double vcs = 0.5 * m.meanCSplus - m.meanC * m.meanS;
    return vc * vs - vcs * vcs;
}

double uncertainty_symmetric(const MomentSet& m)
{
    const double den = m.meanC * m.meanC + m.meanS * m.meanS;
    if (!(den > 0.0))
        throw DegenerateLabel("uncertainty_symmetric: <C>^2 + <S>^2 vanishes");
    const double vn = m.meanN2 - m.meanN * m.meanN;
    const double vc = m.meanC2 - m.meanC * m.meanC;
    const double vs = m.meanS2 - m.meanS * m.meanS;
    const double vnc = m.meanNC - m.meanN * m.meanC;
    const double vns = m.meanNS - m.meanN * m.meanS;
    return (vn * (vc + vs) - (vnc * vnc + vns * vns)) / den;
}

double uncertainty_symmetric(const CoherentLabel& label)
{
    if (label.mu_abs() == 0.0)
        throw DegenerateLabel("uncertainty_symmetric: mu = 0");
    return uncertainty_symmetric(moments_closed_form(label));
}

}  // namespace rstk
