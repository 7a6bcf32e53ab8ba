#include "rstk/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace rstk {

void gauss_legendre_unit(int n, std::vector<double>& nodes, std::vector<double>& weights)
{
    if (n < 1)
        throw DomainError("gauss_legendre: need at least one node");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1)
                p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // recompute derivative at the polished node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1)
            p0 = 1.0;
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        nodes[n / 2] = 0.0;
}

namespace {

// Orthonormal Hermite polynomials p_k for weight e^{-t^2}, rescaled on the fly so that
// large |t| neither overflows nor underflows. prev/last are p_{n-1}, p_n times a common
// factor; log_sumsq is log(sum_{k<n} p_k^2) without that factor.
struct HermiteEval {
    double prev, last, log_sumsq;
};

HermiteEval hermite_polys(int n, double t)
{
    double pm1 = 0.0;
    double p = std::pow(pi, -0.25);
    double sumsq = 0.0;
    double log_scale = 0.0;
    for (int k = 0; k < n; ++k) {
        sumsq += p * p;
        const double next = t * std::sqrt(2.0 / (k + 1.0)) * p - std::sqrt(double(k) / (k + 1.0)) * pm1;
        pm1 = p;
        p = next;
        if (std::abs(p) > 1e100) {
            p *= 1e-100;
            pm1 *= 1e-100;
            sumsq *= 1e-200;
            log_scale += 200.0 * std::log(10.0);
        }
    }
    return {pm1, p, std::log(sumsq) + log_scale};
}

}  // namespace

void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& scaled_weights)
{
    if (n < 1)
        throw DomainError("gauss_hermite: need at least one node");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    for (int k = 1; k < n; ++k)
        sub(k - 1) = std::sqrt(0.5 * k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
    nodes.resize(n);
    scaled_weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = solver.eigenvalues()(i);
        // Newton polish, p_n' = sqrt(2n) p_{n-1}
        for (int it = 0; it < 5; ++it) {
            const HermiteEval h = hermite_polys(n, t);
            const double d = std::sqrt(2.0 * n) * h.prev;
            if (d == 0.0)
                break;
            const double dt = h.last / d;
            t -= dt;
            if (std::abs(dt) < 1e-15 * std::max(1.0, std::abs(t)))
                break;
        }
        nodes[i] = t;
    }
    // symmetrize: the spectrum is symmetric about zero
    for (int i = 0; i < n / 2; ++i) {
        const double s = 0.5 * (nodes[n - 1 - i] - nodes[i]);
        nodes[i] = -s;
        nodes[n - 1 - i] = s;
    }
    if (n % 2 == 1)
        nodes[n / 2] = 0.0;
    // Christoffel form: the weight for e^{-t^2} is 1/sum_k p_k(t)^2; return it times e^{t^2}
    for (int i = 0; i < n; ++i)
        scaled_weights[i] = std::exp(nodes[i] * nodes[i] - hermite_polys(n, nodes[i]).log_sumsq);
}

QuadratureRule QuadratureRule::periodic_trapezoid(int nodes)
{
    if (nodes < 1)
        throw DomainError("periodic_trapezoid: need at least one node");
    QuadratureRule r;
    r.kind_ = RuleKind::periodic_trapezoid;
    r.base_nodes_ = nodes;
    r.a_ = -pi;
    r.b_ = pi;
    r.nodes_.resize(nodes);
    r.weights_.assign(nodes, 2.0 * pi / nodes);
    for (int i = 0; i < nodes; ++i)
        r.nodes_[i] = -pi + 2.0 * pi * i / nodes;
    r.log_nodes_ = r.nodes_;
    return r;
}

QuadratureRule QuadratureRule::gauss_legendre(double a, double b, int nodes, int panels)
{
    if (!(b > a) || panels < 1)
        throw DomainError("gauss_legendre: need a < b and at least one panel");
    QuadratureRule r;
    r.kind_ = RuleKind::gauss_legendre;
    r.base_nodes_ = nodes;
    r.panels_ = panels;
    r.a_ = a;
    r.b_ = b;
    std::vector<double> x, w;
    gauss_legendre_unit(nodes, x, w);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        for (int i = 0; i < nodes; ++i) {
            r.nodes_.push_back(lo + 0.5 * h * (x[i] + 1.0));
            r.weights_.push_back(0.5 * h * w[i]);
        }
    }
    r.log_nodes_ = r.nodes_;
    return r;
}

QuadratureRule QuadratureRule::log_gaussian(double m, double center, double spread, int nodes)
{
    if (!(m > 0.0) || !(spread > 0.0))
        throw DomainError("log_gaussian: width and spread must be positive");
    QuadratureRule r;
    r.kind_ = RuleKind::log_gaussian;
    r.base_nodes_ = nodes;
    r.a_ = center;
    r.b_ = spread;
    r.m_ = m;
    std::vector<double> t, sw;
    gauss_hermite(nodes, t, sw);
    const double m2 = m * m;
    r.nodes_.resize(nodes);
    r.weights_.resize(nodes);
    r.log_nodes_.resize(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double x = center + spread * t[i];
        const double omega = std::exp(x / m2);
        r.log_nodes_[i] = x;
        r.nodes_[i] = omega;
        // d omega = omega (spread/m^2) dt; sw already carries e^{t^2}
        r.weights_[i] = sw[i] * omega * spread / m2;
    }
    return r;
}

QuadratureRule QuadratureRule::refined() const
{
    switch (kind_) {
    case RuleKind::periodic_trapezoid:
        return periodic_trapezoid(2 * base_nodes_);
    case RuleKind::gauss_legendre:
        return gauss_legendre(a_, b_, 2 * base_nodes_, panels_);
    case RuleKind::log_gaussian:
        return log_gaussian(m_, a_, b_, 2 * base_nodes_);
    }
    return *this;
}

std::string QuadratureRule::describe() const
{
    std::ostringstream os;
    switch (kind_) {
    case RuleKind::periodic_trapezoid:
        os << "periodic_trapezoid(" << base_nodes_ << ")";
        break;
    case RuleKind::gauss_legendre:
        os << "gauss_legendre(" << base_nodes_ << "x" << panels_ << " on [" << a_ << "," << b_ << "])";
        break;
    case RuleKind::log_gaussian:
        os << "log_gaussian(" << base_nodes_ << ", m=" << m_ << ")";
        break;
    }
    return os.str();
}

}  // namespace rstk
