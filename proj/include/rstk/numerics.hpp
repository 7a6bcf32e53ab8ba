#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "rstk/qcalc.hpp"

namespace rstk {

enum class RuleKind { periodic_trapezoid, gauss_legendre, log_gaussian };

// Immutable node/weight table. Weights are for the plain measure of the integration
// variable: dphi on [-pi, pi), dx on [a, b], domega on (0, inf).
class QuadratureRule {
public:
    static QuadratureRule periodic_trapezoid(int nodes = 2048);
    static QuadratureRule gauss_legendre(double a, double b, int nodes = 64, int panels = 4);
    // omega = exp(x/m^2) with x = center + spread*t and t on Gauss-Hermite nodes
    static QuadratureRule log_gaussian(double m, double center, double spread, int nodes = 80);

    RuleKind kind() const noexcept { return kind_; }
    int size() const noexcept { return static_cast<int>(nodes_.size()); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }
    // log-space abscissa x for log_gaussian rules (omega = exp(x/m^2)), else the nodes
    std::span<const double> log_nodes() const noexcept { return log_nodes_; }

    // same rule with twice the nodes (per panel for Gauss-Legendre)
    QuadratureRule refined() const;
    std::string describe() const;

private:
    QuadratureRule() = default;

    RuleKind kind_ = RuleKind::periodic_trapezoid;
    int base_nodes_ = 0;
    int panels_ = 1;
    double a_ = 0.0, b_ = 0.0;            // interval, or (center, spread) for log_gaussian
    double m_ = 0.0;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> log_nodes_;
};

// Gauss-Hermite nodes for weight e^{-t^2}: nodes and e^{t^2}-scaled weights (stable for large n)
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& scaled_weights);
void gauss_legendre_unit(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Plain weighted sum over the rule, no error estimate.
template <class F>
cplx quadrature_sum(F&& f, const QuadratureRule& rule)
{
    const auto x = rule.nodes();
    const auto w = rule.weights();
    cplx s{};
    for (std::size_t i = 0; i < x.size(); ++i)
        s += w[i] * cplx(f(x[i]));
    return s;
}

// Sum on the rule and on its refinement; the difference is the error estimate.
// Refines up to three times before giving up.
template <class F>
SeriesValue integrate(F&& f, const QuadratureRule& rule, double tol = 1e-12)
{
    QuadratureRule current = rule;
    cplx coarse = quadrature_sum(f, current);
    double err = 0.0;
    for (int level = 0; level <= 3; ++level) {
        const QuadratureRule fine = current.refined();
        const cplx value = quadrature_sum(f, fine);
        err = std::abs(value - coarse);
        if (err <= tol * std::max(1.0, std::abs(value))) {
            SeriesValue out;
            out.value = value;
            out.error_bound = err;
            out.terms = fine.size();
            return out;
        }
        current = fine;
        coarse = value;
    }
    throw QuadratureFailure("integrate: node-doubling estimate " + std::to_string(err) +
                            " above tolerance on " + rule.describe());
}

}  // namespace rstk
