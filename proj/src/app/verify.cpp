#include "rstk/app/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "json.hpp"
#include "rstk/app/parallel.hpp"
#include "rstk/observables.hpp"
#include "rstk/polynomials.hpp"

namespace rstk::app {

namespace {

constexpr double sample_angles[] = {-2.9, -2.31, -1.7, -1.05, -0.42, 0.13, 0.77, 1.38, 2.04, 2.77};

double rel(cplx a, cplx b)
{
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

std::vector<cplx> sample_arguments(const QParameter& q)
{
    return {cplx(0.3, 0.0), cplx(0.7, 0.2), CirclePoint(0.77, q).z(), CirclePoint(-2.31, q).z()};
}

std::vector<double> grid(int count)
{
    std::vector<double> x(count);
    for (int i = 0; i < count; ++i)
        x[i] = -pi + 2.0 * pi * i / (count - 1);
    return x;
}

// smallest n_max (at least floor) past which |C_n| stays below 1e-15
int coherent_cutoff(const CoherentLabel& label, int floor)
{
    const QParameter& q = label.q();
    double c2 = 1.0 / label.normalization();
    int n = 1;
    for (; n < 20000; ++n) {
        const double ratio = label.mu2() / q_number(n, q);
        c2 *= ratio;
        if (c2 < 1e-30 && ratio < 1.0)
            break;
    }
    return std::max(floor, n + 1);
}

std::vector<CoherentLabel> uncertainty_grid(const QParameter& q, double theta)
{
    std::vector<CoherentLabel> out;
    for (int k = 1; k <= 20; ++k) {
        const double mu2 = 0.25 * k;
        if ((1.0 - q.value()) * mu2 < 1.0)
            out.emplace_back(std::sqrt(mu2), theta, q);
    }
    return out;
}

std::vector<CoherentLabel> moment_grid(const QParameter& q)
{
    std::vector<CoherentLabel> out;
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.85})
        out.emplace_back(std::sqrt(x / (1.0 - q.value())), pi / 3.0, q);
    return out;
}

Measurement szego(const QParameter& q)
{
    const int count = 9;
    const Eigen::MatrixXcd g = szego_gram_matrix(q, count, QuadratureRule::periodic_trapezoid());
    double err = 0.0;
    for (int m = 0; m < count; ++m)
        for (int n = 0; n < count; ++n) {
            const double exact = m == n ? q_pochhammer(q.value(), q, n) * q.pow(-n) : 0.0;
            err = std::max(err, std::abs(g(m, n) - exact));
        }
    return {{{"n_max", count - 1}}, err};
}

Measurement orthonormality(const QParameter& q)
{
    const int count = 9;
    const Eigen::MatrixXcd g = rs_gram_matrix(q, count, QuadratureRule::periodic_trapezoid());
    return {{{"n_max", count - 1}}, (g - Eigen::MatrixXcd::Identity(count, count)).cwiseAbs().maxCoeff()};
}

Measurement representation(Representation kind, const QParameter& q)
{
    double err = 0.0;
    for (int n = 0; n <= 6; ++n) {
        if (kind == Representation::pochhammer_circle) {
            for (double a : {0.2, 0.5})
                err = std::max(err, integral_representation_check(kind, n, a, q));
        } else {
            for (cplx z : {cplx(0.3, 0.0), cplx(0.7, 0.2)})
                err = std::max(err, integral_representation_check(kind, n, z, q));
        }
    }
    return {{{"n_max", 6}}, err};
}

Measurement moments(KernelKind kind, const QParameter& q)
{
    double err = 0.0;
    for (double r : {1.0, 2.5}) {
        const MomentKernel kernel(kind, r, q);
        for (int k = 0; k <= 8; ++k)
            err = std::max(err, std::abs(kernel_moment(k, kernel, kernel.rule(k)) / kernel.exact_moment(k) - 1.0));
    }
    return {{{"k_max", 8}}, err};
}

struct DerivativeMax {
    DerivativeResiduals d;
    LadderResiduals l;
};

DerivativeMax derivative_max(const QParameter& q)
{
    DerivativeMax m;
    for (double phi : sample_angles) {
        const CirclePoint p(phi, q);
        for (int n = 0; n <= 10; ++n) {
            const DerivativeResiduals d = q_derivative_identities_check(n, p);
            m.d.poly = std::max(m.d.poly, d.poly);
            m.d.weight = std::max(m.d.weight, d.weight);
            m.d.lowering_form = std::max({m.d.lowering_form, d.lowering_form, d.raising_form});
            const LadderResiduals l = qdiff_ladder_check(n, p);
            m.l.lowering = std::max(m.l.lowering, l.lowering);
            m.l.raising = std::max(m.l.raising, l.raising);
            m.l.number = std::max(m.l.number, l.number);
            m.l.matrix_route = std::max(m.l.matrix_route, l.matrix_route);
        }
    }
    return m;
}

Measurement coherent_eigen(const QParameter& q)
{
    double err = 0.0;
    for (double x : {0.2, 0.5, 0.8})
        for (double th : {0.3, 2.0}) {
            const CoherentLabel label(std::sqrt(x / (1.0 - q.value())), th, q);
            err = std::max(err, coherent_eigen_residual(label, BasisTruncation{coherent_cutoff(label, 200)}));
        }
    return {{{"labels", 6}}, err};
}

Measurement coherent_closed(const QParameter& q)
{
    double err = 0.0;
    for (double x : {0.2, 0.5, 0.8}) {
        const CoherentLabel label(std::sqrt(x / (1.0 - q.value())), 0.9, q);
        const BasisTruncation trunc{coherent_cutoff(label, 120)};
        for (double phi : sample_angles) {
            const CirclePoint p(phi, q);
            err = std::max(err, rel(coherent_expansion(label, p, trunc), coherent_function(label, p)));
        }
    }
    return {{{"labels", 3}, {"points", 10}}, err};
}

Measurement coherent_overlaps(const QParameter& q)
{
    const double s = 1.0 / std::sqrt(1.0 - q.value());
    const CoherentLabel a(0.3 * s, 0.4, q), b(0.6 * s, -1.3, q), c(0.8 * s, 2.2, q);
    double err = std::abs(coherent_overlap(a, a) - 1.0);
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}})
        err = std::max(err, std::abs(coherent_overlap(x, y) - coherent_overlap_quadrature(x, y)));
    return {{{"pairs", 3}}, err};
}

Measurement resolution(const QParameter& q, bool simplified)
{
    double err = 0.0;
    for (int n = 0; n <= 20; ++n) {
        const ResolutionResult r = resolution_of_unity(n, q);
        err = std::max(err, simplified ? r.simplified_residual : r.residual);
    }
    return {{{"n_max", 20}}, err};
}

Measurement phase_eigen(PhaseKind kind)
{
    const std::vector<double> gammas = kind == PhaseKind::cosine ? std::vector<double>{0.4, 1.1, 2.5}
                                                                  : std::vector<double>{-1.2, 0.1, 0.9};
    double err = 0.0;
    for (double g : gammas)
        err = std::max(err, phase_eigen_residual(PhaseLabel(g, kind), BasisTruncation{100}));
    return {{{"n_max", 100}}, err};
}

Measurement phase_trig(PhaseKind kind)
{
    const BasisTruncation trunc{21};
    const Eigen::MatrixXcd g = phase_gram(kind, trunc, phase_rule(kind));
    return {{{"n_max", 20}}, (g - Eigen::MatrixXcd::Identity(21, 21)).cwiseAbs().maxCoeff()};
}

Measurement phase_smear(PhaseKind kind)
{
    const double gamma = kind == PhaseKind::cosine ? 1.0 : 0.3;
    const double v = phase_smearing(kind, gamma, BasisTruncation{200}, [](double g) { return std::sin(2.0 * g); });
    return {{{"n_max", 200}, {"gamma", gamma}}, std::abs(v - std::sin(2.0 * gamma))};
}

Measurement phase_kernel(PhaseKind kind, const QParameter& q)
{
    const BasisTruncation trunc{10};
    const double g1 = kind == PhaseKind::cosine ? 0.7 : -0.4;
    const double g2 = kind == PhaseKind::cosine ? 2.1 : 1.1;
    double err = 0.0;
    for (const auto& [a, b] : {std::pair{g1, g2}, std::pair{g1, g1}}) {
        const cplx quad = phase_orthogonality_kernel_quadrature(kind, a, b, trunc, q);
        err = std::max(err, rel(quad, phase_orthogonality_kernel(kind, a, b, trunc)));
    }
    return {{{"n_max", 10}}, err};
}

Measurement phase_complete(PhaseKind kind, const QParameter& q)
{
    double err = 0.0;
    for (const auto& [beta, phi] : {std::pair{0.3, -1.2}, std::pair{2.0, 2.0}})
        err = std::max(err, phase_completeness_check(kind, BasisTruncation{12}, beta, phi, q));
    return {{{"n_max", 12}}, err};
}

Measurement two_route(const QParameter& q)
{
    double err = 0.0;
    for (const CoherentLabel& label : moment_grid(q)) {
        const BasisTruncation trunc{coherent_cutoff(label, 300)};
        err = std::max(err, moment_difference(moments_closed_form(label), moments_matrix_route(label, trunc)));
    }
    return {{{"theta", pi / 3.0}, {"labels", 5}}, err};
}

Measurement cs_bound(const QParameter& q)
{
    double violation = 0.0;
    for (const CoherentLabel& label : uncertainty_grid(q, pi / 3.0)) {
        const CSUncertainty u = uncertainty_cs(label);
        violation = std::max(violation, u.bound - u.value);
    }
    return {{{"mu2_max", 5.0}}, std::max(0.0, violation)};
}

Measurement cs_theta(const QParameter& q)
{
    double err = 0.0;
    for (double th : {0.0, pi / 3.0, 1.7})
        for (const CoherentLabel& label : uncertainty_grid(q, th))
            err = std::max(err, std::abs(uncertainty_cs_from_moments(moments_closed_form(label)) -
                                         uncertainty_cs(label).value));
    return {{{"thetas", 3}}, err};
}

Measurement number_moments(const QParameter& q)
{
    double err = 0.0;
    for (const CoherentLabel& label : uncertainty_grid(q, pi / 3.0)) {
        const MomentSet m = moments_closed_form(label);
        err = std::max(err, std::abs(mean_number_power(label, 1) - m.meanN) / std::max(1.0, m.meanN));
        err = std::max(err, std::abs(mean_number_power(label, 2) - m.meanN2) / std::max(1.0, m.meanN2));
        err = std::max(err, std::abs(mean_number_power(label, 0) - 1.0));
    }
    return {{{"mu2_max", 5.0}}, err};
}

Measurement sym_theta(const QParameter& q)
{
    double err = 0.0;
    const std::vector<CoherentLabel> base = uncertainty_grid(q, 0.0);
    for (double th : {pi / 3.0, 1.7}) {
        const std::vector<CoherentLabel> other = uncertainty_grid(q, th);
        for (std::size_t i = 0; i < base.size(); ++i) {
            const double a = uncertainty_symmetric(base[i]);
            err = std::max(err, std::abs(uncertainty_symmetric(other[i]) - a) / a);
        }
    }
    return {{{"thetas", 3}}, err};
}

Measurement sym_bound(const QParameter& q)
{
    double violation = 0.0;
    for (const CoherentLabel& label : uncertainty_grid(q, pi / 3.0))
        violation = std::max(violation, 0.25 - uncertainty_symmetric(label));
    return {{{"mu2_max", 5.0}}, std::max(0.0, violation)};
}

std::vector<CheckSpec> build_registry()
{
    using Q = const QParameter*;
    std::vector<CheckSpec> r;
    auto add = [&](std::string id, std::string eq, double tol, std::function<Measurement(Q)> f, bool per_q = true,
                   bool in_default = true) {
        r.push_back({std::move(id), std::move(eq), tol, per_q, in_default, std::move(f)});
    };

    add("generating_function", "e2", 1e-12, [](Q q) {
        double err = 0.0;
        for (cplx w : {cplx(0.2, 0.0), cplx(0.0, 0.3)})
            for (cplx z : {cplx(0.3, 0.0), cplx(0.7, 0.2)})
                err = std::max(err, rel(generating_function(w, z, *q, 120).value, generating_function_closed(w, z, *q)));
        return Measurement{{{"order", 120}}, err};
    });
    add("rs_polynomial_recurrence", "e3", 1e-11, [](Q q) {
        // the direct sum cancels on the circle; measure against its term scale H_n(|z|)
        double err = 0.0;
        for (cplx z : sample_arguments(*q)) {
            const std::vector<cplx> h = rs_poly_sequence(33, z, *q);
            const std::vector<cplx> rn = rs_poly_normalized_sequence(33, z, *q);
            for (int n = 0; n <= 32; ++n) {
                const double scale = std::max(1.0, rs_poly(n, std::abs(z), *q, PolyMethod::direct_sum).real());
                const double c = std::abs(rs_poly_normalized(n, 1.0, *q) / rs_poly(n, 1.0, *q));
                err = std::max(err, std::abs(h[n] - rs_poly(n, z, *q, PolyMethod::direct_sum)) / scale);
                err = std::max(err, std::abs(rn[n] - rs_poly_normalized(n, z, *q, PolyMethod::direct_sum)) / (c * scale));
            }
        }
        return Measurement{{{"n_max", 32}}, err};
    });
    add("normalized_shift_identities", "ii", 1e-11, [](Q q) {
        double err = 0.0;
        for (cplx z : sample_arguments(*q))
            for (int n = 1; n <= 12; ++n) {
                const NormalizedIdentityResiduals s = normalized_identities_check(n, z, *q);
                err = std::max({err, s.recurrence, s.shift_q, s.shift_q_scaled, s.shift_q_pair, s.shift_q2});
            }
        return Measurement{{{"n_max", 12}}, err};
    });
    add("szego_orthogonality", "e4", 1e-8, [](Q q) { return szego(*q); });
    add("circle_representation", "e5", 1e-8, [](Q q) { return representation(Representation::pochhammer_circle, *q); });
    add("kernel_p_representation", "e6", 1e-7, [](Q q) { return representation(Representation::kernel_p, *q); });
    add("kernel_p_moments", "e7", 1e-9, [](Q q) { return moments(KernelKind::P_r, *q); });
    add("kernel_y_moments", "e9", 1e-9, [](Q q) { return moments(KernelKind::Y_r, *q); });
    add("kernel_y_representation", "e10", 1e-7, [](Q q) { return representation(Representation::kernel_y, *q); });
    add("theta_addition", "addition", 1e-10, [](Q q) {
        const double nome = q->sqrt_q();
        const double t0 = theta3(0.0, nome).real();
        double err = 0.0;
        for (double phi : grid(721)) {
            const double a = theta3(0.25 * phi, nome).real(), b = theta1(0.25 * phi, nome).real();
            err = std::max(err, std::abs(theta3(0.5 * phi, nome).real() * t0 * t0 * t0 - (a * a * a * a + b * b * b * b)));
        }
        return Measurement{{{"points", 721}}, err};
    });
    add("measure_decomposition", "e12", 1e-10, [](Q q) {
        double err = 0.0;
        for (double phi : grid(721)) {
            const CirclePoint p(phi, *q);
            err = std::max(err, std::abs(std::norm(measure_decomposition(p)) - szego_measure(p)));
        }
        return Measurement{{{"points", 721}}, err};
    });
    add("weight_series_forms", "e14", 1e-10, [](Q q) {
        double err = 0.0;
        for (double phi : grid(721)) {
            const CirclePoint p(phi, *q);
            const WeightValue a = weight(p), b = weight_series(p, 0);
            err = std::max({err, rel(a.F, b.F), rel(a.G, b.G), rel(a.M, b.M)});
        }
        return Measurement{{{"points", 721}}, err};
    });
    add("ramanujan_theta", "iv", 1e-11, [](Q q) {
        double err = 0.0;
        for (double phi : grid(721)) {
            const cplx a = q->sqrt_q() * std::polar(1.0, phi);
            err = std::max(err, rel(ramanujan_f(a, std::conj(a)).value, theta3(0.5 * phi, q->sqrt_q()).value));
        }
        return Measurement{{{"points", 721}}, err};
    });
    add("rs_orthonormality", "e16", 1e-8, [](Q q) { return orthonormality(*q); });
    add("bilinear_kernel_series", "e17", 1e-10, [](Q q) {
        double err = 0.0;
        // order from the tail bound eps^N/(1-eps) sup|Psi|^2 < 1e-12
        const double eps = 0.5;
        const int order = static_cast<int>(std::ceil(std::log(1e-12 * (1.0 - eps) / rs_function_bound(*q)) / std::log(eps)));
        for (const auto& [b, p] : {std::pair{0.4, -1.3}, std::pair{2.5, 2.5}, std::pair{-3.0, 0.2}})
            err = std::max(err, rel(bilinear_kernel_series(b, p, eps, *q, order).value, bilinear_kernel(b, p, eps, *q)));
        return Measurement{{{"eps", eps}, {"order", order}}, err};
    });
    add("kernel_hermitian", "e18", 1e-12, [](Q q) {
        double err = 0.0;
        for (const auto& [b, p] : {std::pair{0.4, -1.3}, std::pair{2.5, 1.0}})
            for (double e : {0.2, 0.7})
                err = std::max(err, rel(bilinear_kernel(b, p, e, *q), std::conj(bilinear_kernel(p, b, e, *q))));
        return Measurement{{}, err};
    });
    add("kernel_reproducing", "e19", 1e-8, [](Q q) {
        double err = 0.0;
        for (int n = 0; n <= 6; ++n)
            err = std::max(err, kernel_reproducing_check(n, 0.77, 0.5, *q));
        return Measurement{{{"eps", 0.5}, {"n_max", 6}}, err};
    });
    add("kernel_semigroup", "e20", 1e-8, [](Q q) {
        return Measurement{{{"eps", 0.6}, {"eps2", 0.5}}, kernel_semigroup_check(-1.05, 0.77, 0.6, 0.5, *q)};
    });
    add("scaling_even", "iii-a", 1e-9, [](Q q) {
        double err = 0.0;
        for (double phi : sample_angles)
            for (int k = -3; k <= 3; ++k) {
                const ScalingResiduals s = scaling_relations_check(k, CirclePoint(phi, *q));
                err = std::max({err, s.F_even, s.G_even, s.M_even});
            }
        return Measurement{{{"r_max", 3}}, err};
    });
    add(
        "scaling_odd", "iii-b", 1e-9,
        [](Q q) {
            double err = 0.0;
            for (double phi : sample_angles)
                for (int k = -3; k <= 3; ++k) {
                    const ScalingResiduals s = scaling_relations_check(k, CirclePoint(phi, *q));
                    err = std::max({err, s.F_odd, s.G_odd, s.M_odd});
                }
            return Measurement{{{"r_max", 3}}, err};
        },
        true, false);
    add("poly_q_derivative", "e24", 1e-8, [](Q q) { return Measurement{{{"n_max", 10}}, derivative_max(*q).d.poly}; });
    add("weight_q_derivative", "e25", 1e-8, [](Q q) { return Measurement{{{"n_max", 10}}, derivative_max(*q).d.weight}; });
    add("psi_q_derivative", "dpsi", 1e-8,
        [](Q q) { return Measurement{{{"n_max", 10}}, derivative_max(*q).d.lowering_form}; });
    add("lowering_action", "e26", 1e-8, [](Q q) { return Measurement{{{"n_max", 10}}, derivative_max(*q).l.lowering}; });
    add("ladder_matrix_route", "e26", 1e-8,
        [](Q q) { return Measurement{{{"n_max", 10}}, derivative_max(*q).l.matrix_route}; });
    add("raising_action", "e27", 1e-8, [](Q q) { return Measurement{{{"n_max", 10}}, derivative_max(*q).l.raising}; });
    add("number_action", "e28", 1e-8, [](Q q) { return Measurement{{{"n_max", 10}}, derivative_max(*q).l.number}; });
    add("number_from_ladders", "e28", 1e-12,
        [](Q q) { return Measurement{{{"dim", 64}}, algebra_check(BasisTruncation{64}, *q).number_product}; });
    add("q_commutators", "e29", 1e-12, [](Q q) {
        const AlgebraResiduals a = algebra_check(BasisTruncation{64}, *q);
        return Measurement{{{"dim", 64}}, std::max({a.q_commutator, a.q_commutator_lower, a.q_commutator_raise})};
    });
    add("commutators", "e30", 1e-12, [](Q q) {
        const AlgebraResiduals a = algebra_check(BasisTruncation{64}, *q);
        return Measurement{{{"dim", 64}}, std::max({a.commutator, a.commutator_lower, a.commutator_raise})};
    });
    add(
        "heisenberg_weyl_limit", "e30", 1e-6,
        [](Q) {
            const double qv = 1.0 - 1e-8;
            return Measurement{{{"q", qv}, {"dim", 64}},
                               algebra_check(BasisTruncation{64}, QParameter(qv)).heisenberg_weyl};
        },
        false);
    add("energy_spectrum", "spectrum", 1e-12, [](Q q) {
        double err = 0.0;
        for (int n = 0; n < 30; ++n) {
            const EnergyLevel a = energy_spectrum(n, *q), b = energy_spectrum(n + 1, *q);
            err = std::max(err, std::abs((b.energy - a.energy) - a.gap) / b.energy);
            if (!(b.gap < a.gap))
                err = std::max(err, 1.0);
        }
        return Measurement{{{"n_max", 30}}, err};
    });
    add(
        "phase_operator_algebra", "e37", 1e-14,
        [](Q) {
            const AlgebraResiduals a = algebra_check(BasisTruncation{64}, QParameter(0.5));
            return Measurement{{{"dim", 64}}, std::max({a.shift_products, a.phase_square_sum, a.phase_commutator})};
        },
        false);
    add("coherent_eigenvalue", "e31", 1e-9, [](Q q) { return coherent_eigen(*q); });
    add("coherent_normalization", "e32", 1e-10, [](Q q) {
        double err = 0.0;
        for (double x : {0.2, 0.5, 0.8}) {
            const CoherentLabel label(std::sqrt(x / (1.0 - q->value())), 0.0, *q);
            err = std::max(err, coherent_coefficients(label, BasisTruncation{coherent_cutoff(label, 200)}).tail_mass);
        }
        return Measurement{{{"labels", 3}}, err};
    });
    add("coherent_closed_form", "e33", 1e-10, [](Q q) { return coherent_closed(*q); });
    add("coherent_overlap", "e34", 1e-9, [](Q q) { return coherent_overlaps(*q); });
    add("resolution_simplified", "e35", 1e-10, [](Q q) { return resolution(*q, true); });
    add("resolution_of_unity", "e36", 1e-10, [](Q q) { return resolution(*q, false); });
    add("cosine_eigenvalue", "e38", 1e-10, [](Q) { return phase_eigen(PhaseKind::cosine); }, false);
    add("cosine_trig_orthogonality", "e39", 1e-12, [](Q) { return phase_trig(PhaseKind::cosine); }, false);
    add("cosine_orthogonality_kernel", "e40", 1e-10, [](Q q) { return phase_kernel(PhaseKind::cosine, *q); });
    add("cosine_smearing", "e40", 1e-3, [](Q) { return phase_smear(PhaseKind::cosine); }, false);
    add("cosine_completeness", "e41", 1e-10, [](Q q) { return phase_complete(PhaseKind::cosine, *q); });
    add("sine_eigenvalue", "e42", 1e-10, [](Q) { return phase_eigen(PhaseKind::sine); }, false);
    add("sine_trig_orthogonality", "e43", 1e-12, [](Q) { return phase_trig(PhaseKind::sine); }, false);
    add("sine_orthogonality_kernel", "e44", 1e-10, [](Q q) { return phase_kernel(PhaseKind::sine, *q); });
    add("sine_smearing", "e44", 1e-3, [](Q) { return phase_smear(PhaseKind::sine); }, false);
    add("sine_completeness", "e45", 1e-10, [](Q q) { return phase_complete(PhaseKind::sine, *q); });
    add("moments_two_route", "e46", 1e-8, [](Q q) { return two_route(*q); });
    add("cs_uncertainty_bound", "e47", 0.0, [](Q q) { return cs_bound(*q); });
    add("cs_theta_invariance", "e47", 1e-12, [](Q q) { return cs_theta(*q); });
    add("number_moments", "e48", 1e-10, [](Q q) { return number_moments(*q); });
    add("symmetric_theta_invariance", "e49", 1e-10, [](Q q) { return sym_theta(*q); });
    add("symmetric_uncertainty_bound", "e50", 0.0, [](Q q) { return sym_bound(*q); });
    return r;
}

std::string params_text(const Params& p)
{
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty())
            s += ' ';
        s += k + "=" + format_short(v);
    }
    return s;
}

}  // namespace

const std::vector<CheckSpec>& check_registry()
{
    static const std::vector<CheckSpec> registry = build_registry();
    return registry;
}

std::vector<VerifyRecord> run_verify(const VerifyConfig& cfg)
{
    if (cfg.q_list.empty())
        throw ConfigError("verify: empty q list");
    for (double q : cfg.q_list)
        if (!(q > 0.0 && q < 1.0))
            throw ConfigError("verify: q = " + format_short(q) + " outside (0,1)");
    if (cfg.tol && !(*cfg.tol >= 0.0))
        throw ConfigError("verify: tolerance must be nonnegative");

    struct Task {
        const CheckSpec* spec;
        std::optional<double> q;
    };
    std::vector<Task> tasks;
    for (const CheckSpec& c : check_registry()) {
        const bool selected = cfg.only ? (*cfg.only == c.id || *cfg.only == c.eq) : c.in_default_set;
        if (!selected)
            continue;
        if (c.per_q) {
            for (double q : cfg.q_list)
                tasks.push_back({&c, q});
        } else {
            tasks.push_back({&c, std::nullopt});
        }
    }
    if (tasks.empty())
        throw ConfigError("verify: no check matches '" + cfg.only.value_or("") + "'");

    std::vector<VerifyRecord> out(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        const Task& t = tasks[i];
        VerifyRecord& rec = out[i];
        rec.id = t.spec->id;
        rec.eq = t.spec->eq;
        rec.tol = cfg.tol.value_or(t.spec->tol);
        if (t.q)
            rec.params.emplace_back("q", *t.q);
        try {
            const std::optional<QParameter> qp = t.q ? std::optional<QParameter>(QParameter(*t.q)) : std::nullopt;
            const Measurement m = t.spec->run(qp ? &*qp : nullptr);
            rec.params.insert(rec.params.end(), m.params.begin(), m.params.end());
            rec.residual = m.residual;
        } catch (const std::exception& e) {
            rec.residual = std::numeric_limits<double>::infinity();
            rec.error = e.what();
        }
        rec.pass = std::isfinite(rec.residual) && rec.residual <= rec.tol;
    });
    return out;
}

bool all_passed(const std::vector<VerifyRecord>& records)
{
    return std::all_of(records.begin(), records.end(), [](const VerifyRecord& r) { return r.pass; });
}

Table verify_table(const std::vector<VerifyRecord>& records)
{
    Table t;
    t.schema = "verify";
    t.columns = {"id", "eq", "params", "residual", "tol", "pass"};
    for (const VerifyRecord& r : records)
        t.rows.push_back({r.id, r.eq, params_text(r.params), r.residual, r.tol, std::string(r.pass ? "true" : "false")});
    return t;
}

void write_verify_json(const std::vector<VerifyRecord>& records, std::ostream& os)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VerifyRecord& r : records) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) {
            if (v == std::floor(v) && std::abs(v) < 1e15)
                params[k] = static_cast<long long>(v);
            else
                params[k] = v;
        }
        nlohmann::ordered_json obj;
        obj["id"] = r.id;
        obj["eq"] = r.eq;
        obj["params"] = params;
        obj["residual"] = r.residual;
        obj["tol"] = r.tol;
        obj["pass"] = r.pass;
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
}

}  // namespace rstk::app
