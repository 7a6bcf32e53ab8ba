#include "rstk/app/figures.hpp"

#include <cmath>

#include "rstk/app/parallel.hpp"
#include "rstk/observables.hpp"

namespace rstk::app {

namespace {

std::vector<double> closed_phi_grid(int count)
{
    std::vector<double> x(count);
    for (int i = 0; i < count; ++i)
        x[i] = -pi + 2.0 * pi * i / (count - 1);
    return x;
}

using Rows = std::vector<std::vector<Cell>>;

Table assemble(std::string schema, std::vector<std::string> columns, std::vector<Rows>& curves)
{
    Table t{std::move(schema), std::move(columns), {}};
    for (Rows& c : curves)
        for (auto& row : c)
            t.rows.push_back(std::move(row));
    return t;
}

Table figure1()
{
    const std::vector<double> phis = closed_phi_grid(201);
    std::vector<Rows> curves(19);
    parallel_for(curves.size(), [&](std::size_t k) {
        const double qv = (k + 1) / 20.0;
        const QParameter q(qv);
        for (double phi : phis) {
            const cplx e = measure_decomposition(CirclePoint(phi, q));
            curves[k].push_back({phi, qv, e.real(), e.imag()});
        }
    });
    return assemble("figure1", {"phi", "q", "reE", "imE"}, curves);
}

Table figure2()
{
    const std::vector<double> phis = closed_phi_grid(401);
    const double qs[] = {0.5, 0.7, 0.9};
    std::vector<Rows> curves(3);
    parallel_for(curves.size(), [&](std::size_t k) {
        const QParameter q(qs[k]);
        std::vector<Rows> per_n(5);
        for (double phi : phis) {
            const std::vector<cplx> psi = rs_function_sequence(5, CirclePoint(phi, q));
            for (int n = 0; n < 5; ++n)
                per_n[n].push_back({phi, qs[k], static_cast<long long>(n), std::norm(psi[n])});
        }
        for (Rows& r : per_n)
            for (auto& row : r)
                curves[k].push_back(std::move(row));
    });
    return assemble("figure2", {"phi", "q", "n", "psi2"}, curves);
}

double figure3_value(const MomentSet& m, std::size_t which)
{
    switch (which) {
    case 0: return m.meanC;
    case 1: return m.meanS;
    case 2: return m.meanC2;
    case 3: return m.meanS2;
    case 4: return m.meanC2 + m.meanS2;
    default: return m.meanC2 - m.meanS2;
    }
}

Table figure3()
{
    const double qs[] = {0.8, 0.85, 0.9};
    const auto& names = figure3_quantities();
    std::vector<Rows> curves(3);
    parallel_for(curves.size(), [&](std::size_t k) {
        const QParameter q(qs[k]);
        std::vector<double> mu2s;
        for (int i = 0; i <= 100; ++i) {
            const double mu2 = 0.05 * i;
            if ((1.0 - qs[k]) * mu2 < 1.0 - 1e-12)
                mu2s.push_back(mu2);
        }
        std::vector<MomentSet> ms;
        for (double mu2 : mu2s)
            ms.push_back(moments_closed_form(CoherentLabel(std::sqrt(mu2), pi / 3.0, q)));
        for (std::size_t j = 0; j < names.size(); ++j)
            for (std::size_t i = 0; i < mu2s.size(); ++i)
                curves[k].push_back({mu2s[i], qs[k], names[j], figure3_value(ms[i], j)});
    });
    return assemble("figure3", {"mu2", "q", "quantity", "value"}, curves);
}

Table figure4()
{
    const double qs[] = {0.8, 0.85, 0.9, 0.95};
    std::vector<Rows> curves(4);
    parallel_for(curves.size(), [&](std::size_t k) {
        const QParameter q(qs[k]);
        for (int i = 1; i <= 100; ++i) {
            const double mu2 = 0.04 * i;
            const double u = uncertainty_symmetric(CoherentLabel(std::sqrt(mu2), pi / 3.0, q));
            curves[k].push_back({mu2, qs[k], u, 0.25});
        }
    });
    return assemble("figure4", {"mu2", "q", "usym", "bound"}, curves);
}

}  // namespace

const std::vector<std::string>& figure3_quantities()
{
    static const std::vector<std::string> names = {"meanC", "meanS", "meanC2", "meanS2", "meanC2plusS2",
                                                   "meanC2minusS2"};
    return names;
}

Table figure_table(int id)
{
    switch (id) {
    case 1: return figure1();
    case 2: return figure2();
    case 3: return figure3();
    case 4: return figure4();
    default: throw ConfigError("figure: id must be 1, 2, 3 or 4");
    }
}

}  // namespace rstk::app
