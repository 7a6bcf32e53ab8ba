#include "rstk/app/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rstk/app/parallel.hpp"
#include "rstk/observables.hpp"

namespace rstk::app {

namespace {

double parse_real(const std::string& s, const char* what)
{
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (s.empty() || pos != s.size() || !std::isfinite(v))
        throw ConfigError(std::string(what) + ": cannot read '" + s + "' as a number");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep))
        parts.push_back(item);
    if (!s.empty() && s.back() == sep)
        parts.emplace_back();
    return parts;
}

double scalar_quantity(const std::string& name, const CoherentLabel& label)
{
    if (name == "UCS")
        return uncertainty_cs(label).value;
    if (name == "UCSbound")
        return uncertainty_cs(label).bound;
    if (name == "Usym")
        return uncertainty_symmetric(label);
    const MomentSet m = moments_closed_form(label);
    if (name == "meanC") return m.meanC;
    if (name == "meanS") return m.meanS;
    if (name == "meanC2") return m.meanC2;
    if (name == "meanS2") return m.meanS2;
    if (name == "meanC2plusS2") return m.meanC2 + m.meanS2;
    if (name == "meanC2minusS2") return m.meanC2 - m.meanS2;
    if (name == "meanCSplus") return m.meanCSplus;
    if (name == "meanCSminus") return m.meanCSminus.imag();
    if (name == "meanN") return m.meanN;
    if (name == "meanN2") return m.meanN2;
    if (name == "meanNC") return m.meanNC;
    if (name == "meanNS") return m.meanNS;
    throw ConfigError("sweep: unknown quantity '" + name + "'");
}

}  // namespace

std::vector<double> Mu2Range::values() const
{
    std::vector<double> v(steps);
    for (int i = 0; i < steps; ++i)
        v[i] = steps == 1 ? first : first + (last - first) * i / (steps - 1);
    return v;
}

Mu2Range parse_mu2_range(const std::string& text)
{
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 3)
        throw ConfigError("--mu2 expects a:b:steps");
    Mu2Range r;
    r.first = parse_real(parts[0], "--mu2");
    r.last = parse_real(parts[1], "--mu2");
    const double steps = parse_real(parts[2], "--mu2");
    if (steps < 1.0 || steps != std::floor(steps) || steps > 1e6)
        throw ConfigError("--mu2: steps must be a positive integer");
    r.steps = static_cast<int>(steps);
    if (r.first < 0.0 || r.last < 0.0)
        throw ConfigError("--mu2: values must be nonnegative");
    return r;
}

std::vector<double> parse_q_list(const std::string& text)
{
    std::vector<double> q;
    for (const std::string& s : split(text, ','))
        q.push_back(parse_real(s, "--q"));
    if (q.empty())
        throw ConfigError("--q: empty list");
    for (double v : q)
        if (!(v > 0.0 && v < 1.0))
            throw ConfigError("--q: every value must lie in (0,1)");
    return q;
}

const std::vector<std::string>& sweep_quantities()
{
    static const std::vector<std::string> names = {
        "meanC",      "meanS",  "meanC2", "meanS2", "meanC2plusS2", "meanC2minusS2", "meanCSplus", "meanCSminus",
        "meanN",      "meanN2", "meanNC", "meanNS", "UCS",          "UCSbound",      "Usym",       "excitation"};
    return names;
}

Table sweep_table(const SweepConfig& cfg)
{
    const auto& names = sweep_quantities();
    if (std::find(names.begin(), names.end(), cfg.quantity) == names.end())
        throw ConfigError("sweep: unknown quantity '" + cfg.quantity + "'");
    if (cfg.q_list.empty())
        throw ConfigError("sweep: empty q list");
    if (!std::isfinite(cfg.theta))
        throw ConfigError("sweep: theta must be finite");
    const bool excitation = cfg.quantity == "excitation";
    if (excitation && cfg.n_max < 1)
        throw ConfigError("sweep: --nmax must be positive");
    const std::vector<double> mu2s = cfg.mu2.values();
    const double mu2_max = *std::max_element(mu2s.begin(), mu2s.end());
    for (double q : cfg.q_list) {
        if (!(q > 0.0 && q < 1.0))
            throw ConfigError("sweep: q must lie in (0,1)");
        if (!((1.0 - q) * mu2_max < 1.0))
            throw ConfigError("sweep: (1-q) mu2 must stay below 1");
    }

    std::vector<double> qs = cfg.q_list;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    std::vector<double> sorted_mu2 = mu2s;
    std::sort(sorted_mu2.begin(), sorted_mu2.end());

    const std::size_t cells = qs.size() * sorted_mu2.size();
    std::vector<std::vector<std::vector<Cell>>> slots(cells);
    parallel_for(cells, [&](std::size_t i) {
        const double q = qs[i / sorted_mu2.size()];
        const double mu2 = sorted_mu2[i % sorted_mu2.size()];
        const CoherentLabel label(std::sqrt(mu2), cfg.theta, QParameter(q));
        if (excitation) {
            const std::vector<double> p = excitation_distribution(label, cfg.n_max + 1);
            for (int n = 0; n <= cfg.n_max; ++n)
                slots[i].push_back({q, mu2, cfg.theta, static_cast<long long>(n), p[n]});
        } else {
            slots[i].push_back({q, mu2, cfg.theta, scalar_quantity(cfg.quantity, label)});
        }
    });

    Table t;
    t.schema = "sweep_" + cfg.quantity;
    t.columns = excitation ? std::vector<std::string>{"q", "mu2", "theta", "n", "probability"}
                           : std::vector<std::string>{"q", "mu2", "theta", "value"};
    for (auto& s : slots)
        for (auto& row : s)
            t.rows.push_back(std::move(row));
    return t;
}

}  // namespace rstk::app
