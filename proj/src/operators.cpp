#include "rstk/operators.hpp"

#include <algorithm>
#include <cmath>

namespace rstk {

std::string to_string(OperatorLabel label)
{
    switch (label) {
    case OperatorLabel::B: return "B";
    case OperatorLabel::Bdag: return "Bdag";
    case OperatorLabel::Nq: return "Nq";
    case OperatorLabel::N: return "N";
    case OperatorLabel::Eminus: return "Eminus";
    case OperatorLabel::Eplus: return "Eplus";
    case OperatorLabel::C: return "C";
    case OperatorLabel::S: return "S";
    }
    return "?";
}

namespace {

Eigen::MatrixXcd lowering_matrix(int n_max, const QParameter& q)
{
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(n_max, n_max);
    for (int n = 1; n < n_max; ++n)
        b(n - 1, n) = std::sqrt(q_number(n, q));
    return b;
}

Eigen::MatrixXcd shift_down(int n_max)
{
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n_max, n_max);
    for (int n = 1; n < n_max; ++n)
        e(n - 1, n) = 1.0;
    return e;
}

double interior_max(const Eigen::MatrixXcd& m, int k)
{
    return m.topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

}  // namespace

OperatorMatrix build_operator(OperatorLabel label, const BasisTruncation& trunc, const QParameter& q)
{
    const int n = trunc.n_max;
    if (n < 2)
        throw DomainError("build_operator: n_max must be at least 2");
    OperatorMatrix out{label, {}};
    const cplx I{0.0, 1.0};
    switch (label) {
    case OperatorLabel::B:
        out.matrix = lowering_matrix(n, q);
        break;
    case OperatorLabel::Bdag:
        out.matrix = lowering_matrix(n, q).adjoint();
        break;
    case OperatorLabel::Nq:
    case OperatorLabel::N: {
        out.matrix = Eigen::MatrixXcd::Zero(n, n);
        for (int k = 0; k < n; ++k)
            out.matrix(k, k) = label == OperatorLabel::N ? double(k) : q_number(k, q);
        break;
    }
    case OperatorLabel::Eminus:
        out.matrix = shift_down(n);
        break;
    case OperatorLabel::Eplus:
        out.matrix = shift_down(n).transpose();
        break;
    case OperatorLabel::C: {
        const Eigen::MatrixXcd e = shift_down(n);
        out.matrix = 0.5 * (e + e.transpose());
        break;
    }
    case OperatorLabel::S: {
        const Eigen::MatrixXcd e = shift_down(n);
        out.matrix = (e - e.transpose()) / (2.0 * I);
        break;
    }
    }
    return out;
}

LadderResiduals qdiff_ladder_check(int n, const CirclePoint& p)
{
    if (n < 0)
        throw DomainError("qdiff_ladder_check: negative index");
    const cplx z = p.z();
    const double qv = p.q().value();
    if (std::abs(z) == 0.0 || std::abs(1.0 - qv * z) < 1e-14)
        throw SingularPoint("qdiff_ladder_check: z = 0 or qz = 1");

    const QParameter& q = p.q();
    const LatticePoint lp(p, 0);
    auto psi = [](int k) {
        return [k](const LatticePoint& x) { return k < 0 ? cplx{} : rs_function(k, x); };
    };
    auto rel = [](cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); };

    LadderResiduals out;
    const cplx low = lowering_action(n, psi(n), lp);
    out.lowering = rel(low, std::sqrt(q_number(n, q)) * psi(n - 1)(lp));
    const cplx up = raising_action(n, psi(n), lp);
    out.raising = rel(up, std::sqrt(q_number(n + 1, q)) * psi(n + 1)(lp));

    // lowering at n, then raising at n-1; the inner action is needed one lattice step out
    auto lowered = [&](const LatticePoint& x) { return lowering_action(n, psi(n), x); };
    const cplx num = n > 0 ? raising_action(n - 1, lowered, lp) : lowered(lp);
    out.number = rel(num, q_number(n, q) * psi(n)(lp));

    // B e_n = [n]^{1/2} e_{n-1}
    const BasisTruncation trunc{n + 2};
    const Eigen::MatrixXcd b = build_operator(OperatorLabel::B, trunc, q).matrix;
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(trunc.n_max);
    e(n) = 1.0;
    const Eigen::VectorXcd be = b * e;
    const std::vector<cplx> basis = rs_function_sequence(trunc.n_max, lp);
    cplx via_matrix{};
    for (int k = 0; k < trunc.n_max; ++k)
        via_matrix += be(k) * basis[k];
    out.matrix_route = rel(low, via_matrix);
    return out;
}

double AlgebraResiduals::max_relation() const
{
    return std::max({q_commutator, q_commutator_lower, q_commutator_raise, commutator, commutator_lower,
                     commutator_raise});
}

AlgebraResiduals algebra_check(const BasisTruncation& trunc, const QParameter& q)
{
    if (trunc.n_max < 4)
        throw DomainError("algebra_check: n_max must be at least 4");
    const int n = trunc.n_max;
    const int k = trunc.interior();
    const double qv = q.value();
    const Eigen::MatrixXcd b = build_operator(OperatorLabel::B, trunc, q).matrix;
    const Eigen::MatrixXcd bd = build_operator(OperatorLabel::Bdag, trunc, q).matrix;
    const Eigen::MatrixXcd nq = build_operator(OperatorLabel::Nq, trunc, q).matrix;
    const Eigen::MatrixXcd em = build_operator(OperatorLabel::Eminus, trunc, q).matrix;
    const Eigen::MatrixXcd ep = build_operator(OperatorLabel::Eplus, trunc, q).matrix;
    const Eigen::MatrixXcd c = build_operator(OperatorLabel::C, trunc, q).matrix;
    const Eigen::MatrixXcd s = build_operator(OperatorLabel::S, trunc, q).matrix;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd vac = Eigen::MatrixXcd::Zero(n, n);
    vac(0, 0) = 1.0;
    // 1 - (1-q) Nq = q^N
    const Eigen::MatrixXcd qn = id - (1.0 - qv) * nq;

    AlgebraResiduals r;
    r.q_commutator = interior_max(b * bd - qv * bd * b - id, k);
    r.q_commutator_lower = interior_max(b * nq - qv * nq * b - b, k);
    r.q_commutator_raise = interior_max(nq * bd - qv * bd * nq - bd, k);
    r.commutator = interior_max(b * bd - bd * b - qn, k);
    r.commutator_lower = interior_max(nq * b - b * nq + qn * b, k);
    r.commutator_raise = interior_max(nq * bd - bd * nq - bd * qn, k);
    r.number_product = interior_max(bd * b - nq, k);
    r.shift_products = std::max(interior_max(em * ep - id, k), interior_max(ep * em - (id - vac), k));
    r.phase_square_sum = interior_max(c * c + s * s - (id - 0.5 * vac), k);
    r.phase_commutator = interior_max(c * s - s * c - cplx(0.0, 0.5) * vac, k);
    r.heisenberg_weyl = interior_max(b * bd - bd * b - id, k);
    return r;
}

EnergyLevel energy_spectrum(int n, const QParameter& q, double e0)
{
    if (n < 0)
        throw DomainError("energy_spectrum: negative level");
    const double qv = q.value();
    const double qn = q.pow(n);
    // 2 - (1+q) q^n = (1 - q^n) + (1 - q^{n+1})
    EnergyLevel lv;
    lv.energy = (one_minus_qpow(n, q) + one_minus_qpow(n + 1, q)) / (1.0 - qv) * e0;
    lv.gap = (1.0 + qv) * qn;
    return lv;
}

}  // namespace rstk
