// Dense two-phase tableau simplex over GMP rationals, Bland's rule throughout.

#include "mcp/exact_geometry.hpp"

#include <limits>

namespace mcp {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Column {
    std::size_t var;  // original variable, or kNone for slack/artificial
    int sign;         // +1 or -1 for the positive/negative part of a free variable
};

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : m_(rows), n_(cols), t_((rows + 1) * (cols + 1)), basis_(rows, kNone) {}

    Rational& at(std::size_t r, std::size_t c) { return t_[r * (n_ + 1) + c]; }
    Rational& rhs(std::size_t r) { return at(r, n_); }
    Rational& cost(std::size_t c) { return at(m_, c); }
    Rational& objective() { return at(m_, n_); }

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    std::vector<std::size_t>& basis() { return basis_; }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / at(r, c);
        for (std::size_t j = 0; j <= n_; ++j)
            if (sgn(at(r, j)) != 0) at(r, j) *= inv;
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || sgn(at(i, c)) == 0) continue;
            Rational f = at(i, c);
            for (std::size_t j = 0; j <= n_; ++j)
                if (sgn(at(r, j)) != 0) at(i, j) -= f * at(r, j);
        }
        basis_[r] = c;
    }

    // Runs until optimal; returns false if unbounded. Columns with allowed[c]==false never enter.
    bool optimize(const std::vector<bool>& allowed) {
        for (;;) {
            std::size_t enter = kNone;
            for (std::size_t c = 0; c < n_; ++c) {
                if (allowed[c] && sgn(cost(c)) < 0) {
                    enter = c;
                    break;
                }
            }
            if (enter == kNone) return true;
            std::size_t leave = kNone;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (basis_[r] == kNone || sgn(at(r, enter)) <= 0) continue;
                Rational ratio = rhs(r) / at(r, enter);
                if (leave == kNone || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == kNone) return false;
            pivot(leave, enter);
        }
    }

    void set_costs(const std::vector<Rational>& c) {
        for (std::size_t j = 0; j < n_; ++j) cost(j) = c[j];
        objective() = 0;
        for (std::size_t r = 0; r < m_; ++r) {
            std::size_t b = basis_[r];
            if (b == kNone || sgn(c[b]) == 0) continue;
            Rational cb = c[b];
            for (std::size_t j = 0; j <= n_; ++j)
                if (sgn(at(r, j)) != 0) at(m_, j) -= cb * at(r, j);
        }
    }

private:
    std::size_t m_, n_;
    std::vector<Rational> t_;
    std::vector<std::size_t> basis_;
};

LpSolution solve(const LinearSystem& sys, const RationalVector* objective) {
    sys.validate();
    if (objective && objective->size() != sys.dimension)
        throw StructuralError("objective length does not match dimension");
    const std::size_t n = sys.dimension;

    // Single-variable bounds x_j >= 0 become sign constraints instead of rows.
    std::vector<bool> nonneg(n, false);
    std::vector<const LinearConstraint*> ineq;
    for (const auto& c : sys.inequalities) {
        std::size_t nz = 0, where = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(c.coeffs[j]) != 0) {
                ++nz;
                where = j;
            }
        }
        if (nz == 1 && sgn(c.coeffs[where]) > 0 && sgn(c.rhs) == 0) {
            nonneg[where] = true;
        } else if (nz == 0) {
            if (sgn(c.rhs) > 0) return {LpStatus::infeasible, 0, {}};
        } else {
            ineq.push_back(&c);
        }
    }

    std::vector<Column> cols;
    std::vector<std::size_t> pos(n), neg(n, kNone);
    for (std::size_t j = 0; j < n; ++j) {
        pos[j] = cols.size();
        cols.push_back({j, 1});
        if (!nonneg[j]) {
            neg[j] = cols.size();
            cols.push_back({j, -1});
        }
    }
    const std::size_t m = sys.equalities.size() + ineq.size();
    const std::size_t first_slack = cols.size();
    for (std::size_t i = 0; i < ineq.size(); ++i) cols.push_back({kNone, 0});
    const std::size_t first_art = cols.size();
    for (std::size_t i = 0; i < m; ++i) cols.push_back({kNone, 0});

    Tableau tab(m, cols.size());
    for (std::size_t i = 0; i < m; ++i) {
        const LinearConstraint& c =
            i < sys.equalities.size() ? sys.equalities[i] : *ineq[i - sys.equalities.size()];
        int flip = sgn(c.rhs) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(c.coeffs[j]) == 0) continue;
            tab.at(i, pos[j]) = flip * c.coeffs[j];
            if (neg[j] != kNone) tab.at(i, neg[j]) = -flip * c.coeffs[j];
        }
        if (i >= sys.equalities.size()) tab.at(i, first_slack + i - sys.equalities.size()) = -flip;
        tab.at(i, first_art + i) = 1;
        tab.rhs(i) = flip * c.rhs;
        tab.basis()[i] = first_art + i;
    }

    std::vector<Rational> phase1(cols.size(), 0);
    for (std::size_t i = 0; i < m; ++i) phase1[first_art + i] = 1;
    tab.set_costs(phase1);
    std::vector<bool> all(cols.size(), true);
    tab.optimize(all);
    if (sgn(tab.objective()) != 0) return {LpStatus::infeasible, 0, {}};

    // Drive zero-valued artificials out of the basis; rows that cannot pivot are redundant.
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis()[r] < first_art) continue;
        std::size_t c = 0;
        while (c < first_art && sgn(tab.at(r, c)) == 0) ++c;
        if (c < first_art) {
            tab.pivot(r, c);
        } else {
            tab.basis()[r] = kNone;
        }
    }

    std::vector<bool> structural(cols.size(), false);
    for (std::size_t c = 0; c < first_art; ++c) structural[c] = true;

    LpSolution out;
    out.status = LpStatus::optimal;
    if (objective) {
        std::vector<Rational> cost(cols.size(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            cost[pos[j]] = (*objective)[j];
            if (neg[j] != kNone) cost[neg[j]] = -(*objective)[j];
        }
        tab.set_costs(cost);
        if (!tab.optimize(structural)) return {LpStatus::unbounded, 0, {}};
    }

    out.point.assign(n, 0);
    for (std::size_t r = 0; r < m; ++r) {
        std::size_t b = tab.basis()[r];
        if (b == kNone || b >= first_slack) continue;
        out.point[cols[b].var] += cols[b].sign * tab.rhs(r);
    }
    out.value = 0;
    if (objective)
        for (std::size_t j = 0; j < n; ++j) out.value += (*objective)[j] * out.point[j];
    return out;
}

}  // namespace

LpVerdict lp_feasible(const LinearSystem& sys) {
    LpSolution s = solve(sys, nullptr);
    if (s.status == LpStatus::infeasible) return {false, {}};
    return {true, std::move(s.point)};
}

LpSolution lp_minimize(const LinearSystem& sys, const RationalVector& objective) {
    return solve(sys, &objective);
}

}  // namespace mcp
