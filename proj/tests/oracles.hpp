#pragma once

// Independent reference computations used only by the tests. Nothing here calls
// into the library's LP, DD or enumeration code.

#include <algorithm>
#include <functional>
#include <optional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "mcp/exact_geometry.hpp"
#include "mcp/group.hpp"
#include "mcp/points.hpp"

namespace oracle {

using mcp::Point;
using mcp::Rational;
using mcp::RationalVector;

// Solves A x = b by Gauss-Jordan; empty optional if singular.
inline std::optional<RationalVector> solve_square(std::vector<RationalVector> a, RationalVector b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline bool feasible_point(const mcp::LinearSystem& s, const RationalVector& x) {
    auto dot = [&](const RationalVector& c) {
        Rational v = 0;
        for (std::size_t i = 0; i < x.size(); ++i) v += c[i] * x[i];
        return v;
    };
    for (const auto& e : s.equalities)
        if (dot(e.coeffs) != e.rhs) return false;
    for (const auto& e : s.inequalities)
        if (dot(e.coeffs) < e.rhs) return false;
    return true;
}

// Vertices of a bounded polytope by trying every choice of `dimension` constraints
// (equalities always included) as a square system.
inline std::vector<RationalVector> basis_vertices(const mcp::LinearSystem& s) {
    const std::size_t d = s.dimension;
    std::vector<mcp::LinearConstraint> all = s.equalities;
    const std::size_t neq = all.size();
    all.insert(all.end(), s.inequalities.begin(), s.inequalities.end());
    std::set<RationalVector> found;
    // Equalities may exceed d when redundant; keep the test systems small instead.
    std::vector<int> mask(all.size() - neq, 0);
    if (neq > d) return {};
    std::fill(mask.end() - static_cast<long>(d - neq), mask.end(), 1);
    do {
        std::vector<RationalVector> a;
        RationalVector b;
        for (std::size_t i = 0; i < neq; ++i) {
            a.push_back(all[i].coeffs);
            b.push_back(all[i].rhs);
        }
        for (std::size_t i = 0; i < mask.size(); ++i)
            if (mask[i]) {
                a.push_back(all[neq + i].coeffs);
                b.push_back(all[neq + i].rhs);
            }
        if (auto x = solve_square(a, b); x && feasible_point(s, *x)) found.insert(*x);
    } while (std::next_permutation(mask.begin(), mask.end()));
    return {found.begin(), found.end()};
}

// Sum of t over the group, computed with residues directly.
inline std::vector<int> residue_sum(const mcp::GroupSpec& g, const Point& t) {
    std::vector<int> s(g.orders().size(), 0);
    for (std::size_t p = 0; p < t.size(); ++p) {
        auto e = g.element(static_cast<int>(p) + 1).residues;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = (s[i] + t[p] * e[i]) % g.orders()[i];
    }
    return s;
}

// Irreducibility by listing every sub-vector's sum.
inline bool irreducible(const mcp::Instance& inst, const Point& t) {
    std::map<std::vector<int>, int> seen;
    Point r(t.size(), 0);
    int count = 0;
    for (;;) {
        // With g0 = 0 the empty and full sub-vectors share the sum 0; only that pair
        // is allowed, and any other collision with the full vector already hits 0.
        if (!(inst.g0 == 0 && r == t) && !seen.emplace(residue_sum(inst.spec, r), count++).second) return false;
        std::size_t p = 0;
        while (p < t.size() && r[p] == t[p]) r[p++] = 0;
        if (p == t.size()) break;
        ++r[p];
    }
    return true;
}

// All solutions with total <= k by plain recursion.
inline std::vector<Point> solutions(const mcp::Instance& inst, int k) {
    std::vector<Point> out;
    const int d = inst.dim();
    Point t(d, 0);
    auto target = inst.spec.element(inst.g0).residues;
    std::function<void(int, int)> rec = [&](int p, int left) {
        if (p == d) {
            bool nonzero = std::any_of(t.begin(), t.end(), [](int x) { return x > 0; });
            if (nonzero && residue_sum(inst.spec, t) == target) out.push_back(t);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            t[p] = v;
            rec(p + 1, left - v);
        }
        t[p] = 0;
    };
    rec(0, k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
