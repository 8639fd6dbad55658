// Incremental double description on the homogenised cone
//   {(y0, y) : -b'·y0 + A'·y >= 0, y0 >= 0}
// after the equalities have been solved for their pivot variables.

#include "internal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace mcp {
namespace {

using IntVector = std::vector<mpz_class>;

class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    bool subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
        return r;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

private:
    std::vector<std::uint64_t> w_;
};

struct Ray {
    IntVector v;
    Bitset zeros;
};

void make_primitive(IntVector& v) {
    mpz_class g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

IntVector scale_to_integers(const RationalVector& r) {
    mpz_class l = 1;
    for (const auto& x : r) l = lcm(l, x.get_den());
    IntVector out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = Rational(r[i] * l).get_num();
    make_primitive(out);
    return out;
}

mpz_class dot(const IntVector& a, const IntVector& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

// Affine parametrisation x = base + basis·y of the equality-constrained subspace.
struct Parametrisation {
    bool consistent = true;
    RationalVector base;
    std::vector<RationalVector> basis;  // k columns, each of length n
};

Parametrisation solve_equalities(const LinearSystem& sys) {
    const std::size_t n = sys.dimension;
    std::vector<RationalVector> a;
    for (const auto& e : sys.equalities) {
        RationalVector row = e.coeffs;
        row.push_back(e.rhs);
        a.push_back(std::move(row));
    }
    auto pivots = detail::reduce_rows(a, n + 1);
    Parametrisation p;
    if (!pivots.empty() && pivots.back() == n) {
        p.consistent = false;
        return p;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    p.base.assign(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) p.base[pivots[i]] = a[i][n];
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RationalVector col(n, 0);
        col[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) col[pivots[i]] = -a[i][f];
        p.basis.push_back(std::move(col));
    }
    return p;
}

}  // namespace

PolyhedronVRep double_description(const LinearSystem& sys) {
    sys.validate();
    const std::size_t n = sys.dimension;
    Parametrisation par = solve_equalities(sys);
    PolyhedronVRep out;
    if (!par.consistent) return out;
    const std::size_t k = par.basis.size();

    if (k == 0) {
        if (satisfies(sys, par.base)) out.vertices.push_back(par.base);
        return out;
    }

    // Homogenised rows over (y0, y1..yk).
    std::vector<IntVector> rows;
    for (const auto& c : sys.inequalities) {
        RationalVector h(k + 1);
        Rational shift = c.rhs;
        for (std::size_t j = 0; j < n; ++j) shift -= c.coeffs[j] * par.base[j];
        h[0] = -shift;
        for (std::size_t t = 0; t < k; ++t) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j) s += c.coeffs[j] * par.basis[t][j];
            h[t + 1] = s;
        }
        bool zero = std::all_of(h.begin() + 1, h.end(), [](const Rational& x) { return sgn(x) == 0; });
        if (zero) {
            if (sgn(h[0]) < 0) return out;  // 0 >= positive constant
            continue;
        }
        rows.push_back(scale_to_integers(h));
    }
    {
        IntVector y0(k + 1, 0);
        y0[0] = 1;
        rows.push_back(std::move(y0));
    }
    const std::size_t d = k + 1;

    // Initial simplicial cone from d independent rows.
    std::vector<std::size_t> chosen;
    std::vector<RationalVector> echelon;
    for (std::size_t i = 0; i < rows.size() && chosen.size() < d; ++i) {
        std::vector<RationalVector> trial = echelon;
        trial.emplace_back(rows[i].begin(), rows[i].end());
        if (rank(trial) == trial.size()) {
            echelon = std::move(trial);
            chosen.push_back(i);
        }
    }
    if (chosen.size() < d) {
        if (!lp_feasible(sys).feasible) return out;
        throw UnboundedError("feasible region contains a line");
    }

    // Columns of the inverse of the chosen square block are the initial rays.
    std::vector<RationalVector> aug(d, RationalVector(2 * d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug[i][j] = rows[chosen[i]][j];
        aug[i][d + i] = 1;
    }
    detail::reduce_rows(aug, d);

    const std::size_t total = rows.size();
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < d; ++j) {
        RationalVector col(d);
        for (std::size_t i = 0; i < d; ++i) col[i] = aug[i][d + j];
        Ray r{scale_to_integers(col), Bitset(total)};
        for (std::size_t i = 0; i < d; ++i)
            if (i != j) r.zeros.set(chosen[i]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> used(total, false);
    for (auto c : chosen) used[c] = true;

    for (std::size_t idx = 0; idx < total; ++idx) {
        if (used[idx]) continue;
        const IntVector& a = rows[idx];
        std::vector<mpz_class> val(rays.size());
        std::vector<std::size_t> pos, neg, zer;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(a, rays[r].v);
            int s = sgn(val[r]);
            (s > 0 ? pos : s < 0 ? neg : zer).push_back(r);
        }
        if (neg.empty()) {
            for (auto r : zer) rays[r].zeros.set(idx);
            continue;
        }
        std::vector<Ray> next;
        for (auto r : pos) next.push_back(rays[r]);
        for (auto r : zer) {
            next.push_back(rays[r]);
            next.back().zeros.set(idx);
        }
        for (auto p : pos) {
            for (auto q : neg) {
                Bitset common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    if (common.subset_of(rays[r].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray nr{IntVector(d), common};
                for (std::size_t i = 0; i < d; ++i)
                    nr.v[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
                make_primitive(nr.v);
                nr.zeros.set(idx);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
        used[idx] = true;
    }

    for (const auto& r : rays) {
        if (sgn(r.v[0]) > 0) {
            RationalVector x = par.base;
            for (std::size_t t = 0; t < k; ++t) {
                if (sgn(r.v[t + 1]) == 0) continue;
                Rational y = Rational(r.v[t + 1]) / Rational(r.v[0]);
                for (std::size_t j = 0; j < n; ++j) x[j] += y * par.basis[t][j];
            }
            for (auto& xi : x) xi.canonicalize();
            out.vertices.push_back(std::move(x));
        } else {
            RationalVector dir(n, 0);
            for (std::size_t t = 0; t < k; ++t)
                for (std::size_t j = 0; j < n; ++j) dir[j] += Rational(r.v[t + 1]) * par.basis[t][j];
            IntVector prim = scale_to_integers(dir);
            out.rays.emplace_back(prim.begin(), prim.end());
        }
    }
    auto sort_unique = [](std::vector<RationalVector>& v) {
        std::sort(v.begin(), v.end(), lex_less);
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    sort_unique(out.vertices);
    sort_unique(out.rays);
    if (out.vertices.empty()) out.rays.clear();  // empty region
    return out;
}

std::vector<RationalVector> enumerate_polytope_vertices(const LinearSystem& sys) {
    PolyhedronVRep rep = double_description(sys);
    if (!rep.rays.empty()) throw UnboundedError("feasible region is unbounded");
    return rep.vertices;
}

}  // namespace mcp
