#include "mcp/polyhedron.hpp"

#include <algorithm>

namespace mcp {

Rational Facet::value(const Point& t) const {
    if (kind == FacetKind::trivial) return t.at(position);
    Rational s = 0;
    for (std::size_t p = 0; p < t.size(); ++p)
        if (t[p]) s += pi[p] * t[p];
    return s;
}

bool Facet::operator==(const Facet& o) const {
    return kind == o.kind && position == o.position && normal == o.normal && rhs == o.rhs;
}

Facet trivial_facet(int dim, int position) {
    Facet f;
    f.kind = FacetKind::trivial;
    f.position = position;
    f.pi.assign(dim, 0);
    f.pi[position] = 1;
    f.pi0 = 0;
    f.normal.assign(dim, 0);
    f.normal[position] = 1;
    f.rhs = 0;
    return f;
}

Facet make_facet(const RationalVector& pi, const Rational& pi0) {
    if (sgn(pi0) <= 0) throw PreconditionError("nontrivial facet needs pi0 > 0");
    Facet f;
    f.kind = FacetKind::nontrivial;
    f.pi.resize(pi.size());
    for (std::size_t p = 0; p < pi.size(); ++p) f.pi[p] = pi[p] / pi0;
    f.pi0 = 1;
    mpz_class l = 1;
    for (const auto& x : f.pi) l = lcm(l, x.get_den());
    std::vector<mpz_class> ints;
    for (const auto& x : f.pi) ints.push_back(Rational(x * l).get_num());
    mpz_class r = l, g = l;
    for (const auto& x : ints) g = gcd(g, x);
    for (auto& x : ints) {
        x /= g;
        if (!x.fits_slong_p()) throw std::overflow_error("facet coefficient exceeds 64 bits");
        f.normal.push_back(x.get_si());
    }
    r /= g;
    f.rhs = r.get_si();
    return f;
}

bool is_vertex(const Instance& inst, const Point& t, const std::vector<Point>& irreducible) {
    if (std::find(irreducible.begin(), irreducible.end(), t) == irreducible.end())
        throw PreconditionError("candidate is not in the irreducible set");
    const std::size_t n = static_cast<std::size_t>(inst.dim());
    std::vector<const Point*> others;
    for (const auto& u : irreducible)
        if (u != t) others.push_back(&u);
    if (others.empty()) return true;

    // t = sum lambda_i u_i + d with d >= 0  <=>  sum lambda_i u_i <= t.
    const std::size_t m = others.size();
    LinearSystem sys;
    sys.dimension = m;
    for (std::size_t i = 0; i < m; ++i) {
        RationalVector e(m, 0);
        e[i] = 1;
        sys.add_inequality(std::move(e), 0);
    }
    sys.add_equality(RationalVector(m, 1), 1);
    for (std::size_t p = 0; p < n; ++p) {
        RationalVector row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = -(*others[i])[p];
        sys.add_inequality(std::move(row), -t[p]);
    }
    return !lp_feasible(sys).feasible;
}

std::vector<Point> enumerate_vertices_serial(const Instance& inst, const std::vector<Point>& irreducible) {
    std::vector<Point> out;
    for (const auto& t : irreducible)
        if (is_vertex(inst, t, irreducible)) out.push_back(t);
    return out;
}

std::vector<Point> enumerate_vertices(const Instance& inst, const std::vector<Point>& irreducible) {
    const int n = static_cast<int>(irreducible.size());
    std::vector<char> keep(n, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < n; ++i) keep[i] = is_vertex(inst, irreducible[i], irreducible) ? 1 : 0;
    std::vector<Point> out;
    for (int i = 0; i < n; ++i)
        if (keep[i]) out.push_back(irreducible[i]);
    return out;
}

std::vector<Point> enumerate_vertices(const Instance& inst) {
    return enumerate_vertices(inst, enumerate_irreducible_points(inst));
}

LinearSystem subadditive_system(const Instance& inst) {
    const GroupSpec& g = inst.spec;
    const int n = inst.dim();
    const int d = g.order();
    LinearSystem sys;
    sys.dimension = n;
    auto pos = [](int element) { return element - 1; };

    if (inst.g0 != 0) {
        RationalVector e(n, 0);
        e[pos(inst.g0)] = 1;
        sys.add_equality(std::move(e), 1);
    }
    // pi(g) + pi(g0 - g) = 1 for g != g0; with g0 = 0 this pairs g with -g.
    for (int a = 1; a < d; ++a) {
        if (a == inst.g0) continue;
        int b = g.add(inst.g0, g.neg(a));
        if (b < a) continue;
        RationalVector e(n, 0);
        e[pos(a)] += 1;
        e[pos(b)] += 1;
        sys.add_equality(std::move(e), 1);
    }
    for (int a = 1; a < d; ++a) {
        for (int b = a; b < d; ++b) {
            int c = g.add(a, b);
            if (c == 0) continue;
            RationalVector e(n, 0);
            e[pos(a)] += 1;
            e[pos(b)] += 1;
            e[pos(c)] -= 1;
            if (std::all_of(e.begin(), e.end(), [](const Rational& x) { return sgn(x) == 0; })) continue;
            sys.add_inequality(std::move(e), 0);
        }
    }
    for (int p = 0; p < n; ++p) {
        RationalVector e(n, 0);
        e[p] = 1;
        sys.add_inequality(std::move(e), 0);
    }
    return sys;
}

std::vector<Facet> enumerate_nontrivial_facets(const Instance& inst) {
    LinearSystem q = subadditive_system(inst);
    // Q is bounded: pi >= 0 and each pi(g) is paired with a partner summing to 1.
    std::vector<Facet> out;
    for (const auto& v : enumerate_polytope_vertices(q)) out.push_back(make_facet(v, 1));
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.rhs < b.rhs;
    });
    return out;
}

int face_dimension(const Instance& inst, const Facet& f, const std::vector<Point>& vertices) {
    const int n = inst.dim();
    std::vector<RationalVector> dirs;
    const Point* base = nullptr;
    for (const auto& v : vertices) {
        if (!f.tight(v)) continue;
        if (!base) {
            base = &v;
            continue;
        }
        RationalVector d(n);
        for (int p = 0; p < n; ++p) d[p] = v[p] - (*base)[p];
        dirs.push_back(std::move(d));
    }
    if (!base) return -1;
    for (int p = 0; p < n; ++p) {
        if (sgn(f.pi[p]) != 0) continue;
        RationalVector e(n, 0);
        e[p] = 1;
        dirs.push_back(std::move(e));
    }
    return static_cast<int>(rank(dirs));
}

bool verify_facet_validity(const Instance& inst, const Facet& f, const std::vector<Point>& vertices) {
    if (static_cast<int>(f.pi.size()) != inst.dim()) return false;
    for (const auto& x : f.pi)
        if (sgn(x) < 0) return false;
    bool attained = false;
    for (const auto& v : vertices) {
        Rational val = f.value(v);
        if (val < f.pi0) return false;
        attained = attained || val == f.pi0;
    }
    if (!attained) return false;
    return face_dimension(inst, f, vertices) == inst.dim() - 1;
}

namespace {

int checked_sub_sum(const Instance& inst, const Point& t, const Point& u) {
    if (u.size() != t.size()) throw StructuralError("u and t differ in length");
    bool zero = true, full = true;
    for (std::size_t p = 0; p < t.size(); ++p) {
        if (u[p] < 0 || u[p] > t[p]) throw PreconditionError("u must satisfy 0 <= u <= t");
        zero = zero && u[p] == 0;
        full = full && u[p] == t[p];
    }
    if (zero || full) throw PreconditionError("u must differ from 0 and from t");
    if (total(u) < 2) throw PreconditionError("u must have total at least 2");
    int h = group_sum(inst.spec, u);
    if (h == 0 || h == inst.g0)
        throw PreconditionError("sub-sum of u is 0 or g0; t cannot be a vertex");
    if (t[h - 1] != 0) throw PreconditionError("sub-sum of u lies in the support of t; t is reducible");
    return h;
}

}  // namespace

Point exchange_point(const Instance& inst, const Point& t, const Point& u) {
    int h = checked_sub_sum(inst, t, u);
    Point w(t.size());
    for (std::size_t p = 0; p < t.size(); ++p) w[p] = t[p] - u[p];
    w[h - 1] = t[h - 1] + 1;
    if (!is_solution(inst, w)) throw TheoremViolation("exchange point is not a solution");
    return w;
}

Point exchange_point(const Instance& inst, const Point& t, const Point& u, const std::vector<Facet>& facets) {
    Point w = exchange_point(inst, t, u);
    for (const auto& f : facets) {
        if (f.kind != FacetKind::nontrivial || !f.tight(t)) continue;
        if (!f.tight(w)) throw TheoremViolation("exchange point leaves a facet through t");
    }
    return w;
}

bool exchange_relation(const Instance& inst, const Facet& f, const Point& t, const Point& u) {
    if (f.kind != FacetKind::nontrivial) throw PreconditionError("relation needs a nontrivial facet");
    if (!f.tight(t)) throw PreconditionError("facet is not tight at t");
    int h = checked_sub_sum(inst, t, u);
    Rational rhs = 0;
    for (std::size_t p = 0; p < t.size(); ++p)
        if (t[p] > 0 && u[p]) rhs += u[p] * f.pi[p];
    return f.pi[h - 1] == rhs;
}

int PolyhedronModel::index_of(const Point& t) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), t);
    if (it == vertices.end() || *it != t) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::vector<Facet> PolyhedronModel::nontrivial_facets() const {
    std::vector<Facet> out;
    for (const auto& f : facets)
        if (f.kind == FacetKind::nontrivial) out.push_back(f);
    return out;
}

PolyhedronModel build_model(const Instance& inst, const ModelOptions& opts) {
    PolyhedronModel m;
    m.inst = inst;
    m.irreducible = opts.parallel ? enumerate_irreducible_points(inst) : enumerate_irreducible_points_serial(inst);
    m.vertices = opts.parallel ? enumerate_vertices(inst, m.irreducible)
                               : enumerate_vertices_serial(inst, m.irreducible);
    if (!opts.facets) return m;
    for (int p = 0; p < inst.dim(); ++p) m.facets.push_back(trivial_facet(inst.dim(), p));
    for (auto& f : enumerate_nontrivial_facets(inst)) {
        if (!verify_facet_validity(inst, f, m.vertices))
            throw TheoremViolation("basic solution of the subadditive system is not a facet of " + inst.name());
        m.facets.push_back(std::move(f));
    }
    m.incidence.assign(m.vertices.size(), std::vector<bool>(m.facets.size(), false));
    for (std::size_t v = 0; v < m.vertices.size(); ++v)
        for (std::size_t f = 0; f < m.facets.size(); ++f) m.incidence[v][f] = m.facets[f].tight(m.vertices[v]);
    return m;
}

}  // namespace mcp
