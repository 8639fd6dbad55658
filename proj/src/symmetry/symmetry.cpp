#include "mcp/symmetry.hpp"
#include "mcp/polyhedron.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mcp {

std::vector<int> multiplicity_type(const Point& t) {
    std::vector<int> out;
    for (int x : t)
        if (x > 0) out.push_back(x);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Orbit> orbit_partition(const std::vector<Point>& vertices, const std::vector<Automorphism>& stab,
                                   const std::vector<Point>& support) {
    std::set<Point> seen;
    std::vector<Orbit> out;
    for (const auto& v : vertices) {
        if (seen.count(v)) continue;
        std::set<Point> members;
        for (const auto& phi : stab) members.insert(act_on_point(phi, v));
        members.insert(v);
        Orbit o;
        o.members.assign(members.begin(), members.end());
        o.representative = o.members.front();
        o.multiplicity_type = multiplicity_type(o.representative);
        for (const auto& m : o.members) {
            seen.insert(m);
            if (std::binary_search(support.begin(), support.end(), m)) ++o.support_members;
        }
        o.is_support_orbit = o.support_members == o.members.size();
        out.push_back(std::move(o));
    }
    std::sort(out.begin(), out.end(),
              [](const Orbit& a, const Orbit& b) { return a.representative < b.representative; });
    return out;
}

std::string basis_name(BasisKind k) {
    switch (k) {
        case BasisKind::A: return "B_A";
        case BasisKind::S: return "B_S";
        case BasisKind::AS: return "B_AS";
    }
    return "";
}

BasisReport compute_basis(BasisKind kind, const std::vector<Point>& vertices, const std::vector<Point>& support,
                          const std::vector<Orbit>& orbits) {
    (void)vertices;
    BasisReport r;
    r.kind = kind;
    if (kind == BasisKind::S) {
        r.members = support;
    } else {
        for (const auto& o : orbits)
            if (kind == BasisKind::A || o.is_support_orbit) r.members.push_back(o.representative);
    }
    std::sort(r.members.begin(), r.members.end());
    r.cardinality = r.members.size();
    return r;
}

bool verify_orbit_transport(const Instance& inst, const std::vector<Point>& vertices, const std::vector<Orbit>& orbits,
                     const std::vector<Automorphism>& stab, const MuImageMap& map) {
    std::vector<const Orbit*> orbit_of(vertices.size(), nullptr);
    for (const auto& o : orbits) {
        if (o.support_members != 0 && o.support_members != o.members.size()) return false;
        for (const auto& m : o.members) {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
            if (it == vertices.end() || *it != m) return false;
            orbit_of[it - vertices.begin()] = &o;
        }
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!orbit_of[i]) return false;
        for (const auto& a : map[i]) {
            auto target = std::lower_bound(vertices.begin(), vertices.end(), a.result) - vertices.begin();
            const Orbit* dest = orbit_of[target];
            std::set<Point> images;
            for (const auto& phi : stab) {
                Point moved = act_on_point(phi, vertices[i]);
                MuOp c = conjugate(a.op, phi);
                if (!is_applicable(inst, moved, c)) return false;
                Point r = apply_mu(inst, moved, c).result;
                if (r != act_on_point(phi, a.result)) return false;
                images.insert(r);
            }
            // Onto: orbit of t maps to the whole orbit of mu(t).
            if (!std::equal(images.begin(), images.end(), dest->members.begin(), dest->members.end()))
                return false;
        }
    }
    return true;
}

bool verify_support_transport(const Instance& inst, const Automorphism& phi) {
    if (!phi.is_automorphism_of(inst.spec)) return false;
    Instance image{inst.spec, phi(inst.g0)};
    std::vector<Point> src = support_vertices(inst, enumerate_vertices(inst));
    std::vector<Point> dst = support_vertices(image, enumerate_vertices(image));
    std::vector<Point> moved;
    for (const auto& s : src) moved.push_back(act_on_point(phi, s));
    std::sort(moved.begin(), moved.end());
    return moved == dst;
}

}  // namespace mcp
