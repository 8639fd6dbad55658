#include "mcp/mu_ops.hpp"

#include <algorithm>
#include <set>

namespace mcp {

std::string MuOp::name(const GroupSpec& spec) const {
    if (kind == Kind::single) {
        std::string l = spec.label(h);
        return l.size() == 1 ? "mu_" + l : "mu_{" + l + "}";
    }
    return "mu_{" + spec.label(h) + "," + spec.label(f) + "}";
}

bool is_applicable(const Instance& inst, const Point& t, const MuOp& op) {
    const GroupSpec& g = inst.spec;
    const int d = g.order();
    if (op.h <= 0 || op.h >= d) return false;
    int th = t[op.h - 1];
    if (th <= 0) return false;
    if (op.kind == MuOp::Kind::single) {
        if (th <= 1) return false;
        int e = g.scalar_mul(th, op.h);
        return e != 0 && e != op.h;
    }
    if (op.f <= 0 || op.f >= d || op.f == op.h) return false;
    int tf = t[op.f - 1];
    return tf > 0 && th <= tf && g.add(op.h, op.f) != 0;
}

std::vector<MuOp> applicable_ops(const Instance& inst, const Point& t) {
    std::vector<MuOp> out;
    std::vector<int> supp = support_set(t);
    for (int hp : supp) {
        for (int fp : supp) {
            MuOp op = MuOp::pair(hp + 1, fp + 1);
            if (is_applicable(inst, t, op)) out.push_back(op);
        }
        MuOp single = MuOp::single(hp + 1);
        if (is_applicable(inst, t, single)) out.push_back(single);
    }
    std::sort(out.begin(), out.end());
    return out;
}

MuApplication apply_mu(const Instance& inst, const Point& t, const MuOp& op) {
    if (static_cast<int>(t.size()) != inst.dim()) throw StructuralError("point length does not match group");
    if (!is_applicable(inst, t, op))
        throw ApplicabilityError(op.name(inst.spec) + " is not applicable to this point");
    const GroupSpec& g = inst.spec;
    MuApplication a;
    a.source = t;
    a.op = op;
    a.leading = op.h;
    Point s = t;
    int th = t[op.h - 1];
    s[op.h - 1] = 0;
    if (op.kind == MuOp::Kind::pair) {
        a.new_element = g.add(op.h, op.f);
        s[op.f - 1] -= th;
        s[a.new_element - 1] += th;
    } else {
        a.new_element = g.scalar_mul(th, op.h);
        s[a.new_element - 1] += 1;
    }
    if (!is_solution(inst, s)) throw TheoremViolation("mu-result is not a solution");
    a.result = std::move(s);
    return a;
}

MuImageMap mu_image_map(const Instance& inst, const std::vector<Point>& vertices) {
    MuImageMap map(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (const auto& op : applicable_ops(inst, vertices[i])) {
            MuApplication a = apply_mu(inst, vertices[i], op);
            if (!std::binary_search(vertices.begin(), vertices.end(), a.result))
                throw TheoremViolation(op.name(inst.spec) + " maps a vertex of " + inst.name() +
                                       " to a non-vertex");
            map[i].push_back(std::move(a));
        }
    }
    return map;
}

std::vector<std::pair<int, int>> mu_arrows(const std::vector<Point>& vertices, const MuImageMap& map) {
    std::set<std::pair<int, int>> arrows;
    for (std::size_t i = 0; i < map.size(); ++i) {
        for (const auto& a : map[i]) {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), a.result);
            arrows.emplace(static_cast<int>(i), static_cast<int>(it - vertices.begin()));
        }
    }
    return {arrows.begin(), arrows.end()};
}

std::vector<Point> support_vertices(const std::vector<Point>& vertices, const MuImageMap& map) {
    std::set<Point> images;
    for (std::size_t i = 0; i < map.size(); ++i)
        for (const auto& a : map[i])
            if (a.result != vertices[i]) images.insert(a.result);
    std::vector<Point> out;
    for (const auto& v : vertices)
        if (!images.count(v)) out.push_back(v);
    return out;
}

std::vector<Point> support_vertices(const Instance& inst, const std::vector<Point>& vertices) {
    return support_vertices(vertices, mu_image_map(inst, vertices));
}

std::optional<MuApplication> mu_derivation(const Instance& inst, const std::vector<Point>& vertices,
                                           const Point& target) {
    for (const auto& v : vertices) {
        if (v == target) continue;
        for (const auto& op : applicable_ops(inst, v)) {
            MuApplication a = apply_mu(inst, v, op);
            if (a.result == target) return a;
        }
    }
    return std::nullopt;
}

MuOp conjugate(const MuOp& op, const Automorphism& phi) {
    MuOp c = op;
    c.h = phi(op.h);
    if (op.kind == MuOp::Kind::pair) c.f = phi(op.f);
    return c;
}

bool verify_commutation(const Instance& inst, const Point& t, const MuOp& op, const Automorphism& phi) {
    Instance image{inst.spec, phi(inst.g0)};
    Point moved = act_on_point(phi, t);
    MuOp c = conjugate(op, phi);
    if (!is_applicable(image, moved, c)) return false;
    Point lhs = act_on_point(phi, apply_mu(inst, t, op).result);
    return lhs == apply_mu(image, moved, c).result;
}

}  // namespace mcp
