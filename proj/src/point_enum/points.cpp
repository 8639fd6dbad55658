#include "mcp/points.hpp"
#include "mcp/parallel.hpp"

#include <algorithm>
#include <functional>

namespace mcp {

std::string Instance::name() const { return spec.name() + "," + spec.label(g0); }

Instance make_instance(const GroupSpec& spec, const GroupElement& g0) {
    return Instance{spec, spec.index(g0)};
}

Instance parse_instance(const std::string& group, const std::string& g0) {
    GroupSpec spec = parse_group(group);
    return make_instance(spec, parse_element(spec, g0));
}

Point unit_point(const Instance& inst, int element) {
    if (element <= 0 || element >= inst.spec.order()) throw PreconditionError("unit point needs a nonzero element");
    Point t(inst.dim(), 0);
    t[element - 1] = 1;
    return t;
}

namespace {

void check_shape(const Instance& inst, const Point& t) {
    if (static_cast<int>(t.size()) != inst.dim())
        throw StructuralError("point has " + std::to_string(t.size()) + " coordinates, expected " +
                              std::to_string(inst.dim()));
    for (int x : t)
        if (x < 0) throw StructuralError("point has a negative coordinate");
}

}  // namespace

int group_sum(const GroupSpec& spec, const Point& t) {
    int s = 0;
    for (std::size_t p = 0; p < t.size(); ++p)
        if (t[p]) s = spec.add(s, spec.scalar_mul(t[p], static_cast<int>(p) + 1));
    return s;
}

int total(const Point& t) {
    int s = 0;
    for (int x : t) s += x;
    return s;
}

std::vector<int> support_set(const Point& t) {
    std::vector<int> out;
    for (std::size_t p = 0; p < t.size(); ++p)
        if (t[p] > 0) out.push_back(static_cast<int>(p));
    return out;
}

bool is_solution(const Instance& inst, const Point& t) {
    check_shape(inst, t);
    if (inst.g0 == 0 && total(t) == 0) return false;
    return group_sum(inst.spec, t) == inst.g0;
}

std::optional<std::pair<Point, Point>> reducibility_witness(const Instance& inst, const Point& t) {
    check_shape(inst, t);
    const GroupSpec& g = inst.spec;
    const bool zero_rhs = inst.g0 == 0;
    if (zero_rhs && total(t) == 0) return std::make_pair(t, t);
    const bool skip_full = zero_rhs && group_sum(g, t) == 0;

    std::vector<int> supp = support_set(t);
    std::vector<int> u(t.size(), 0);
    std::vector<std::optional<Point>> seen(g.order());
    int sum = 0;
    for (;;) {
        bool full = true;
        for (int p : supp) full = full && u[p] == t[p];
        if (!(full && skip_full)) {
            if (seen[sum]) return std::make_pair(*seen[sum], u);
            seen[sum] = u;
        }
        // Mixed-radix increment over the support, keeping the running sum.
        std::size_t k = 0;
        while (k < supp.size()) {
            int p = supp[k];
            if (u[p] < t[p]) {
                ++u[p];
                sum = g.add(sum, p + 1);
                break;
            }
            sum = g.add(sum, g.scalar_mul(-static_cast<long long>(u[p]), p + 1));
            u[p] = 0;
            ++k;
        }
        if (k == supp.size()) return std::nullopt;
    }
}

bool is_irreducible(const Instance& inst, const Point& t) { return !reducibility_witness(inst, t); }

std::optional<Point> midpoint_witness(const Instance& inst, const Point& t) {
    check_shape(inst, t);
    const GroupSpec& g = inst.spec;
    const std::size_t n = t.size();
    Point w(n);
    for (std::size_t p = 0; p < n; ++p) w[p] = -t[p];
    for (;;) {
        bool nonzero = false, plus_t = true, minus_t = true;
        for (std::size_t p = 0; p < n; ++p) {
            nonzero = nonzero || w[p] != 0;
            plus_t = plus_t && w[p] == t[p];
            minus_t = minus_t && w[p] == -t[p];
        }
        int s = 0;
        for (std::size_t p = 0; p < n; ++p)
            if (w[p]) s = g.add(s, g.scalar_mul(w[p], static_cast<int>(p) + 1));
        // With g0 = 0 the zero vector is not a solution, so t -+ w must not vanish.
        bool ok = nonzero && s == 0 && !(inst.g0 == 0 && (plus_t || minus_t));
        if (ok) return w;
        std::size_t k = 0;
        while (k < n) {
            if (w[k] < t[k]) {
                ++w[k];
                break;
            }
            w[k] = -t[k];
            ++k;
        }
        if (k == n) return std::nullopt;
    }
}

bool is_midpoint_of_solutions(const Instance& inst, const Point& t) { return midpoint_witness(inst, t).has_value(); }

std::vector<Point> enumerate_solutions(const Instance& inst, int max_total) {
    const int n = inst.dim();
    std::vector<Point> out;
    Point t(n, 0);
    std::function<void(int, int)> rec = [&](int p, int left) {
        if (p == n) {
            if (is_solution(inst, t)) out.push_back(t);
            return;
        }
        for (int c = 0; c <= left; ++c) {
            t[p] = c;
            rec(p + 1, left - c);
        }
        t[p] = 0;
    };
    rec(0, max_total);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Nondecreasing sequences of G+ positions whose prefix sums are pairwise distinct and
// avoid 0 and g0; a sequence is reported when its next sum would hit g0.
class IrreducibleSearch {
public:
    explicit IrreducibleSearch(const Instance& inst)
        : inst_(inst), counts_(inst.dim(), 0), used_(inst.spec.order(), false) {
        used_[0] = true;
    }

    void run_from(int first) {
        step(first, 0, /*only=*/true);
    }

    void run_all() {
        for (int i = 0; i < inst_.dim(); ++i) run_from(i);
    }

    std::vector<Point>& found() { return found_; }

private:
    void step(int start, int sum, bool only) {
        const GroupSpec& g = inst_.spec;
        const int end = only ? start + 1 : inst_.dim();
        for (int i = start; i < end; ++i) {
            int next = g.add(sum, i + 1);
            if (next == inst_.g0) {
                ++counts_[i];
                if (is_irreducible(inst_, counts_)) found_.push_back(counts_);
                --counts_[i];
            }
            if (used_[next] || next == inst_.g0) continue;
            ++counts_[i];
            used_[next] = true;
            step(i, next, false);
            used_[next] = false;
            --counts_[i];
        }
    }

    const Instance& inst_;
    Point counts_;
    std::vector<bool> used_;
    std::vector<Point> found_;
};

void canonicalize(std::vector<Point>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::vector<Point> enumerate_irreducible_points_serial(const Instance& inst) {
    IrreducibleSearch s(inst);
    s.run_all();
    std::vector<Point> out = std::move(s.found());
    canonicalize(out);
    return out;
}

std::vector<Point> enumerate_irreducible_points(const Instance& inst) {
    const int n = inst.dim();
    std::vector<std::vector<Point>> parts(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < n; ++i) {
        IrreducibleSearch s(inst);
        s.run_from(i);
        parts[i] = std::move(s.found());
    }
    std::vector<Point> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    canonicalize(out);
    return out;
}

}  // namespace mcp
