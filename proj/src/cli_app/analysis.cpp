#include <algorithm>
#include <sstream>

#include "mcp/cli.hpp"

namespace mcp {

std::string format_counts(const Counts& c) {
    std::ostringstream os;
    os << "|V|=" << c.vertices << " |S|=" << c.support << " |B_A|=" << c.basis_a << " |B_AS|=" << c.basis_as
       << " |Aut_g0|-1=" << c.aut_minus_1;
    return os.str();
}

Counts InstanceAnalysis::counts() const {
    Counts c;
    c.vertices = static_cast<int>(model.vertices.size());
    c.support = static_cast<int>(support.size());
    c.basis_a = static_cast<int>(basis_a.cardinality);
    c.basis_as = static_cast<int>(basis_as.cardinality);
    c.aut_minus_1 = static_cast<int>(stab.size()) - 1;
    return c;
}

bool InstanceAnalysis::is_support(const Point& t) const {
    return std::binary_search(support.begin(), support.end(), t);
}

int InstanceAnalysis::orbit_of(const Point& t) const {
    for (std::size_t i = 0; i < orbits.size(); ++i)
        if (std::binary_search(orbits[i].members.begin(), orbits[i].members.end(), t)) return static_cast<int>(i);
    return -1;
}

InstanceAnalysis analyze(const Instance& inst, const AnalysisOptions& opts) {
    InstanceAnalysis a;
    a.scope = opts.scope;
    ModelOptions mo;
    mo.parallel = opts.parallel;
    a.model = build_model(inst, mo);
    a.mu_map = mu_image_map(inst, a.model.vertices);
    a.support = support_vertices(a.model.vertices, a.mu_map);
    a.stab = stabilizer(automorphisms(inst.spec, opts.scope), inst.g0);
    a.orbits = orbit_partition(a.model.vertices, a.stab, a.support);
    a.basis_a = compute_basis(BasisKind::A, a.model.vertices, a.support, a.orbits);
    a.basis_s = compute_basis(BasisKind::S, a.model.vertices, a.support, a.orbits);
    a.basis_as = compute_basis(BasisKind::AS, a.model.vertices, a.support, a.orbits);
    if (opts.graph) a.graph = opts.parallel ? build_graph(a.model) : build_graph_serial(a.model);
    return a;
}

std::vector<InstanceAnalysis> analyze_all(const std::vector<Instance>& instances, const AnalysisOptions& opts) {
    std::vector<InstanceAnalysis> out(instances.size());
    AnalysisOptions inner = opts;
    inner.parallel = false;
    const long long n = static_cast<long long>(instances.size());
    std::vector<std::string> errors(instances.size());
    std::vector<char> violation(instances.size(), 0);
    // Larger groups first so the long tasks start early.
    std::vector<long long> order(instances.size());
    for (long long i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](long long x, long long y) {
        return instances[x].spec.order() > instances[y].spec.order();
    });
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < n; ++k) {
        long long i = order[k];
        try {
            out[i] = analyze(instances[i], inner);
        } catch (const TheoremViolation& e) {
            errors[i] = e.what();
            violation[i] = 1;
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (long long i = 0; i < n; ++i) {
        if (errors[i].empty()) continue;
        std::string msg = instances[i].name() + ": " + errors[i];
        if (violation[i]) throw TheoremViolation(msg);
        throw std::runtime_error(msg);
    }
    return out;
}

namespace {

// Invariant factors d1 >= d2 >= ... with d_{i+1} | d_i and product n.
void factorizations(int n, int bound, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 1) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    for (int d = std::min(n, bound); d >= 2; --d) {
        if (n % d != 0) continue;
        if (!cur.empty() && cur.back() % d != 0) continue;
        cur.push_back(d);
        factorizations(n / d, d, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<GroupSpec> groups_up_to(int max_order) {
    std::vector<GroupSpec> out;
    for (int n = 2; n <= max_order; ++n) {
        std::vector<std::vector<int>> fs;
        std::vector<int> cur;
        factorizations(n, n, cur, fs);
        // Cyclic first, then by decreasing leading factor.
        for (auto& f : fs) out.emplace_back(f);
    }
    return out;
}

std::vector<Instance> all_instances(int max_order) {
    std::vector<Instance> out;
    for (const auto& g : groups_up_to(max_order))
        for (int e = 0; e < g.order(); ++e) out.push_back(Instance{g, e});
    return out;
}

std::vector<Instance> table1_instances(int max_order) {
    static const char* const columns[][2] = {
        {"2", "0"},     {"2", "1"},     {"3", "0"},     {"3", "2"},     {"4", "0"},       {"4", "2"},
        {"4", "3"},     {"5", "0"},     {"5", "4"},     {"6", "0"},     {"6", "3"},       {"6", "4"},
        {"6", "5"},     {"7", "0"},     {"7", "6"},     {"8", "0"},     {"8", "4"},       {"8", "6"},
        {"8", "7"},     {"9", "0"},     {"9", "6"},     {"9", "8"},     {"10", "0"},      {"10", "5"},
        {"10", "8"},    {"10", "9"},    {"11", "0"},    {"11", "10"},   {"2x2", "0,0"},   {"2x2", "1,0"},
        {"4x2", "0,0"}, {"4x2", "2,0"}, {"4x2", "0,1"}, {"2x2x2", "0,0,0"}, {"2x2x2", "1,0,0"},
        {"3x3", "0,0"}, {"3x3", "1,0"},
    };
    std::vector<Instance> out;
    for (const auto& c : columns) {
        Instance inst = parse_instance(c[0], c[1]);
        if (inst.spec.order() <= max_order) out.push_back(inst);
    }
    return out;
}

}  // namespace mcp
