#include "mcp/graph.hpp"

#include <algorithm>
#include <deque>

namespace mcp {

std::size_t VertexGraph::edge_count() const { return edges().size(); }

std::vector<std::pair<int, int>> VertexGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < adjacency.size(); ++i)
        for (std::size_t j = i + 1; j < adjacency.size(); ++j)
            if (adjacency[i][j]) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

namespace {

void check_pair(const PolyhedronModel& model, int u, int v) {
    const int n = static_cast<int>(model.vertices.size());
    if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("vertex index out of range");
    if (u == v) throw PreconditionError("adjacency needs two distinct vertices");
    if (model.incidence.size() != model.vertices.size())
        throw PreconditionError("model was built without facets");
}

}  // namespace

bool are_adjacent(const PolyhedronModel& model, int u, int v) {
    check_pair(model, u, v);
    std::vector<RationalVector> normals;
    for (std::size_t f = 0; f < model.facets.size(); ++f)
        if (model.incidence[u][f] && model.incidence[v][f]) normals.push_back(model.facets[f].pi);
    return static_cast<int>(rank(normals)) == model.inst.dim() - 1;
}

bool are_adjacent(const PolyhedronModel& model, const Point& u, const Point& v) {
    int a = model.index_of(u), b = model.index_of(v);
    if (a < 0 || b < 0) throw PreconditionError("point is not a vertex of the model");
    return are_adjacent(model, a, b);
}

bool adjacent_by_lp(const PolyhedronModel& model, int u, int v) {
    const int n = static_cast<int>(model.vertices.size());
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw PreconditionError("need two distinct vertex indices");
    const int dim = model.inst.dim();
    // Variables: lambda_w for every vertex, then mu_g for every recession ray e_g.
    const std::size_t vars = static_cast<std::size_t>(n + dim);
    LinearSystem sys;
    sys.dimension = vars;
    for (std::size_t i = 0; i < vars; ++i) {
        RationalVector e(vars, 0);
        e[i] = 1;
        sys.add_inequality(std::move(e), 0);
    }
    for (int p = 0; p < dim; ++p) {
        RationalVector row(vars, 0);
        for (int w = 0; w < n; ++w) row[w] = model.vertices[w][p];
        row[n + p] = 1;
        Rational mid = Rational(model.vertices[u][p] + model.vertices[v][p], 2);
        mid.canonicalize();
        sys.add_equality(std::move(row), mid);
    }
    RationalVector ones(vars, 0);
    for (int w = 0; w < n; ++w) ones[w] = 1;
    sys.add_equality(std::move(ones), 1);

    RationalVector objective(vars, -1);
    objective[u] = 0;
    objective[v] = 0;
    LpSolution s = lp_minimize(sys, objective);
    if (s.status != LpStatus::optimal) throw TheoremViolation("midpoint LP is not solvable");
    return sgn(s.value) == 0;
}

namespace {

template <class Test>
VertexGraph build(const PolyhedronModel& model, Test test, bool parallel) {
    VertexGraph g;
    g.vertices = model.vertices;
    const int n = static_cast<int>(g.vertices.size());
    g.adjacency.assign(n, std::vector<bool>(n, false));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<char> adj(pairs.size(), 0);
    const long long m = static_cast<long long>(pairs.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long long k = 0; k < m; ++k) adj[k] = test(model, pairs[k].first, pairs[k].second) ? 1 : 0;
    } else {
        for (long long k = 0; k < m; ++k) adj[k] = test(model, pairs[k].first, pairs[k].second) ? 1 : 0;
    }
    for (long long k = 0; k < m; ++k) {
        auto [i, j] = pairs[k];
        g.adjacency[i][j] = g.adjacency[j][i] = adj[k] != 0;
    }
    return g;
}

bool rank_test(const PolyhedronModel& m, int u, int v) { return are_adjacent(m, u, v); }

}  // namespace

VertexGraph build_graph(const PolyhedronModel& model) { return build(model, rank_test, true); }
VertexGraph build_graph_serial(const PolyhedronModel& model) { return build(model, rank_test, false); }
VertexGraph build_graph_lp(const PolyhedronModel& model) { return build(model, adjacent_by_lp, true); }

ChainSequence build_chain(const Instance& inst, const Point& t, ChainStrategy strategy) {
    (void)strategy;
    ChainSequence c;
    c.points.push_back(t);
    Point cur = t;
    int leading = -1;

    for (int p = 0; p < inst.dim(); ++p) {
        if (cur[p] <= 1) continue;
        MuOp op = MuOp::single(p + 1);
        if (!is_applicable(inst, cur, op)) continue;
        MuApplication a = apply_mu(inst, cur, op);
        leading = a.new_element;
        cur = a.result;
        c.points.push_back(cur);
        c.ops.push_back(std::move(a));
        break;
    }
    if (leading < 0) {
        std::vector<int> supp = support_set(cur);
        if (supp.empty()) return c;
        leading = supp.front() + 1;
    }
    for (;;) {
        std::optional<MuOp> next;
        for (int fp : support_set(cur)) {
            MuOp op = MuOp::pair(leading, fp + 1);
            if (is_applicable(inst, cur, op)) {
                next = op;
                break;
            }
        }
        if (!next) break;
        MuApplication a = apply_mu(inst, cur, *next);
        leading = a.new_element;
        cur = a.result;
        if (std::find(c.points.begin(), c.points.end(), cur) != c.points.end())
            throw TheoremViolation("chain revisits a point");
        c.points.push_back(cur);
        c.ops.push_back(std::move(a));
    }
    return c;
}

bool chain_is_linked(const ChainSequence& chain) {
    if (chain.ops.size() + 1 != chain.points.size()) return false;
    for (std::size_t i = 0; i < chain.ops.size(); ++i) {
        if (chain.ops[i].source != chain.points[i] || chain.ops[i].result != chain.points[i + 1]) return false;
        if (i + 1 < chain.ops.size() && chain.ops[i].new_element != chain.ops[i + 1].leading) return false;
    }
    return true;
}

bool verify_complete_subgraph(const ChainSequence& chain, const VertexGraph& graph) {
    std::vector<int> idx;
    for (const auto& p : chain.points) {
        auto it = std::lower_bound(graph.vertices.begin(), graph.vertices.end(), p);
        if (it == graph.vertices.end() || *it != p) return false;
        idx.push_back(static_cast<int>(it - graph.vertices.begin()));
    }
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] == idx[b] || !graph.adjacency[idx[a]][idx[b]]) return false;
    return true;
}

int diameter(const VertexGraph& graph) {
    const int n = static_cast<int>(graph.size());
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y = 0; y < n; ++y) {
                if (graph.adjacency[x][y] && dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        for (int y = 0; y < n; ++y) {
            if (dist[y] < 0) throw TheoremViolation("vertex graph is disconnected");
            best = std::max(best, dist[y]);
        }
    }
    return best;
}

std::optional<std::pair<int, int>> non_adjacent_pair(const VertexGraph& graph) {
    const int n = static_cast<int>(graph.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!graph.adjacency[i][j]) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace mcp
