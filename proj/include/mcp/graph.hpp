#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcp/mu_ops.hpp"
#include "mcp/polyhedron.hpp"

namespace mcp {

struct VertexGraph {
    std::vector<Point> vertices;
    std::vector<std::vector<bool>> adjacency;

    std::size_t size() const { return vertices.size(); }
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // i < j, lexicographic
};

// Rank test: the facets (trivial and nontrivial) tight at both vertices have normals
// of rank D-2. Indices refer to model.vertices.
bool are_adjacent(const PolyhedronModel& model, int u, int v);
bool are_adjacent(const PolyhedronModel& model, const Point& u, const Point& v);

// Independent oracle: the midpoint of [u,v] admits no representation as a convex
// combination of vertices plus recession rays that puts weight anywhere off {u,v}.
bool adjacent_by_lp(const PolyhedronModel& model, int u, int v);

VertexGraph build_graph(const PolyhedronModel& model);
VertexGraph build_graph_serial(const PolyhedronModel& model);
VertexGraph build_graph_lp(const PolyhedronModel& model);

struct ChainSequence {
    std::vector<Point> points;
    std::vector<MuApplication> ops;
};

enum class ChainStrategy { smallest_first };

// Single op on the smallest h with t(h) > 1 (if any), then pair ops led by the running
// new element with the smallest valid partner, until no op applies. Ends at s0 when
// g0 != 0.
ChainSequence build_chain(const Instance& inst, const Point& t,
                          ChainStrategy strategy = ChainStrategy::smallest_first);
bool chain_is_linked(const ChainSequence& chain);
bool verify_complete_subgraph(const ChainSequence& chain, const VertexGraph& graph);

// BFS diameter; TheoremViolation if the graph is disconnected.
int diameter(const VertexGraph& graph);
std::optional<std::pair<int, int>> non_adjacent_pair(const VertexGraph& graph);

}  // namespace mcp
