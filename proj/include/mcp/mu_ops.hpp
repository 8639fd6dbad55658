#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcp/group.hpp"
#include "mcp/points.hpp"

namespace mcp {

struct ApplicabilityError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Element indices (not G+ positions). f is unused for single ops.
struct MuOp {
    enum class Kind { pair, single };
    Kind kind = Kind::pair;
    int h = 0;
    int f = 0;

    static MuOp pair(int h, int f) { return {Kind::pair, h, f}; }
    static MuOp single(int h) { return {Kind::single, h, 0}; }

    // "mu_{1,4}", "mu_4", "mu_{(0,1),(2,1)}"
    std::string name(const GroupSpec& spec) const;
    auto operator<=>(const MuOp&) const = default;
};

struct MuApplication {
    Point source;
    MuOp op;
    Point result;
    int leading = 0;
    int new_element = 0;
};

bool is_applicable(const Instance& inst, const Point& t, const MuOp& op);
std::vector<MuOp> applicable_ops(const Instance& inst, const Point& t);
MuApplication apply_mu(const Instance& inst, const Point& t, const MuOp& op);

// Entry i lists every mu-application from vertices[i]; each result must be a vertex.
// Vertex lists are expected in canonical (sorted) order.
using MuImageMap = std::vector<std::vector<MuApplication>>;

MuImageMap mu_image_map(const Instance& inst, const std::vector<Point>& vertices);
// Distinct (source index, result index) pairs.
std::vector<std::pair<int, int>> mu_arrows(const std::vector<Point>& vertices, const MuImageMap& map);

std::vector<Point> support_vertices(const std::vector<Point>& vertices, const MuImageMap& map);
std::vector<Point> support_vertices(const Instance& inst, const std::vector<Point>& vertices);

// A mu-application that produces `target` from some other vertex, if any.
std::optional<MuApplication> mu_derivation(const Instance& inst, const std::vector<Point>& vertices,
                                           const Point& target);

MuOp conjugate(const MuOp& op, const Automorphism& phi);
bool verify_commutation(const Instance& inst, const Point& t, const MuOp& op, const Automorphism& phi);

}  // namespace mcp
