#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcp/errors.hpp"
#include "mcp/group.hpp"

namespace mcp {

// Nonnegative integer vector over G+ in canonical order.
using Point = std::vector<int>;

struct Instance {
    GroupSpec spec;
    int g0 = 0;  // element index

    int dim() const { return spec.nonzero_count(); }
    // "6,3" or "4x2,(3,0)"
    std::string name() const;
    bool operator==(const Instance& o) const { return spec == o.spec && g0 == o.g0; }
};

Instance make_instance(const GroupSpec& spec, const GroupElement& g0);
Instance parse_instance(const std::string& group, const std::string& g0);

// Unit vector at g0; the vertex s0. Requires g0 != 0.
Point unit_point(const Instance& inst, int element);

int group_sum(const GroupSpec& spec, const Point& t);
int total(const Point& t);
std::vector<int> support_set(const Point& t);  // G+ positions with t > 0

bool is_solution(const Instance& inst, const Point& t);

// Two distinct sub-vectors 0 <= r, s <= t with equal group sums, or nothing if t is
// irreducible. For g0 = 0 the pair (0, t) does not count.
std::optional<std::pair<Point, Point>> reducibility_witness(const Instance& inst, const Point& t);
bool is_irreducible(const Instance& inst, const Point& t);

// Integer w != 0, -t <= w <= t, with group sum 0 such that t -+ w are solutions.
std::optional<Point> midpoint_witness(const Instance& inst, const Point& t);
bool is_midpoint_of_solutions(const Instance& inst, const Point& t);

// All solutions with total multiplicity <= max_total, lexicographically ordered.
std::vector<Point> enumerate_solutions(const Instance& inst, int max_total);

std::vector<Point> enumerate_irreducible_points(const Instance& inst);
std::vector<Point> enumerate_irreducible_points_serial(const Instance& inst);

}  // namespace mcp
