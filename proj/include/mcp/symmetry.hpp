#pragma once

#include <string>
#include <vector>

#include "mcp/group.hpp"
#include "mcp/mu_ops.hpp"
#include "mcp/points.hpp"

namespace mcp {

struct Orbit {
    std::vector<Point> members;  // sorted
    Point representative;        // smallest member
    std::vector<int> multiplicity_type;
    std::size_t support_members = 0;
    bool is_support_orbit = false;  // every member is a support vertex
};

// Nonzero components in descending order.
std::vector<int> multiplicity_type(const Point& t);

// Orbits of `vertices` under t -> t.phi, ordered by representative. `support` lists
// the support vertices in sorted order.
std::vector<Orbit> orbit_partition(const std::vector<Point>& vertices, const std::vector<Automorphism>& stab,
                                   const std::vector<Point>& support);

enum class BasisKind { A, S, AS };
std::string basis_name(BasisKind k);

struct BasisReport {
    BasisKind kind = BasisKind::A;
    std::vector<Point> members;
    std::size_t cardinality = 0;
};

BasisReport compute_basis(BasisKind kind, const std::vector<Point>& vertices, const std::vector<Point>& support,
                          const std::vector<Orbit>& orbits);

// (a) orbits are homogeneous in support status; (b) for every vertex t, op mu and
// phi in stab, the conjugated op maps t.phi to mu(t).phi, so the orbit of t is sent
// onto the orbit of mu(t).
bool verify_orbit_transport(const Instance& inst, const std::vector<Point>& vertices, const std::vector<Orbit>& orbits,
                     const std::vector<Automorphism>& stab, const MuImageMap& map);

// Computes S(G,g0) and S(G,phi(g0)) and checks phi maps one onto the other.
bool verify_support_transport(const Instance& inst, const Automorphism& phi);

}  // namespace mcp
