#pragma once

#include <string>
#include <vector>

#include "mcp/exact_geometry.hpp"
#include "mcp/points.hpp"

namespace mcp {

enum class FacetKind { trivial, nontrivial };

// Inequality pi·t >= pi0. Nontrivial facets keep pi0 = 1 internally and carry an
// integer normal form (gcd 1) for reporting; trivial facets are t(position) >= 0.
struct Facet {
    FacetKind kind = FacetKind::nontrivial;
    int position = -1;
    RationalVector pi;
    Rational pi0;
    std::vector<long long> normal;
    long long rhs = 0;

    Rational value(const Point& t) const;
    bool tight(const Point& t) const { return value(t) == pi0; }
    bool operator==(const Facet& o) const;
};

Facet trivial_facet(int dim, int position);
// Scales (pi, pi0) to pi0 = 1 and fills the integer normal form. Requires pi0 > 0.
Facet make_facet(const RationalVector& pi, const Rational& pi0);

bool is_vertex(const Instance& inst, const Point& t, const std::vector<Point>& irreducible);

std::vector<Point> enumerate_vertices(const Instance& inst, const std::vector<Point>& irreducible);
std::vector<Point> enumerate_vertices_serial(const Instance& inst, const std::vector<Point>& irreducible);
std::vector<Point> enumerate_vertices(const Instance& inst);

// The polytope Q of coefficient vectors with pi0 = 1.
LinearSystem subadditive_system(const Instance& inst);
std::vector<Facet> enumerate_nontrivial_facets(const Instance& inst);

// Dimension of the face cut out by f, counting tight vertices and the recession
// rays e_g with pi(g) = 0.
int face_dimension(const Instance& inst, const Facet& f, const std::vector<Point>& vertices);
bool verify_facet_validity(const Instance& inst, const Facet& f, const std::vector<Point>& vertices);

// w with w(g) = t(g) - u(g) for g != h and w(h) = t(h) + 1, where h = sum of u.
// Needs 0 <= u <= t, u != t and total(u) >= 2; for a vertex t this forces t(h) = 0.
Point exchange_point(const Instance& inst, const Point& t, const Point& u);
// As above, and additionally checks that w lies on every nontrivial facet through t.
Point exchange_point(const Instance& inst, const Point& t, const Point& u,
                     const std::vector<Facet>& facets);
bool exchange_relation(const Instance& inst, const Facet& f, const Point& t, const Point& u);

struct PolyhedronModel {
    Instance inst;
    std::vector<Point> irreducible;
    std::vector<Point> vertices;
    std::vector<Facet> facets;  // trivial facets in G+ order, then nontrivial ones
    std::vector<std::vector<bool>> incidence;  // vertex x facet

    int index_of(const Point& t) const;  // -1 if not a vertex
    std::vector<Facet> nontrivial_facets() const;
};

struct ModelOptions {
    bool parallel = true;
    bool facets = true;
};

PolyhedronModel build_model(const Instance& inst, const ModelOptions& opts = {});

}  // namespace mcp
