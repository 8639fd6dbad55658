#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "mcp/errors.hpp"

namespace mcp {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    explicit RationalMatrix(const std::vector<RationalVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const RationalVector& row);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct LinearConstraint {
    RationalVector coeffs;
    Rational rhs;
};

// Equalities read coeffs·x = rhs, inequalities coeffs·x >= rhs. Variables are free
// unless an inequality bounds them.
struct LinearSystem {
    std::size_t dimension = 0;
    std::vector<LinearConstraint> equalities;
    std::vector<LinearConstraint> inequalities;

    void add_equality(RationalVector coeffs, Rational rhs);
    void add_inequality(RationalVector coeffs, Rational rhs);
    void validate() const;
};

struct LpVerdict {
    bool feasible = false;
    RationalVector witness;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational value;
    RationalVector point;
};

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const std::vector<RationalVector>& rows);

bool satisfies(const LinearSystem& sys, const RationalVector& x);

LpVerdict lp_feasible(const LinearSystem& sys);

// Minimise objective·x over the system.
LpSolution lp_minimize(const LinearSystem& sys, const RationalVector& objective);

struct PolyhedronVRep {
    std::vector<RationalVector> vertices;
    std::vector<RationalVector> rays;  // primitive integer directions
};

// Double description of a pointed polyhedron; throws UnboundedError when the
// feasible region contains a line.
PolyhedronVRep double_description(const LinearSystem& sys);

// Vertices of a bounded region in lexicographic order.
std::vector<RationalVector> enumerate_polytope_vertices(const LinearSystem& sys);

bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace mcp
