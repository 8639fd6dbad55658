#include "internal.hpp"

#include <algorithm>
#include <string>

namespace mcp {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return;
    cols_ = rows.front().size();
    for (const auto& r : rows) append_row(r);
}

void RationalMatrix::append_row(const RationalVector& row) {
    if (rows_ == 0 && data_.empty()) cols_ = row.size();
    if (row.size() != cols_) throw StructuralError("row length does not match column count");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

void LinearSystem::add_equality(RationalVector coeffs, Rational rhs) {
    equalities.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::add_inequality(RationalVector coeffs, Rational rhs) {
    inequalities.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::validate() const {
    auto check = [&](const std::vector<LinearConstraint>& cs, const char* what) {
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i].coeffs.size() != dimension) {
                throw StructuralError(std::string(what) + " " + std::to_string(i) + " has " +
                                      std::to_string(cs[i].coeffs.size()) +
                                      " coefficients, expected " + std::to_string(dimension));
            }
        }
    };
    check(equalities, "equality");
    check(inequalities, "inequality");
}

namespace {

// In-place row reduction; returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<RationalVector>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && sgn(a[p][c]) == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < a[r].size(); ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return 0;
    std::vector<RationalVector> a = rows;
    std::size_t cols = a.front().size();
    for (const auto& r : a) {
        if (r.size() != cols) throw StructuralError("ragged matrix");
    }
    return row_reduce(a, cols).size();
}

std::size_t rank(const RationalMatrix& m) {
    std::vector<RationalVector> rows(m.rows(), RationalVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    if (m.cols() == 0) return 0;
    return rank(rows);
}

bool satisfies(const LinearSystem& sys, const RationalVector& x) {
    if (x.size() != sys.dimension) return false;
    auto dot = [&](const RationalVector& c) {
        Rational s = 0;
        for (std::size_t j = 0; j < x.size(); ++j) s += c[j] * x[j];
        return s;
    };
    for (const auto& e : sys.equalities)
        if (dot(e.coeffs) != e.rhs) return false;
    for (const auto& e : sys.inequalities)
        if (dot(e.coeffs) < e.rhs) return false;
    return true;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace mcp

namespace mcp::detail {

std::vector<std::size_t> reduce_rows(std::vector<RationalVector>& a, std::size_t cols) {
    return row_reduce(a, cols);
}

}  // namespace mcp::detail
