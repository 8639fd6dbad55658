#pragma once

#include "mcp/exact_geometry.hpp"

namespace mcp::detail {

// Gauss-Jordan elimination over the first `cols` columns; returns pivot columns.
std::vector<std::size_t> reduce_rows(std::vector<RationalVector>& a, std::size_t cols);

}  // namespace mcp::detail
