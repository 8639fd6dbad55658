#pragma once

#include <stdexcept>

namespace mcp {

// Malformed input: dimension mismatch, negative coordinates, wrong group.
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnboundedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed object contradicts a proven property of corner polyhedra; always a bug.
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mcp
