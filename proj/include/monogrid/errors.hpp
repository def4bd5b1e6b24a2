#pragma once

#include <stdexcept>
#include <string>

namespace monogrid {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A requested structure would exceed a configured size bound.
struct capacity_error : error {
    using error::error;
};

/// Operands disagree on variable count or degree.
struct shape_error : error {
    using error::error;
};

struct index_error : error {
    using error::error;
};

/// A VertexSet was used with a graph it was not built for.
struct identity_error : error {
    using error::error;
};

/// An argument lies outside the domain where an operation is defined.
struct domain_error : error {
    using error::error;
};

struct format_error : error {
    using error::error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct validation_error : error {
    using error::error;
};

struct cache_error : error {
    using error::error;
};

/// Bad command-line or request arguments.
struct usage_error : error {
    using error::error;
};

} // namespace monogrid
