#pragma once

#include <stdexcept>
#include <string>

namespace altchar {

/// Malformed textual input (partition labels, split tags, CLI arguments).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A result that the mathematics guarantees failed to materialise: a
/// non-integral multiplicity, an irrational residue where an integer must
/// appear, an inner product that is not a non-negative integer.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Input exceeds a configured size guard.
class BoundExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline void ensure(bool condition, const std::string& what) {
    if (!condition) throw InternalError(what);
}

}  // namespace altchar
