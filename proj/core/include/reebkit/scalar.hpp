#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reebkit {

/// Exact rational number. GMP keeps every result in canonical form
/// (reduced, positive denominator).
using Scalar = mpq_class;

/// Parses "p/q", an integer, or a plain decimal such as "-0.125".
/// Throws std::invalid_argument on malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Scalar& value);

/// Sorted, duplicate-free copy.
std::vector<Scalar> sorted_unique(std::vector<Scalar> values);

inline Scalar abs(const Scalar& value) { return value < 0 ? Scalar(-value) : value; }

}  // namespace reebkit
