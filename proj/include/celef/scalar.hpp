#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace celef {

/// Exact rational coefficient. GMP keeps every value canonical
/// (lowest terms, positive denominator) after each operation.
using Scalar = mpq_class;

/// Coordinate vector over the rationals.
using Coords = std::vector<Scalar>;

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& s);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

bool is_zero(const Coords& v);

}  // namespace celef
