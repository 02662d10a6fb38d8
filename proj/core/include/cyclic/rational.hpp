#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cyclic {

/// Exact rational scalar used by every decision path of the library.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses `p/q`, an integer, or a finite decimal such as `-0.25`.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// Comma-separated rational list, e.g. `1,2,10/3`.
RationalVector parse_rational_list(std::string_view text, char separator = ',');
std::string to_string(const RationalVector& values, std::string_view separator = ",");

inline int sign(const Rational& value) { return sgn(value); }

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace cyclic
