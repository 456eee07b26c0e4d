#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leontief {

/// Arbitrary-precision rational. GMP keeps mpq values canonical (positive
/// denominator, reduced) after every arithmetic operation; values built from
/// text go through parse_rational, which canonicalizes explicitly.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses `[+-]p` or `[+-]p/q` with ASCII decimal digits and q > 0.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_canonical(const Rational& value);
bool is_integer(const Rational& value);

/// Smallest integer >= value.
Rational ceil(const Rational& value);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

RationalVector zeros(std::size_t size);

}  // namespace leontief
