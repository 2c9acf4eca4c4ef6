#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liepres {

// GMP rationals are kept canonical (positive denominator, reduced, 0 == 0/1)
// by every arithmetic operator; values built from raw numerator/denominator
// pairs must go through make_rational().
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

Rational make_rational(long numerator, long denominator = 1);

// "p/q" with q > 0 in lowest terms, always including the denominator ("2/1").
std::string to_pq_string(const Rational& r);

// "2", "-1/2", "0".
std::string to_compact_string(const Rational& r);

// Accepts "p", "p/q", with optional leading sign. Throws std::invalid_argument
// on malformed input or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

bool is_zero(const RatVector& v);

}  // namespace liepres
