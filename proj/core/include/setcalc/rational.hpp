#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace setcalc {

/// Exact rational scalar. All core computations run on these; no floating
/// point enters any pricing or arbitrage decision.
using Rational = mpq_class;

/// Dense rational vector.
using Vec = std::vector<Rational>;

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational rat_parse(const std::string& s);

/// Canonical serialization: "p" for integers, "p/q" otherwise, q > 0,
/// gcd(p,q)=1. Round-trips bit-exactly through rat_parse.
std::string rat_str(const Rational& r);

/// Non-authoritative decimal rendering for human consumption.
std::string rat_decimal(const Rational& r, int digits = 6);

inline Rational rat_int(long v) { return Rational(v); }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::string vec_str(const Vec& v);

}  // namespace setcalc
