#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace esz {

// All coordinate and bound arithmetic is exact. No floating point is used in
// any predicate; doubles appear only in report cosmetics.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Integer& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

// Accepts "p", "-p", "p/q" with an arbitrary-precision integer p and a
// positive integer q. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0 and
// gcd(|p|, q) = 1. This is the interchange encoding used by files and JSON.
std::string rational_to_string(const Rational& value);

// Decimal expansion with the given number of significant digits, round half
// away from zero. Used by the bounds CSV output.
std::string rational_to_decimal(const Rational& value, int significant_digits);

// 64-bit FNV-1a, used as the content digest in reports.
std::uint64_t fnv1a64(std::string_view data);

// SplitMix64 step; the deterministic seed-derivation primitive for all
// randomized operations (per-instance and per-trial seeds).
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace esz
