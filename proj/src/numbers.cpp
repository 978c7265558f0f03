#include "esz/numbers.hpp"

#include <stdexcept>

namespace esz {

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw bad();
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return Integer(std::string(part));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer num = parse_int(text.substr(0, slash));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw bad();
  return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string rational_to_decimal(const Rational& value, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  Integer num = numerator(value);
  const Integer den = denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  if (num == 0) return "0";

  // Position of the leading digit: largest e with 10^e <= num/den.
  long long exp10 = 0;
  Integer lo = num, hi = den;  // compare num/den with 10^exp10 via lo ? hi
  if (num >= den) {
    while (lo / 10 >= hi) {
      lo /= 10;
      ++exp10;
    }
  } else {
    while (lo < hi) {
      lo *= 10;
      --exp10;
    }
  }

  // digits = round(num/den * 10^(significant - 1 - exp10)), half away from zero.
  const long long shift = significant_digits - 1 - exp10;
  Integer scaled_num = num, scaled_den = den;
  if (shift >= 0)
    scaled_num *= pow(Integer(10), static_cast<unsigned>(shift));
  else
    scaled_den *= pow(Integer(10), static_cast<unsigned>(-shift));
  Integer digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
  std::string ds = digits.str();
  if (static_cast<int>(ds.size()) > significant_digits) {
    // Rounding bumped 99..9 to 100..0.
    ds.resize(static_cast<size_t>(significant_digits));
    ++exp10;
  }

  std::string out = negative ? "-" : "";
  if (exp10 >= 0 && exp10 < 40) {
    if (exp10 + 1 >= static_cast<long long>(ds.size())) {
      out += ds;
      out.append(static_cast<size_t>(exp10 + 1 - ds.size()), '0');
    } else {
      out += ds.substr(0, static_cast<size_t>(exp10 + 1)) + "." + ds.substr(static_cast<size_t>(exp10 + 1));
    }
  } else if (exp10 < 0 && exp10 > -6) {
    out += "0.";
    out.append(static_cast<size_t>(-exp10 - 1), '0');
    out += ds;
  } else {
    out += ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(exp10);
  }
  // Trim trailing zeros in the fractional part.
  if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0x9e3779b97f4a7c15ull * (stream + 1));
  splitmix64(s);
  return splitmix64(s);
}

}  // namespace esz
