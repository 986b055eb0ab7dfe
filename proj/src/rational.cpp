#include "regal/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace regal {

long long floor_to_int(const Rational& r) {
  long long num = r.numerator();
  long long den = r.denominator();  // boost keeps den > 0
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    s += '/';
    s += std::to_string(r.denominator());
  }
  return s;
}

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  size_t i = 0;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  auto read_int = [&](long long& out) -> bool {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    out = v;
    return true;
  };
  long long num = 0;
  long long den = 1;
  if (!read_int(num)) return std::nullopt;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!read_int(den) || den == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  if (negative) num = -num;
  return Rational{num, den};
}

}  // namespace regal
