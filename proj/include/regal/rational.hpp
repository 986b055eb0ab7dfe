#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace regal {

// Exact rational arithmetic; all verdicts in this library are exact.
using Rational = boost::rational<long long>;

// Largest integer <= r.
long long floor_to_int(const Rational& r);

// Canonical text: "2", "-7", "1/3", "-5/2".
std::string to_string(const Rational& r);

// Accepts an optional sign, an integer part and an optional "/denominator" part.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace regal
