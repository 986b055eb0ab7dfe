#pragma once

#include "regal/rational.hpp"

#include <optional>
#include <string>

namespace regal {

// Direction of the preference preorder on utility values. Maximize treats
// larger values as better (payoffs), Minimize treats smaller values as
// better (costs).
enum class Preference { Maximize, Minimize };

// x <=ut y: "x is at most as good as y" under the preference.
bool leq_ut(const Rational& x, const Rational& y, Preference pref);

// A payoff expressed as an affine function of the step counter k, with
// optional clamping at zero (truncated subtraction over the naturals).
struct AffineUtility {
  Rational slope{0};
  Rational offset{0};
  bool clamped = false;

  static AffineUtility constant(const Rational& value) { return {Rational{0}, value, false}; }

  // Exact value at counter k >= 0.
  Rational eval(long long k) const;

  // The same payoff as seen after `delta` extra counter steps:
  // k |-> eval(k + delta).
  AffineUtility shifted(long long delta) const;

  bool operator==(const AffineUtility&) const = default;
};

// Canonical text: "2*k - 1", "k + 2", "k", "0", "nat(2*k - 1)".
std::string to_string(const AffineUtility& u);

struct UniformComparison {
  bool holds = false;
  // Smallest k >= from where candidate(k) <=ut reference(k) fails.
  std::optional<long long> first_violation;
};

// Decides whether candidate(k) <=ut reference(k) for every natural k >= from,
// i.e. whether the reference is at least as good as the candidate uniformly
// in the counter. Exact: evaluates up to the last clamp joint and settles the
// tail by the slope difference.
UniformComparison affine_compare_forall(const AffineUtility& candidate,
                                        const AffineUtility& reference,
                                        Preference pref, long long from);

inline bool affine_better_forall(const AffineUtility& candidate,
                                 const AffineUtility& reference,
                                 Preference pref, long long from) {
  return affine_compare_forall(candidate, reference, pref, from).holds;
}

}  // namespace regal
