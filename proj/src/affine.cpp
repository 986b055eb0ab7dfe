#include "regal/affine.hpp"

#include <algorithm>

namespace regal {

bool leq_ut(const Rational& x, const Rational& y, Preference pref) {
  return pref == Preference::Maximize ? x <= y : x >= y;
}

Rational AffineUtility::eval(long long k) const {
  Rational v = slope * Rational{k} + offset;
  if (clamped && v < Rational{0}) return Rational{0};
  return v;
}

AffineUtility AffineUtility::shifted(long long delta) const {
  return {slope, offset + slope * Rational{delta}, clamped};
}

std::string to_string(const AffineUtility& u) {
  std::string core;
  if (u.slope == Rational{0}) {
    core = to_string(u.offset);
  } else {
    if (u.slope == Rational{1})
      core = "k";
    else
      core = to_string(u.slope) + "*k";
    if (u.offset > Rational{0})
      core += " + " + to_string(u.offset);
    else if (u.offset < Rational{0})
      core += " - " + to_string(-u.offset);
  }
  if (u.clamped) return "nat(" + core + ")";
  return core;
}

namespace {

// First k at which a clamped side has settled: past it the value is a plain
// affine function (either the unclamped line or constant zero).
long long clamp_joint(const AffineUtility& u, long long from) {
  if (!u.clamped || u.slope == Rational{0}) return from;
  // smallest natural k with slope*k + offset on the "settled" side of zero
  Rational crossing = -u.offset / u.slope;
  long long k = floor_to_int(crossing) + 1;  // strictly past the crossing
  return std::max(from, std::max(k, 0LL));
}

// The affine function the side follows for k >= joint.
AffineUtility settled_form(const AffineUtility& u, long long joint) {
  if (!u.clamped) return {u.slope, u.offset, false};
  if (u.slope == Rational{0}) return AffineUtility::constant(std::max(u.offset, Rational{0}));
  if (u.eval(joint) == Rational{0} && u.slope < Rational{0}) return AffineUtility::constant(Rational{0});
  return {u.slope, u.offset, false};
}

}  // namespace

UniformComparison affine_compare_forall(const AffineUtility& candidate,
                                        const AffineUtility& reference,
                                        Preference pref, long long from) {
  const long long joint = std::max(clamp_joint(candidate, from), clamp_joint(reference, from));
  for (long long k = from; k <= joint + 1; ++k) {
    if (!leq_ut(candidate.eval(k), reference.eval(k), pref)) return {false, k};
  }
  // Past the joint both sides are plain affine: the condition keeps holding
  // iff the margin's slope does not run against the preference.
  const AffineUtility c = settled_form(candidate, joint + 1);
  const AffineUtility r = settled_form(reference, joint + 1);
  const Rational margin_slope =
      pref == Preference::Maximize ? r.slope - c.slope : c.slope - r.slope;
  if (margin_slope >= Rational{0}) return {true, std::nullopt};
  // margin(k) = margin0 + margin_slope * (k - (joint+1)) drops below zero at
  // the first k with (k - (joint+1)) > margin0 / -margin_slope.
  const Rational margin0 = pref == Preference::Maximize
                               ? r.eval(joint + 1) - c.eval(joint + 1)
                               : c.eval(joint + 1) - r.eval(joint + 1);
  const long long steps = floor_to_int(margin0 / -margin_slope) + 1;
  return {false, joint + 1 + steps};
}

}  // namespace regal
