#pragma once

#include "regal/game.hpp"

namespace regal {

// Largest relation equating nodes with the same observable labels and
// pairwise related children: leaves match iff per-agent coefficient-equal,
// internal nodes iff same agent and equal edge deltas. Computed by pair
// exploration on the finite product graph (a mismatch refutes, a revisit is
// the coinductive step). Throws ModelError("incomparable models") when the
// agent sets or preferences differ.
bool bisimilar(const GameGraph& a, const GameGraph& b);

// Profile variant: additionally requires equal choices.
bool bisimilar(const ProfileGraph& a, const ProfileGraph& b);

}  // namespace regal
