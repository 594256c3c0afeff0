#pragma once

#include "fockbench/semiclassics.hpp"

namespace fockbench {

// Structural invariant battery over the whole stack: commutation relations
// on the safe subspace, projector laws, trace duality in both directions,
// Hermiticity/positivity of the constructed states, transform round-trips,
// and bitwise determinism of the seeded paths. Returned as a scenario
// report (verdicts only, no tables) so the standard writers apply.
ScenarioReport core_verification(unsigned long long seed);

}  // namespace fockbench
