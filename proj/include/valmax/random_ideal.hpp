#pragma once

#include <cstdint>

#include "valmax/core.hpp"

namespace valmax {

// Deterministic random valid instances for fuzzing. Construction seeds a
// point set, closes it under inf / addition / coordinate raising, then
// shrinks the conductor to a minimal one and validates.
GoodSemigroup random_good_semigroup(std::uint64_t seed, int p, Coord bound);
GoodIdeal random_good_ideal(std::uint64_t seed, int p, Coord bound);

}  // namespace valmax
