#pragma once

#include "valmax/core.hpp"

namespace valmax {

struct DualResult {
  GoodIdeal dual;
  Point gamma_used;  // conductor of the ambient semigroup
};

// The dual value set {v : no member of e sits on the reflection gamma-v-1}.
// Scanned on [gamma - conductor(e), gamma - min(e)]; points below are never
// dual members and points at or above the top corner always are. The result
// is validated and its corners are checked against the reflection of e's
// corners before returning.
DualResult dual(const GoodIdeal& e);

// Dual of the semigroup viewed as an ideal over itself.
GoodIdeal canonical_values(const GoodSemigroup& s);

// Whether the semigroup equals its own canonical value set.
bool is_symmetric(const GoodSemigroup& s);

}  // namespace valmax
