#include "valmax/duality.hpp"

#include "valmax/maximals.hpp"

namespace valmax {

DualResult dual(const GoodIdeal& e) {
  const int p = e.dim();
  const Point gamma = e.ambient().conductor();
  const Point one = ones(p);

  const Point lo = gamma - e.conductor();
  const Point hi = gamma - e.min();
  WindowGrid grid{Box(lo, hi)};
  for (const Point& v : grid.box()) grid.set(v, delta_empty_all(e, gamma - v - one));

  GoodIdeal d = ideal_from_grid(e.ambient(), grid);
  if (!(d.min() == lo) || !(d.conductor() == hi))
    throw std::runtime_error("dual not a good ideal: corners " + d.min().str() + ", " +
                             d.conductor().str() + " are not the reflections of " + e.conductor().str() +
                             ", " + e.min().str());
  ValidationReport r = validate(d);
  if (!r.ok()) throw std::runtime_error("dual not a good ideal: " + r.summary());
  return DualResult{std::move(d), gamma};
}

GoodIdeal canonical_values(const GoodSemigroup& s) { return dual(as_ideal(s)).dual; }

bool is_symmetric(const GoodSemigroup& s) { return equals(canonical_values(s), as_ideal(s)); }

}  // namespace valmax
