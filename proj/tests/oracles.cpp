#include "oracles.hpp"

#include <algorithm>

namespace valmax::testing {

GoodSemigroup node_semigroup() { return GoodSemigroup({1, 1}, {{0, 0}, {1, 1}}); }

GoodSemigroup three_axes_semigroup() { return GoodSemigroup({1, 1, 1}, {{0, 0, 0}, {1, 1, 1}}); }

GoodIdeal canonical_of_three_axes() {
  return GoodIdeal(three_axes_semigroup(), {0, 0, 0}, {1, 1, 1},
                   {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
}

GoodIdeal node_maximal_ideal() { return GoodIdeal(node_semigroup(), {1, 1}, {1, 1}, {{1, 1}}); }

GoodSemigroup full_plane_semigroup(int p) { return GoodSemigroup(zeros(p), {zeros(p)}); }

bool oracle_delta_j_empty(const GoodIdeal& e, const Point& alpha, const IndexSet& j, Coord margin) {
  const int p = e.dim();
  Box window(alpha, sup(e.conductor(), alpha + ones(p)) + constant(p, margin));
  for (const Point& v : window) {
    if (in_delta_j(v, alpha, j) && e.contains(v)) return false;
  }
  return true;
}

bool oracle_delta_empty(const GoodIdeal& e, const Point& alpha, Coord margin) {
  for (int i = 0; i < e.dim(); ++i)
    if (!oracle_delta_j_empty(e, alpha, IndexSet::single(e.dim(), i), margin)) return false;
  return true;
}

bool oracle_in_dual(const GoodIdeal& e, const Point& v, Coord margin) {
  const Point gamma = e.ambient().conductor();
  return oracle_delta_empty(e, gamma - v - ones(e.dim()), margin);
}

OracleMaximals oracle_classify(const GoodIdeal& e, Coord margin) {
  OracleMaximals out;
  const int p = e.dim();
  for (const Point& alpha : Box(e.min(), e.conductor() + constant(p, margin))) {
    if (!e.contains(alpha)) continue;
    if (!oracle_delta_empty(e, alpha, margin)) continue;
    out.maximals.push_back(alpha);
    bool absolute = true;
    bool relative = true;
    for (std::uint32_t bits = 1; bits + 1 < (1u << p); ++bits) {
      IndexSet j = IndexSet::of_bits(p, bits);
      const bool empty = oracle_delta_j_empty(e, alpha, j, margin);
      if (!empty) absolute = false;
      if (j.size() >= 2 && empty) relative = false;
    }
    if (absolute) out.absolute.push_back(alpha);
    if (relative) out.relative.push_back(alpha);
  }
  return out;
}

bool oracle_irreducible(const Point& v, const GoodIdeal& e) {
  const GoodSemigroup& s = e.ambient();
  for (const Point& a : Box(zeros(e.dim()), v - e.min())) {
    if (a == zeros(e.dim())) continue;
    if (s.contains(a) && e.contains(v - a)) return false;
  }
  return true;
}

}  // namespace valmax::testing
