#pragma once

#include "valmax/core.hpp"

// Test-only fixtures and brute-force oracles. The oracles rescan plain
// enumeration windows with the raw predicates and stay independent of the
// bounded-search implementations they cross-check.
namespace valmax::testing {

GoodSemigroup node_semigroup();          // {(0,0)} u ((1,1)+N^2)
GoodSemigroup three_axes_semigroup();    // {0} u (1+N^3)
GoodIdeal canonical_of_three_axes();     // dual of the three-axes semigroup
GoodIdeal node_maximal_ideal();          // (1,1)+N^2 over the node
GoodSemigroup full_plane_semigroup(int p);  // N^p

bool oracle_delta_j_empty(const GoodIdeal& e, const Point& alpha, const IndexSet& j, Coord margin);
bool oracle_delta_empty(const GoodIdeal& e, const Point& alpha, Coord margin);
bool oracle_in_dual(const GoodIdeal& e, const Point& v, Coord margin);

struct OracleMaximals {
  std::vector<Point> maximals, absolute, relative;
};
OracleMaximals oracle_classify(const GoodIdeal& e, Coord margin);

bool oracle_irreducible(const Point& v, const GoodIdeal& e);

}  // namespace valmax::testing
