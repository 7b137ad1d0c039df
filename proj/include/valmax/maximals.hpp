#pragma once

#include <cstddef>
#include <vector>

#include "valmax/core.hpp"

namespace valmax {

// True iff no member of e agrees with alpha exactly on j while exceeding it
// elsewhere. Decided by a bounded scan of [alpha, sup(conductor, alpha+1)];
// any member of the delta set clamps into that box.
bool delta_empty(const GoodIdeal& e, const Point& alpha, const IndexSet& j);

// Delta set over all single coordinates.
bool delta_empty_all(const GoodIdeal& e, const Point& alpha);

struct MaximalsReport {
  std::vector<Point> maximals;  // members with empty delta set
  std::vector<Point> absolute;  // every proper nonempty index set empty
  std::vector<Point> relative;  // maximal and every |J| >= 2 nonempty
};

MaximalsReport classify_maximals(const GoodIdeal& e);

// Sufficient criterion: delta at i empty while every delta at {i, j} is
// nonempty. When true, alpha is a relative maximal (and in particular a
// member) even if membership was not known beforehand.
bool is_relative_maximal_by_criterion(const GoodIdeal& e, const Point& alpha, int i);

struct SymmetryPair {
  Point alpha, beta;
  bool alpha_relative = false;
  bool beta_absolute = false;
  bool holds() const { return alpha_relative == beta_absolute; }
};

struct SymmetryReport {
  std::vector<SymmetryPair> pairs;      // alpha in E with reflection in the dual
  std::size_t skipped = 0;              // members whose reflection misses the dual
  std::vector<Point> lemma_violations;  // reflection of a fully raisable member
                                        // fails to have all proper deltas empty
  bool all_hold() const;
};

// Checks, pair by pair, that reflections of relative maximals are exactly
// the absolute maximals of the dual, plus the one-sided reflection lemma.
SymmetryReport symmetry_check(const GoodIdeal& e);

// Relative maximals obtained by reflecting the absolute maximals of the
// dual; contracted to equal classify_maximals(e).relative.
std::vector<Point> relmax_from_dual(const GoodIdeal& e);

}  // namespace valmax
