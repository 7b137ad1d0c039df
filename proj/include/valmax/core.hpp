#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valmax/lattice.hpp"

namespace valmax {

inline constexpr Coord kDefaultCoordLimit = 1'000'000;

struct Violation {
  std::string axiom;
  std::vector<Point> witnesses;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// The ambient value semigroup, stored by its elements below the conductor.
// Membership of an arbitrary point v: v >= 0 and inf(v, gamma) among the
// small elements. Axioms are checked by validate(), not by the constructor.
class GoodSemigroup {
 public:
  GoodSemigroup(Point gamma, std::vector<Point> small_elements);

  int dim() const { return gamma_.dim(); }
  const Point& conductor() const { return gamma_; }
  const std::vector<Point>& small() const { return small_; }
  bool contains(const Point& v) const;

  bool operator==(const GoodSemigroup&) const = default;

 private:
  Point gamma_;
  std::vector<Point> small_;  // lex sorted, unique, inside [0, gamma]
};

// A good semigroup ideal over an ambient semigroup, stored by its elements
// in the window [mu, gammaE]. Membership: v >= mu and inf(v, gammaE) small.
class GoodIdeal {
 public:
  GoodIdeal(GoodSemigroup ambient, Point mu, Point gammaE, std::vector<Point> small_elements);

  int dim() const { return mu_.dim(); }
  const GoodSemigroup& ambient() const { return ambient_; }
  const Point& min() const { return mu_; }
  const Point& conductor() const { return gammaE_; }
  const std::vector<Point>& small() const { return small_; }
  bool contains(const Point& v) const;

  bool operator==(const GoodIdeal&) const = default;

 private:
  GoodSemigroup ambient_;
  Point mu_, gammaE_;
  std::vector<Point> small_;  // lex sorted, unique, inside [mu, gammaE]
};

GoodIdeal as_ideal(const GoodSemigroup& s);

ValidationReport validate(const GoodSemigroup& s);
ValidationReport validate(const GoodIdeal& e);

// Image of e under the coordinate projection keeping the indices in `keep`,
// assembled as a good ideal over the projected ambient semigroup.
GoodIdeal projection(const GoodIdeal& e, const IndexSet& keep);

// Canonical-form equality; requires matching ambient semigroups.
bool equals(const GoodIdeal& a, const GoodIdeal& b);

bool member_sorted(const std::vector<Point>& sorted, const Point& v);
std::vector<Point> sorted_unique(std::vector<Point> pts);

// Dense membership table over a box.
class WindowGrid {
 public:
  explicit WindowGrid(Box box);
  const Box& box() const { return box_; }
  void set(const Point& v, bool member);
  bool at(const Point& v) const;  // false outside the box
  std::vector<Point> members() const;

 private:
  Box box_;
  std::vector<std::uint8_t> cells_;
};

// Least corner c of the grid box with [c, hi] entirely set; the candidates
// form an upper box for well-formed member sets. Throws when the top corner
// itself is missing.
Point least_full_corner(const WindowGrid& g);

// Assembles a GoodIdeal from the member table: min as mu, least full corner
// as conductor, members below it as small elements. Re-checks that the
// assembled membership rule reproduces the table on the whole box and
// throws with a witness otherwise. The caller validates the result.
GoodIdeal ideal_from_grid(const GoodSemigroup& ambient, const WindowGrid& g);

// Same assembly for an ambient semigroup (expects the zero point among the
// members).
GoodSemigroup semigroup_from_grid(const WindowGrid& g);

}  // namespace valmax
