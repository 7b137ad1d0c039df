#include "valmax/core.hpp"

#include <algorithm>
#include <functional>

namespace valmax {

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::string s;
  for (const Violation& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.axiom;
    if (!v.witnesses.empty()) {
      s += " at ";
      for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
        if (i) s += ",";
        s += v.witnesses[i].str();
      }
    }
  }
  return s;
}

std::vector<Point> sorted_unique(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool member_sorted(const std::vector<Point>& sorted, const Point& v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v, LexLess{});
  return it != sorted.end() && *it == v;
}

GoodSemigroup::GoodSemigroup(Point gamma, std::vector<Point> small_elements)
    : gamma_(std::move(gamma)), small_(sorted_unique(std::move(small_elements))) {
  if (gamma_.dim() < 1) throw std::invalid_argument("semigroup dimension must be positive");
  if (small_.empty()) throw std::invalid_argument("semigroup needs at least one small element");
  for (const Point& v : small_) require_same_dim(v, gamma_, "semigroup small element");
}

bool GoodSemigroup::contains(const Point& v) const {
  require_same_dim(v, gamma_, "semigroup membership");
  for (int i = 0; i < dim(); ++i)
    if (v[i] < 0) return false;
  return member_sorted(small_, inf(v, gamma_));
}

GoodIdeal::GoodIdeal(GoodSemigroup ambient, Point mu, Point gammaE, std::vector<Point> small_elements)
    : ambient_(std::move(ambient)),
      mu_(std::move(mu)),
      gammaE_(std::move(gammaE)),
      small_(sorted_unique(std::move(small_elements))) {
  require_same_dim(mu_, ambient_.conductor(), "ideal over ambient");
  require_same_dim(mu_, gammaE_, "ideal corners");
  if (small_.empty()) throw std::invalid_argument("ideal needs at least one small element");
  for (const Point& v : small_) require_same_dim(v, mu_, "ideal small element");
}

bool GoodIdeal::contains(const Point& v) const {
  require_same_dim(v, mu_, "ideal membership");
  if (!leq(mu_, v)) return false;
  return member_sorted(small_, inf(v, gammaE_));
}

GoodIdeal as_ideal(const GoodSemigroup& s) {
  return GoodIdeal(s, zeros(s.dim()), s.conductor(), s.small());
}

namespace {

// Membership rule with a dense cache over [min, conductor + 1]; the witness
// searches below stay inside that box.
class CachedMembership {
 public:
  explicit CachedMembership(const GoodIdeal& e)
      : e_(e), box_(e.min(), sup(e.conductor(), e.min()) + ones(e.dim())), cells_(box_.size(), 0) {
    for (const Point& v : box_) cells_[box_.index_of(v)] = e.contains(v) ? 1 : 0;
  }
  bool operator()(const Point& v) const {
    if (box_.contains(v)) return cells_[box_.index_of(v)] != 0;
    return e_.contains(v);
  }

 private:
  const GoodIdeal& e_;
  Box box_;
  std::vector<std::uint8_t> cells_;
};

// Bounded witness search for the coordinate-raising property on the pair
// (a, b) sharing coordinate i. A witness must raise coordinate i above the
// common value, sit exactly at min(a_j, b_j) where a and b differ, and stay
// at or above the common value elsewhere. Any witness in the ideal can be
// clamped into [inf(a,b), sup(gammaE, a+1, b+1)], so the search is complete
// for inf-closed sets.
bool raising_witness_exists(const CachedMembership& member, const Point& cond, const Point& a,
                            const Point& b, int i) {
  const int p = a.dim();
  Point lo = inf(a, b);
  Point hi = sup(cond, sup(a + ones(p), b + ones(p)));
  for (int j = 0; j < p; ++j) {
    if (j == i) {
      lo[j] = a[j] + 1;
    } else if (a[j] != b[j]) {
      hi[j] = lo[j];
    } else {
      lo[j] = a[j];
    }
  }
  return any_point_desc(Box(lo, hi), [&](const Point& cand) { return member(cand); });
}

void push(ValidationReport& r, std::string axiom, std::vector<Point> witnesses, std::string detail) {
  r.violations.push_back(Violation{std::move(axiom), std::move(witnesses), std::move(detail)});
}

// Axioms shared between ideals and semigroups (a semigroup is checked as an
// ideal over itself). One witness per violated axiom.
void check_ideal_axioms(const GoodIdeal& e, const std::string& prefix, const char* action_axiom,
                        ValidationReport& r) {
  const auto& sm = e.small();
  const int p = e.dim();

  if (!leq(e.min(), e.conductor())) {
    push(r, prefix + "window", {e.min(), e.conductor()}, "min does not precede the conductor");
    return;
  }
  for (const Point& v : sm) {
    if (!leq(e.min(), v) || !leq(v, e.conductor())) {
      push(r, prefix + "window", {v}, "small element outside [min, conductor]");
      break;
    }
  }
  const CachedMembership member(e);

  if (!member_sorted(sm, e.min()))
    push(r, prefix + "min-element", {e.min()}, "min is not among the small elements");
  Point cmin = sm.front();
  for (const Point& v : sm) cmin = inf(cmin, v);
  if (!(cmin == e.min()))
    push(r, prefix + "min-coordinates", {cmin}, "componentwise min of small elements differs from min");
  if (!member_sorted(sm, e.conductor()))
    push(r, prefix + "conductor-element", {e.conductor()}, "conductor is not among the small elements");

  bool done = false;
  for (std::size_t i = 0; i < sm.size() && !done; ++i) {
    for (std::size_t j = i + 1; j < sm.size() && !done; ++j) {
      Point w = inf(sm[i], sm[j]);
      if (!member_sorted(sm, w)) {
        push(r, prefix + "inf-closure", {sm[i], sm[j], w}, "inf of two members is missing");
        done = true;
      }
    }
  }

  done = false;
  for (std::size_t i = 0; i < sm.size() && !done; ++i) {
    for (std::size_t j = i + 1; j < sm.size() && !done; ++j) {
      const Point &a = sm[i], &b = sm[j];
      for (int k = 0; k < p && !done; ++k) {
        if (a[k] != b[k]) continue;
        if (!raising_witness_exists(member, e.conductor(), a, b, k)) {
          push(r, prefix + "coordinate-raising", {a, b},
               "no member raises coordinate " + std::to_string(k + 1) + " above the shared value");
          done = true;
        }
      }
    }
  }

  done = false;
  for (const Point& s : e.ambient().small()) {
    for (const Point& v : sm) {
      if (!member(s + v)) {
        push(r, prefix + action_axiom, {s, v, s + v}, "sum of ambient element and member is missing");
        done = true;
        break;
      }
    }
    if (done) break;
  }

  for (int i = 0; i < p; ++i) {
    Point q = e.conductor() - unit(p, i);
    if (leq(e.min(), q) && member_sorted(sm, q)) {
      push(r, prefix + "conductor-minimality", {q}, "conductor is not minimal");
      break;
    }
  }
}

}  // namespace

ValidationReport validate(const GoodSemigroup& s) {
  ValidationReport r;
  const int p = s.dim();
  if (!member_sorted(s.small(), zeros(p)))
    push(r, "zero-element", {zeros(p)}, "the zero point is not among the small elements");
  for (const Point& v : s.small()) {
    bool neg = false;
    for (int i = 0; i < p; ++i) neg = neg || v[i] < 0;
    if (neg) {
      push(r, "nonnegative", {v}, "small element with a negative coordinate");
      break;
    }
  }
  check_ideal_axioms(as_ideal(s), "", "addition-closure", r);
  return r;
}

ValidationReport validate(const GoodIdeal& e) {
  ValidationReport r;
  ValidationReport ambient = validate(e.ambient());
  for (Violation& v : ambient.violations) {
    v.axiom = "ambient-" + v.axiom;
    r.violations.push_back(std::move(v));
  }
  check_ideal_axioms(e, "", "semigroup-action", r);
  return r;
}

bool equals(const GoodIdeal& a, const GoodIdeal& b) {
  if (a.dim() != b.dim() || !(a.ambient() == b.ambient()))
    throw std::invalid_argument("equals: ambient semigroups differ");
  return a.min() == b.min() && a.conductor() == b.conductor() && a.small() == b.small();
}

WindowGrid::WindowGrid(Box box) : box_(std::move(box)), cells_(box_.size(), 0) {}

void WindowGrid::set(const Point& v, bool member) {
  cells_[box_.index_of(v)] = member ? 1 : 0;
}

bool WindowGrid::at(const Point& v) const {
  if (!box_.contains(v)) return false;
  return cells_[box_.index_of(v)] != 0;
}

std::vector<Point> WindowGrid::members() const {
  std::vector<Point> out;
  for (const Point& v : box_)
    if (cells_[box_.index_of(v)]) out.push_back(v);
  return out;
}

Point least_full_corner(const WindowGrid& g) {
  const Box& b = g.box();
  const int p = b.dim();
  const std::uint64_t n = b.size();
  if (!g.at(b.hi())) throw std::runtime_error("window top corner is not a member");
  std::vector<std::uint8_t> allin(n, 0);
  bool have_min = false;
  Point cmin = b.hi();
  std::uint64_t first_idx = 0;
  for (std::uint64_t k = n; k-- > 0;) {
    Point v = b.point_at(k);
    if (!g.at(v)) continue;
    bool full = true;
    for (int i = 0; i < p && full; ++i) {
      if (v[i] < b.hi()[i]) {
        Point w = v;
        ++w[i];
        full = allin[b.index_of(w)] != 0;
      }
    }
    if (!full) continue;
    allin[k] = 1;
    cmin = have_min ? inf(cmin, v) : v;
    have_min = true;
    first_idx = k;
  }
  if (allin[b.index_of(cmin)]) return cmin;
  return b.point_at(first_idx);
}

namespace {

struct Assembly {
  Point mu, cond;
  std::vector<Point> small;
};

Assembly assemble(const WindowGrid& g, const char* what) {
  std::vector<Point> members = g.members();
  if (members.empty()) throw std::runtime_error(std::string(what) + ": no members in window");
  Point mu = members.front();
  for (const Point& v : members) mu = inf(mu, v);
  Point cond = least_full_corner(g);
  std::vector<Point> small;
  for (const Point& v : members)
    if (leq(v, cond)) small.push_back(v);
  return Assembly{mu, cond, std::move(small)};
}

template <class Rule>
void check_fidelity(const WindowGrid& g, const Rule& rule, const char* what) {
  for (const Point& v : g.box()) {
    if (rule(v) != g.at(v))
      throw std::runtime_error(std::string(what) +
                               ": window members are not determined by their small elements; "
                               "first mismatch at " +
                               v.str());
  }
}

}  // namespace

GoodIdeal ideal_from_grid(const GoodSemigroup& ambient, const WindowGrid& g) {
  Assembly a = assemble(g, "ideal assembly");
  GoodIdeal e(ambient, a.mu, a.cond, std::move(a.small));
  check_fidelity(g, [&](const Point& v) { return e.contains(v); }, "ideal assembly");
  return e;
}

GoodSemigroup semigroup_from_grid(const WindowGrid& g) {
  Assembly a = assemble(g, "semigroup assembly");
  GoodSemigroup s(a.cond, std::move(a.small));
  check_fidelity(g, [&](const Point& v) { return s.contains(v); }, "semigroup assembly");
  return s;
}

namespace {

Point project_point(const Point& v, const std::vector<int>& kept) {
  std::vector<Coord> c;
  c.reserve(kept.size());
  for (int i : kept) c.push_back(v[i]);
  return Point(std::move(c));
}

WindowGrid project_members(const GoodIdeal& e, const IndexSet& keep) {
  const std::vector<int> kept = keep.indices();
  const std::vector<int> free = keep.complement().indices();
  Box window(project_point(e.min(), kept), project_point(e.conductor(), kept));
  WindowGrid g(window);

  std::vector<Coord> flo, fhi;
  for (int i : free) {
    flo.push_back(e.min()[i]);
    fhi.push_back(e.conductor()[i]);
  }
  const Box lifts{Point(flo), Point(fhi)};

  Point full = e.min();
  for (const Point& w : window) {
    for (std::size_t k = 0; k < kept.size(); ++k) full[kept[k]] = w[static_cast<int>(k)];
    const bool found = any_point_desc(lifts, [&](const Point& f) {
      for (std::size_t k = 0; k < free.size(); ++k) full[free[k]] = f[static_cast<int>(k)];
      return e.contains(full);
    });
    g.set(w, found);
  }
  return g;
}

}  // namespace

GoodIdeal projection(const GoodIdeal& e, const IndexSet& keep) {
  if (keep.dim() != e.dim()) throw std::invalid_argument("projection: index set dimension mismatch");
  if (keep.empty()) throw std::invalid_argument("projection onto the empty index set is undefined");
  if (keep.is_full()) return e;
  GoodSemigroup ambient = semigroup_from_grid(project_members(as_ideal(e.ambient()), keep));
  return ideal_from_grid(ambient, project_members(e, keep));
}

}  // namespace valmax
