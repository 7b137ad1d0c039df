#include "valmax/random_ideal.hpp"

#include <algorithm>
#include <random>

namespace valmax {

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  Coord uniform(Coord lo, Coord hi) {
    return lo + static_cast<Coord>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Per-branch numerical semigroup, members listed up to the conductor.
struct NumSg {
  Coord cond = 0;
  std::vector<Coord> small;  // sorted members of [0, cond]
  bool contains(Coord n) const {
    if (n < 0) return false;
    if (n >= cond) return true;
    return std::binary_search(small.begin(), small.end(), n);
  }
};

// Per-branch numerical semigroup ideal: a finite union of shifted copies.
struct NumIdeal {
  Coord min = 0, cond = 0;
  std::vector<Coord> small;  // sorted members of [min, cond]
  bool contains(Coord n) const {
    if (n < min) return false;
    if (n >= cond) return true;
    return std::binary_search(small.begin(), small.end(), n);
  }
};

NumSg random_numerical_semigroup(Rng& rng, Coord bound) {
  // occasionally a smooth branch; otherwise a semigroup with the gap 1,
  // which keeps the addition closure from collapsing to N
  Coord c = rng.uniform(0, 4) == 0 ? 0 : rng.uniform(2, bound);
  std::vector<char> mem(static_cast<std::size_t>(c) + 1, 0);
  mem[0] = 1;
  mem[static_cast<std::size_t>(c)] = 1;
  for (Coord n = 2; n < c; ++n)
    if (rng.uniform(0, 4) < 2) mem[static_cast<std::size_t>(n)] = 1;

  for (bool changed = true; changed;) {
    changed = false;
    for (Coord a = 1; a < c; ++a) {
      if (!mem[static_cast<std::size_t>(a)]) continue;
      for (Coord b = a; b < c; ++b) {
        if (!mem[static_cast<std::size_t>(b)]) continue;
        const Coord n = a + b;
        if (n < c && !mem[static_cast<std::size_t>(n)]) {
          mem[static_cast<std::size_t>(n)] = 1;
          changed = true;
        }
      }
    }
  }
  while (c >= 1 && mem[static_cast<std::size_t>(c - 1)]) --c;

  NumSg s;
  s.cond = c;
  for (Coord n = 0; n <= c; ++n)
    if (n == c || mem[static_cast<std::size_t>(n)]) s.small.push_back(n);
  return s;
}

NumIdeal random_numerical_ideal(Rng& rng, const NumSg& s, Coord bound) {
  const Coord top_shift = bound - s.cond;  // keeps the conductor within bound
  const Coord base = rng.uniform(-2, std::min<Coord>(2, top_shift));
  const int k = static_cast<int>(rng.uniform(1, 3));
  std::vector<Coord> shifts{base};
  for (int j = 1; j < k; ++j) shifts.push_back(rng.uniform(base, top_shift));

  NumIdeal ideal;
  ideal.min = *std::min_element(shifts.begin(), shifts.end());
  Coord upper = shifts[0] + s.cond;
  for (Coord a : shifts) upper = std::min(upper, a + s.cond);

  auto member = [&](Coord n) {
    for (Coord a : shifts)
      if (s.contains(n - a)) return true;
    return false;
  };
  Coord c = upper;
  while (c > ideal.min && member(c - 1)) --c;
  ideal.cond = c;
  for (Coord n = ideal.min; n <= c; ++n)
    if (n == c || member(n)) ideal.small.push_back(n);
  return ideal;
}

void require_params(int p, Coord bound) {
  if (p < 2 || p > 4) throw std::invalid_argument("random instance: p must be in [2, 4]");
  if (bound < 2 || bound > 8) throw std::invalid_argument("random instance: bound must be in [2, 8]");
}

std::uint64_t mix(std::uint64_t seed, int p, Coord bound) {
  return seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(p) * 1000003ull +
         static_cast<std::uint64_t>(bound);
}

// Value semigroups of local rings lie in {0} u (1 + N^p): the generator
// emits the local part of a product of per-branch numerical semigroups,
// which satisfies every axiom by construction.
GoodSemigroup build_semigroup(Rng& rng, int p, Coord bound) {
  std::vector<NumSg> branches;
  for (int i = 0; i < p; ++i) branches.push_back(random_numerical_semigroup(rng, bound));

  Point gamma = ones(p);
  for (int i = 0; i < p; ++i) gamma[i] = std::max<Coord>(branches[static_cast<std::size_t>(i)].cond, 1);

  std::vector<Point> small{zeros(p)};
  for (const Point& v : Box(ones(p), gamma)) {
    bool in = true;
    for (int i = 0; i < p && in; ++i) in = branches[static_cast<std::size_t>(i)].contains(v[i]);
    if (in) small.push_back(v);
  }
  GoodSemigroup s(gamma, std::move(small));
  ValidationReport r = validate(s);
  if (!r.ok())
    throw std::runtime_error("random semigroup: generation failed, retry with new seed (" + r.summary() + ")");
  return s;
}

}  // namespace

GoodSemigroup random_good_semigroup(std::uint64_t seed, int p, Coord bound) {
  require_params(p, bound);
  Rng rng(mix(seed, p, bound));
  return build_semigroup(rng, p, bound);
}

GoodIdeal random_good_ideal(std::uint64_t seed, int p, Coord bound) {
  require_params(p, bound);
  Rng rng(mix(seed, p, bound));

  std::vector<NumSg> branches;
  for (int i = 0; i < p; ++i) branches.push_back(random_numerical_semigroup(rng, bound));

  Point gamma = ones(p);
  for (int i = 0; i < p; ++i) gamma[i] = std::max<Coord>(branches[static_cast<std::size_t>(i)].cond, 1);
  std::vector<Point> sg_small{zeros(p)};
  for (const Point& v : Box(ones(p), gamma)) {
    bool in = true;
    for (int i = 0; i < p && in; ++i) in = branches[static_cast<std::size_t>(i)].contains(v[i]);
    if (in) sg_small.push_back(v);
  }
  GoodSemigroup ambient(gamma, std::move(sg_small));

  std::vector<NumIdeal> parts;
  Point mu = zeros(p), gammaE = zeros(p);
  for (int i = 0; i < p; ++i) {
    parts.push_back(random_numerical_ideal(rng, branches[static_cast<std::size_t>(i)], bound));
    mu[i] = parts.back().min;
    gammaE[i] = parts.back().cond;
  }
  std::vector<Point> small;
  for (const Point& v : Box(mu, gammaE)) {
    bool in = true;
    for (int i = 0; i < p && in; ++i) in = parts[static_cast<std::size_t>(i)].contains(v[i]);
    if (in) small.push_back(v);
  }

  GoodIdeal e(std::move(ambient), mu, gammaE, std::move(small));
  ValidationReport r = validate(e);
  if (!r.ok())
    throw std::runtime_error("random ideal: generation failed, retry with new seed (" + r.summary() + ")");
  return e;
}

}  // namespace valmax
