#include "valmax/maximals.hpp"

#include <algorithm>

#include "valmax/duality.hpp"

namespace valmax {

bool delta_empty(const GoodIdeal& e, const Point& alpha, const IndexSet& j) {
  require_same_dim(alpha, e.min(), "delta search");
  if (j.dim() != e.dim()) throw std::invalid_argument("delta search: index set dimension mismatch");
  if (j.empty()) throw std::invalid_argument("delta search over the empty index set is undefined");
  const int p = e.dim();
  Point lo = alpha;
  Point hi = sup(e.conductor(), alpha + ones(p));
  for (int i = 0; i < p; ++i) {
    if (j.contains(i))
      hi[i] = alpha[i];
    else
      lo[i] = alpha[i] + 1;
  }
  return !any_point_desc(Box(lo, hi), [&](const Point& v) { return e.contains(v); });
}

bool delta_empty_all(const GoodIdeal& e, const Point& alpha) {
  for (int i = 0; i < e.dim(); ++i)
    if (!delta_empty(e, alpha, IndexSet::single(e.dim(), i))) return false;
  return true;
}

namespace {

// Proper nonempty index sets of size >= 2; the full set is skipped because
// its delta set is {alpha} itself for members.
bool all_mid_deltas_nonempty(const GoodIdeal& e, const Point& alpha) {
  const int p = e.dim();
  for (std::uint32_t bits = 1; bits + 1 < (1u << p); ++bits) {
    IndexSet j = IndexSet::of_bits(p, bits);
    if (j.size() < 2) continue;
    if (delta_empty(e, alpha, j)) return false;
  }
  return true;
}

bool all_proper_deltas_empty(const GoodIdeal& e, const Point& alpha) {
  const int p = e.dim();
  for (std::uint32_t bits = 1; bits + 1 < (1u << p); ++bits) {
    if (!delta_empty(e, alpha, IndexSet::of_bits(p, bits))) return false;
  }
  return true;
}

}  // namespace

MaximalsReport classify_maximals(const GoodIdeal& e) {
  MaximalsReport rep;
  const int p = e.dim();
  for (const Point& alpha : Box(e.min(), e.conductor())) {
    if (!e.contains(alpha)) continue;
    if (!delta_empty_all(e, alpha)) continue;
    for (int i = 0; i < p; ++i) {
      if (alpha[i] >= e.conductor()[i])
        throw std::logic_error("maximal " + alpha.str() + " reaches the scan boundary; conductor " +
                               e.conductor().str() + " cannot be right");
    }
    rep.maximals.push_back(alpha);
    bool absolute = true, relative = true;
    for (std::uint32_t bits = 1; bits + 1 < (1u << p); ++bits) {
      IndexSet j = IndexSet::of_bits(p, bits);
      if (j.size() < 2) continue;
      if (delta_empty(e, alpha, j))
        relative = false;
      else
        absolute = false;
    }
    if (absolute) rep.absolute.push_back(alpha);
    if (relative) rep.relative.push_back(alpha);
  }
  return rep;
}

bool is_relative_maximal_by_criterion(const GoodIdeal& e, const Point& alpha, int i) {
  if (e.dim() < 2) throw std::invalid_argument("relative maximals need at least two branches");
  if (i < 0 || i >= e.dim()) throw std::invalid_argument("branch index out of range");
  if (!delta_empty(e, alpha, IndexSet::single(e.dim(), i))) return false;
  for (int j = 0; j < e.dim(); ++j) {
    if (j == i) continue;
    if (delta_empty(e, alpha, IndexSet(e.dim(), {i, j}))) return false;
  }
  return true;
}

bool SymmetryReport::all_hold() const {
  if (!lemma_violations.empty()) return false;
  return std::all_of(pairs.begin(), pairs.end(), [](const SymmetryPair& p) { return p.holds(); });
}

SymmetryReport symmetry_check(const GoodIdeal& e) {
  const int p = e.dim();
  DualResult dr = dual(e);
  const GoodIdeal& d = dr.dual;
  const Point refl = dr.gamma_used - ones(p);

  SymmetryReport rep;
  for (const Point& alpha : Box(e.min(), e.conductor())) {
    if (!e.contains(alpha)) continue;
    const Point beta = refl - alpha;

    if (all_mid_deltas_nonempty(e, alpha) && !all_proper_deltas_empty(d, beta))
      rep.lemma_violations.push_back(alpha);

    if (!d.contains(beta)) {
      ++rep.skipped;
      continue;
    }
    SymmetryPair pair;
    pair.alpha = alpha;
    pair.beta = beta;
    pair.alpha_relative = delta_empty_all(e, alpha) && all_mid_deltas_nonempty(e, alpha);
    pair.beta_absolute = all_proper_deltas_empty(d, beta);
    rep.pairs.push_back(pair);
  }
  return rep;
}

std::vector<Point> relmax_from_dual(const GoodIdeal& e) {
  DualResult dr = dual(e);
  MaximalsReport m = classify_maximals(dr.dual);
  const Point refl = dr.gamma_used - ones(e.dim());
  std::vector<Point> out;
  out.reserve(m.absolute.size());
  for (const Point& beta : m.absolute) out.push_back(refl - beta);
  return sorted_unique(std::move(out));
}

}  // namespace valmax
