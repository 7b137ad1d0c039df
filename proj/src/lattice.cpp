#include "valmax/lattice.hpp"

#include <algorithm>

namespace valmax {

std::string Point::str() const {
  std::string s = "(";
  for (int i = 0; i < dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[static_cast<std::size_t>(i)]);
  }
  s += ")";
  return s;
}

Point zeros(int p) { return constant(p, 0); }
Point ones(int p) { return constant(p, 1); }

Point constant(int p, Coord v) {
  if (p < 1) throw std::invalid_argument("point dimension must be positive");
  return Point(std::vector<Coord>(static_cast<std::size_t>(p), v));
}

Point unit(int p, int i) {
  Point e = zeros(p);
  if (i < 0 || i >= p) throw std::invalid_argument("unit vector index out of range");
  e[i] = 1;
  return e;
}

void require_same_dim(const Point& a, const Point& b, const char* what) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(what) + ": dimension mismatch " + a.str() + " vs " + b.str());
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b, "point addition");
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) {
    Coord s = 0;
    if (__builtin_add_overflow(a[i], b[i], &s)) throw std::overflow_error("coordinate overflow in addition");
    r[i] = s;
  }
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b, "point subtraction");
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) {
    Coord s = 0;
    if (__builtin_sub_overflow(a[i], b[i], &s)) throw std::overflow_error("coordinate overflow in subtraction");
    r[i] = s;
  }
  return r;
}

Point inf(const Point& a, const Point& b) {
  require_same_dim(a, b, "inf");
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Point sup(const Point& a, const Point& b) {
  require_same_dim(a, b, "sup");
  Point r = a;
  for (int i = 0; i < a.dim(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool leq(const Point& a, const Point& b) {
  require_same_dim(a, b, "product order");
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool lt_all(const Point& a, const Point& b) {
  require_same_dim(a, b, "product order");
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] >= b[i]) return false;
  return true;
}

int lex_compare(const Point& a, const Point& b) {
  require_same_dim(a, b, "lexicographic order");
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  return 0;
}

IndexSet::IndexSet(int p, std::uint32_t bits, int) : p_(p), bits_(bits) {}

IndexSet::IndexSet(int p, std::initializer_list<int> indices) : IndexSet(p, std::vector<int>(indices)) {}

IndexSet::IndexSet(int p, const std::vector<int>& indices) : p_(p) {
  if (p < 1 || p > 30) throw std::invalid_argument("index set dimension out of range");
  for (int i : indices) {
    if (i < 0 || i >= p) throw std::invalid_argument("index out of range in index set");
    bits_ |= (1u << i);
  }
}

IndexSet IndexSet::of_bits(int p, std::uint32_t bits) {
  if (p < 1 || p > 30) throw std::invalid_argument("index set dimension out of range");
  if (bits >= (1u << p)) throw std::invalid_argument("index set bits out of range");
  return IndexSet(p, bits, 0);
}

IndexSet IndexSet::single(int p, int i) { return IndexSet(p, {i}); }

IndexSet IndexSet::full(int p) { return of_bits(p, (1u << p) - 1); }

int IndexSet::size() const { return __builtin_popcount(bits_); }

bool IndexSet::is_full() const { return bits_ == (1u << p_) - 1; }

bool IndexSet::contains(int i) const {
  if (i < 0 || i >= p_) throw std::invalid_argument("index out of range in index set");
  return (bits_ >> i) & 1u;
}

IndexSet IndexSet::complement() const { return IndexSet(p_, (~bits_) & ((1u << p_) - 1), 0); }

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < p_; ++i)
    if ((bits_ >> i) & 1u) out.push_back(i);
  return out;
}

Box::Box(Point lo, Point hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  require_same_dim(lo_, hi_, "box");
  if (!leq(lo_, hi_)) throw std::invalid_argument("box corners out of order: " + lo_.str() + " !<= " + hi_.str());
}

std::uint64_t Box::size() const {
  std::uint64_t n = 1;
  for (int i = 0; i < dim(); ++i) {
    const std::uint64_t d = static_cast<std::uint64_t>(hi_[i] - lo_[i] + 1);
    if (n > (1ull << 40) / d) throw std::overflow_error("box too large to enumerate");
    n *= d;
  }
  return n;
}

bool Box::contains(const Point& v) const { return leq(lo_, v) && leq(v, hi_); }

std::uint64_t Box::index_of(const Point& v) const {
  std::uint64_t idx = 0;
  for (int i = 0; i < dim(); ++i) {
    idx = idx * static_cast<std::uint64_t>(hi_[i] - lo_[i] + 1) + static_cast<std::uint64_t>(v[i] - lo_[i]);
  }
  return idx;
}

Point Box::point_at(std::uint64_t idx) const {
  Point v = lo_;
  for (int i = dim() - 1; i >= 0; --i) {
    const std::uint64_t d = static_cast<std::uint64_t>(hi_[i] - lo_[i] + 1);
    v[i] = lo_[i] + static_cast<Coord>(idx % d);
    idx /= d;
  }
  return v;
}

Box::const_iterator& Box::const_iterator::operator++() {
  int i = box_->dim() - 1;
  while (i >= 0) {
    if (cur_[i] < box_->hi()[i]) {
      ++cur_[i];
      return *this;
    }
    cur_[i] = box_->lo()[i];
    --i;
  }
  done_ = true;
  return *this;
}

Box::const_iterator Box::begin() const {
  const_iterator it;
  it.box_ = this;
  it.cur_ = lo_;
  it.done_ = false;
  return it;
}

Box::const_iterator Box::end() const { return const_iterator{}; }

bool in_delta_j(const Point& v, const Point& alpha, const IndexSet& j) {
  require_same_dim(v, alpha, "delta set");
  if (j.dim() != v.dim()) throw std::invalid_argument("delta set: index set dimension mismatch");
  if (j.empty()) throw std::invalid_argument("delta set over the empty index set is undefined");
  for (int i = 0; i < v.dim(); ++i) {
    if (j.contains(i)) {
      if (v[i] != alpha[i]) return false;
    } else {
      if (v[i] <= alpha[i]) return false;
    }
  }
  return true;
}

bool in_delta(const Point& v, const Point& alpha) {
  require_same_dim(v, alpha, "delta set");
  int equal = 0;
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] == alpha[i]) {
      ++equal;
      if (equal > 1) return false;
    } else if (v[i] < alpha[i]) {
      return false;
    }
  }
  return equal == 1;
}

}  // namespace valmax
