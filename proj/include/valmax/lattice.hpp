#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace valmax {

using Coord = std::int64_t;

// A point of Z^p; one coordinate per branch.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Coord> coords) : c_(std::move(coords)) {}
  Point(std::initializer_list<Coord> coords) : c_(coords) {}

  int dim() const { return static_cast<int>(c_.size()); }
  Coord operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Coord& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Coord>& coords() const { return c_; }

  bool operator==(const Point&) const = default;

  std::string str() const;

 private:
  std::vector<Coord> c_;
};

Point zeros(int p);
Point ones(int p);
Point constant(int p, Coord v);
Point unit(int p, int i);

void require_same_dim(const Point& a, const Point& b, const char* what);

// Checked coordinate arithmetic; overflow raises instead of wrapping.
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);

Point inf(const Point& a, const Point& b);
Point sup(const Point& a, const Point& b);

// Product (componentwise) order.
bool leq(const Point& a, const Point& b);
bool lt_all(const Point& a, const Point& b);

int lex_compare(const Point& a, const Point& b);

struct LexLess {
  bool operator()(const Point& a, const Point& b) const { return lex_compare(a, b) < 0; }
};

// Subset of the branch indices {0, ..., p-1}.
class IndexSet {
 public:
  IndexSet(int p, std::initializer_list<int> indices);
  IndexSet(int p, const std::vector<int>& indices);

  static IndexSet of_bits(int p, std::uint32_t bits);
  static IndexSet single(int p, int i);
  static IndexSet full(int p);

  int dim() const { return p_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool is_full() const;
  bool contains(int i) const;
  std::uint32_t bits() const { return bits_; }
  IndexSet complement() const;
  std::vector<int> indices() const;

  bool operator==(const IndexSet&) const = default;

 private:
  IndexSet(int p, std::uint32_t bits, int);
  int p_ = 0;
  std::uint32_t bits_ = 0;
};

// Finite window [lo, hi]; iteration ascends lexicographically.
class Box {
 public:
  Box(Point lo, Point hi);

  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }
  int dim() const { return lo_.dim(); }
  std::uint64_t size() const;
  bool contains(const Point& v) const;

  std::uint64_t index_of(const Point& v) const;
  Point point_at(std::uint64_t idx) const;

  class const_iterator {
   public:
    const Point& operator*() const { return cur_; }
    const_iterator& operator++();
    bool operator!=(const const_iterator& o) const { return done_ != o.done_ || (!done_ && cur_ != o.cur_); }

   private:
    friend class Box;
    const Box* box_ = nullptr;
    Point cur_;
    bool done_ = true;
  };

  const_iterator begin() const;
  const_iterator end() const;

 private:
  Point lo_, hi_;
};

// Visits box points in descending lexicographic order until f returns true.
// Returns true when some call accepted.
template <class F>
bool any_point_desc(const Box& b, F&& f) {
  Point cur = b.hi();
  const int p = b.dim();
  for (;;) {
    if (f(const_cast<const Point&>(cur))) return true;
    int i = p - 1;
    while (i >= 0) {
      if (cur[i] > b.lo()[i]) {
        --cur[i];
        break;
      }
      cur[i] = b.hi()[i];
      --i;
    }
    if (i < 0) return false;
  }
}

// v agrees with alpha exactly on J and is strictly larger elsewhere.
bool in_delta_j(const Point& v, const Point& alpha, const IndexSet& j);

// v lies in the delta set of alpha relative to the whole lattice: it agrees
// with alpha in exactly one coordinate and is strictly larger in the rest.
bool in_delta(const Point& v, const Point& alpha);

}  // namespace valmax
