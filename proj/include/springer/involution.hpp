#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "springer/error.hpp"

namespace springer {

// A chord (i,j) of a link pattern, 1 <= left < right <= n.
struct Arc {
  int left = 0;
  int right = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Whether q spans strictly over a: q.left < a.left < a.right < q.right.
inline bool arc_over(Arc q, Arc a) {
  return q.left < a.left && a.right < q.right;
}

// An involution of {1..n} whose two-cycles form k disjoint arcs; drawn as a
// link pattern on n points.  Immutable once constructed.  Points are 1-based
// everywhere, matching the usual combinatorial conventions.
class Involution {
 public:
  Involution() : Involution(0) {}       // empty pattern
  explicit Involution(int n);           // identity, k = 0
  Involution(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  int k() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Image of point i; i itself when i is a fixed point.
  int operator()(int i) const;

  bool is_end_point(int i) const { return (*this)(i) != i; }
  bool is_fixed_point(int i) const { return (*this)(i) == i; }
  bool has_arc(Arc a) const;

  std::vector<int> left_points() const;   // arc left endpoints, ascending
  std::vector<int> right_points() const;  // arc right endpoints, ascending
  std::vector<int> fixed_points() const;  // ascending

  friend bool operator==(const Involution& x, const Involution& y) {
    return x.n_ == y.n_ && x.pairing_ == y.pairing_;
  }
  // same order as enumerate_involutions: lexicographic on the sorted arc list
  friend bool operator<(const Involution& x, const Involution& y) {
    return x.n_ != y.n_ ? x.n_ < y.n_ : x.arcs_ < y.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<int> pairing_;  // size n_+1, entry 0 unused
  std::vector<Arc> arcs_;     // normalised: left < right, sorted by left
};

// --- statistics -------------------------------------------------------------

// Number of crossing arc pairs i < i' < j < j'.
int crossings(const Involution& s);

// Sum over fixed points p of the number of arcs (i,j) with i < p < j.
int bridges(const Involution& s);

// Number of arcs lying inside [a,b]; 1 <= a <= b <= n required.
int arc_count_in(const Involution& s, int a, int b);

// Orbit closure order: s1 precedes s2 iff arc_count_in(s1,a,b) <=
// arc_count_in(s2,a,b) for every interval.  Both involutions must share the
// same n and the same k.
bool precedes(const Involution& s1, const Involution& s2);

// Reflection i -> n+1-i; an order isomorphism preserving all statistics.
Involution mirror(const Involution& s);

// --- local structure --------------------------------------------------------

// Arcs with no other arc strictly nested below them.
std::vector<Arc> minimal_arcs(const Involution& s);

// Ordered pairs (outer, inner): inner nested directly below outer, with no
// third arc wedged strictly between the two.
std::vector<std::pair<Arc, Arc>> concentric_pairs(const Involution& s);

// Ordered pairs (left, right): left.right < right.left, no fixed point on
// [left.right, right.left], and every arc over either one has both endpoints
// outside that gap.
std::vector<std::pair<Arc, Arc>> consecutive_pairs(const Involution& s);

// The unique fixed point p < a.left with no other fixed point between p and
// a.left such that every arc over a bridges p; likewise on the right side.
std::optional<int> next_point_left(const Involution& s, Arc a);
std::optional<int> next_point_right(const Involution& s, Arc a);

// --- elementary moves -------------------------------------------------------

// Detach endpoint i from its arc and reattach at the fixed point p.
Involution move_endpoint(const Involution& s, int i, int p);

// Exchange endpoints i and j between two distinct arcs.
Involution swap_endpoints(const Involution& s, int i, int j);

// --- enumeration ------------------------------------------------------------

// All involutions of {1..n} with exactly k two-cycles, in lexicographic order
// of the sorted arc list.  |result| = C(n,2k) * (2k-1)!!.
std::vector<Involution> enumerate_involutions(int n, int k);

// --- text form --------------------------------------------------------------

// Canonical form "n=8; (2,7)(3,4)(5,6)"; the identity prints as "n=8;".
std::string to_string(const Involution& s);

// Just the arc list, "(2,7)(3,4)(5,6)"; "()" for the identity.
std::string arcs_string(const Involution& s);

// Parses the canonical form; arcs may appear in any order.
Involution parse_involution(std::string_view text);

}  // namespace springer
