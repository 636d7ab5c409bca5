#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "springer/involution.hpp"

namespace springer {

// The Jordan shape (n-k, k) of a square-zero nilpotent: n points, k arcs.
struct ShapeParams {
  int n = 0;
  int k = 0;

  friend bool operator==(const ShapeParams&, const ShapeParams&) = default;
};

// Throws BadShape unless 0 <= k and 2k <= n.
void validate_shape(ShapeParams p);

// Dimension of the fiber: (n-k)(n-k-1)/2 + k(k-1)/2.
int fiber_dimension(ShapeParams p);

// d0 = (n-2k)(n-2k-1)/2 + k(k-1)/2, the dimension of the minimal orbit.
int minimal_orbit_dimension(ShapeParams p);

// codim of the orbit of s inside the fiber: crossings(s) + bridges(s).
int orbit_codimension(const Involution& s);

// The unique closure-minimal element (1,n-k+1)(2,n-k+2)...(k,n).
Involution sigma_min(ShapeParams p);

// k when 2k = n, k+1 otherwise: the singularity threshold for eta.
// Undefined for k = 0 (a lone smooth component needs no threshold).
int kbar(ShapeParams p);

// N(s): the involutions directly below s (codimension exactly one more),
// produced by the four elementary degenerations: pulling an arc endpoint to
// its next free point on either side, fusing a consecutive pair, and
// crossing a concentric pair.  Distinct moves never collide, but the result
// is deduplicated regardless.
std::set<Involution> lower_covers(const Involution& s);

// P(s): elements one codimension up whose lower covers contain s.
std::set<Involution> upper_covers(const Involution& s);

// Everything below s in closure order (s included), in enumeration order.
std::vector<Involution> closure_ideal(const Involution& s);

struct PosetOptions {
  enum class Check { automatic, on, off };

  int max_n = 12;                        // refuse larger shapes
  Check consistency = Check::automatic;  // automatic: verify when n <= 8
};

// The full orbit closure poset of one shape, with covering lists.
struct OrbitPoset {
  ShapeParams shape;
  std::vector<Involution> elements;              // enumeration order
  std::vector<std::vector<std::size_t>> covers;  // covers[i]: indices of N(elements[i])
  std::map<Involution, std::size_t> index;

  std::size_t index_of(const Involution& s) const;
};

// Enumerates the shape and attaches lower covers to every element.  The
// consistency pass re-derives reachability through covers and checks it
// against the interval-counting order element by element.
OrbitPoset build_poset(ShapeParams p, PosetOptions opt = {});

// Adjacency object keyed by the canonical text of each element.
std::string to_json(const OrbitPoset& poset);

// Hasse diagram; each cover relation is one edge drawn upward (rankdir=BT),
// so minimal elements settle at the bottom.
std::string to_dot(const OrbitPoset& poset);

}  // namespace springer
