#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "springer/orbit_poset.hpp"
#include "springer/polynomial.hpp"
#include "springer/tableau.hpp"

namespace springer {

// Number of orbits of each codimension among those meeting the component of
// t; entry m counts codimension m, for m = 0 .. dim - d0.  Entry 0 is 1.
std::vector<std::uint64_t> codim_histogram(const TwoColumnTableau& t);

// I(x) = [k]_x! [n-2k]_x!: the inversion generating function of the cell
// decomposition shared by every orbit of the shape; palindromic of degree d0.
IntPolynomial cell_polynomial(ShapeParams p);

// Poincare polynomial of the component: reverse the codimension histogram
// into N(x) (so coefficient m counts orbits of dimension d0+m) and expand
// N(x^2) I(x^2).  Coefficient of x^j is then the j-th Betti number; degree
// 2*dim, constant and leading coefficients both 1, odd coefficients 0.
IntPolynomial poincare(const TwoColumnTableau& t);

// --- the four independent singularity criteria ------------------------------
// All four agree for every k >= 1; analyze() enforces that.  For k = 0 the
// lone component is the full flag variety and only the first two apply.

// Smooth iff tau* has one element, or two with 1 or n an arc endpoint, or
// three with both 1 and n endpoints but (1,n) not an arc.
bool singular_by_pattern(const TwoColumnTableau& t);

// Singular iff the Poincare polynomial is not palindromic.
bool singular_by_poincare(const TwoColumnTableau& t);

// eta(t) = |N(sigma_T)|: how many orbits in the component boundary have
// codimension one; equivalently how many other components touch this one in
// codimension one.
int eta(const TwoColumnTableau& t);

// Singular iff eta(t) > kbar.
bool singular_by_eta(const TwoColumnTableau& t);

// Number of one-transposition deformations of the base flag chain that stay
// inside the component's closure...
std::uint64_t flag_membership_count(const TwoColumnTableau& t);

// ...singular iff that count exceeds (n-k)(n-k-1)/2.
bool singular_by_flagcount(const TwoColumnTableau& t);

// Everything analyze() derives for one component.
struct ComponentReport {
  TwoColumnTableau tableau;
  Involution sigma;  // sigma_T
  int dim = 0;       // fiber dimension
  int d0 = 0;
  std::vector<std::uint64_t> histogram;  // orbits by codimension
  IntPolynomial n_poly;                  // histogram reversed
  IntPolynomial poincare;                // n_poly(x^2) * cell_polynomial(x^2)
  bool palindromic = true;
  bool pattern_singular = false;
  bool poincare_singular = false;
  std::optional<bool> eta_singular;        // empty when k = 0
  std::optional<bool> flagcount_singular;  // empty when k = 0
  bool singular = false;                   // the agreed verdict
  int eta = 0;
  std::uint64_t flag_count = 0;
  std::uint64_t flag_bound = 0;              // (n-k)(n-k-1)/2
  std::vector<TwoColumnTableau> neighbors;   // components meeting in codim 1
};

// Runs all four criteria and assembles the report.  Raises
// CriteriaDisagreement if the verdicts split (they never should), and
// ConsistencyFailure if the codimension-one boundary structure is off.
ComponentReport analyze(const TwoColumnTableau& t);

// Components as vertices, codimension-one intersections as edges.
struct IntersectionGraph {
  ShapeParams shape;
  std::vector<TwoColumnTableau> vertices;                  // enumeration order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // index pairs a < b, sorted
  std::vector<int> degrees;                                // per vertex; equals eta
};

// Requires k >= 1.
IntersectionGraph intersection_graph(ShapeParams p);

std::string to_json(const ComponentReport& report);

// Undirected graph; a doubled border marks singular components.
std::string to_dot(const IntersectionGraph& graph);

// One edge per line: the two second columns, tab separated.
std::string to_tsv(const IntersectionGraph& graph);

}  // namespace springer
