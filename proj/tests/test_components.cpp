#include "springer/components.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using namespace springer;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a springer::Error");
  return Errc::parse_error;
}

std::uint64_t factorial(int p) {
  std::uint64_t r = 1;
  for (int i = 2; i <= p; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("codimension histograms") {
  CHECK(codim_histogram(TwoColumnTableau(4, {2, 4})) == std::vector<std::uint64_t>{1, 1});
  CHECK(codim_histogram(TwoColumnTableau(4, {3, 4})) == std::vector<std::uint64_t>{1, 1});
  CHECK(codim_histogram(TwoColumnTableau(5)) == std::vector<std::uint64_t>{1});
  CHECK(codim_histogram(TwoColumnTableau(2, {2})) == std::vector<std::uint64_t>{1});

  for (int n = 0; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const ShapeParams p{n, k};
      const int span = fiber_dimension(p) - minimal_orbit_dimension(p);
      for (const TwoColumnTableau& t : enumerate_tableaux(n, k)) {
        const std::vector<std::uint64_t> hist = codim_histogram(t);
        CHECK(static_cast<int>(hist.size()) == span + 1);
        // the dense orbit is alone at the top, the bottom element alone below
        CHECK(hist.front() == 1);
        CHECK(hist.back() == 1);
        std::uint64_t total = 0;
        for (std::uint64_t h : hist) total += h;
        CHECK(total == closure_ideal(sigma_of_tableau(t)).size());
      }
    }
}

TEST_CASE("cell polynomial of a shape") {
  CHECK(cell_polynomial({8, 3}) == IntPolynomial({1, 3, 4, 3, 1}));
  CHECK(cell_polynomial({4, 2}) == IntPolynomial({1, 1}));
  CHECK(cell_polynomial({5, 0}) == q_factorial(5));
  CHECK(cell_polynomial({2, 1}) == IntPolynomial::one());

  for (int n = 0; n <= 9; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const ShapeParams p{n, k};
      const IntPolynomial cell = cell_polynomial(p);
      CHECK(cell.degree() == minimal_orbit_dimension(p));
      CHECK(is_palindromic(cell));
      CHECK(cell.value_at_one() == factorial(k) * factorial(n - 2 * k));
    }
}

TEST_CASE("poincare polynomials") {
  CHECK(poincare(TwoColumnTableau(4, {2, 4})) == IntPolynomial({1, 0, 2, 0, 1}));
  CHECK(poincare(TwoColumnTableau(4, {3, 4})) == IntPolynomial({1, 0, 2, 0, 1}));
  CHECK(poincare(TwoColumnTableau(2, {2})) == IntPolynomial::one());

  // a lone column is the full flag variety
  for (int n = 0; n <= 6; ++n)
    CHECK(poincare(TwoColumnTableau(n)) == q_factorial(n).substitute_square());

  for (int n = 0; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (const TwoColumnTableau& t : enumerate_tableaux(n, k)) {
        const IntPolynomial p = poincare(t);
        const ShapeParams shape{n, k};
        CHECK(p.degree() == 2 * fiber_dimension(shape));
        CHECK(p.coeff(0) == 1);
        CHECK(p.coeff(p.degree()) == 1);
        for (int m = 1; m <= p.degree(); m += 2) CHECK(p.coeff(m) == 0);
        std::uint64_t orbits = 0;
        for (std::uint64_t h : codim_histogram(t)) orbits += h;
        CHECK(p.value_at_one() == orbits * factorial(k) * factorial(n - 2 * k));
      }
}

TEST_CASE("singularity criteria on frozen examples") {
  const TwoColumnTableau running(8, {4, 6, 7});
  CHECK(singular_by_pattern(running));
  CHECK(singular_by_poincare(running));
  CHECK(singular_by_eta(running));
  CHECK(singular_by_flagcount(running));
  CHECK(eta(running) == 5);

  const TwoColumnTableau base7(7, {3, 5, 7});
  CHECK(eta(base7) == 6);
  CHECK(kbar({7, 3}) == 4);
  CHECK(singular_by_eta(base7));
  CHECK(singular_by_pattern(base7));
  CHECK(flag_membership_count(base7) == 10);
  CHECK(singular_by_flagcount(base7));  // bound is 6

  // the smallest singular component, and near misses around it
  CHECK(singular_by_pattern(TwoColumnTableau(6, {3, 5})));
  CHECK(eta(TwoColumnTableau(6, {3, 5})) == 5);
  CHECK(!singular_by_pattern(TwoColumnTableau(6, {4, 6})));
  CHECK(!singular_by_pattern(TwoColumnTableau(6, {2, 4, 6})));
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (const TwoColumnTableau& t : enumerate_tableaux(n, k))
        CHECK(!singular_by_pattern(t));

  // three short rows with the long outer arc present: the exception to the
  // two-endpoint escape clause
  const TwoColumnTableau outer(8, {3, 5, 7, 8});
  REQUIRE(sigma_of_tableau(outer) == Involution(8, {{1, 8}, {2, 3}, {4, 5}, {6, 7}}));
  CHECK(tau_star(outer) == std::vector<int>{2, 4, 6});
  CHECK(singular_by_pattern(outer));

  // four short rows are always too many
  const TwoColumnTableau dense(8, {2, 4, 6, 8});
  CHECK(tau_star(dense).size() == 4);
  CHECK(singular_by_pattern(dense));
  CHECK(eta(dense) == 6);

  // twin of the running example on 7 points: the missing fixed point at the
  // right end makes it smooth
  CHECK(!singular_by_pattern(TwoColumnTableau(7, {4, 6, 7})));

  CHECK(!singular_by_pattern(TwoColumnTableau(6)));
  CHECK(!singular_by_poincare(TwoColumnTableau(6)));
  CHECK(code_of([] { singular_by_eta(TwoColumnTableau(6)); }) == Errc::bad_parameters);
  CHECK(code_of([] { singular_by_flagcount(TwoColumnTableau(6)); }) == Errc::bad_parameters);
}

TEST_CASE("flag membership counts") {
  CHECK(flag_membership_count(TwoColumnTableau(4, {2, 4})) == 1);
  CHECK(flag_membership_count(TwoColumnTableau(4, {3, 4})) == 1);
  CHECK(!singular_by_flagcount(TwoColumnTableau(4, {2, 4})));  // bound is 1

  // tangent-dimension dichotomy: the count never undershoots the bound, and
  // it meets the bound exactly on the smooth components
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const std::uint64_t bound =
          static_cast<std::uint64_t>(n - k) * (n - k - 1) / 2;
      for (const TwoColumnTableau& t : enumerate_tableaux(n, k)) {
        const std::uint64_t count = flag_membership_count(t);
        CHECK(count >= bound);
        CHECK((count == bound) == !singular_by_pattern(t));
      }
    }
}

TEST_CASE("all four criteria agree, and palindromicity mirrors the histogram") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (const TwoColumnTableau& t : enumerate_tableaux(n, k)) {
        const bool pattern = singular_by_pattern(t);
        CHECK(pattern == singular_by_poincare(t));
        CHECK(pattern == singular_by_eta(t));
        CHECK(pattern == singular_by_flagcount(t));

        const std::vector<std::uint64_t> hist = codim_histogram(t);
        bool symmetric = true;
        for (std::size_t m = 0; m < hist.size(); ++m)
          if (hist[m] != hist[hist.size() - 1 - m]) symmetric = false;
        CHECK(is_palindromic(poincare(t)) == symmetric);
      }
}

TEST_CASE("analyze assembles a coherent report") {
  const ComponentReport smooth = analyze(TwoColumnTableau(4, {2, 4}));
  CHECK(smooth.sigma == Involution(4, {{1, 2}, {3, 4}}));
  CHECK(smooth.dim == 2);
  CHECK(smooth.d0 == 1);
  CHECK(smooth.histogram == std::vector<std::uint64_t>{1, 1});
  CHECK(smooth.n_poly == IntPolynomial({1, 1}));
  CHECK(smooth.poincare == IntPolynomial({1, 0, 2, 0, 1}));
  CHECK(smooth.palindromic);
  CHECK(!smooth.pattern_singular);
  CHECK(!smooth.poincare_singular);
  CHECK(smooth.eta_singular == std::optional<bool>(false));
  CHECK(smooth.flagcount_singular == std::optional<bool>(false));
  CHECK(!smooth.singular);
  CHECK(smooth.eta == 1);
  CHECK(smooth.flag_count == 1);
  CHECK(smooth.flag_bound == 1);
  CHECK(smooth.neighbors == std::vector<TwoColumnTableau>{TwoColumnTableau(4, {3, 4})});

  const ComponentReport singular = analyze(TwoColumnTableau(8, {4, 6, 7}));
  CHECK(singular.singular);
  CHECK(singular.palindromic == false);
  CHECK(singular.eta == 5);
  CHECK(singular.neighbors == std::vector<TwoColumnTableau>{
                                  TwoColumnTableau(8, {2, 4, 6}),
                                  TwoColumnTableau(8, {3, 6, 7}),
                                  TwoColumnTableau(8, {4, 5, 7}),
                                  TwoColumnTableau(8, {4, 6, 8}),
                                  TwoColumnTableau(8, {5, 6, 7}),
                              });

  const ComponentReport lone = analyze(TwoColumnTableau(5));
  CHECK(!lone.singular);
  CHECK(!lone.eta_singular.has_value());
  CHECK(!lone.flagcount_singular.has_value());
  CHECK(lone.eta == 0);
  CHECK(lone.neighbors.empty());

  // eta counts the neighbors, and the meeting relation is symmetric
  for (const ShapeParams p : {ShapeParams{6, 2}, ShapeParams{6, 3}, ShapeParams{7, 2}}) {
    std::map<std::vector<int>, std::set<std::vector<int>>> meets;
    for (const TwoColumnTableau& t : enumerate_tableaux(p.n, p.k)) {
      const ComponentReport r = analyze(t);
      CHECK(r.neighbors.size() == static_cast<std::size_t>(r.eta));
      for (const TwoColumnTableau& u : r.neighbors) {
        CHECK(!(u == t));
        meets[t.second_column()].insert(u.second_column());
      }
    }
    for (const auto& [col, others] : meets)
      for (const std::vector<int>& other : others) CHECK(meets[other].count(col) == 1);
  }
}

TEST_CASE("intersection graphs") {
  const IntersectionGraph g42 = intersection_graph({4, 2});
  CHECK(g42.vertices == enumerate_tableaux(4, 2));
  CHECK(g42.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK(g42.degrees == std::vector<int>{1, 1});

  const IntersectionGraph g21 = intersection_graph({2, 1});
  CHECK(g21.vertices.size() == 1);
  CHECK(g21.edges.empty());
  CHECK(g21.degrees == std::vector<int>{0});

  const IntersectionGraph g31 = intersection_graph({3, 1});
  CHECK(g31.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK(g31.degrees == std::vector<int>{1, 1});

  CHECK(code_of([] { intersection_graph({5, 0}); }) == Errc::bad_parameters);

  // degrees are the eta statistics; each edge is counted once from each side
  for (const ShapeParams p : {ShapeParams{6, 2}, ShapeParams{6, 3}, ShapeParams{7, 3}}) {
    const IntersectionGraph g = intersection_graph(p);
    int total = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      CHECK(g.degrees[i] == eta(g.vertices[i]));
      total += g.degrees[i];
    }
    CHECK(static_cast<std::size_t>(total) == 2 * g.edges.size());
  }

  // on 7 points with three rows, exactly the two dual components stand out
  const IntersectionGraph g73 = intersection_graph({7, 3});
  CHECK(g73.vertices.size() == 14);
  std::set<std::vector<int>> loud;
  for (std::size_t i = 0; i < g73.vertices.size(); ++i)
    if (g73.degrees[i] > kbar({7, 3})) loud.insert(g73.vertices[i].second_column());
  CHECK(loud == std::set<std::vector<int>>{{2, 4, 6}, {3, 5, 7}});
  const std::string dot73 = to_dot(g73);
  CHECK(dot73.find("\"3,5,7\" [label=\"{3,5,7}\", peripheries=2];") != std::string::npos);
  CHECK(dot73.find("\"2,4,7\" [label=\"{2,4,7}\"];") != std::string::npos);
}

TEST_CASE("graph serialization") {
  const IntersectionGraph g42 = intersection_graph({4, 2});
  CHECK(to_dot(g42) ==
        "graph intersection_4_2 {\n"
        "  node [shape=ellipse];\n"
        "  \"2,4\" [label=\"{2,4}\"];\n"
        "  \"3,4\" [label=\"{3,4}\"];\n"
        "  \"2,4\" -- \"3,4\";\n"
        "}\n");
  CHECK(to_tsv(g42) == "2,4\t3,4\n");
  CHECK(to_tsv(intersection_graph({2, 1})).empty());
}

TEST_CASE("report serialization") {
  const nlohmann::json smooth = nlohmann::json::parse(to_json(analyze(TwoColumnTableau(4, {2, 4}))));
  CHECK(smooth["tableau"]["n"] == 4);
  CHECK(smooth["tableau"]["second_column"] == nlohmann::json::array({2, 4}));
  CHECK(smooth["sigma"] == "n=4; (1,2)(3,4)");
  CHECK(smooth["dim"] == 2);
  CHECK(smooth["d0"] == 1);
  CHECK(smooth["histogram"] == nlohmann::json::array({1, 1}));
  CHECK(smooth["poincare"] == nlohmann::json::array({1, 0, 2, 0, 1}));
  CHECK(smooth["palindromic"] == true);
  CHECK(smooth["verdicts"]["pattern"] == false);
  CHECK(smooth["verdicts"]["eta"] == false);
  CHECK(smooth["singular"] == false);
  CHECK(smooth["eta"] == 1);
  CHECK(smooth["flag_count"] == 1);
  CHECK(smooth["flag_bound"] == 1);
  CHECK(smooth["neighbors"].size() == 1);
  CHECK(smooth["neighbors"][0]["second_column"] == nlohmann::json::array({3, 4}));

  const nlohmann::json lone = nlohmann::json::parse(to_json(analyze(TwoColumnTableau(3))));
  CHECK(lone["verdicts"]["eta"].is_null());
  CHECK(lone["verdicts"]["flagcount"].is_null());
  CHECK(lone["singular"] == false);
}
