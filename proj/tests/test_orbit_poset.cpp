#include "springer/orbit_poset.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "springer/tableau.hpp"

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

}  // namespace

TEST_CASE("shape parameters") {
  CHECK(fiber_dimension({8, 3}) == 13);
  CHECK(fiber_dimension({7, 3}) == 9);
  CHECK(fiber_dimension({4, 2}) == 2);
  CHECK(fiber_dimension({2, 1}) == 0);
  CHECK(fiber_dimension({6, 0}) == 15);

  CHECK(minimal_orbit_dimension({8, 3}) == 4);
  CHECK(minimal_orbit_dimension({7, 3}) == 3);
  CHECK(minimal_orbit_dimension({4, 2}) == 1);
  CHECK(minimal_orbit_dimension({2, 1}) == 0);
  CHECK(minimal_orbit_dimension({6, 0}) == 15);

  CHECK(kbar({4, 2}) == 2);
  CHECK(kbar({7, 3}) == 4);
  CHECK(kbar({8, 3}) == 4);
  CHECK(kbar({2, 1}) == 1);
  CHECK(code_of([] { kbar({5, 0}); }) == Errc::bad_parameters);

  CHECK(code_of([] { validate_shape({3, 2}); }) == Errc::bad_shape);
  CHECK(code_of([] { fiber_dimension({-1, 0}); }) == Errc::bad_shape);
}

TEST_CASE("the minimal element") {
  CHECK(sigma_min({8, 3}) == Involution(8, {{1, 6}, {2, 7}, {3, 8}}));
  CHECK(sigma_min({4, 2}) == Involution(4, {{1, 3}, {2, 4}}));
  CHECK(sigma_min({5, 0}) == Involution(5));
  CHECK(orbit_codimension(sigma_min({8, 3})) == 9);

  for (int n = 0; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const ShapeParams p{n, k};
      const Involution bottom = sigma_min(p);
      // it sits at the full codimension of the poset and below everything
      CHECK(orbit_codimension(bottom) == fiber_dimension(p) - minimal_orbit_dimension(p));
      for (const Involution& s : enumerate_involutions(n, k)) {
        CHECK(precedes(bottom, s));
        if (!(s == bottom)) CHECK(!precedes(s, bottom));
      }
    }
}

TEST_CASE("boundary moves: frozen examples") {
  // the six degenerations of (2,3)(4,5)(6,7): each arc slides its left end
  // to the free point 1, and each of the three arc pairs fuses
  const Involution s = sigma_of_tableau(TwoColumnTableau(7, {3, 5, 7}));
  REQUIRE(s == Involution(7, {{2, 3}, {4, 5}, {6, 7}}));
  const std::set<Involution> expected{
      Involution(7, {{1, 3}, {4, 5}, {6, 7}}),
      Involution(7, {{1, 5}, {2, 3}, {6, 7}}),
      Involution(7, {{1, 7}, {2, 3}, {4, 5}}),
      Involution(7, {{2, 4}, {3, 5}, {6, 7}}),
      Involution(7, {{2, 3}, {4, 6}, {5, 7}}),
      Involution(7, {{2, 6}, {3, 7}, {4, 5}}),
  };
  CHECK(lower_covers(s) == expected);

  // the bottom element has nothing below it
  CHECK(lower_covers(sigma_min({4, 2})).empty());
  CHECK(lower_covers(Involution(5)).empty());

  CHECK(lower_covers(Involution(4, {{1, 2}, {3, 4}})) ==
        std::set<Involution>{Involution(4, {{1, 3}, {2, 4}})});
  CHECK(lower_covers(Involution(4, {{1, 4}, {2, 3}})) ==
        std::set<Involution>{Involution(4, {{1, 3}, {2, 4}})});
}

TEST_CASE("boundary moves reach exactly the next codimension level") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const std::vector<Involution> all = enumerate_involutions(n, k);
      std::vector<int> codim;
      codim.reserve(all.size());
      for (const Involution& s : all) codim.push_back(orbit_codimension(s));
      for (std::size_t i = 0; i < all.size(); ++i) {
        std::set<Involution> expected;
        for (std::size_t j = 0; j < all.size(); ++j)
          if (codim[j] == codim[i] + 1 && precedes(all[j], all[i])) expected.insert(all[j]);
        CHECK(lower_covers(all[i]) == expected);
      }
    }
}

TEST_CASE("upper covers") {
  CHECK(upper_covers(sigma_min({4, 2})) ==
        std::set<Involution>{Involution(4, {{1, 2}, {3, 4}}), Involution(4, {{1, 4}, {2, 3}})});
  CHECK(upper_covers(Involution(4, {{1, 2}, {3, 4}})).empty());

  // the one-orbit shape: the bottom element is already maximal, so the
  // ancestor count is genuinely zero (the k-bar pattern needs a second level)
  CHECK(upper_covers(sigma_min({2, 1})).empty());

  for (int n = 0; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      for (const Involution& s : enumerate_involutions(n, k))
        for (const Involution& up : upper_covers(s)) CHECK(lower_covers(up).count(s) == 1);

  // exact adjoint of lower_covers on a midsize shape
  const std::vector<Involution> all = enumerate_involutions(7, 2);
  for (const Involution& s : all) {
    std::set<Involution> expected;
    for (const Involution& c : all)
      if (lower_covers(c).count(s)) expected.insert(c);
    CHECK(upper_covers(s) == expected);
  }
}

TEST_CASE("closure ideals") {
  const Involution top(4, {{1, 2}, {3, 4}});
  CHECK(closure_ideal(top) ==
        std::vector<Involution>{top, Involution(4, {{1, 3}, {2, 4}})});
  CHECK(closure_ideal(sigma_min({4, 2})) == std::vector<Involution>{sigma_min({4, 2})});

  for (int k = 0; 2 * k <= 6; ++k)
    for (const Involution& s : enumerate_involutions(6, k)) {
      const std::vector<Involution> ideal = closure_ideal(s);
      CHECK(std::count(ideal.begin(), ideal.end(), s) == 1);
      CHECK(std::is_sorted(ideal.begin(), ideal.end()));
      for (const Involution& c : ideal) CHECK(precedes(c, s));
    }
}

TEST_CASE("poset construction") {
  const OrbitPoset poset = build_poset({4, 2});
  CHECK(poset.shape == ShapeParams{4, 2});
  CHECK(poset.elements == std::vector<Involution>{
                              Involution(4, {{1, 2}, {3, 4}}),
                              Involution(4, {{1, 3}, {2, 4}}),
                              Involution(4, {{1, 4}, {2, 3}}),
                          });
  CHECK(poset.covers == std::vector<std::vector<std::size_t>>{{1}, {}, {1}});
  CHECK(poset.index_of(Involution(4, {{1, 4}, {2, 3}})) == 2);
  CHECK(code_of([&] { poset.index_of(Involution(4, {{1, 2}})); }) == Errc::out_of_range);
  CHECK(code_of([&] { poset.index_of(Involution(6, {{1, 2}, {3, 4}})); }) ==
        Errc::out_of_range);

  // maximal orbits are exactly the tableau patterns
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      const OrbitPoset p = build_poset({n, k});
      std::set<Involution> maximal;
      for (const Involution& s : p.elements)
        if (orbit_codimension(s) == 0) maximal.insert(s);
      std::set<Involution> patterns;
      for (const TwoColumnTableau& t : enumerate_tableaux(n, k))
        patterns.insert(sigma_of_tableau(t));
      CHECK(maximal == patterns);
    }

  // the consistency pass accepts every shape it is asked to re-check
  PosetOptions strict;
  strict.consistency = PosetOptions::Check::on;
  CHECK(build_poset({8, 3}, strict).elements.size() == 420);

  CHECK(code_of([] { build_poset({13, 2}); }) == Errc::limit_exceeded);
  PosetOptions small;
  small.max_n = 3;
  CHECK(code_of([&] { build_poset({4, 2}, small); }) == Errc::limit_exceeded);
}

TEST_CASE("poset serialization") {
  const OrbitPoset poset = build_poset({4, 2});

  const nlohmann::json j = nlohmann::json::parse(to_json(poset));
  CHECK(j["n"] == 4);
  CHECK(j["k"] == 2);
  CHECK(j["fiber_dimension"] == 2);
  CHECK(j["d0"] == 1);
  CHECK(j["elements"] == 3);
  CHECK(j["covers"].size() == 3);
  CHECK(j["covers"]["n=4; (1,2)(3,4)"] == nlohmann::json::array({"n=4; (1,3)(2,4)"}));
  CHECK(j["covers"]["n=4; (1,3)(2,4)"] == nlohmann::json::array());
  CHECK(j["covers"]["n=4; (1,4)(2,3)"] == nlohmann::json::array({"n=4; (1,3)(2,4)"}));

  CHECK(to_dot(poset) ==
        "digraph orbit_poset_4_2 {\n"
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        "  \"(1,2)(3,4)\" [label=\"(1,2)(3,4)\\ncodim 0\"];\n"
        "  \"(1,3)(2,4)\" [label=\"(1,3)(2,4)\\ncodim 1\"];\n"
        "  \"(1,4)(2,3)\" [label=\"(1,4)(2,3)\\ncodim 0\"];\n"
        "  \"(1,3)(2,4)\" -> \"(1,2)(3,4)\";\n"
        "  \"(1,3)(2,4)\" -> \"(1,4)(2,3)\";\n"
        "}\n");
}
