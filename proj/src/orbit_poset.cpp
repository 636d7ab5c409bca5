#include "springer/orbit_poset.hpp"

#include <algorithm>

#include "json.hpp"

namespace springer {

void validate_shape(ShapeParams p) {
  if (p.n < 0 || p.k < 0 || 2 * p.k > p.n)
    fail(Errc::bad_shape,
         "(" + std::to_string(p.n) + "," + std::to_string(p.k) + ") is not a two-column shape");
}

int fiber_dimension(ShapeParams p) {
  validate_shape(p);
  return (p.n - p.k) * (p.n - p.k - 1) / 2 + p.k * (p.k - 1) / 2;
}

int minimal_orbit_dimension(ShapeParams p) {
  validate_shape(p);
  const int f = p.n - 2 * p.k;  // number of fixed points
  return f * (f - 1) / 2 + p.k * (p.k - 1) / 2;
}

int orbit_codimension(const Involution& s) { return crossings(s) + bridges(s); }

Involution sigma_min(ShapeParams p) {
  validate_shape(p);
  std::vector<Arc> arcs;
  arcs.reserve(p.k);
  for (int i = 1; i <= p.k; ++i) arcs.push_back({i, p.n - p.k + i});
  return Involution(p.n, std::move(arcs));
}

int kbar(ShapeParams p) {
  validate_shape(p);
  if (p.k == 0) fail(Errc::bad_parameters, "kbar is undefined for k=0");
  return 2 * p.k == p.n ? p.k : p.k + 1;
}

std::set<Involution> lower_covers(const Involution& s) {
  std::set<Involution> out;
  for (const Arc& a : s.arcs()) {
    if (auto p = next_point_left(s, a)) out.insert(move_endpoint(s, a.left, *p));
    if (auto p = next_point_right(s, a)) out.insert(move_endpoint(s, a.right, *p));
  }
  for (const auto& [left, right] : consecutive_pairs(s))
    out.insert(swap_endpoints(s, left.right, right.left));
  for (const auto& [outer, inner] : concentric_pairs(s))
    out.insert(swap_endpoints(s, outer.left, inner.left));
  return out;
}

std::set<Involution> upper_covers(const Involution& s) {
  std::set<Involution> out;
  const int target = orbit_codimension(s) - 1;
  if (target < 0) return out;
  for (const Involution& c : enumerate_involutions(s.n(), s.k()))
    if (orbit_codimension(c) == target && lower_covers(c).count(s)) out.insert(c);
  return out;
}

std::vector<Involution> closure_ideal(const Involution& s) {
  std::vector<Involution> out;
  for (const Involution& c : enumerate_involutions(s.n(), s.k()))
    if (precedes(c, s)) out.push_back(c);
  return out;
}

std::size_t OrbitPoset::index_of(const Involution& s) const {
  auto it = index.find(s);
  if (it == index.end()) fail(Errc::out_of_range, to_string(s) + " is not in the poset");
  return it->second;
}

OrbitPoset build_poset(ShapeParams p, PosetOptions opt) {
  validate_shape(p);
  if (p.n > opt.max_n)
    fail(Errc::limit_exceeded, "n=" + std::to_string(p.n) + " exceeds the configured limit " +
                                   std::to_string(opt.max_n));
  OrbitPoset poset;
  poset.shape = p;
  poset.elements = enumerate_involutions(p.n, p.k);
  for (std::size_t i = 0; i < poset.elements.size(); ++i) poset.index[poset.elements[i]] = i;

  poset.covers.resize(poset.elements.size());
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    const int codim = orbit_codimension(poset.elements[i]);
    for (const Involution& c : lower_covers(poset.elements[i])) {
      if (orbit_codimension(c) != codim + 1)
        fail(Errc::consistency_failure, "cover " + to_string(c) + " of " +
                                            to_string(poset.elements[i]) +
                                            " does not drop exactly one dimension");
      poset.covers[i].push_back(poset.index_of(c));
    }
    std::sort(poset.covers[i].begin(), poset.covers[i].end());
  }

  const bool check = opt.consistency == PosetOptions::Check::on ||
                     (opt.consistency == PosetOptions::Check::automatic && p.n <= 8);
  if (check) {
    // reachability through covering moves must reproduce the closure order
    const std::size_t m = poset.elements.size();
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<char> reach(m, 0);
      reach[i] = 1;
      std::vector<std::size_t> stack{i};
      while (!stack.empty()) {
        std::size_t top = stack.back();
        stack.pop_back();
        for (std::size_t next : poset.covers[top])
          if (!reach[next]) {
            reach[next] = 1;
            stack.push_back(next);
          }
      }
      for (std::size_t j = 0; j < m; ++j)
        if (static_cast<bool>(reach[j]) != precedes(poset.elements[j], poset.elements[i]))
          fail(Errc::consistency_failure,
               "cover moves and interval counts disagree on whether " +
                   to_string(poset.elements[j]) + " lies below " + to_string(poset.elements[i]));
    }
  }
  return poset;
}

std::string to_json(const OrbitPoset& poset) {
  nlohmann::ordered_json adjacency = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (std::size_t j : poset.covers[i]) list.push_back(to_string(poset.elements[j]));
    adjacency[to_string(poset.elements[i])] = std::move(list);
  }
  nlohmann::ordered_json j;
  j["n"] = poset.shape.n;
  j["k"] = poset.shape.k;
  j["fiber_dimension"] = fiber_dimension(poset.shape);
  j["d0"] = minimal_orbit_dimension(poset.shape);
  j["elements"] = poset.elements.size();
  j["covers"] = std::move(adjacency);
  return j.dump(2) + "\n";
}

std::string to_dot(const OrbitPoset& poset) {
  std::string out;
  out += "digraph orbit_poset_" + std::to_string(poset.shape.n) + "_" +
         std::to_string(poset.shape.k) + " {\n";
  out += "  rankdir=BT;\n  node [shape=box];\n";
  for (const Involution& s : poset.elements)
    out += "  \"" + arcs_string(s) + "\" [label=\"" + arcs_string(s) +
           "\\ncodim " + std::to_string(orbit_codimension(s)) + "\"];\n";
  for (std::size_t i = 0; i < poset.elements.size(); ++i)
    for (std::size_t j : poset.covers[i])
      out += "  \"" + arcs_string(poset.elements[j]) + "\" -> \"" +
             arcs_string(poset.elements[i]) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace springer
