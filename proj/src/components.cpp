#include "springer/components.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace springer {

namespace {

ShapeParams shape_of(const TwoColumnTableau& t) { return {t.n(), t.k()}; }

}  // namespace

std::vector<std::uint64_t> codim_histogram(const TwoColumnTableau& t) {
  const ShapeParams p = shape_of(t);
  const int span = fiber_dimension(p) - minimal_orbit_dimension(p);
  std::vector<std::uint64_t> hist(span + 1, 0);
  for (const Involution& s : closure_ideal(sigma_of_tableau(t))) {
    const int m = orbit_codimension(s);
    if (m > span)
      fail(Errc::consistency_failure,
           to_string(s) + " lies below the minimal orbit dimension of the shape");
    ++hist[m];
  }
  return hist;
}

IntPolynomial cell_polynomial(ShapeParams p) {
  validate_shape(p);
  return q_factorial(p.k) * q_factorial(p.n - 2 * p.k);
}

IntPolynomial poincare(const TwoColumnTableau& t) {
  std::vector<std::uint64_t> coeffs = codim_histogram(t);
  std::reverse(coeffs.begin(), coeffs.end());
  return IntPolynomial(std::move(coeffs)).substitute_square() *
         cell_polynomial(shape_of(t)).substitute_square();
}

bool singular_by_pattern(const TwoColumnTableau& t) {
  if (t.k() == 0) return false;
  const Involution s = sigma_of_tableau(t);
  const std::size_t stars = tau_star(t).size();
  const bool one_is_end = s.is_end_point(1);
  const bool n_is_end = s.is_end_point(t.n());
  if (stars == 1) return false;
  if (stars == 2 && (one_is_end || n_is_end)) return false;
  if (stars == 3 && one_is_end && n_is_end && !s.has_arc({1, t.n()})) return false;
  return true;
}

bool singular_by_poincare(const TwoColumnTableau& t) { return !is_palindromic(poincare(t)); }

int eta(const TwoColumnTableau& t) {
  return static_cast<int>(lower_covers(sigma_of_tableau(t)).size());
}

bool singular_by_eta(const TwoColumnTableau& t) { return eta(t) > kbar(shape_of(t)); }

std::uint64_t flag_membership_count(const TwoColumnTableau& t) {
  const Involution s = sigma_of_tableau(t);
  std::uint64_t count = 0;
  for (const RowStandardTableau& tau : x_tau0(t.n(), t.k()))
    if (precedes(sigma_of_rowstandard(tau), s)) ++count;
  return count;
}

bool singular_by_flagcount(const TwoColumnTableau& t) {
  if (t.k() == 0) fail(Errc::bad_parameters, "flag-count criterion needs k >= 1");
  const std::uint64_t bound =
      static_cast<std::uint64_t>(t.n() - t.k()) * (t.n() - t.k() - 1) / 2;
  return flag_membership_count(t) > bound;
}

namespace {

// The component on the far side of one codimension-one boundary orbit: the
// boundary orbit has exactly two maximal orbits above it, ours and one other.
TwoColumnTableau neighbor_through(const Involution& sigma_t, const Involution& boundary) {
  std::set<Involution> up = upper_covers(boundary);
  if (up.size() != 2)
    fail(Errc::consistency_failure, "boundary orbit " + to_string(boundary) + " has " +
                                        std::to_string(up.size()) + " maximal orbits above it");
  if (!up.count(sigma_t))
    fail(Errc::consistency_failure,
         "boundary orbit " + to_string(boundary) + " lost track of " + to_string(sigma_t));
  up.erase(sigma_t);
  return tableau_of_sigma(*up.begin());
}

}  // namespace

ComponentReport analyze(const TwoColumnTableau& t) {
  ComponentReport report;
  report.tableau = t;
  report.sigma = sigma_of_tableau(t);
  const ShapeParams p = shape_of(t);
  report.dim = fiber_dimension(p);
  report.d0 = minimal_orbit_dimension(p);
  report.histogram = codim_histogram(t);
  std::vector<std::uint64_t> reversed = report.histogram;
  std::reverse(reversed.begin(), reversed.end());
  report.n_poly = IntPolynomial(std::move(reversed));
  report.poincare = report.n_poly.substitute_square() * cell_polynomial(p).substitute_square();
  report.palindromic = is_palindromic(report.poincare);

  report.pattern_singular = singular_by_pattern(t);
  report.poincare_singular = !report.palindromic;
  report.eta = eta(t);
  report.flag_count = flag_membership_count(t);
  report.flag_bound = static_cast<std::uint64_t>(t.n() - t.k()) * (t.n() - t.k() - 1) / 2;

  if (t.k() > 0) {
    report.eta_singular = report.eta > kbar(p);
    report.flagcount_singular = report.flag_count > report.flag_bound;
    if (report.pattern_singular != report.poincare_singular ||
        report.pattern_singular != *report.eta_singular ||
        report.pattern_singular != *report.flagcount_singular)
      fail(Errc::criteria_disagreement,
           to_string(t) + ": pattern=" + std::to_string(report.pattern_singular) +
               " poincare=" + std::to_string(report.poincare_singular) +
               " eta=" + std::to_string(*report.eta_singular) +
               " flagcount=" + std::to_string(*report.flagcount_singular));
    report.singular = report.pattern_singular;

    for (const Involution& boundary : lower_covers(report.sigma))
      report.neighbors.push_back(neighbor_through(report.sigma, boundary));
    std::sort(report.neighbors.begin(), report.neighbors.end());
    if (std::adjacent_find(report.neighbors.begin(), report.neighbors.end()) !=
        report.neighbors.end())
      fail(Errc::consistency_failure,
           to_string(t) + ": two boundary orbits lead to the same neighboring component");
  }
  return report;
}

IntersectionGraph intersection_graph(ShapeParams p) {
  validate_shape(p);
  if (p.k < 1) fail(Errc::bad_parameters, "intersection graph needs k >= 1");
  IntersectionGraph graph;
  graph.shape = p;
  graph.vertices = enumerate_tableaux(p.n, p.k);
  std::map<TwoColumnTableau, std::size_t> index;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) index[graph.vertices[i]] = i;

  std::set<std::pair<std::size_t, std::size_t>> edges;
  graph.degrees.assign(graph.vertices.size(), 0);
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const Involution sigma_t = sigma_of_tableau(graph.vertices[i]);
    for (const Involution& boundary : lower_covers(sigma_t)) {
      const TwoColumnTableau other = neighbor_through(sigma_t, boundary);
      auto it = index.find(other);
      if (it == index.end())
        fail(Errc::consistency_failure, "neighbor " + to_string(other) + " is not a vertex");
      edges.insert({std::min(i, it->second), std::max(i, it->second)});
      ++graph.degrees[i];
    }
  }
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

namespace {

nlohmann::ordered_json tableau_json(const TwoColumnTableau& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n();
  j["second_column"] = t.second_column();
  return j;
}

}  // namespace

std::string to_json(const ComponentReport& report) {
  nlohmann::ordered_json j;
  j["tableau"] = tableau_json(report.tableau);
  j["sigma"] = to_string(report.sigma);
  j["dim"] = report.dim;
  j["d0"] = report.d0;
  j["histogram"] = report.histogram;
  j["n_poly"] = report.n_poly.coefficients();
  j["poincare"] = report.poincare.coefficients();
  j["palindromic"] = report.palindromic;
  nlohmann::ordered_json verdicts;
  verdicts["pattern"] = report.pattern_singular;
  verdicts["poincare"] = report.poincare_singular;
  if (report.eta_singular)
    verdicts["eta"] = *report.eta_singular;
  else
    verdicts["eta"] = nullptr;
  if (report.flagcount_singular)
    verdicts["flagcount"] = *report.flagcount_singular;
  else
    verdicts["flagcount"] = nullptr;
  j["verdicts"] = std::move(verdicts);
  j["singular"] = report.singular;
  j["eta"] = report.eta;
  j["flag_count"] = report.flag_count;
  j["flag_bound"] = report.flag_bound;
  nlohmann::ordered_json neighbors = nlohmann::ordered_json::array();
  for (const TwoColumnTableau& t : report.neighbors) neighbors.push_back(tableau_json(t));
  j["neighbors"] = std::move(neighbors);
  return j.dump(2) + "\n";
}

namespace {

std::string column_label(const TwoColumnTableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.second_column().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t.second_column()[i]);
  }
  return out;
}

}  // namespace

std::string to_dot(const IntersectionGraph& graph) {
  std::string out;
  out += "graph intersection_" + std::to_string(graph.shape.n) + "_" +
         std::to_string(graph.shape.k) + " {\n";
  out += "  node [shape=ellipse];\n";
  const int threshold = kbar(graph.shape);
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const TwoColumnTableau& t = graph.vertices[i];
    out += "  \"" + column_label(t) + "\" [label=\"{" + column_label(t) + "}\"";
    if (graph.degrees[i] > threshold) out += ", peripheries=2";
    out += "];\n";
  }
  for (const auto& [a, b] : graph.edges)
    out += "  \"" + column_label(graph.vertices[a]) + "\" -- \"" +
           column_label(graph.vertices[b]) + "\";\n";
  out += "}\n";
  return out;
}

std::string to_tsv(const IntersectionGraph& graph) {
  std::string out;
  for (const auto& [a, b] : graph.edges)
    out += column_label(graph.vertices[a]) + "\t" + column_label(graph.vertices[b]) + "\n";
  return out;
}

}  // namespace springer
