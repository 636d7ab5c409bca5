// Batch front-end for the two-column component analyzer.
//
// Subcommands:
//   enumerate  list the standard tableaux of a shape with their arc patterns
//   analyze    full report for one component (exit 0 smooth, 3 singular)
//   survey     one-line summaries for a shape, or for all shapes up to a limit
//   graph      intersection graph of the components as DOT or TSV
//   verify     cross-module invariant checks up to a limit
//
// Exit codes: 0 success/smooth, 1 usage or input error, 2 internal
// consistency failure, 3 singular (analyze only).

#include <atomic>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "springer/components.hpp"

namespace {

using namespace springer;

// ---------------------------------------------------------------------------
// argument plumbing

ShapeParams parse_shape_arg(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    fail(Errc::parse_error, "expected a shape of the form n,k: \"" + text + "\"");
  try {
    std::size_t used1 = 0, used2 = 0;
    const int n = std::stoi(text.substr(0, comma), &used1);
    const int k = std::stoi(text.substr(comma + 1), &used2);
    if (used1 != comma || comma + 1 + used2 != text.size())
      fail(Errc::parse_error, "trailing characters in shape \"" + text + "\"");
    return {n, k};
  } catch (const std::logic_error&) {
    fail(Errc::parse_error, "expected a shape of the form n,k: \"" + text + "\"");
  }
}

std::vector<int> parse_column_arg(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(text.substr(pos, comma - pos), &used));
      if (used != comma - pos) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      fail(Errc::parse_error, "expected a comma-separated entry list: \"" + text + "\"");
    }
    pos = comma + 1;
  }
  return out;
}

void check_limit(ShapeParams p, int limit) {
  if (p.n > limit)
    fail(Errc::limit_exceeded, "n=" + std::to_string(p.n) + " exceeds the limit " +
                                   std::to_string(limit) + " (raise --limit)");
}

// Runs job(0..count-1) and collects the results in index order.  The workers
// only touch their own slot, so parallel output is identical to serial.
template <typename Job>
auto map_indexed(std::size_t count, bool parallel, Job job)
    -> std::vector<decltype(job(std::size_t{0}))> {
  using Result = decltype(job(std::size_t{0}));
  std::vector<Result> results(count);
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 4;
  if (!parallel || count <= 1 || workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = job(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  // deterministic error too: the first failing index wins
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// ---------------------------------------------------------------------------
// shared row assembly

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string braces(const std::vector<int>& v) { return "{" + join_ints(v) + "}"; }

const char* verdict_word(bool singular) { return singular ? "singular" : "smooth"; }

std::string verdict_word(const std::optional<bool>& v) {
  return v ? verdict_word(*v) : "n/a";
}

// Everything survey prints about one component; cheaper than a full
// analyze() because the neighbor list is never materialized.
struct SurveyRow {
  std::vector<int> second_column;
  int eta = 0;
  bool palindromic = true;
  bool pattern = false;
  bool poincare = false;
  std::optional<bool> eta_verdict;
  std::optional<bool> flagcount;
  bool singular = false;
};

SurveyRow survey_row(const TwoColumnTableau& t) {
  SurveyRow row;
  row.second_column = t.second_column();
  row.eta = eta(t);
  row.palindromic = !singular_by_poincare(t);
  row.pattern = singular_by_pattern(t);
  row.poincare = !row.palindromic;
  if (t.k() > 0) {
    row.eta_verdict = singular_by_eta(t);
    row.flagcount = singular_by_flagcount(t);
    if (row.pattern != row.poincare || row.pattern != *row.eta_verdict ||
        row.pattern != *row.flagcount)
      fail(Errc::criteria_disagreement,
           to_string(t) + ": pattern=" + std::to_string(row.pattern) +
               " poincare=" + std::to_string(row.poincare) +
               " eta=" + std::to_string(*row.eta_verdict) +
               " flagcount=" + std::to_string(*row.flagcount));
  }
  row.singular = row.pattern;
  return row;
}

struct ShapeSurvey {
  ShapeParams shape;
  std::vector<SurveyRow> rows;
};

ShapeSurvey survey_shape(ShapeParams p, bool parallel) {
  const std::vector<TwoColumnTableau> tableaux = enumerate_tableaux(p.n, p.k);
  ShapeSurvey out;
  out.shape = p;
  out.rows = map_indexed(tableaux.size(), parallel,
                         [&](std::size_t i) { return survey_row(tableaux[i]); });
  return out;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(ShapeParams p, const std::string& format, int limit) {
  validate_shape(p);
  check_limit(p, limit);
  const std::vector<TwoColumnTableau> tableaux = enumerate_tableaux(p.n, p.k);
  if (format == "text") {
    for (const TwoColumnTableau& t : tableaux) {
      const Involution s = sigma_of_tableau(t);
      std::cout << braces(t.second_column()) << "  sigma=" << arcs_string(s)
                << "  tau*=" << braces(tau_star(t)) << "  "
                << verdict_word(singular_by_pattern(t)) << "\n";
    }
  } else if (format == "tsv") {
    for (const TwoColumnTableau& t : tableaux) {
      const Involution s = sigma_of_tableau(t);
      std::cout << join_ints(t.second_column()) << "\t" << arcs_string(s) << "\t"
                << join_ints(tau_star(t)) << "\t" << verdict_word(singular_by_pattern(t))
                << "\n";
    }
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = p.n;
    j["k"] = p.k;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const TwoColumnTableau& t : tableaux) {
      nlohmann::ordered_json rec;
      rec["second_column"] = t.second_column();
      rec["sigma"] = to_string(sigma_of_tableau(t));
      rec["tau_star"] = tau_star(t);
      rec["pattern_singular"] = singular_by_pattern(t);
      list.push_back(std::move(rec));
    }
    j["tableaux"] = std::move(list);
    std::cout << j.dump(2) << "\n";
  } else {
    fail(Errc::bad_parameters, "enumerate renders text, json, or tsv");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(ShapeParams p, const std::vector<int>& column, const std::string& format,
                int limit) {
  validate_shape(p);
  check_limit(p, limit);
  if (static_cast<int>(column.size()) != p.k)
    fail(Errc::bad_shape, "--tableau lists " + std::to_string(column.size()) +
                              " entries but the shape wants k=" + std::to_string(p.k));
  const TwoColumnTableau t(p.n, column);
  const ComponentReport report = analyze(t);
  if (format == "json") {
    std::cout << to_json(report);
  } else if (format == "text") {
    std::cout << "tableau: " << to_string(report.tableau) << "\n";
    std::cout << "sigma: " << arcs_string(report.sigma) << "\n";
    std::cout << "dim: " << report.dim << "\n";
    std::cout << "d0: " << report.d0 << "\n";
    std::cout << "orbits by codimension:";
    for (std::uint64_t h : report.histogram) std::cout << " " << h;
    std::cout << "\n";
    std::cout << "poincare: " << report.poincare.to_string() << "\n";
    std::cout << "palindromic: " << (report.palindromic ? "yes" : "no") << "\n";
    std::cout << "criteria: pattern=" << verdict_word(report.pattern_singular)
              << " poincare=" << verdict_word(report.poincare_singular)
              << " eta=" << verdict_word(report.eta_singular)
              << " flagcount=" << verdict_word(report.flagcount_singular) << "\n";
    std::cout << "eta: " << report.eta;
    if (t.k() > 0) std::cout << " (threshold " << kbar(p) << ")";
    std::cout << "\n";
    std::cout << "flag count: " << report.flag_count << " (smooth bound " << report.flag_bound
              << ")\n";
    std::cout << "neighbors:";
    if (report.neighbors.empty()) std::cout << " (none)";
    for (const TwoColumnTableau& u : report.neighbors)
      std::cout << " " << braces(u.second_column());
    std::cout << "\n";
    std::cout << "verdict: " << verdict_word(report.singular) << "\n";
  } else {
    fail(Errc::bad_parameters, "analyze renders text or json");
  }
  return report.singular ? 3 : 0;
}

// ---------------------------------------------------------------------------
// survey

void print_survey_text(const ShapeSurvey& s) {
  std::cout << "shape " << s.shape.n << "," << s.shape.k << ": " << s.rows.size()
            << " components\n";
  std::size_t singular = 0;
  for (const SurveyRow& row : s.rows) {
    std::cout << "  " << braces(row.second_column) << "  eta=" << row.eta
              << "  palindromic=" << (row.palindromic ? "yes" : "no")
              << "  criteria=pattern:" << verdict_word(row.pattern)
              << ",poincare:" << verdict_word(row.poincare)
              << ",eta:" << verdict_word(row.eta_verdict)
              << ",flagcount:" << verdict_word(row.flagcount)
              << "  verdict=" << verdict_word(row.singular) << "\n";
    if (row.singular) ++singular;
  }
  std::cout << "  singular: " << singular << " of " << s.rows.size() << "\n";
}

void print_survey_tsv(const ShapeSurvey& s) {
  for (const SurveyRow& row : s.rows)
    std::cout << s.shape.n << "\t" << s.shape.k << "\t" << join_ints(row.second_column) << "\t"
              << row.eta << "\t" << (row.palindromic ? "yes" : "no") << "\t"
              << verdict_word(row.pattern) << "\t" << verdict_word(row.poincare) << "\t"
              << verdict_word(row.eta_verdict) << "\t" << verdict_word(row.flagcount) << "\t"
              << verdict_word(row.singular) << "\n";
}

nlohmann::ordered_json survey_json(const ShapeSurvey& s) {
  nlohmann::ordered_json block;
  block["n"] = s.shape.n;
  block["k"] = s.shape.k;
  block["components"] = s.rows.size();
  std::size_t singular = 0;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SurveyRow& row : s.rows) {
    nlohmann::ordered_json r;
    r["second_column"] = row.second_column;
    r["eta"] = row.eta;
    r["palindromic"] = row.palindromic;
    nlohmann::ordered_json verdicts;
    verdicts["pattern"] = row.pattern;
    verdicts["poincare"] = row.poincare;
    if (row.eta_verdict)
      verdicts["eta"] = *row.eta_verdict;
    else
      verdicts["eta"] = nullptr;
    if (row.flagcount)
      verdicts["flagcount"] = *row.flagcount;
    else
      verdicts["flagcount"] = nullptr;
    r["verdicts"] = std::move(verdicts);
    r["singular"] = row.singular;
    rows.push_back(std::move(r));
    if (row.singular) ++singular;
  }
  block["singular"] = singular;
  block["rows"] = std::move(rows);
  return block;
}

int cmd_survey(const std::optional<ShapeParams>& shape, const std::string& format, int limit,
               bool parallel) {
  std::vector<ShapeParams> shapes;
  if (shape) {
    validate_shape(*shape);
    check_limit(*shape, limit);
    shapes.push_back(*shape);
  } else {
    for (int n = 1; n <= limit; ++n)
      for (int k = 0; 2 * k <= n; ++k) shapes.push_back({n, k});
  }
  // one shape fans out over its tableaux; a sweep fans out over shapes
  std::vector<ShapeSurvey> surveys =
      shape ? std::vector<ShapeSurvey>{survey_shape(shapes[0], parallel)}
            : map_indexed(shapes.size(), parallel,
                          [&](std::size_t i) { return survey_shape(shapes[i], false); });
  if (format == "text") {
    for (const ShapeSurvey& s : surveys) print_survey_text(s);
  } else if (format == "tsv") {
    for (const ShapeSurvey& s : surveys) print_survey_tsv(s);
  } else if (format == "json") {
    nlohmann::ordered_json j;
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const ShapeSurvey& s : surveys) blocks.push_back(survey_json(s));
    j["shapes"] = std::move(blocks);
    std::cout << j.dump(2) << "\n";
  } else {
    fail(Errc::bad_parameters, "survey renders text, json, or tsv");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// graph

int cmd_graph(ShapeParams p, const std::string& format, int limit) {
  validate_shape(p);
  check_limit(p, limit);
  const IntersectionGraph graph = intersection_graph(p);
  if (format == "dot" || format == "text")  // DOT is the natural text form
    std::cout << to_dot(graph);
  else if (format == "tsv")
    std::cout << to_tsv(graph);
  else
    fail(Errc::bad_parameters, "graph renders dot or tsv");
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct ShapeCheck {
  std::string header;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
};

ShapeCheck verify_shape(ShapeParams p, int limit) {
  ShapeCheck out;
  const int n = p.n, k = p.k;

  // X(tau0) must hit the predicted cardinality exactly
  const std::size_t expected_x =
      static_cast<std::size_t>(k * (n - 2 * k) + k * (k - 1) / 2 + (n - k) * (n - k - 1) / 2);
  const std::size_t got_x = x_tau0(n, k).size();
  if (got_x != expected_x)
    out.failures.push_back("deformation count: |X(tau0)| = " + std::to_string(got_x) +
                           ", expected " + std::to_string(expected_x));

  // poset construction re-derives the order from the boundary moves
  PosetOptions opt;
  opt.max_n = limit;
  opt.consistency = n <= 9 ? PosetOptions::Check::on : PosetOptions::Check::off;
  if (n > 9) out.notes.push_back("order re-check skipped: n > 9");
  std::size_t elements = 0;
  try {
    const OrbitPoset poset = build_poset(p, opt);
    elements = poset.elements.size();

    if (k >= 1) {
      const Involution bottom = sigma_min(p);
      for (const Involution& s : poset.elements)
        if (!precedes(bottom, s)) {
          out.failures.push_back("minimal orbit: " + to_string(bottom) +
                                 " does not precede " + to_string(s));
          break;
        }
      if (elements > 1) {
        const std::size_t up = upper_covers(bottom).size();
        if (static_cast<int>(up) != kbar(p))
          out.failures.push_back("minimal-orbit ancestors: |P(sigma0)| = " + std::to_string(up) +
                                 ", expected " + std::to_string(kbar(p)));
      } else {
        out.notes.push_back("minimal-orbit ancestors skipped: single-orbit shape");
      }
    }

    if (n <= 9) {
      for (const Involution& s : poset.elements)
        if (orbit_codimension(s) == 1 && upper_covers(s).size() != 2) {
          out.failures.push_back("codim-1 ancestors: " + to_string(s) + " has " +
                                 std::to_string(upper_covers(s).size()) + ", expected 2");
          break;
        }
    } else {
      out.notes.push_back("codim-1 ancestor check skipped: n > 9");
    }
  } catch (const Error& e) {
    out.failures.push_back(std::string("poset construction: ") + e.what());
  }

  // per-component checks: criteria agreement, histogram symmetry, duality
  const std::vector<TwoColumnTableau> tableaux = enumerate_tableaux(n, k);
  for (const TwoColumnTableau& t : tableaux) {
    try {
      const SurveyRow row = survey_row(t);  // raises on criteria disagreement

      const std::vector<std::uint64_t> hist = codim_histogram(t);
      bool symmetric = true;
      for (std::size_t m = 0; m < hist.size(); ++m)
        if (hist[m] != hist[hist.size() - 1 - m]) symmetric = false;
      if (row.palindromic != symmetric) {
        out.failures.push_back("histogram symmetry: " + to_string(t));
        continue;
      }

      const TwoColumnTableau dual = schuetzenberger(t);
      if (!(schuetzenberger(dual) == t) || tau_star(dual).size() != tau_star(t).size() ||
          !(poincare(dual) == poincare(t)) || codim_histogram(dual) != hist ||
          singular_by_pattern(dual) != row.singular) {
        out.failures.push_back("duality: " + to_string(t) + " vs " + to_string(dual));
        continue;
      }

      if (column_of(t, n) == 2 && !singular_by_pattern(restrict(t)) && row.singular)
        out.failures.push_back("smoothness propagation: " + to_string(t) +
                               " is singular but its restriction is smooth");
    } catch (const Error& e) {
      out.failures.push_back(std::string("component checks: ") + e.what());
    }
  }

  out.header = "shape " + std::to_string(n) + "," + std::to_string(k) + ": " +
               (out.failures.empty() ? "ok" : "FAIL") + " (involutions " +
               std::to_string(elements) + ", tableaux " + std::to_string(tableaux.size()) + ")";
  return out;
}

int cmd_verify(int limit, bool parallel) {
  std::vector<ShapeParams> shapes;
  for (int n = 1; n <= limit; ++n)
    for (int k = 0; 2 * k <= n; ++k) shapes.push_back({n, k});
  const std::vector<ShapeCheck> checks = map_indexed(
      shapes.size(), parallel, [&](std::size_t i) { return verify_shape(shapes[i], limit); });
  std::size_t failures = 0;
  for (const ShapeCheck& c : checks) {
    std::cout << c.header;
    for (const std::string& note : c.notes) std::cout << " [" << note << "]";
    std::cout << "\n";
    for (const std::string& f : c.failures) std::cout << "  FAIL " << f << "\n";
    failures += c.failures.size();
  }
  if (failures == 0) {
    std::cout << "all checks passed (limit " << limit << ")\n";
    return 0;
  }
  std::cout << failures << " failures (limit " << limit << ")\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Components of two-column Springer fibers: enumeration, Poincare polynomials,\n"
               "singularity criteria, and the intersection graph."};
  app.require_subcommand(1);

  std::string shape_text;
  std::string tableau_text;
  std::string format = "text";
  int limit = 10;
  bool parallel = false;

  // SPRINGER2COL_LIMIT sits between the built-in default and the flag: the
  // flag wins when both are given.  A value that does not parse is an error,
  // not a silent fallback.  Read inside the callbacks so a bad setting still
  // reports through the normal exit-code path.
  const auto env_limit_value = []() -> std::optional<int> {
    const char* env = std::getenv("SPRINGER2COL_LIMIT");
    if (env == nullptr || *env == '\0') return std::nullopt;
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      fail(Errc::parse_error,
           std::string("SPRINGER2COL_LIMIT is not an integer: \"") + env + "\"");
    }
    if (value < 1 || value > 12)
      fail(Errc::bad_parameters,
           "SPRINGER2COL_LIMIT must lie in 1..12, got " + std::to_string(value));
    return value;
  };

  const auto add_shape = [&](CLI::App* sub, bool required) {
    CLI::Option* opt = sub->add_option("--shape", shape_text, "shape as n,k (e.g. 8,3)");
    if (required) opt->required();
    return opt;
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "tsv", "dot"}));
  };
  const auto add_limit = [&](CLI::App* sub) {
    return sub->add_option("--limit", limit, "largest n for exhaustive work")
        ->check(CLI::Range(1, 12));
  };

  // flag > environment > default; the environment is validated whenever set
  const auto effective_limit = [&](CLI::Option* limit_opt) {
    const std::optional<int> env = env_limit_value();
    return limit_opt->count() > 0 ? limit : env.value_or(limit);
  };

  int rc = 0;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list the standard tableaux of a shape");
  add_shape(enumerate, true);
  add_format(enumerate);
  CLI::Option* enumerate_limit = add_limit(enumerate);
  enumerate->callback([&] {
    rc = cmd_enumerate(parse_shape_arg(shape_text), format, effective_limit(enumerate_limit));
  });

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full report for one component");
  add_shape(analyze_cmd, true);
  analyze_cmd->add_option("--tableau", tableau_text, "second column, e.g. 4,6,7")
      ->required();
  add_format(analyze_cmd);
  CLI::Option* analyze_limit = add_limit(analyze_cmd);
  analyze_cmd->callback([&] {
    rc = cmd_analyze(parse_shape_arg(shape_text), parse_column_arg(tableau_text), format,
                     effective_limit(analyze_limit));
  });

  CLI::App* survey = app.add_subcommand("survey", "one-line summaries per component");
  CLI::Option* survey_shape_opt = add_shape(survey, false);
  add_format(survey);
  CLI::Option* survey_limit_opt = add_limit(survey);
  survey->add_flag("--parallel", parallel, "fan work out to a thread pool");
  survey->callback([&] {
    std::optional<ShapeParams> p;
    if (survey_shape_opt->count() > 0) p = parse_shape_arg(shape_text);
    const std::optional<int> env = env_limit_value();
    if (!p && survey_limit_opt->count() == 0 && !env)
      fail(Errc::bad_parameters, "survey needs --shape or an explicit --limit");
    rc = cmd_survey(p, format, survey_limit_opt->count() > 0 ? limit : env.value_or(limit),
                    parallel);
  });

  CLI::App* graph = app.add_subcommand("graph", "intersection graph of the components");
  add_shape(graph, true);
  add_format(graph);
  CLI::Option* graph_limit = add_limit(graph);
  graph->callback([&] {
    rc = cmd_graph(parse_shape_arg(shape_text), format, effective_limit(graph_limit));
  });

  CLI::App* verify = app.add_subcommand("verify", "run the cross-module invariant checks");
  CLI::Option* verify_limit_opt = add_limit(verify);
  verify->add_flag("--parallel", parallel, "fan work out to a thread pool");
  verify->callback([&] {
    const std::optional<int> env = env_limit_value();
    if (verify_limit_opt->count() == 0 && !env)
      fail(Errc::bad_parameters, "verify needs an explicit --limit");
    rc = cmd_verify(verify_limit_opt->count() > 0 ? limit : env.value_or(limit), parallel);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const springer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::consistency_failure:
      case Errc::criteria_disagreement:
        return 2;
      default:
        return 1;
    }
  }
  return rc;
}
