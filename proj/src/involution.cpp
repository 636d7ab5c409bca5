#include "springer/involution.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace springer {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::out_of_range: return "OutOfRange";
    case Errc::duplicate_endpoint: return "DuplicateEndpoint";
    case Errc::degenerate_pair: return "DegeneratePair";
    case Errc::bad_interval: return "BadInterval";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::not_an_arc: return "NotAnArc";
    case Errc::not_end_point: return "NotEndPoint";
    case Errc::not_fixed_point: return "NotFixedPoint";
    case Errc::same_arc: return "SameArc";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::not_standard: return "NotStandard";
    case Errc::bad_shape: return "BadShape";
    case Errc::not_maximal: return "NotMaximal";
    case Errc::empty: return "Empty";
    case Errc::limit_exceeded: return "LimitExceeded";
    case Errc::consistency_failure: return "ConsistencyFailure";
    case Errc::criteria_disagreement: return "CriteriaDisagreement";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Involution::Involution(int n) : Involution(n, {}) {}

Involution::Involution(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 0) fail(Errc::out_of_range, "n must be nonnegative, got " + std::to_string(n_));
  pairing_.resize(n_ + 1);
  for (int i = 0; i <= n_; ++i) pairing_[i] = i;
  for (Arc& a : arcs_) {
    if (a.left == a.right)
      fail(Errc::degenerate_pair, "point " + std::to_string(a.left) + " paired with itself");
    if (a.left > a.right) std::swap(a.left, a.right);
    if (a.left < 1 || a.right > n_)
      fail(Errc::out_of_range, "arc (" + std::to_string(a.left) + "," + std::to_string(a.right) +
                                   ") outside 1.." + std::to_string(n_));
    for (int i : {a.left, a.right})
      if (pairing_[i] != i)
        fail(Errc::duplicate_endpoint, "point " + std::to_string(i) + " used twice");
    pairing_[a.left] = a.right;
    pairing_[a.right] = a.left;
  }
  std::sort(arcs_.begin(), arcs_.end());
}

int Involution::operator()(int i) const {
  if (i < 1 || i > n_)
    fail(Errc::out_of_range, "point " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  return pairing_[i];
}

bool Involution::has_arc(Arc a) const {
  if (a.left > a.right) std::swap(a.left, a.right);
  return a.left >= 1 && a.right <= n_ && a.left != a.right && pairing_[a.left] == a.right;
}

std::vector<int> Involution::left_points() const {
  std::vector<int> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.push_back(a.left);
  return out;
}

std::vector<int> Involution::right_points() const {
  std::vector<int> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.push_back(a.right);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Involution::fixed_points() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (pairing_[i] == i) out.push_back(i);
  return out;
}

int crossings(const Involution& s) {
  const auto& arcs = s.arcs();
  int count = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      // arcs are sorted by left endpoint, so arcs[i].left < arcs[j].left
      if (arcs[j].left < arcs[i].right && arcs[i].right < arcs[j].right) ++count;
  return count;
}

int bridges(const Involution& s) {
  int count = 0;
  for (int p : s.fixed_points())
    for (const Arc& a : s.arcs())
      if (a.left < p && p < a.right) ++count;
  return count;
}

int arc_count_in(const Involution& s, int a, int b) {
  if (a < 1 || b > s.n() || a > b)
    fail(Errc::bad_interval,
         "[" + std::to_string(a) + "," + std::to_string(b) + "] is not an interval of 1.." +
             std::to_string(s.n()));
  int count = 0;
  for (const Arc& arc : s.arcs())
    if (a <= arc.left && arc.right <= b) ++count;
  return count;
}

bool precedes(const Involution& s1, const Involution& s2) {
  if (s1.n() != s2.n())
    fail(Errc::size_mismatch, "comparing involutions on " + std::to_string(s1.n()) + " and " +
                                  std::to_string(s2.n()) + " points");
  if (s1.k() != s2.k())
    fail(Errc::size_mismatch, "comparing involutions with " + std::to_string(s1.k()) + " and " +
                                  std::to_string(s2.k()) + " arcs");
  // Sweep b upward for each fixed a; an arc enters [a,b] when b reaches its
  // right endpoint and its left endpoint is >= a.
  const int n = s1.n();
  for (int a = 1; a <= n; ++a) {
    int r1 = 0, r2 = 0;
    for (int b = a; b <= n; ++b) {
      int p1 = s1(b), p2 = s2(b);
      if (p1 < b && p1 >= a) ++r1;
      if (p2 < b && p2 >= a) ++r2;
      if (r1 > r2) return false;
    }
  }
  return true;
}

Involution mirror(const Involution& s) {
  std::vector<Arc> arcs;
  arcs.reserve(s.arcs().size());
  for (const Arc& a : s.arcs()) arcs.push_back({s.n() + 1 - a.right, s.n() + 1 - a.left});
  return Involution(s.n(), std::move(arcs));
}

std::vector<Arc> minimal_arcs(const Involution& s) {
  std::vector<Arc> out;
  for (const Arc& a : s.arcs()) {
    bool minimal = true;
    for (const Arc& b : s.arcs())
      if (arc_over(a, b)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<Arc, Arc>> concentric_pairs(const Involution& s) {
  std::vector<std::pair<Arc, Arc>> out;
  for (const Arc& outer : s.arcs())
    for (const Arc& inner : s.arcs()) {
      if (!arc_over(outer, inner)) continue;
      bool direct = true;
      for (const Arc& q : s.arcs())
        if (arc_over(outer, q) && arc_over(q, inner)) {
          direct = false;
          break;
        }
      if (direct) out.emplace_back(outer, inner);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Arc, Arc>> consecutive_pairs(const Involution& s) {
  std::vector<std::pair<Arc, Arc>> out;
  auto in_gap = [](int x, int lo, int hi) { return lo <= x && x <= hi; };
  for (const Arc& l : s.arcs())
    for (const Arc& r : s.arcs()) {
      if (l.right >= r.left) continue;
      bool ok = true;
      for (int p = l.right + 1; p < r.left && ok; ++p)
        if (s.is_fixed_point(p)) ok = false;
      for (const Arc& q : s.arcs()) {
        if (!ok) break;
        if (arc_over(q, l) || arc_over(q, r))
          if (in_gap(q.left, l.right, r.left) || in_gap(q.right, l.right, r.left)) ok = false;
      }
      if (ok) out.emplace_back(l, r);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Arc checked_arc(const Involution& s, Arc a) {
  if (!s.has_arc(a))
    fail(Errc::not_an_arc, "(" + std::to_string(a.left) + "," + std::to_string(a.right) +
                               ") is not an arc of " + to_string(s));
  if (a.left > a.right) std::swap(a.left, a.right);
  return a;
}

}  // namespace

std::optional<int> next_point_left(const Involution& s, Arc a) {
  a = checked_arc(s, a);
  int p = 0;
  for (int i = a.left - 1; i >= 1; --i)
    if (s.is_fixed_point(i)) {
      p = i;
      break;
    }
  if (p == 0) return std::nullopt;
  for (const Arc& q : s.arcs())
    if (arc_over(q, a) && q.left >= p) return std::nullopt;
  return p;
}

std::optional<int> next_point_right(const Involution& s, Arc a) {
  a = checked_arc(s, a);
  int p = 0;
  for (int i = a.right + 1; i <= s.n(); ++i)
    if (s.is_fixed_point(i)) {
      p = i;
      break;
    }
  if (p == 0) return std::nullopt;
  for (const Arc& q : s.arcs())
    if (arc_over(q, a) && q.right <= p) return std::nullopt;
  return p;
}

Involution move_endpoint(const Involution& s, int i, int p) {
  if (!s.is_end_point(i))
    fail(Errc::not_end_point, "point " + std::to_string(i) + " is not an end point");
  if (!s.is_fixed_point(p))
    fail(Errc::not_fixed_point, "point " + std::to_string(p) + " is not a fixed point");
  int j = s(i);
  std::vector<Arc> arcs;
  arcs.reserve(s.arcs().size());
  for (const Arc& a : s.arcs())
    if (a.left != i && a.right != i) arcs.push_back(a);
  arcs.push_back({std::min(j, p), std::max(j, p)});
  return Involution(s.n(), std::move(arcs));
}

Involution swap_endpoints(const Involution& s, int i, int j) {
  if (!s.is_end_point(i))
    fail(Errc::not_end_point, "point " + std::to_string(i) + " is not an end point");
  if (!s.is_end_point(j))
    fail(Errc::not_end_point, "point " + std::to_string(j) + " is not an end point");
  if (i == j || s(i) == j)
    fail(Errc::same_arc, "points " + std::to_string(i) + " and " + std::to_string(j) +
                             " do not lie in distinct arcs");
  int p = s(i), q = s(j);
  std::vector<Arc> arcs;
  arcs.reserve(s.arcs().size());
  for (const Arc& a : s.arcs())
    if (a.left != i && a.right != i && a.left != j && a.right != j) arcs.push_back(a);
  arcs.push_back({std::min(j, p), std::max(j, p)});
  arcs.push_back({std::min(i, q), std::max(i, q)});
  return Involution(s.n(), std::move(arcs));
}

std::vector<Involution> enumerate_involutions(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n)
    fail(Errc::bad_parameters,
         "no involutions with " + std::to_string(k) + " arcs on " + std::to_string(n) + " points");
  std::vector<Involution> out;
  std::vector<Arc> arcs;
  std::vector<char> used(n + 1, 0);
  // Arcs are chosen with strictly increasing left endpoints, each right
  // endpoint ascending before the next left endpoint advances; that is
  // exactly lexicographic order on the sorted arc list.
  std::function<void(int, int)> rec = [&](int min_left, int placed) {
    if (placed == k) {
      out.emplace_back(n, arcs);
      return;
    }
    for (int i = min_left + 1; i <= n; ++i) {
      if (n - i < 2 * (k - placed) - 1) break;  // not enough points remain
      if (used[i]) continue;
      used[i] = 1;
      for (int j = i + 1; j <= n; ++j) {
        if (used[j]) continue;
        used[j] = 1;
        arcs.push_back({i, j});
        rec(i, placed + 1);
        arcs.pop_back();
        used[j] = 0;
      }
      used[i] = 0;
    }
  };
  rec(0, 0);
  return out;
}

std::string arcs_string(const Involution& s) {
  if (s.k() == 0) return "()";
  std::string out;
  for (const Arc& a : s.arcs())
    out += "(" + std::to_string(a.left) + "," + std::to_string(a.right) + ")";
  return out;
}

std::string to_string(const Involution& s) {
  std::string out = "n=" + std::to_string(s.n()) + ";";
  if (s.k() > 0) out += " " + arcs_string(s);
  return out;
}

namespace {

// Minimal hand parser for the canonical text forms; shared with the tableau
// parser via these two helpers.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      fail(Errc::parse_error, "expected '" + std::string(1, c) + "' at position " +
                                  std::to_string(pos) + " in \"" + std::string(text) + "\"");
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      fail(Errc::parse_error, "expected an integer at position " + std::to_string(pos) +
                                  " in \"" + std::string(text) + "\"");
    return std::stoi(std::string(text.substr(start, pos - start)));
  }
  bool at_end() {
    skip_ws();
    return pos == text.size();
  }
};

}  // namespace

Involution parse_involution(std::string_view text) {
  Cursor c{text};
  c.expect('n');
  c.expect('=');
  int n = c.integer();
  c.expect(';');
  std::vector<Arc> arcs;
  while (!c.at_end()) {
    c.expect('(');
    int i = c.integer();
    c.expect(',');
    int j = c.integer();
    c.expect(')');
    arcs.push_back({i, j});
  }
  return Involution(n, std::move(arcs));
}

}  // namespace springer
