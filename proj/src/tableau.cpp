#include "springer/tableau.hpp"

#include <algorithm>
#include <cctype>

namespace springer {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

TwoColumnTableau::TwoColumnTableau(int n) : TwoColumnTableau(n, {}) {}

TwoColumnTableau::TwoColumnTableau(int n, std::vector<int> second_column)
    : n_(n), second_column_(std::move(second_column)) {
  if (n_ < 0) fail(Errc::bad_shape, "n must be nonnegative, got " + std::to_string(n_));
  std::sort(second_column_.begin(), second_column_.end());
  const int k = static_cast<int>(second_column_.size());
  if (2 * k > n_)
    fail(Errc::bad_shape, "second column of length " + std::to_string(k) +
                              " does not fit a two-column shape on " + std::to_string(n_) +
                              " boxes");
  for (int p = 0; p < k; ++p) {
    int j = second_column_[p];
    if (j < 1 || j > n_)
      fail(Errc::out_of_range, "entry " + std::to_string(j) + " outside 1.." + std::to_string(n_));
    if (p > 0 && second_column_[p - 1] == j)
      fail(Errc::not_standard, "entry " + std::to_string(j) + " appears twice");
    // row p+1 of the second column must sit below p earlier entries in each
    // column, i.e. j >= 2(p+1)
    if (j < 2 * (p + 1))
      fail(Errc::not_standard, "entry " + std::to_string(j) + " too small for row " +
                                   std::to_string(p + 1) + " of the second column");
  }
}

std::vector<int> TwoColumnTableau::first_column() const {
  std::vector<int> out;
  out.reserve(n_ - k());
  std::size_t p = 0;
  for (int i = 1; i <= n_; ++i) {
    if (p < second_column_.size() && second_column_[p] == i)
      ++p;
    else
      out.push_back(i);
  }
  return out;
}

std::vector<TwoColumnTableau> enumerate_tableaux(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n)
    fail(Errc::bad_shape,
         "no two-column tableaux with n=" + std::to_string(n) + ", k=" + std::to_string(k));
  std::vector<TwoColumnTableau> out;
  std::vector<int> col;
  auto rec = [&](auto&& self, int next) -> void {
    const int p = static_cast<int>(col.size());
    if (p == k) {
      out.emplace_back(n, col);
      return;
    }
    for (int j = std::max(next, 2 * (p + 1)); j <= n; ++j) {
      col.push_back(j);
      self(self, j + 1);
      col.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

int column_of(const TwoColumnTableau& t, int i) {
  if (i < 1 || i > t.n())
    fail(Errc::out_of_range, "entry " + std::to_string(i) + " outside 1.." + std::to_string(t.n()));
  return std::binary_search(t.second_column().begin(), t.second_column().end(), i) ? 2 : 1;
}

std::vector<int> tau_star(const TwoColumnTableau& t) {
  std::vector<int> out;
  for (int i = 1; i + 1 <= t.n(); ++i)
    if (column_of(t, i) == 1 && column_of(t, i + 1) == 2) out.push_back(i);
  return out;
}

Involution sigma_of_tableau(const TwoColumnTableau& t) {
  std::vector<char> taken(t.n() + 1, 0);  // first-column entries already used
  std::vector<Arc> arcs;
  arcs.reserve(t.k());
  for (int j : t.second_column()) {
    int i = j - 1;
    while (i >= 1 && (column_of(t, i) == 2 || taken[i])) --i;
    // standardness guarantees a free first-column entry below every j
    if (i < 1) fail(Errc::consistency_failure, "no partner for " + std::to_string(j));
    taken[i] = 1;
    arcs.push_back({i, j});
  }
  return Involution(t.n(), std::move(arcs));
}

TwoColumnTableau tableau_of_sigma(const Involution& s) {
  if (crossings(s) != 0 || bridges(s) != 0)
    fail(Errc::not_maximal, to_string(s) + " has crossings or bridges");
  return TwoColumnTableau(s.n(), s.right_points());
}

TwoColumnTableau schuetzenberger(const TwoColumnTableau& t) {
  return tableau_of_sigma(mirror(sigma_of_tableau(t)));
}

TwoColumnTableau restrict(const TwoColumnTableau& t) {
  if (t.n() == 0) fail(Errc::empty, "cannot restrict the empty tableau");
  std::vector<int> col = t.second_column();
  if (!col.empty() && col.back() == t.n()) col.pop_back();
  return TwoColumnTableau(t.n() - 1, std::move(col));
}

RowStandardTableau::RowStandardTableau(int n, std::vector<int> first_column,
                                       std::vector<int> second_column)
    : n_(n), first_column_(std::move(first_column)), second_column_(std::move(second_column)) {
  const int k = static_cast<int>(second_column_.size());
  if (n_ < 0 || 2 * k > n_ || static_cast<int>(first_column_.size()) != n_ - k)
    fail(Errc::bad_shape, "column lengths do not give a two-column shape on " +
                              std::to_string(n_) + " boxes");
  std::vector<char> seen(n_ + 1, 0);
  auto check_entry = [&](int e) {
    if (e < 1 || e > n_)
      fail(Errc::out_of_range, "entry " + std::to_string(e) + " outside 1.." + std::to_string(n_));
    if (seen[e]) fail(Errc::not_standard, "entry " + std::to_string(e) + " appears twice");
    seen[e] = 1;
  };
  for (int e : first_column_) check_entry(e);
  for (int e : second_column_) check_entry(e);
  for (int p = 0; p < k; ++p)
    if (first_column_[p] >= second_column_[p])
      fail(Errc::not_standard, "row " + std::to_string(p + 1) + " does not increase");
}

RowStandardTableau tau0(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n)
    fail(Errc::bad_shape,
         "no two-column shape with n=" + std::to_string(n) + ", k=" + std::to_string(k));
  std::vector<int> first, second;
  for (int p = 1; p <= n - k; ++p) first.push_back(p);
  for (int p = 1; p <= k; ++p) second.push_back(n - k + p);
  return RowStandardTableau(n, std::move(first), std::move(second));
}

std::vector<RowStandardTableau> x_tau0(int n, int k) {
  RowStandardTableau base = tau0(n, k);
  std::vector<RowStandardTableau> out;
  for (int i = 1; i <= n - k; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> first = base.first_column();
      std::vector<int> second = base.second_column();
      for (auto* col : {&first, &second})
        for (int& e : *col) {
          if (e == i)
            e = j;
          else if (e == j)
            e = i;
        }
      bool row_standard = true;
      for (int p = 0; p < k && row_standard; ++p)
        if (first[p] >= second[p]) row_standard = false;
      if (row_standard) out.emplace_back(n, std::move(first), std::move(second));
    }
  return out;
}

Involution sigma_of_rowstandard(const RowStandardTableau& t) {
  std::vector<Arc> arcs;
  arcs.reserve(t.k());
  for (int p = 0; p < t.k(); ++p) arcs.push_back({t.first_column()[p], t.second_column()[p]});
  return Involution(t.n(), std::move(arcs));
}

std::string to_string(const TwoColumnTableau& t) {
  return "n=" + std::to_string(t.n()) + "; col2=" + join(t.second_column());
}

TwoColumnTableau parse_tableau(std::string_view text) {
  // same grammar style as parse_involution: "n=8; col2=4,6,7"
  auto skip_ws = [&](std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::size_t pos = 0;
  auto expect = [&](std::string_view word) {
    skip_ws(pos);
    if (text.substr(pos, word.size()) != word)
      fail(Errc::parse_error, "expected '" + std::string(word) + "' at position " +
                                  std::to_string(pos) + " in \"" + std::string(text) + "\"");
    pos += word.size();
  };
  auto integer = [&]() {
    skip_ws(pos);
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      fail(Errc::parse_error, "expected an integer at position " + std::to_string(pos) + " in \"" +
                                  std::string(text) + "\"");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  expect("n");
  expect("=");
  int n = integer();
  expect(";");
  expect("col2");
  expect("=");
  std::vector<int> col;
  skip_ws(pos);
  if (pos < text.size()) {
    col.push_back(integer());
    skip_ws(pos);
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      col.push_back(integer());
      skip_ws(pos);
    }
  }
  if (pos != text.size())
    fail(Errc::parse_error,
         "trailing input at position " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
  return TwoColumnTableau(n, std::move(col));
}

}  // namespace springer
