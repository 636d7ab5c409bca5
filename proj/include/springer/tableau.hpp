#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "springer/involution.hpp"

namespace springer {

// Standard filling of the two-column Young diagram with column lengths
// (n-k, k): entries 1..n increase down both columns and across the k
// two-cell rows.  The sorted second column determines everything.
class TwoColumnTableau {
 public:
  TwoColumnTableau() = default;              // empty tableau, n = 0
  explicit TwoColumnTableau(int n);          // single column 1..n, k = 0
  TwoColumnTableau(int n, std::vector<int> second_column);

  int n() const { return n_; }
  int k() const { return static_cast<int>(second_column_.size()); }
  const std::vector<int>& second_column() const { return second_column_; }
  std::vector<int> first_column() const;

  friend bool operator==(const TwoColumnTableau& a, const TwoColumnTableau& b) {
    return a.n_ == b.n_ && a.second_column_ == b.second_column_;
  }
  friend bool operator<(const TwoColumnTableau& a, const TwoColumnTableau& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.second_column_ < b.second_column_;
  }

 private:
  int n_ = 0;
  std::vector<int> second_column_;  // strictly increasing
};

// All standard tableaux of the shape, ordered lexicographically on the
// second column.  |result| = C(n,k) - C(n,k-1).
std::vector<TwoColumnTableau> enumerate_tableaux(int n, int k);

// 1 or 2: which column the entry i sits in.
int column_of(const TwoColumnTableau& t, int i);

// Entries i with i in column 1 and i+1 in column 2; equivalently the left
// endpoints of the minimal arcs of sigma_of_tableau(t).
std::vector<int> tau_star(const TwoColumnTableau& t);

// The unique noncrossing, bridge-free involution whose right endpoints are
// the second column: each second-column entry grabs the largest still-free
// first-column entry below it.
Involution sigma_of_tableau(const TwoColumnTableau& t);

// Inverse of sigma_of_tableau; requires crossings = bridges = 0.
TwoColumnTableau tableau_of_sigma(const Involution& s);

// Schuetzenberger dual: the tableau of the mirrored arc pattern.
TwoColumnTableau schuetzenberger(const TwoColumnTableau& t);

// Remove the box containing n (a shape-preserving restriction to 1..n-1).
TwoColumnTableau restrict(const TwoColumnTableau& t);

// Filling of the same diagram whose rows increase left to right, with no
// condition down the columns.  Stored as the two columns read top to bottom.
class RowStandardTableau {
 public:
  RowStandardTableau(int n, std::vector<int> first_column, std::vector<int> second_column);

  int n() const { return n_; }
  int k() const { return static_cast<int>(second_column_.size()); }
  const std::vector<int>& first_column() const { return first_column_; }
  const std::vector<int>& second_column() const { return second_column_; }

  friend bool operator==(const RowStandardTableau& a, const RowStandardTableau& b) {
    return a.n_ == b.n_ && a.first_column_ == b.first_column_ &&
           a.second_column_ == b.second_column_;
  }
  friend bool operator<(const RowStandardTableau& a, const RowStandardTableau& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.first_column_ != b.first_column_) return a.first_column_ < b.first_column_;
    return a.second_column_ < b.second_column_;
  }

 private:
  int n_ = 0;
  std::vector<int> first_column_;   // n-k entries
  std::vector<int> second_column_;  // k entries
};

// The base point: row p reads (p, n-k+p), single cells k+1..n-k below.
RowStandardTableau tau0(int n, int k);

// All row-standard tableaux obtained from tau0 by one transposition of
// entries i < j with i <= n-k, ordered lexicographically on (i,j).
std::vector<RowStandardTableau> x_tau0(int n, int k);

// Pairs the p-th entries of the two columns, one arc per two-cell row.
Involution sigma_of_rowstandard(const RowStandardTableau& t);

// Canonical form "n=8; col2=4,6,7"; k = 0 prints as "n=8; col2=".
std::string to_string(const TwoColumnTableau& t);
TwoColumnTableau parse_tableau(std::string_view text);

}  // namespace springer
