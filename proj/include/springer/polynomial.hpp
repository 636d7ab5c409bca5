#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "springer/error.hpp"

namespace springer {

// Dense polynomial with nonnegative integer coefficients, stored ascending
// by degree with no trailing zeros.  uint64 is ample here: the largest
// coefficients that arise are cell counts of flag varieties at n <= 12.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // the zero polynomial
  explicit IntPolynomial(std::vector<std::uint64_t> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  std::uint64_t coeff(int m) const {
    return m >= 0 && m < static_cast<int>(coeffs_.size()) ? coeffs_[m] : 0;
  }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  std::uint64_t value_at_one() const;

  IntPolynomial substitute_square() const;  // p(x) -> p(x^2)

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;  // e.g. "1 + 2x^2 + x^4"

 private:
  std::vector<std::uint64_t> coeffs_;
};

// Coefficient list reads the same in both directions.
bool is_palindromic(const IntPolynomial& p);

// [p]_x = 1 + x + ... + x^(p-1)
IntPolynomial q_integer(int p);

// [p]_x! = [1]_x [2]_x ... [p]_x; q_factorial(0) = 1
IntPolynomial q_factorial(int p);

}  // namespace springer
