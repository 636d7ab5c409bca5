#include "springer/polynomial.hpp"

#include <algorithm>

namespace springer {

IntPolynomial::IntPolynomial(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t IntPolynomial::value_at_one() const {
  std::uint64_t sum = 0;
  for (std::uint64_t c : coeffs_) sum += c;
  return sum;
}

IntPolynomial IntPolynomial::substitute_square() const {
  if (coeffs_.empty()) return {};
  std::vector<std::uint64_t> out(2 * coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[2 * i] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    if (!out.empty()) out += " + ";
    if (m == 0 || coeffs_[m] != 1) out += std::to_string(coeffs_[m]);
    if (m == 1) out += "x";
    if (m > 1) out += "x^" + std::to_string(m);
  }
  return out;
}

bool is_palindromic(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

IntPolynomial q_integer(int p) {
  if (p < 0) fail(Errc::bad_parameters, "q_integer of " + std::to_string(p));
  return IntPolynomial(std::vector<std::uint64_t>(p, 1));
}

IntPolynomial q_factorial(int p) {
  if (p < 0) fail(Errc::bad_parameters, "q_factorial of " + std::to_string(p));
  IntPolynomial out = IntPolynomial::one();
  for (int i = 2; i <= p; ++i) out = out * q_integer(i);
  return out;
}

}  // namespace springer
