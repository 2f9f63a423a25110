#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enriques_kit/matrix.hpp"

namespace enriques {

/// Dense integer polynomial, coefficients stored from the constant term up.
/// The zero polynomial has no coefficients; leading zeros are always trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial monomial(std::size_t degree, Integer coeff = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Division by a monic divisor; exact over the integers.
PolynomialDivision divide_by_monic(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// The d-th cyclotomic polynomial, d >= 1. Results are memoized in a
/// process-wide table guarded by a mutex.
const IntPolynomial& cyclotomic_polynomial(std::uint64_t d);

/// det(x I - m) by Berkowitz's division-free algorithm.
IntPolynomial characteristic_polynomial(const IntMatrix& m);

}  // namespace enriques
