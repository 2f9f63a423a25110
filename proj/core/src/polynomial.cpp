#include "enriques_kit/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace enriques {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, Integer coeff) {
  std::vector<Integer> c(degree + 1, Integer(0));
  c[degree] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i > 0) out << var;
    if (i > 1) out << "^" << i;
    first = false;
  }
  return out.str();
}

PolynomialDivision divide_by_monic(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero() || divisor.leading() != 1) {
    throw Error(ErrorCode::InvalidArgument, "divisor must be monic");
  }
  std::vector<Integer> rem = dividend.coeffs();
  const long dd = divisor.degree();
  if (dividend.degree() < dd) return {IntPolynomial{}, dividend};
  std::vector<Integer> quot(static_cast<std::size_t>(dividend.degree() - dd + 1), Integer(0));
  for (long i = dividend.degree(); i >= dd; --i) {
    const Integer lead = rem[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    const auto shift = static_cast<std::size_t>(i - dd);
    quot[shift] = lead;
    for (long j = 0; j <= dd; ++j) {
      rem[shift + static_cast<std::size_t>(j)] -= lead * divisor.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

const IntPolynomial& cyclotomic_polynomial(std::uint64_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<std::uint64_t, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
  IntPolynomial p = IntPolynomial::monomial(d) - IntPolynomial::monomial(0);
  for (std::uint64_t e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    p = divide_by_monic(p, cyclotomic_polynomial(e)).quotient;
  }
  std::lock_guard<std::mutex> lock(mutex);
  // std::map references stay valid across later insertions.
  return cache.emplace(d, std::move(p)).first->second;
}

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPolynomial::monomial(0);

  // Coefficients highest degree first while building.
  std::vector<Integer> c{Integer(1), Integer(-m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // A_{r+1} = [[A_r, s], [t, a]]; the Toeplitz column is
    // 1, -a, -t s, -t A_r s, ..., -t A_r^{r-1} s.
    std::vector<Integer> col;
    col.reserve(r + 2);
    col.emplace_back(1);
    col.emplace_back(-m(r, r));
    IntVector s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer ts = 0;
      for (std::size_t j = 0; j < r; ++j) ts += m(r, j) * s[j];
      col.push_back(-ts);
      if (k + 1 < r) {
        IntVector next(r, Integer(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * s[j];
        s = std::move(next);
      }
    }
    std::vector<Integer> next_c(r + 2, Integer(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next_c[i] += col[i - j] * c[j];
    c = std::move(next_c);
  }
  std::reverse(c.begin(), c.end());
  return IntPolynomial(std::move(c));
}

}  // namespace enriques
