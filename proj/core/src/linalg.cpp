#include "enriques_kit/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace enriques {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVector primitive(IntVector v) {
  const Integer g = content(v);
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

IntVector primitive(const RatVector& v) {
  Integer denom = 1;
  for (const auto& x : v) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Integer scaled = x.get_num() * (denom / x.get_den());
    out.push_back(scaled);
  }
  return primitive(std::move(out));
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> reduce_rows(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const Rational pivot = a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) /= pivot;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Unimodular row reduction of the leading `ncols` columns to echelon form.
// Operations act on whole rows, so trailing columns record the transform.
// Returns the number of nonzero rows in the reduced block.
std::size_t echelonize(IntMatrix& a, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        if (best == a.rows() || abs(a(i, c)) < abs(a(best, c))) best = i;
      }
      if (best == a.rows()) break;
      a.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= q * a(r, j);
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < a.rows() && a(r, c) != 0) {
      if (a(r, c) < 0) {
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = -a(r, j);
      }
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        if (q == 0) continue;
        for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= q * a(r, j);
      }
      ++r;
    }
  }
  return r;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return reduce_rows(a).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

IntMatrix hermite_normal_form(const IntMatrix& rows) {
  IntMatrix a = rows;
  const std::size_t r = echelonize(a, a.cols());
  IntMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  // [m^T | I]: a unimodular U with U m^T in echelon form; rows of U whose
  // left block vanished span the integer kernel.
  IntMatrix aug(n, k + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(j, i);
    aug(i, k + i) = 1;
  }
  const std::size_t r = echelonize(aug, k);
  IntMatrix basis(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i - r, j) = aug(i, k + j);
  return hermite_normal_form(basis);
}

IntMatrix rational_kernel(const RatMatrix& m) {
  RatMatrix a = m;
  const auto pivots = reduce_rows(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  IntMatrix basis(0, a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.append_row(primitive(v));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = reduce_rows(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& m) {
  const auto inv = inverse(to_rational(m));
  if (!inv) return std::nullopt;
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = (*inv)(i, j);
      if (x.get_den() != 1) return std::nullopt;
      out(i, j) = x.get_num();
    }
  }
  return out;
}

IntMatrix power(const IntMatrix& m, unsigned long exponent) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "power of non-square matrix");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool is_identity(const IntMatrix& m) {
  return m.is_square() && m == IntMatrix::identity(m.rows());
}

RatVector project_onto_complement(const RatVector& v, const IntMatrix& rows) {
  if (rows.rows() == 0) return v;
  // v - B^T (B B^T)^{-1} B v
  const RatMatrix b = to_rational(rows);
  const RatMatrix bt = b.transpose();
  const auto gram_inv = inverse(b * bt);
  if (!gram_inv) throw Error(ErrorCode::DependentBasis, "projection basis is dependent");
  const RatVector coeffs = (*gram_inv) * (b * v);
  RatVector out = v;
  const RatVector correction = bt * coeffs;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= correction[i];
  return out;
}

}  // namespace enriques
