#include "enriques_kit/lattice.hpp"

#include "enriques_kit/linalg.hpp"

namespace enriques {

IntegralLattice IntegralLattice::from_gram(IntMatrix gram, std::string label) {
  if (!gram.is_square()) {
    throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be square, got " + gram.shape());
  }
  const std::size_t n = gram.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) {
        throw Error(ErrorCode::NonSymmetric, "gram[" + std::to_string(i) + "][" + std::to_string(j) +
                                                 "] != gram[" + std::to_string(j) + "][" +
                                                 std::to_string(i) + "]");
      }
    }
  }
  IntegralLattice lattice;
  lattice.det_ = enriques::determinant(gram);
  if (lattice.det_ == 0) throw Error(ErrorCode::Degenerate, "Gram matrix has zero determinant");
  lattice.even_ = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (mpz_odd_p(gram(i, i).get_mpz_t())) {
      lattice.even_ = false;
      break;
    }
  }
  lattice.gram_ = std::move(gram);
  lattice.label_ = std::move(label);
  return lattice;
}

IntegralLattice IntegralLattice::with_label(std::string label) const {
  IntegralLattice copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

IntegralLattice make_lattice(const IntMatrix& gram, std::string label) {
  return IntegralLattice::from_gram(gram, std::move(label));
}

IntegralLattice standard_lattice(std::string_view name) {
  if (name == "U") return make_lattice(IntMatrix{{0, 1}, {1, 0}}, "U");
  if (name == "E8") {
    // Negative Cartan matrix of E8: chain 0-1-2-3-4-5-6, node 7 attached to 4.
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
    auto edge = [&g](std::size_t a, std::size_t b) {
      g(a, b) = 1;
      g(b, a) = 1;
    };
    for (std::size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
    edge(4, 7);
    return make_lattice(g, "E8");
  }
  throw Error(ErrorCode::UnknownName, "unknown standard lattice '" + std::string(name) + "'");
}

IntegralLattice twist(const IntegralLattice& lattice, const Integer& k) {
  if (k == 0) throw Error(ErrorCode::ZeroTwist, "twist factor must be nonzero");
  if (k == 1) return lattice;
  std::string label = lattice.label().empty() ? std::string{} : lattice.label() + "(" + k.get_str() + ")";
  return make_lattice(k * lattice.gram(), std::move(label));
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  if (b.rank() == 0) return a;
  if (a.rank() == 0) return b;
  const std::size_t n = a.rank() + b.rank();
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b.gram()(i, j);
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
  return make_lattice(g, std::move(label));
}

IntegralLattice rank_one(const Integer& k) {
  if (k == 0) throw Error(ErrorCode::ZeroForm, "rank-one form must be nonzero");
  IntMatrix g(1, 1);
  g(0, 0) = k;
  return make_lattice(g, "<" + k.get_str() + ">");
}

Signature inertia(const RatMatrix& symmetric) {
  RatMatrix a = symmetric;
  const std::size_t n = a.rows();
  Signature sig;
  // Congruence transforms a -> P^T a P keep the inertia (Sylvester).
  auto swap_index = [&a, n](std::size_t p, std::size_t q) {
    if (p == q) return;
    a.swap_rows(p, q);
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal on the trailing block: find a(k', j) != 0 and add
      // row/column j to k' to create a nonzero diagonal 2 a(k', j).
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // trailing block is zero
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    swap_index(k, p);
    const Rational pivot = a(k, k);
    if (pivot > 0) ++sig.positive; else ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) = 0;
      a(k, i) = 0;
    }
  }
  return sig;
}

Signature signature(const IntegralLattice& lattice) { return inertia(to_rational(lattice.gram())); }

Integer determinant(const IntegralLattice& lattice) { return lattice.determinant(); }

Integer inner_product(const IntegralLattice& lattice, const IntVector& v, const IntVector& w) {
  if (v.size() != lattice.rank() || w.size() != lattice.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length must equal lattice rank " +
                                                  std::to_string(lattice.rank()));
  }
  return dot(v, lattice.gram() * w);
}

Integer q_value(const IntegralLattice& lattice, const IntVector& v) { return inner_product(lattice, v, v); }

Rational inner_product(const IntegralLattice& lattice, const RatVector& v, const RatVector& w) {
  if (v.size() != lattice.rank() || w.size() != lattice.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length must equal lattice rank " +
                                                  std::to_string(lattice.rank()));
  }
  return dot(v, to_rational(lattice.gram()) * w);
}

}  // namespace enriques
