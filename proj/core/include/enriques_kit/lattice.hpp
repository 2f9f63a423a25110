#pragma once

#include <string>
#include <string_view>

#include "enriques_kit/matrix.hpp"

namespace enriques {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A free Z-module with a nondegenerate symmetric integral bilinear form,
/// stored as its Gram matrix in a fixed basis. Immutable once built.
class IntegralLattice {
 public:
  /// Validates symmetry and nondegeneracy. Rank 0 is allowed and acts as
  /// the neutral element for direct_sum.
  static IntegralLattice from_gram(IntMatrix gram, std::string label = {});

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const std::string& label() const noexcept { return label_; }
  const Integer& determinant() const noexcept { return det_; }
  /// Derived from the diagonal: every q(v) is even iff every gram(i,i) is.
  bool is_even() const noexcept { return even_; }

  IntegralLattice with_label(std::string label) const;

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntegralLattice() = default;

  IntMatrix gram_;
  std::string label_;
  Integer det_ = 1;
  bool even_ = true;
};

IntegralLattice make_lattice(const IntMatrix& gram, std::string label = {});

/// "U" (hyperbolic plane) or "E8" (negative definite, |det| = 1).
IntegralLattice standard_lattice(std::string_view name);

/// L(k): the form multiplied by k.
IntegralLattice twist(const IntegralLattice& lattice, const Integer& k);

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

/// <k>.
IntegralLattice rank_one(const Integer& k);

/// Sylvester inertia via exact symmetric pivoting over Q.
Signature signature(const IntegralLattice& lattice);

Integer determinant(const IntegralLattice& lattice);
Integer inner_product(const IntegralLattice& lattice, const IntVector& v, const IntVector& w);
Integer q_value(const IntegralLattice& lattice, const IntVector& v);

/// Rational extension of the form, used for sample vectors.
Rational inner_product(const IntegralLattice& lattice, const RatVector& v, const RatVector& w);

/// Counts positive and negative squares of any symmetric rational matrix
/// (degenerate allowed; the zero part is simply not counted).
Signature inertia(const RatMatrix& symmetric);

}  // namespace enriques
