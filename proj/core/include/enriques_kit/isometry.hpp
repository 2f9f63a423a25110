#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "enriques_kit/lattice.hpp"
#include "enriques_kit/polynomial.hpp"

namespace enriques {

/// An integer matrix m (acting on column vectors in the lattice basis) with
/// m^T G m = G. Construction verifies the form and unimodularity.
class LatticeIsometry {
 public:
  static LatticeIsometry create(const IntegralLattice& lattice, IntMatrix matrix);
  static LatticeIsometry identity(const IntegralLattice& lattice);

  const IntegralLattice& lattice() const noexcept { return lattice_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t rank() const noexcept { return lattice_.rank(); }

  LatticeIsometry inverse() const;
  bool is_identity() const;

  /// Composition as maps: (a * b)(x) = a(b(x)).
  friend LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b);
  friend bool operator==(const LatticeIsometry& a, const LatticeIsometry& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  LatticeIsometry(IntegralLattice lattice, IntMatrix matrix)
      : lattice_(std::move(lattice)), matrix_(std::move(matrix)) {}

  IntegralLattice lattice_;
  IntMatrix matrix_;
};

LatticeIsometry make_isometry(const IntegralLattice& lattice, const IntMatrix& matrix);

/// Smallest k <= bound with matrix^k = 1; OrderExceedsBound otherwise.
std::uint64_t order(const LatticeIsometry& iso, std::uint64_t bound);

/// Characteristic polynomial written as prod Phi_d^{m_d}.
struct CyclotomicProfile {
  std::map<std::uint64_t, std::size_t> multiplicities;

  std::size_t multiplicity(std::uint64_t d) const {
    auto it = multiplicities.find(d);
    return it == multiplicities.end() ? 0 : it->second;
  }
  /// lcm of the listed d; equals the order for a finite-order isometry.
  std::uint64_t exponent() const;

  friend bool operator==(const CyclotomicProfile&, const CyclotomicProfile&) = default;
};

/// A primitive sublattice with HNF basis rows and the induced (possibly
/// degenerate) Gram matrix.
struct Sublattice {
  IntMatrix basis;
  IntMatrix gram;

  std::size_t rank() const noexcept { return basis.rows(); }
};

/// Saturated sublattice spanned by integer vectors (rows), in HNF.
Sublattice saturated_span(const IntegralLattice& ambient, const IntMatrix& generators);

/// { x : m x = x }.
Sublattice invariant_sublattice(const LatticeIsometry& iso);

/// Orthogonal complement of the invariant sublattice inside the lattice.
Sublattice coinvariant_sublattice(const LatticeIsometry& iso);

/// Orthogonal complement (w.r.t. the lattice form) of the rows of `basis`.
Sublattice orthogonal_complement(const IntegralLattice& ambient, const IntMatrix& basis);

/// Factors the characteristic polynomial by trial division with Phi_d over
/// every d with phi(d) <= rank, then checks m^lcm = 1. A leftover factor or
/// a unipotent part raises NonCyclotomicFactor.
CyclotomicProfile cyclotomic_profile(const LatticeIsometry& iso);

/// Complex dimension of the eigenspace of one primitive d-th root of unity
/// (`primitive` = true), or of all primitive d-th roots together
/// (m_d * phi(d), `primitive` = false).
std::size_t eigenspace_dimension(const LatticeIsometry& iso, std::uint64_t d, bool primitive = true);

/// phi g^-1 phi^-1 g. Identity iff phi and g commute.
LatticeIsometry commutator_defect(const LatticeIsometry& phi, const LatticeIsometry& g);

struct DecompositionReport {
  std::size_t lattice_rank = 0;
  std::size_t invariant_rank = 0;
  std::size_t coinvariant_rank = 0;
  /// invariant_rank + coinvariant_rank == lattice_rank and the rational
  /// spans meet only in 0.
  bool direct = false;
};

/// Rational orthogonal splitting into invariant and coinvariant parts.
/// Non-directness is reported, not thrown; require_direct() raises it.
DecompositionReport decomposition_check(const LatticeIsometry& iso);

/// Throws DecompositionFails when the report is not direct.
void require_direct(const DecompositionReport& report);

}  // namespace enriques
