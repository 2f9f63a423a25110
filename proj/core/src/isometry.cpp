#include "enriques_kit/isometry.hpp"

#include "enriques_kit/linalg.hpp"
#include "enriques_kit/number_theory.hpp"

namespace enriques {

LatticeIsometry LatticeIsometry::create(const IntegralLattice& lattice, IntMatrix matrix) {
  if (!matrix.is_square() || matrix.rows() != lattice.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "isometry matrix is " + matrix.shape() +
                                                  ", lattice rank is " + std::to_string(lattice.rank()));
  }
  if (matrix.transpose() * lattice.gram() * matrix != lattice.gram()) {
    throw Error(ErrorCode::NotAnIsometry, "m^T G m != G");
  }
  const Integer det = determinant(matrix);
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NotUnimodular, "det(m) = " + det.get_str());
  }
  return LatticeIsometry(lattice, std::move(matrix));
}

LatticeIsometry LatticeIsometry::identity(const IntegralLattice& lattice) {
  return LatticeIsometry(lattice, IntMatrix::identity(lattice.rank()));
}

LatticeIsometry LatticeIsometry::inverse() const {
  // m^-1 = G^-1 m^T G for an isometry; integer_inverse is the direct route.
  auto inv = integer_inverse(matrix_);
  if (!inv) throw Error(ErrorCode::NotUnimodular, "isometry matrix is not invertible over Z");
  return LatticeIsometry(lattice_, std::move(*inv));
}

bool LatticeIsometry::is_identity() const { return enriques::is_identity(matrix_); }

LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b) {
  if (!(a.lattice_ == b.lattice_)) {
    throw Error(ErrorCode::DimensionMismatch, "isometries act on different lattices");
  }
  return LatticeIsometry(a.lattice_, a.matrix_ * b.matrix_);
}

LatticeIsometry make_isometry(const IntegralLattice& lattice, const IntMatrix& matrix) {
  return LatticeIsometry::create(lattice, matrix);
}

std::uint64_t order(const LatticeIsometry& iso, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidArgument, "order bound must be positive");
  IntMatrix p = iso.matrix();
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (is_identity(p)) return k;
    p = p * iso.matrix();
  }
  throw Error(ErrorCode::OrderExceedsBound, "no power up to " + std::to_string(bound) + " is the identity");
}

std::uint64_t CyclotomicProfile::exponent() const {
  std::uint64_t e = 1;
  for (const auto& [d, m] : multiplicities) e = lcm(e, d);
  return e;
}

Sublattice saturated_span(const IntegralLattice& ambient, const IntMatrix& generators) {
  if (generators.rows() > 0 && generators.cols() != ambient.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "generator length must equal lattice rank");
  }
  const std::size_t n = ambient.rank();
  // Saturation of span(gens) = kernel of the kernel.
  const IntMatrix annihilator = integer_kernel(generators.rows() == 0 ? IntMatrix(0, n) : generators);
  IntMatrix basis = annihilator.rows() == 0 ? hermite_normal_form(IntMatrix::identity(n))
                                            : integer_kernel(annihilator);
  Sublattice s;
  s.gram = basis * ambient.gram() * basis.transpose();
  s.basis = std::move(basis);
  return s;
}

Sublattice invariant_sublattice(const LatticeIsometry& iso) {
  const IntMatrix fixed = iso.matrix() - IntMatrix::identity(iso.rank());
  Sublattice s;
  s.basis = integer_kernel(fixed);
  s.gram = s.basis * iso.lattice().gram() * s.basis.transpose();
  return s;
}

Sublattice orthogonal_complement(const IntegralLattice& ambient, const IntMatrix& basis) {
  const std::size_t n = ambient.rank();
  Sublattice s;
  s.basis = basis.rows() == 0 ? IntMatrix::identity(n) : integer_kernel(basis * ambient.gram());
  s.gram = s.basis * ambient.gram() * s.basis.transpose();
  return s;
}

Sublattice coinvariant_sublattice(const LatticeIsometry& iso) {
  return orthogonal_complement(iso.lattice(), invariant_sublattice(iso).basis);
}

CyclotomicProfile cyclotomic_profile(const LatticeIsometry& iso) {
  IntPolynomial rest = characteristic_polynomial(iso.matrix());
  CyclotomicProfile profile;
  for (std::uint64_t d : totient_at_most(iso.rank())) {
    const IntPolynomial& phi = cyclotomic_polynomial(d);
    std::size_t m = 0;
    while (rest.degree() >= phi.degree()) {
      auto division = divide_by_monic(rest, phi);
      if (!division.remainder.is_zero()) break;
      rest = std::move(division.quotient);
      ++m;
    }
    if (m > 0) profile.multiplicities.emplace(d, m);
    if (rest.degree() == 0) break;
  }
  if (rest.degree() != 0) {
    throw Error(ErrorCode::NonCyclotomicFactor,
                "characteristic polynomial has non-cyclotomic factor " + rest.to_string());
  }
  if (!is_identity(power(iso.matrix(), profile.exponent()))) {
    throw Error(ErrorCode::NonCyclotomicFactor,
                "eigenvalues are roots of unity but m^" + std::to_string(profile.exponent()) +
                    " != 1 (infinite order)");
  }
  return profile;
}

std::size_t eigenspace_dimension(const LatticeIsometry& iso, std::uint64_t d, bool primitive) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "root order must be positive");
  const std::size_t m = cyclotomic_profile(iso).multiplicity(d);
  return primitive ? m : m * static_cast<std::size_t>(euler_phi(d));
}

LatticeIsometry commutator_defect(const LatticeIsometry& phi, const LatticeIsometry& g) {
  return phi * g.inverse() * phi.inverse() * g;
}

DecompositionReport decomposition_check(const LatticeIsometry& iso) {
  const Sublattice m = invariant_sublattice(iso);
  const Sublattice t = coinvariant_sublattice(iso);
  DecompositionReport report;
  report.lattice_rank = iso.rank();
  report.invariant_rank = m.rank();
  report.coinvariant_rank = t.rank();
  IntMatrix stacked(0, iso.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) stacked.append_row(m.basis.row(i));
  for (std::size_t i = 0; i < t.rank(); ++i) stacked.append_row(t.basis.row(i));
  report.direct = m.rank() + t.rank() == iso.rank() && rank(stacked) == iso.rank();
  return report;
}

void require_direct(const DecompositionReport& report) {
  if (!report.direct) {
    throw Error(ErrorCode::DecompositionFails,
                "invariant rank " + std::to_string(report.invariant_rank) + " + coinvariant rank " +
                    std::to_string(report.coinvariant_rank) + " does not split rank " +
                    std::to_string(report.lattice_rank) + " directly");
  }
}

}  // namespace enriques
