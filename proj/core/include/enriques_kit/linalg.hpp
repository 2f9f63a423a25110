#pragma once

#include <cstddef>
#include <optional>

#include "enriques_kit/matrix.hpp"

namespace enriques {

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Row Hermite normal form: positive pivots, entries above each pivot reduced
/// into [0, pivot), zero rows dropped. Two integer matrices span the same
/// lattice iff their HNFs are equal.
IntMatrix hermite_normal_form(const IntMatrix& rows);

/// Saturated basis (as HNF rows) of { x in Z^n : m x = 0 }, n = m.cols().
/// The basis comes out of a unimodular transform, so Z^n / kernel is
/// torsion-free without a separate saturation pass.
IntMatrix integer_kernel(const IntMatrix& m);

/// Basis (rows) of { x in Q^n : m x = 0 }, scaled to primitive integer rows.
/// Not saturated in general; use integer_kernel when primitivity matters.
IntMatrix rational_kernel(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Inverse over the integers; nullopt when m is singular or det(m) != +-1.
std::optional<IntMatrix> integer_inverse(const IntMatrix& m);

IntMatrix power(const IntMatrix& m, unsigned long exponent);

bool is_identity(const IntMatrix& m);

/// Orthogonal projection (standard dot product) of v onto the orthogonal
/// complement of the row span of `rows`.
RatVector project_onto_complement(const RatVector& v, const IntMatrix& rows);

}  // namespace enriques
