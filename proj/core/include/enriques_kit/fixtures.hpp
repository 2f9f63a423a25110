#pragma once

#include <string>
#include <vector>

#include "enriques_kit/io.hpp"

namespace enriques::fixtures {

/// U + U + U with the isometry induced on H^2 of E_i x F by
/// (z, w) -> (i z + a1, w + a2), in the basis
/// dz1^dw1, dz1^dw2, dz2^dw1, dz2^dw2, dz1^dz2, dw1^dw2.
LatticeIsometry kummer_psi();

/// U(2) + E8(2) + <-2(n-1)>: invariant lattice of the natural involution on
/// S^[n] induced by an Enriques involution of the K3 surface S. n >= 2.
IntegralLattice enriques_involution_invariant(unsigned long n);

/// Lattice diag(1, -2) with the Pell isometry [[3,4],[2,3]], the wedge
/// spanned by (1,0) and (3,2), words of length <= 5 and the integer samples
/// 0 < p <= 20, |q| <= 20 inside the positive cone.
io::Scenario pell_tiling();

std::vector<std::string> names();

}  // namespace enriques::fixtures
