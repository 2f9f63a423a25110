#include "enriques_kit/fixtures.hpp"

namespace enriques::fixtures {

LatticeIsometry kummer_psi() {
  const IntegralLattice u = standard_lattice("U");
  const IntegralLattice lattice = direct_sum(direct_sum(u, u), u);
  // Columns are the images of the basis vectors:
  // e1 -> -e3, e2 -> -e4, e3 -> e1, e4 -> e2, e5 -> e5, e6 -> e6.
  const IntMatrix psi{
      {0, 0, 1, 0, 0, 0},
      {0, 0, 0, 1, 0, 0},
      {-1, 0, 0, 0, 0, 0},
      {0, -1, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 1},
  };
  return make_isometry(lattice, psi);
}

IntegralLattice enriques_involution_invariant(unsigned long n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2 for <-2(n-1)> to be nonzero");
  const IntegralLattice u2 = twist(standard_lattice("U"), 2);
  const IntegralLattice e8_2 = twist(standard_lattice("E8"), 2);
  const IntegralLattice tail = rank_one(Integer(-2) * Integer(n - 1));
  return direct_sum(direct_sum(u2, e8_2), tail);
}

io::Scenario pell_tiling() {
  const IntegralLattice lattice = make_lattice(IntMatrix{{1, 0}, {0, -2}}, "<1>+<-2>");
  io::Scenario s{.name = "pell-tiling",
                 .lattice = lattice,
                 .generators = {make_isometry(lattice, IntMatrix{{3, 4}, {2, 3}})},
                 .word_length = 5,
                 .kernel = {},
                 .cone = cone_from_rays(2, {make_int_vector({1, 0}), make_int_vector({3, 2})}),
                 .samples = {},
                 .positive_reference = make_int_vector({1, 0})};
  for (long p = 1; p <= 20; ++p)
    for (long q = -20; q <= 20; ++q) s.samples.push_back(to_rational(make_int_vector({p, q})));
  return s;
}

std::vector<std::string> names() { return {"kummer-psi", "enriques-involution-invariant", "pell-tiling"}; }

}  // namespace enriques::fixtures
