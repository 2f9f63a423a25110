#include <doctest.h>

#include <random>

#include "enriques_kit/fixtures.hpp"
#include "enriques_kit/isometry.hpp"
#include "enriques_kit/linalg.hpp"
#include "enriques_kit/number_theory.hpp"
#include "oracles.hpp"

using namespace enriques;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an enriques::Error");
  return ErrorCode::UsageError;
}

LatticeIsometry minus_identity(const IntegralLattice& l) {
  return make_isometry(l, Integer(-1) * IntMatrix::identity(l.rank()));
}

IntegralLattice pell_lattice() { return make_lattice(IntMatrix{{1, 0}, {0, -2}}); }

}  // namespace

TEST_SUITE("isometry") {

TEST_CASE("make_isometry") {
  const auto u = standard_lattice("U");
  CHECK_NOTHROW(make_isometry(u, IntMatrix{{0, 1}, {1, 0}}));
  CHECK_NOTHROW(fixtures::kummer_psi());
  CHECK(code_of([&] { make_isometry(u, IntMatrix{{2, 0}, {0, 2}}); }) == ErrorCode::NotAnIsometry);
  CHECK(code_of([&] { make_isometry(u, IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }) ==
        ErrorCode::DimensionMismatch);
}

TEST_CASE("order") {
  CHECK(order(fixtures::kummer_psi(), 100) == 4);
  CHECK(order(LatticeIsometry::identity(standard_lattice("E8")), 1) == 1);
  const auto pell = make_isometry(pell_lattice(), IntMatrix{{3, 4}, {2, 3}});
  CHECK(code_of([&] { order(pell, 100); }) == ErrorCode::OrderExceedsBound);
  CHECK(code_of([&] { order(fixtures::kummer_psi(), 3); }) == ErrorCode::OrderExceedsBound);
}

TEST_CASE("invariant and coinvariant sublattices of the Kummer fixture") {
  const auto psi = fixtures::kummer_psi();
  const auto inv = invariant_sublattice(psi);
  CHECK(inv.rank() == 2);
  CHECK(inv.basis == IntMatrix{{0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
  const auto co = coinvariant_sublattice(psi);
  CHECK(co.rank() == 4);
  CHECK(co.basis == IntMatrix{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
}

TEST_CASE("trivial sublattice cases") {
  const auto u = standard_lattice("U");
  const auto id = LatticeIsometry::identity(u);
  CHECK(invariant_sublattice(id).rank() == 2);
  CHECK(coinvariant_sublattice(id).rank() == 0);
  CHECK(invariant_sublattice(minus_identity(u)).rank() == 0);
  CHECK(coinvariant_sublattice(minus_identity(u)).rank() == 2);
}

TEST_CASE("cyclotomic profiles") {
  const auto psi = fixtures::kummer_psi();
  const auto profile = cyclotomic_profile(psi);
  CHECK(profile.multiplicities == std::map<std::uint64_t, std::size_t>{{1, 2}, {4, 2}});
  CHECK(profile.exponent() == 4);
  CHECK(characteristic_polynomial(psi.matrix()) ==
        IntPolynomial({-1, 1}) * IntPolynomial({-1, 1}) * IntPolynomial({1, 0, 1}) * IntPolynomial({1, 0, 1}));

  const auto e8 = standard_lattice("E8");
  CHECK(cyclotomic_profile(LatticeIsometry::identity(e8)).multiplicities ==
        std::map<std::uint64_t, std::size_t>{{1, 8}});
  CHECK(cyclotomic_profile(minus_identity(standard_lattice("U"))).multiplicities ==
        std::map<std::uint64_t, std::size_t>{{2, 2}});

  const auto pell = make_isometry(pell_lattice(), IntMatrix{{3, 4}, {2, 3}});
  CHECK(code_of([&] { cyclotomic_profile(pell); }) == ErrorCode::NonCyclotomicFactor);
}

TEST_CASE("eigenspace dimensions") {
  const auto psi = fixtures::kummer_psi();
  CHECK(eigenspace_dimension(psi, 4) == 2);
  CHECK(eigenspace_dimension(psi, 1) == 2);
  CHECK(eigenspace_dimension(psi, 3) == 0);
  CHECK(eigenspace_dimension(psi, 4, false) == 4);
}

TEST_CASE("commutator defect") {
  const auto u = standard_lattice("U");
  const auto uu = direct_sum(u, u);
  const auto phi = make_isometry(uu, IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  const auto g = make_isometry(uu, IntMatrix{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(commutator_defect(g, g).is_identity());
  CHECK(commutator_defect(LatticeIsometry::identity(uu), g).is_identity());
  const auto defect = commutator_defect(phi, g);
  CHECK(defect.matrix() == Integer(-1) * IntMatrix::identity(4));
}

TEST_CASE("decomposition check") {
  const auto psi_report = decomposition_check(fixtures::kummer_psi());
  CHECK(psi_report.lattice_rank == 6);
  CHECK(psi_report.invariant_rank == 2);
  CHECK(psi_report.coinvariant_rank == 4);
  CHECK(psi_report.direct);
  CHECK_NOTHROW(require_direct(psi_report));

  const auto e8 = standard_lattice("E8");
  const auto id_report = decomposition_check(LatticeIsometry::identity(e8));
  CHECK(id_report.invariant_rank == 8);
  CHECK(id_report.coinvariant_rank == 0);
  CHECK(id_report.direct);
  const auto neg_report = decomposition_check(minus_identity(e8));
  CHECK(neg_report.invariant_rank == 0);
  CHECK(neg_report.coinvariant_rank == 8);
  CHECK(neg_report.direct);
}

TEST_CASE("decomposition fails when the invariant part is degenerate") {
  // Eichler transvection on U + <-2> fixing the isotropic vector e.
  const auto l = direct_sum(standard_lattice("U"), rank_one(-2));
  const auto t = make_isometry(l, IntMatrix{{1, 1, 2}, {0, 1, 0}, {0, 1, 1}});
  const auto report = decomposition_check(t);
  CHECK(report.invariant_rank == 1);
  CHECK(report.coinvariant_rank == 2);
  CHECK_FALSE(report.direct);
  CHECK(code_of([&] { require_direct(report); }) == ErrorCode::DecompositionFails);
}

TEST_CASE("property: sampled isometries preserve the form and decompose consistently") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 150; ++trial) {
    const auto block = oracle::BlockLattice::random(rng, 6);
    const auto& l = block.lattice();
    const auto iso = make_isometry(l, block.random_isometry(rng));
    const IntMatrix& m = iso.matrix();
    CHECK(m.transpose() * l.gram() * m == l.gram());
    CHECK((determinant(m) == 1 || determinant(m) == -1));

    const auto inv = invariant_sublattice(iso);
    const auto co = coinvariant_sublattice(iso);
    for (std::size_t i = 0; i < inv.rank(); ++i)
      for (std::size_t j = 0; j < co.rank(); ++j) CHECK(inner_product(l, inv.basis.row(i), co.basis.row(j)) == 0);

    const auto profile = cyclotomic_profile(iso);
    std::uint64_t total = 0;
    for (const auto& [d, mult] : profile.multiplicities) total += mult * euler_phi(d);
    CHECK(total == l.rank());
    CHECK(profile.multiplicity(1) == inv.rank());
    CHECK(profile.exponent() == order(iso, 1000));
    for (const auto& [d, mult] : profile.multiplicities) {
      if (d == 1) continue;
      CHECK(euler_phi(d) <= l.rank() - inv.rank());
      if (inv.rank() > 0) CHECK(euler_phi(d) <= l.rank() - 1);
    }
  }
}

TEST_CASE("property: commutator defect is trivial exactly for commuting pairs") {
  std::mt19937_64 rng(8);
  int commuting = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto block = oracle::BlockLattice::random(rng, 6);
    const auto a = make_isometry(block.lattice(), block.random_isometry(rng));
    const auto b = make_isometry(block.lattice(), block.random_isometry(rng));
    const bool commute = a.matrix() * b.matrix() == b.matrix() * a.matrix();
    commuting += commute;
    CHECK(commutator_defect(a, b).is_identity() == commute);
  }
  CHECK(commuting > 0);
  CHECK(commuting < 200);
}

}  // TEST_SUITE
