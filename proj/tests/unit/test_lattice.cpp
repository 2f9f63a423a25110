#include <doctest.h>

#include <random>

#include "enriques_kit/fixtures.hpp"
#include "enriques_kit/lattice.hpp"
#include "enriques_kit/linalg.hpp"
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

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("make_lattice validates the Gram matrix") {
  const auto u = make_lattice(IntMatrix{{0, 1}, {1, 0}});
  CHECK(u.rank() == 2);
  CHECK(u.is_even());

  const auto odd = make_lattice(IntMatrix{{0, 1}, {1, 1}});
  CHECK_FALSE(odd.is_even());
  CHECK(odd.determinant() == -1);

  CHECK(code_of([] { make_lattice(IntMatrix{{1, 2}, {3, 1}}); }) == ErrorCode::NonSymmetric);
  CHECK(code_of([] { make_lattice(IntMatrix{{1, 1}, {1, 1}}); }) == ErrorCode::Degenerate);
  CHECK(code_of([] { make_lattice(IntMatrix{{1, 2, 3}, {2, 1, 0}}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("standard lattices") {
  const auto u = standard_lattice("U");
  CHECK(signature(u) == Signature{1, 1});
  CHECK(u.determinant() == -1);

  const auto e8 = standard_lattice("E8");
  CHECK(e8.rank() == 8);
  CHECK(signature(e8) == Signature{0, 8});
  CHECK(e8.determinant() == 1);
  CHECK(e8.is_even());
  for (std::size_t i = 0; i < 8; ++i) CHECK(e8.gram()(i, i) == -2);

  CHECK(code_of([] { standard_lattice("E7"); }) == ErrorCode::UnknownName);
}

TEST_CASE("twist") {
  const auto u2 = twist(standard_lattice("U"), 2);
  CHECK(u2.determinant() == -4);
  const auto e82 = twist(standard_lattice("E8"), 2);
  CHECK(e82.determinant() == 256);
  CHECK(signature(e82) == Signature{0, 8});
  const auto u = standard_lattice("U");
  CHECK(twist(u, 1) == u);
  CHECK(signature(twist(standard_lattice("E8"), -1)) == Signature{8, 0});
  CHECK(code_of([&] { twist(u, 0); }) == ErrorCode::ZeroTwist);
}

TEST_CASE("direct sums") {
  const auto u = standard_lattice("U");
  const auto uuu = direct_sum(direct_sum(u, u), u);
  CHECK(uuu.rank() == 6);
  CHECK(signature(uuu) == Signature{3, 3});

  const auto m = fixtures::enriques_involution_invariant(3);
  // 2 + 8 + 1 blocks; (1,1) + (0,8) + (0,1).
  CHECK(m.rank() == 11);
  CHECK(signature(m) == Signature{1, 10});
  CHECK(m.determinant() == 4096);
  for (unsigned long n = 2; n <= 9; ++n) {
    const auto mn = fixtures::enriques_involution_invariant(n);
    CHECK(mn.determinant() == 2048 * Integer(n - 1));
    CHECK(oracle::laplace_determinant(mn.gram()) == mn.determinant());
    CHECK(signature(mn) == Signature{1, 10});
  }

  const auto empty = IntegralLattice::from_gram(IntMatrix(0, 0));
  CHECK(direct_sum(u, empty) == u);
  CHECK(direct_sum(empty, u) == u);
}

TEST_CASE("rank one lattices") {
  const auto l = rank_one(-4);
  CHECK(l.gram() == IntMatrix{{-4}});
  CHECK(signature(rank_one(2)) == Signature{1, 0});
  CHECK(code_of([] { rank_one(0); }) == ErrorCode::ZeroForm);
}

TEST_CASE("inner products") {
  const auto u = standard_lattice("U");
  CHECK(q_value(u, make_int_vector({1, 1})) == 2);
  CHECK(inner_product(u, make_int_vector({1, 0}), make_int_vector({0, 1})) == 1);
  CHECK(code_of([&] { q_value(u, make_int_vector({1, 0, 0})); }) == ErrorCode::DimensionMismatch);

  const auto e82 = twist(standard_lattice("E8"), 2);
  for (std::size_t i = 0; i < 8; ++i) {
    IntVector e(8, 0);
    e[i] = 1;
    CHECK(q_value(e82, e) % 4 == 0);
  }
}

TEST_CASE("inertia handles zero pivots and degenerate forms") {
  CHECK(inertia(to_rational(IntMatrix{{0, 1}, {1, 0}})) == Signature{1, 1});
  CHECK(inertia(to_rational(IntMatrix{{0, 0}, {0, 0}})) == Signature{0, 0});
  CHECK(inertia(to_rational(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})) == Signature{1, 1});
  CHECK(inertia(to_rational(IntMatrix{{0, 0, 1}, {0, -3, 0}, {1, 0, 0}})) == Signature{1, 2});
}

TEST_CASE("property: determinant and signature are additive/multiplicative on direct sums") {
  std::mt19937_64 rng(0x1a771ce);
  std::uniform_int_distribution<std::size_t> rank_dist(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = make_lattice(oracle::random_gram(rng, rank_dist(rng), 4));
    const auto b = make_lattice(oracle::random_gram(rng, rank_dist(rng), 4));
    const auto s = direct_sum(a, b);
    CHECK(s.determinant() == a.determinant() * b.determinant());
    const auto sa = signature(a), sb = signature(b), ss = signature(s);
    CHECK(ss.positive == sa.positive + sb.positive);
    CHECK(ss.negative == sa.negative + sb.negative);
  }
}

TEST_CASE("property: det(L(k)) = k^rank det(L)") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> rank_dist(1, 5);
  std::uniform_int_distribution<long> k_dist(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto l = make_lattice(oracle::random_gram(rng, rank_dist(rng), 3));
    long k = 0;
    while (k == 0) k = k_dist(rng);
    Integer expected = l.determinant();
    for (std::size_t i = 0; i < l.rank(); ++i) expected *= k;
    CHECK(twist(l, k).determinant() == expected);
  }
}

TEST_CASE("property: pivoting signature agrees with the Sturm count") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::size_t> rank_dist(1, 6);
  for (int trial = 0; trial < 120; ++trial) {
    const IntMatrix g = oracle::random_gram(rng, rank_dist(rng), 5);
    const auto l = make_lattice(g);
    const auto fast = signature(l);
    const auto slow = oracle::sturm_signature(g);
    CHECK(fast == slow);
    CHECK(fast.positive + fast.negative == l.rank());
  }
}

TEST_CASE("property: Bareiss determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> rank_dist(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix g = oracle::random_gram(rng, rank_dist(rng), 6);
    CHECK(determinant(g) == oracle::laplace_determinant(g));
  }
}

TEST_CASE("property: q is a quadratic form with polar inner_product") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto l = make_lattice(oracle::random_gram(rng, n, 5));
    const IntVector v = oracle::random_vector(rng, n, 9);
    const IntVector w = oracle::random_vector(rng, n, 9);
    IntVector sum(n);
    for (std::size_t i = 0; i < n; ++i) sum[i] = v[i] + w[i];
    CHECK(q_value(l, sum) == q_value(l, v) + 2 * inner_product(l, v, w) + q_value(l, w));
  }
}

}  // TEST_SUITE
