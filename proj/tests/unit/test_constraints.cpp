#include <doctest.h>

#include <algorithm>
#include <set>

#include "enriques_kit/constraints.hpp"
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

using List = std::vector<std::uint64_t>;

List k3n_admissible() {
  List out;
  for (std::uint64_t d = 2; d <= 28; ++d) out.push_back(d);
  for (std::uint64_t d : {30, 32, 33, 34, 36, 38, 40, 42, 44, 46, 48, 50, 54, 60, 66}) out.push_back(d);
  return out;
}

}  // namespace

TEST_SUITE("constraints") {

TEST_CASE("euler_phi") {
  CHECK(euler_phi(46) == 22);
  CHECK(euler_phi(24) == 8);
  CHECK(euler_phi(1) == 1);
  for (std::uint64_t d = 1; d <= 500; ++d) CHECK(euler_phi(d) == oracle::naive_totient(d));
}

TEST_CASE("lefschetz numbers") {
  CHECK(lefschetz_number(1, 2, 1).is_zero());
  CHECK(lefschetz_number(3, 4, 1).is_zero());
  const auto l = lefschetz_number(2, 2, 1);
  CHECK_FALSE(l.is_zero());
  CHECK(l.coefficients() == IntVector{1});
  CHECK(code_of([] { lefschetz_number(3, 4, 2); }) == ErrorCode::NotPrimitive);
  CHECK(code_of([] { lefschetz_number(0, 4, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { lefschetz_number(3, 1, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cyclotomic element arithmetic") {
  // zeta_4^2 = -1, zeta_3^2 = -1 - zeta_3.
  CHECK(CyclotomicElement::zeta_power(4, 2).coefficients() == IntVector{-1, 0});
  CHECK(CyclotomicElement::zeta_power(3, 2).coefficients() == IntVector{-1, -1});
  const auto z = CyclotomicElement::zeta_power(5, 1);
  auto acc = CyclotomicElement::zeta_power(5, 0);
  for (int i = 0; i < 5; ++i) acc = acc * z;
  CHECK(acc == CyclotomicElement::zeta_power(5, 0));
  // 1 + z + ... + z^4 = 0 in Z[zeta_5].
  auto sum = CyclotomicElement(5);
  for (std::uint64_t e = 0; e < 5; ++e) sum = sum + CyclotomicElement::zeta_power(5, e);
  CHECK(sum.is_zero());
}

TEST_CASE("vanishing orders") {
  CHECK(vanishing_orders(1) == List{2});
  CHECK(vanishing_orders(3) == List{2, 4});
  CHECK(vanishing_orders(11) == List{2, 3, 4, 6, 12});
}

TEST_CASE("admissible indices") {
  CHECK(admissible_indices(23) == k3n_admissible());
  CHECK(admissible_indices(23).size() == 42);
  CHECK(admissible_indices(7) == List{2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18});
  CHECK(admissible_indices(3) == List{2, 3, 4, 6});
  const auto k3 = admissible_indices(23);
  CHECK(std::find(k3.begin(), k3.end(), 48) != k3.end());
  CHECK(std::find(k3.begin(), k3.end(), 60) != k3.end());
  CHECK(std::find(k3.begin(), k3.end(), 24) != k3.end());
  const auto kum = admissible_indices(7);
  CHECK(std::find(kum.begin(), kum.end(), 24) == kum.end());
}

TEST_CASE("property: admissible indices match a naive loop to 4(b2-1)^2") {
  for (std::uint64_t b2 = 3; b2 <= 30; ++b2) {
    List naive;
    for (std::uint64_t d = 2; d <= 4 * (b2 - 1) * (b2 - 1); ++d)
      if (oracle::naive_totient(d) <= b2 - 1) naive.push_back(d);
    CHECK(admissible_indices(b2) == naive);
  }
}

TEST_CASE("period domain dimensions") {
  CHECK(period_domain_dimension(3, false) == 2);
  CHECK(period_domain_dimension(3, true) == 1);
  CHECK(code_of([] { period_domain_dimension(1, true); }) == ErrorCode::EmptyDomain);
  CHECK(code_of([] { period_domain_dimension(0, false); }) == ErrorCode::EmptyDomain);
}

TEST_CASE("forced Picard rank one") {
  CHECK(forced_picard_rank_one(23, 46));
  CHECK(forced_picard_rank_one(7, 9));
  CHECK(forced_picard_rank_one(7, 14));
  CHECK(forced_picard_rank_one(7, 18));
  CHECK_FALSE(forced_picard_rank_one(23, 5));
}

TEST_CASE("status table") {
  CHECK(cone_conjecture_status(Family::K3n, 46).status == Status::HoldsRankOne);
  CHECK(cone_conjecture_status(Family::Kumn, 24).status == Status::ExcludedTotient);
  CHECK(cone_conjecture_status(Family::Kumn, 4).status == Status::HoldsIndex4Kummer);
  CHECK(cone_conjecture_status(Family::K3n, 3).status == Status::ExcludedFixedLocus);
  CHECK(cone_conjecture_status(Family::K3n, 3, 2).status == Status::ExcludedFixedLocus);
  CHECK(cone_conjecture_status(Family::K3n, 3, 4).status == Status::Open);
  CHECK(cone_conjecture_status(Family::Kumn, 3).status == Status::HoldsPrime);
  CHECK(cone_conjecture_status(Family::K3n, 23).status == Status::HoldsPrime);
  CHECK(cone_conjecture_status(Family::K3n, 4).status == Status::Open);
  CHECK(cone_conjecture_status(Family::K3n, 67).status == Status::ExcludedTotient);
  CHECK(code_of([] { parse_family("og8"); }) == ErrorCode::UnknownFamily);
  CHECK(parse_family("K3N") == Family::K3n);
  CHECK(code_of([] { cone_conjecture_status(Family::K3n, 1); }) == ErrorCode::InvalidArgument);
  for (const auto& s : status_table(FamilyTable::defaults(), Family::K3n)) CHECK_FALSE(s.citation.empty());
}

TEST_CASE("holds lists") {
  const auto table = FamilyTable::defaults();
  CHECK(holds_list(table, Family::K3n) == List{2, 5, 7, 11, 13, 17, 19, 23, 46});
  CHECK(holds_list(table, Family::Kumn) == List{2, 3, 5, 7, 9, 14, 18});
  CHECK(supplementary_holds_list(table, Family::Kumn) == List{4});
  CHECK(supplementary_holds_list(table, Family::K3n).empty());
}

TEST_CASE("property: ExcludedTotient iff phi(d) > b2 - 1") {
  const auto table = FamilyTable::defaults();
  for (auto f : {Family::K3n, Family::Kumn, Family::OG6, Family::OG10}) {
    for (std::uint64_t d = 2; d <= 150; ++d) {
      const bool excluded = cone_conjecture_status(table, f, d).status == Status::ExcludedTotient;
      CHECK(excluded == (euler_phi(d) > table.b2(f) - 1));
    }
  }
}

TEST_CASE("property: Lefschetz vanishing law and Galois invariance") {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t d = 2; d <= 30; ++d) {
      std::set<bool> seen;
      for (std::uint64_t k = 1; k < d; ++k) {
        if (gcd(k, d) != 1) continue;
        const bool zero = lefschetz_number(n, d, k).is_zero();
        CHECK(zero == ((n + 1) % d == 0));
        CHECK(zero == oracle::lefschetz_vanishes_numerically(n, d, k));
        seen.insert(zero);
      }
      CHECK(seen.size() == 1);
    }
  }
}

}  // TEST_SUITE
