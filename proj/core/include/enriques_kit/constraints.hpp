#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enriques_kit/matrix.hpp"
#include "enriques_kit/number_theory.hpp"
#include "enriques_kit/polynomial.hpp"

namespace enriques {

/// Element of Z[zeta_d] in the power basis 1, zeta, ..., zeta^{phi(d)-1}.
/// Coefficients are always reduced modulo Phi_d, so equality is structural.
class CyclotomicElement {
 public:
  /// The zero element of Z[zeta_d].
  explicit CyclotomicElement(std::uint64_t conductor);

  /// zeta_d^exponent (exponent taken mod d).
  static CyclotomicElement zeta_power(std::uint64_t conductor, std::uint64_t exponent);
  static CyclotomicElement from_polynomial(std::uint64_t conductor, const IntPolynomial& p);

  std::uint64_t conductor() const noexcept { return conductor_; }
  const IntVector& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

  /// e.g. "1 - z + z^3" with z = zeta_d.
  std::string to_string() const;

 private:
  std::uint64_t conductor_;
  IntVector coeffs_;
};

/// 1 + conj(lambda) + ... + conj(lambda)^n with lambda = zeta_d^k. Requires
/// n >= 1, d >= 2 and gcd(k, d) = 1 (NotPrimitive otherwise).
CyclotomicElement lefschetz_number(std::uint64_t n, std::uint64_t d, std::uint64_t k = 1);

/// Every d >= 2 whose Lefschetz number vanishes for all primitive exponents.
/// The sum is geometric, so only d <= n + 1 can vanish.
std::vector<std::uint64_t> vanishing_orders(std::uint64_t n);

/// All d >= 2 with phi(d) <= b2 - 1.
std::vector<std::uint64_t> admissible_indices(std::uint64_t b2);

/// dim T(lambda) - 1, or dim T(lambda) - 2 when lambda = -1.
long period_domain_dimension(long t_lambda_dim, bool lambda_is_minus_one);

/// phi(d) == b2 - 1: the transcendental part takes every non-Picard
/// direction and the Picard rank is one.
bool forced_picard_rank_one(std::uint64_t b2, std::uint64_t d);

enum class Family { K3n, Kumn, OG6, OG10 };

enum class Status {
  HoldsPrime,
  HoldsTrivialPicAction,
  HoldsRankOne,
  HoldsIndex4Kummer,
  ExcludedTotient,
  ExcludedFixedLocus,
  Open,
};

std::string_view to_string(Family family) noexcept;
std::string_view to_string(Status status) noexcept;

/// Case-insensitive: k3n, kumn, og6, og10. UnknownFamily otherwise.
Family parse_family(std::string_view name);

bool is_holds(Status status) noexcept;

struct FamilyInfo {
  Family family;
  std::uint64_t b2;
  std::string provenance;
};

/// Second Betti numbers per deformation family. K3n and Kumn are fixed;
/// the OG6/OG10 values are configuration and may be overridden.
class FamilyTable {
 public:
  static FamilyTable defaults();

  const FamilyInfo& info(Family family) const;
  std::uint64_t b2(Family family) const { return info(family).b2; }
  void set(FamilyInfo info);

 private:
  std::vector<FamilyInfo> entries_;
};

struct IndexStatus {
  Family family;
  std::uint64_t d;
  Status status;
  std::string citation;
};

/// Proof-coverage status of index d for the family. `half_dimension` (n of a
/// K3^[n]) only matters for the order-3 K3-type case: unset or n = 2 gives
/// ExcludedFixedLocus, any other n gives Open.
IndexStatus cone_conjecture_status(const FamilyTable& table, Family family, std::uint64_t d,
                                   std::optional<std::uint64_t> half_dimension = std::nullopt);
IndexStatus cone_conjecture_status(Family family, std::uint64_t d,
                                   std::optional<std::uint64_t> half_dimension = std::nullopt);

/// Status of every admissible index, ascending in d.
std::vector<IndexStatus> status_table(const FamilyTable& table, Family family);

/// Indices proven by the prime-index theorem or the forced-rank-one argument.
std::vector<std::uint64_t> holds_list(const FamilyTable& table, Family family);

/// Indices covered by separately treated examples (the index-4 Kummer case).
std::vector<std::uint64_t> supplementary_holds_list(const FamilyTable& table, Family family);

}  // namespace enriques
