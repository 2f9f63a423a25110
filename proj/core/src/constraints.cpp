#include "enriques_kit/constraints.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace enriques {

CyclotomicElement::CyclotomicElement(std::uint64_t conductor) : conductor_(conductor) {
  if (conductor == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  coeffs_.assign(euler_phi(conductor), Integer(0));
}

CyclotomicElement CyclotomicElement::from_polynomial(std::uint64_t conductor, const IntPolynomial& p) {
  CyclotomicElement e(conductor);
  const IntPolynomial reduced = divide_by_monic(p, cyclotomic_polynomial(conductor)).remainder;
  for (std::size_t i = 0; i < reduced.coeffs().size(); ++i) e.coeffs_[i] = reduced.coeffs()[i];
  return e;
}

CyclotomicElement CyclotomicElement::zeta_power(std::uint64_t conductor, std::uint64_t exponent) {
  if (conductor == 0) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  return from_polynomial(conductor, IntPolynomial::monomial(exponent % conductor));
}

bool CyclotomicElement::is_zero() const { return enriques::is_zero(coeffs_); }

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.conductor_ != b.conductor_) throw Error(ErrorCode::DimensionMismatch, "conductors differ");
  CyclotomicElement c = a;
  for (std::size_t i = 0; i < c.coeffs_.size(); ++i) c.coeffs_[i] += b.coeffs_[i];
  return c;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.conductor_ != b.conductor_) throw Error(ErrorCode::DimensionMismatch, "conductors differ");
  return CyclotomicElement::from_polynomial(a.conductor_, IntPolynomial(a.coeffs_) * IntPolynomial(b.coeffs_));
}

std::string CyclotomicElement::to_string() const { return IntPolynomial(coeffs_).to_string("z"); }

CyclotomicElement lefschetz_number(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "half-dimension n must be >= 1");
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "order d must be >= 2");
  if (gcd(k % d, d) != 1) {
    throw Error(ErrorCode::NotPrimitive, "gcd(" + std::to_string(k) + ", " + std::to_string(d) + ") != 1");
  }
  // conj(zeta^k) = zeta^{d - k}; accumulate sum_j zeta^{j (d - k)} in Z[x]/(x^d - 1).
  const std::uint64_t step = (d - k % d) % d;
  std::vector<Integer> acc(d, Integer(0));
  std::uint64_t exponent = 0;
  for (std::uint64_t j = 0; j <= n; ++j) {
    acc[exponent] += 1;
    exponent = (exponent + step) % d;
  }
  return CyclotomicElement::from_polynomial(d, IntPolynomial(std::move(acc)));
}

std::vector<std::uint64_t> vanishing_orders(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "half-dimension n must be >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n + 1; ++d) {
    bool all_zero = true;
    for (std::uint64_t k = 1; k < d && all_zero; ++k) {
      if (gcd(k, d) != 1) continue;
      all_zero = lefschetz_number(n, d, k).is_zero();
    }
    if (all_zero) out.push_back(d);
  }
  return out;
}

std::vector<std::uint64_t> admissible_indices(std::uint64_t b2) {
  if (b2 < 3) throw Error(ErrorCode::InvalidArgument, "b2 must be >= 3");
  std::vector<std::uint64_t> out = totient_at_most(b2 - 1);
  out.erase(std::remove(out.begin(), out.end(), std::uint64_t{1}), out.end());
  return out;
}

long period_domain_dimension(long t_lambda_dim, bool lambda_is_minus_one) {
  const long minimum = lambda_is_minus_one ? 2 : 1;
  if (t_lambda_dim < minimum) {
    throw Error(ErrorCode::EmptyDomain, "dim T(lambda) = " + std::to_string(t_lambda_dim) +
                                            " is below " + std::to_string(minimum));
  }
  return t_lambda_dim - minimum;
}

bool forced_picard_rank_one(std::uint64_t b2, std::uint64_t d) {
  return d >= 1 && b2 >= 1 && euler_phi(d) == b2 - 1;
}

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::K3n: return "K3n";
    case Family::Kumn: return "Kumn";
    case Family::OG6: return "OG6";
    case Family::OG10: return "OG10";
  }
  return "?";
}

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::HoldsPrime: return "HoldsPrime";
    case Status::HoldsTrivialPicAction: return "HoldsTrivialPicAction";
    case Status::HoldsRankOne: return "HoldsRankOne";
    case Status::HoldsIndex4Kummer: return "HoldsIndex4Kummer";
    case Status::ExcludedTotient: return "ExcludedTotient";
    case Status::ExcludedFixedLocus: return "ExcludedFixedLocus";
    case Status::Open: return "Open";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "k3n") return Family::K3n;
  if (lower == "kumn") return Family::Kumn;
  if (lower == "og6") return Family::OG6;
  if (lower == "og10") return Family::OG10;
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

bool is_holds(Status status) noexcept {
  return status == Status::HoldsPrime || status == Status::HoldsTrivialPicAction ||
         status == Status::HoldsRankOne || status == Status::HoldsIndex4Kummer;
}

FamilyTable FamilyTable::defaults() {
  FamilyTable t;
  t.entries_ = {
      {Family::K3n, 23, "b2 of K3^[n]-type manifolds"},
      {Family::Kumn, 7, "b2 of generalized Kummer manifolds"},
      {Family::OG6, 8, "configuration: b2 of O'Grady's six-dimensional example"},
      {Family::OG10, 24, "configuration: b2 of O'Grady's ten-dimensional example"},
  };
  return t;
}

const FamilyInfo& FamilyTable::info(Family family) const {
  for (const auto& e : entries_)
    if (e.family == family) return e;
  throw Error(ErrorCode::UnknownFamily, "no b2 configured for " + std::string(to_string(family)));
}

void FamilyTable::set(FamilyInfo info) {
  if (info.b2 < 3) throw Error(ErrorCode::InvalidArgument, "b2 must be >= 3");
  for (auto& e : entries_) {
    if (e.family == info.family) {
      e = std::move(info);
      return;
    }
  }
  entries_.push_back(std::move(info));
}

namespace citation {
constexpr const char* kTotient =
    "a primitive d-th root of unity is an eigenvalue on H^2, so phi(d) <= b2 - 1 is necessary";
constexpr const char* kFixedLocus =
    "non-symplectic automorphisms of order 3 on K3^[2]-type manifolds always have fixed points "
    "(classification of order-3 actions)";
constexpr const char* kPrime =
    "prime index: the fundamental domain of the cover, restricted to the invariant subspace and "
    "enlarged by finitely many coset translates, descends";
constexpr const char* kRankOne =
    "phi(d) = b2 - 1: the transcendental lattice has rank phi(d), Pic has rank one and G acts "
    "trivially on it";
constexpr const char* kIndex4Kummer =
    "index-4 Kummer example: the invariant part of H^2 is exactly Pic, so G acts trivially on Pic";
constexpr const char* kOpen = "no argument covers this index";
constexpr const char* kOpenOrder3 =
    "order 3 on K3^[n]-type with n != 2: the fixed-locus classification does not apply";
}  // namespace citation

IndexStatus cone_conjecture_status(const FamilyTable& table, Family family, std::uint64_t d,
                                   std::optional<std::uint64_t> half_dimension) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "index d must be >= 2");
  const std::uint64_t b2 = table.b2(family);
  const std::uint64_t phi = euler_phi(d);
  auto make = [&](Status s, const char* cite) { return IndexStatus{family, d, s, cite}; };

  if (phi > b2 - 1) return make(Status::ExcludedTotient, citation::kTotient);
  if (family == Family::K3n && d == 3) {
    if (!half_dimension || *half_dimension == 2) return make(Status::ExcludedFixedLocus, citation::kFixedLocus);
    return make(Status::Open, citation::kOpenOrder3);
  }
  if (is_prime(d)) return make(Status::HoldsPrime, citation::kPrime);
  if (family == Family::Kumn && d == 4) return make(Status::HoldsIndex4Kummer, citation::kIndex4Kummer);
  if (forced_picard_rank_one(b2, d)) return make(Status::HoldsRankOne, citation::kRankOne);
  return make(Status::Open, citation::kOpen);
}

IndexStatus cone_conjecture_status(Family family, std::uint64_t d, std::optional<std::uint64_t> half_dimension) {
  return cone_conjecture_status(FamilyTable::defaults(), family, d, half_dimension);
}

std::vector<IndexStatus> status_table(const FamilyTable& table, Family family) {
  std::vector<IndexStatus> out;
  for (std::uint64_t d : admissible_indices(table.b2(family))) {
    out.push_back(cone_conjecture_status(table, family, d));
  }
  return out;
}

std::vector<std::uint64_t> holds_list(const FamilyTable& table, Family family) {
  std::vector<std::uint64_t> out;
  for (const auto& s : status_table(table, family)) {
    if (s.status == Status::HoldsPrime || s.status == Status::HoldsRankOne) out.push_back(s.d);
  }
  return out;
}

std::vector<std::uint64_t> supplementary_holds_list(const FamilyTable& table, Family family) {
  std::vector<std::uint64_t> out;
  for (const auto& s : status_table(table, family)) {
    if (s.status == Status::HoldsIndex4Kummer || s.status == Status::HoldsTrivialPicAction) out.push_back(s.d);
  }
  return out;
}

}  // namespace enriques
