#include "enriques_kit/number_theory.hpp"

#include <stdexcept>

#include "enriques_kit/error.hpp"

namespace enriques {

std::uint64_t euler_phi(std::uint64_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "phi(0) is undefined");
  std::uint64_t result = d;
  std::uint64_t n = d;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> totient_at_most(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  const std::uint64_t cutoff = 2 * bound * bound + 2;
  for (std::uint64_t d = 1; d <= cutoff; ++d) {
    const std::uint64_t phi = euler_phi(d);
    if (phi > bound) continue;
    // phi(d)^2 >= d/2 holds for every d; a violation would mean the cutoff
    // above is not a valid completeness bound.
    if (2 * phi * phi < d) throw std::logic_error("totient lower bound violated at d = " + std::to_string(d));
    out.push_back(d);
  }
  return out;
}

}  // namespace enriques
