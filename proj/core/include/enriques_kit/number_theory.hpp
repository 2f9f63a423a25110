#pragma once

#include <cstdint>
#include <vector>

namespace enriques {

/// Euler's totient by trial factorization; phi(1) = 1. d = 0 is rejected.
std::uint64_t euler_phi(std::uint64_t d);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

/// Sorted positive divisors.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// All d >= 1 with phi(d) <= bound, ascending. phi(d) >= sqrt(d/2) bounds the
/// search to d <= 2 bound^2 + 2.
std::vector<std::uint64_t> totient_at_most(std::uint64_t bound);

}  // namespace enriques
