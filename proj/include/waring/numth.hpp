#pragma once
// Primitive prime divisors and the explicit numeric bounds of the power-word
// Waring results.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace waring {

using BigInt = boost::multiprecision::cpp_int;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(uint64_t n);
// Prime factorization (ascending primes with exponents); trial division
// followed by Pollard-Brent rho.
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);
std::vector<uint64_t> distinct_primes(uint64_t n);
// Least n >= 1 with a^n = 1 (mod m); requires gcd(a, m) = 1.
uint64_t multiplicative_order(uint64_t a, uint64_t m);
bool is_squarefree_u64(uint64_t n);

// q^n - 1 must stay below 2^63; throws std::overflow_error otherwise.
struct PpdQuery {
  uint64_t q;
  unsigned n;
};

// Largest prime r dividing q^n - 1 with r not dividing q^i - 1 for 1 <= i < n,
// or nullopt when no such prime exists. Throws std::invalid_argument for
// q < 2 or n < 1 and std::overflow_error when q^n exceeds 2^63.
std::optional<uint64_t> ppd(uint64_t q, unsigned n);
inline std::optional<uint64_t> ppd(const PpdQuery& query) { return ppd(query.q, query.n); }

// True exactly for the (q, n) pairs with no primitive prime divisor:
// n = 1 and q = 2, n = 2 and q + 1 a power of two, and (2, 6).
bool zsigmondy_exception(uint64_t q, unsigned n);

struct WaringBounds {
  BigInt threshold;   // m^(8 m^2)
  uint64_t power_f;   // ceil(40 m sqrt(8 log2 m)) + 56, rounded outward
};

WaringBounds waring_bounds(unsigned m);

}  // namespace waring
