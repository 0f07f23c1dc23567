#include "waring/numth.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace waring {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  static const uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (uint64_t p : small) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : small) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

uint64_t brent(uint64_t n) {
  if (n % 2 == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const uint64_t m = 128;
    uint64_t r = 1;
    auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    do {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = f(y);
      uint64_t k = 0;
      do {
        ys = y;
        for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  std::vector<uint64_t> primes;
  for (uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<uint64_t> distinct_primes(uint64_t n) {
  std::vector<uint64_t> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

bool is_squarefree_u64(uint64_t n) {
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

uint64_t multiplicative_order(uint64_t a, uint64_t m) {
  if (m == 0) throw std::invalid_argument("multiplicative_order: zero modulus");
  if (m == 1) return 1;
  a %= m;
  if (std::gcd(a, m) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
  uint64_t phi = 1;
  for (auto& [p, e] : factorize(m)) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  uint64_t ord = phi;
  for (auto& [p, e] : factorize(phi)) {
    for (unsigned i = 0; i < e && ord % p == 0; ++i) {
      if (powmod_u64(a, ord / p, m) == 1)
        ord /= p;
      else
        break;
    }
  }
  return ord;
}

std::optional<uint64_t> ppd(uint64_t q, unsigned n) {
  if (q < 2) throw std::invalid_argument("ppd: q must be at least 2");
  if (n < 1) throw std::invalid_argument("ppd: n must be positive");
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 63;
  unsigned __int128 qn = 1;
  for (unsigned i = 0; i < n; ++i) {
    qn *= q;
    if (qn > limit) throw std::overflow_error("ppd: q^n exceeds 2^63");
  }
  uint64_t N = static_cast<uint64_t>(qn - 1);
  if (N == 1) return std::nullopt;
  auto fac = factorize(N);
  for (auto it = fac.rbegin(); it != fac.rend(); ++it) {
    uint64_t r = it->first;
    if (q % r == 0) continue;
    if (multiplicative_order(q % r, r) == n) return r;
  }
  return std::nullopt;
}

bool zsigmondy_exception(uint64_t q, unsigned n) {
  if (n == 1) return q == 2;
  if (n == 2) return ((q + 1) & q) == 0;
  return q == 2 && n == 6;
}

WaringBounds waring_bounds(unsigned m) {
  if (m == 0) throw std::invalid_argument("waring_bounds: m must be positive");
  WaringBounds out;
  out.threshold = boost::multiprecision::pow(BigInt(m), 8u * m * m);
  if (m == 1) {
    out.power_f = 56;
    return out;
  }
  mpfr_t x;
  mpfr_init2(x, 128);
  mpfr_set_ui(x, m, MPFR_RNDU);
  mpfr_log2(x, x, MPFR_RNDU);
  mpfr_mul_ui(x, x, 8, MPFR_RNDU);
  mpfr_sqrt(x, x, MPFR_RNDU);
  mpfr_mul_ui(x, x, 40ul * m, MPFR_RNDU);
  mpfr_ceil(x, x);
  out.power_f = mpfr_get_ui(x, MPFR_RNDU) + 56;
  mpfr_clear(x);
  return out;
}

}  // namespace waring
