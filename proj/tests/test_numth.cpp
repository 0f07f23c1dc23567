#include <doctest.h>

#include <cmath>
#include <random>

#include "common.hpp"
#include "oracles.hpp"
#include "waring/numth.hpp"

using namespace waring;

namespace {

bool fits(uint64_t q, unsigned n) {
  long double v = 1;
  for (unsigned i = 0; i < n; ++i) v *= q;
  return v <= std::ldexp(1.0L, 63);
}

}  // namespace

TEST_CASE("primality and factorization against trial division") {
  for (uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    CHECK(is_prime_u64(n) == prime);
  }
  CHECK(is_prime_u64(18446744073709551557ull));
  CHECK_FALSE(is_prime_u64(18446744073709551557ull - 2));
  auto& r = testing::rng();
  for (int t = 0; t < 200; ++t) {
    const uint64_t n = (r() >> (t % 40)) | 1;
    uint64_t prod = 1;
    uint64_t last = 0;
    for (auto [p, e] : factorize(n)) {
      CHECK(oracle::is_prime(p));
      CHECK(p > last);
      last = p;
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("multiplicative order against repeated multiplication") {
  for (uint64_t m = 2; m < 300; ++m)
    for (uint64_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      uint64_t o = 1, x = a % m;
      while (x != 1) {
        x = x * a % m;
        ++o;
      }
      REQUIRE(multiplicative_order(a, m) == o);
    }
  CHECK_THROWS_AS(multiplicative_order(2, 4), std::invalid_argument);
}

TEST_CASE("ppd examples") {
  CHECK_FALSE(ppd(2, 6).has_value());
  CHECK_FALSE(ppd(2, 1).has_value());
  REQUIRE(ppd(4, 3).has_value());
  CHECK(*ppd(4, 3) == 7);
  CHECK(*ppd(PpdQuery{3, 3}) == 13);
  CHECK(*ppd(3, 6) == 7);
  CHECK_THROWS_AS(ppd(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(ppd(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(ppd(2, 64), std::overflow_error);
  CHECK_NOTHROW(ppd(2, 63));
}

TEST_CASE("ppd results re-verified and matched to the brute-force oracle") {
  size_t checked = 0;
  for (uint64_t q = 2; q <= 32; ++q)
    for (unsigned n = 1; n <= 20; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      if (!fits(q, n)) {
        CHECK_THROWS_AS(ppd(q, n), std::overflow_error);
        continue;
      }
      const auto r = ppd(q, n);
      CHECK(r == oracle::ppd(q, n));
      CHECK(!r.has_value() == oracle::zsigmondy_exception(q, n));
      CHECK(zsigmondy_exception(q, n) == oracle::zsigmondy_exception(q, n));
      if (r) {
        CHECK(oracle::is_prime(*r));
        uint64_t qn = 1;
        for (unsigned i = 0; i < n; ++i) qn = oracle::mulmod(qn, q, *r);
        CHECK(qn == 1);
        uint64_t qi = 1;
        for (unsigned i = 1; i < n; ++i) {
          qi = oracle::mulmod(qi, q % *r, *r);
          CHECK(qi != 1);
        }
      }
      ++checked;
    }
  CHECK(checked > 300);
}

TEST_CASE("waring bounds") {
  CHECK(waring_bounds(2).threshold == BigInt(1) << 32);
  CHECK(waring_bounds(1).power_f == 56);
  CHECK(waring_bounds(1).threshold == 1);
  CHECK(waring_bounds(6).power_f == 1148);
  BigInt prev = 0;
  for (unsigned m = 1; m <= 12; ++m) {
    const auto b = waring_bounds(m);
    BigInt t = 1;
    for (unsigned i = 0; i < 8 * m * m; ++i) t *= m;
    CHECK(b.threshold == t);
    CHECK(b.threshold > prev);
    prev = b.threshold;
    const long double real = 40.0L * m * std::sqrt(8.0L * std::log2(static_cast<long double>(m))) + 56;
    CHECK(static_cast<long double>(b.power_f) >= real);
    CHECK(static_cast<long double>(b.power_f) < real + 1.0001L);
  }
  CHECK_THROWS_AS(waring_bounds(0), std::invalid_argument);
}
