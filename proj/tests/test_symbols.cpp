#include <doctest.h>

#include "common.hpp"
#include "waring/group.hpp"
#include "waring/symbols.hpp"

using namespace waring;

namespace {

BigInt ipow(uint64_t b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  REQUIRE(a % b == 0);
  return a / b;
}

BigInt alpha_closed(unsigned n, uint64_t q) {
  return exact_div((ipow(q, n) - 1) * (ipow(q, n - 1) + q), ipow(q, 2) - 1);
}

BigInt beta_closed(unsigned n, uint64_t q) {
  return exact_div(ipow(q, n * n - 3 * n + 3) * (ipow(q, n) - 1) * (ipow(q, n - 2) + 1), ipow(q, 2) - 1);
}

}  // namespace

TEST_CASE("symbol validity and text form") {
  Symbol s{{1, 2}, {0, 3}};
  CHECK(s.str() == "({1,2},{0,3})");
  CHECK(Symbol::parse(s.str()) == s);
  CHECK(Symbol::parse("({3},{1})") == Symbol{{3}, {1}});
  CHECK(Symbol::parse("({0,1,2,3,5},{1,2,3,4,5})") == beta_symbol(6));
  CHECK_THROWS_AS((Symbol{{0}, {0}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((Symbol{{2, 1}, {0}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((Symbol{{1, 2}, {0}}).validate(), std::invalid_argument);
  try {
    (Symbol{{1}, {0}}).validate();
    CHECK(symbol_rank(Symbol{{1}, {0}}) == 1);
  } catch (const std::invalid_argument&) {
  }
  CHECK(Symbol::parse("{1},{2}") == Symbol{{1}, {2}});
  CHECK_THROWS_AS(Symbol::parse("({1,2},{0,3)"), std::invalid_argument);
  CHECK_THROWS_AS(Symbol::parse("({1,a},{0})"), std::invalid_argument);
  CHECK_NOTHROW((Symbol{{1, 2, 3, 4, 5}, {0}}).validate());
}

TEST_CASE("symbol ranks") {
  for (unsigned n = 2; n <= 10; ++n) {
    CHECK(symbol_rank(Symbol{{n}, {0}}) == n);
    CHECK(symbol_rank(trivial_symbol(n)) == n);
    CHECK(symbol_rank(steinberg_symbol(n)) == n);
    if (n >= 4) {
      CHECK(symbol_rank(alpha_symbol(n)) == n);
      CHECK(symbol_rank(beta_symbol(n)) == n);
    }
  }
  CHECK(symbol_rank(Symbol{{3}, {1}}) == 4);
  Symbol st{{1, 2, 3, 4}, {0, 1, 2, 3}};
  CHECK(st == steinberg_symbol(4));
}

TEST_CASE("hooks and cohooks") {
  for (unsigned n = 2; n <= 9; ++n) {
    auto h = hooks_and_cohooks(Symbol{{n}, {0}});
    REQUIRE(h.hooks.size() == n);
    for (unsigned b = 0; b < n; ++b) CHECK(h.hooks[b] == std::pair<uint32_t, uint32_t>{b, n});
    REQUIRE(h.cohooks.size() == n - 1);
    for (unsigned b = 1; b < n; ++b) CHECK(h.cohooks[b - 1] == std::pair<uint32_t, uint32_t>{b, n});
    CHECK(h.a_stat == 0);
  }
  Symbol same{{1, 2}, {1, 2}};
  CHECK(hooks_and_cohooks(same).b_stat == 0);
  for (const Symbol& s : {alpha_symbol(6), beta_symbol(6), steinberg_symbol(5), Symbol{{1, 2}, {0, 3}}}) {
    auto h = hooks_and_cohooks(s);
    for (auto [b, c] : h.hooks) CHECK(b < c);
    for (auto [b, c] : h.cohooks) CHECK(b < c);
  }
}

TEST_CASE("unipotent degree examples") {
  for (uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (unsigned n = 2; n <= 8; ++n) CHECK(unipotent_degree(trivial_symbol(n), q) == 1);
  CHECK(unipotent_degree(Symbol{{3}, {1}}, 2) == 50);
  CHECK(unipotent_degree(beta_symbol(6), 2) == ipow(2, 21) * 63 * 17 / 3);
  CHECK_THROWS_AS(unipotent_degree(trivial_symbol(4), 6), std::invalid_argument);
  CHECK_THROWS_AS(unipotent_degree(trivial_symbol(4), 1), std::invalid_argument);
}

TEST_CASE("named symbol degrees reproduce their closed forms") {
  for (unsigned n = 4; n <= 8; ++n)
    for (uint64_t q : {2, 3, 4}) {
      CAPTURE(n);
      CAPTURE(q);
      CHECK(unipotent_degree(alpha_symbol(n), q) == alpha_closed(n, q));
      CHECK(unipotent_degree(beta_symbol(n), q) == beta_closed(n, q));
      CHECK(alpha_degree(n, q) == alpha_closed(n, q));
      CHECK(beta_degree(n, q) == beta_closed(n, q));
      CHECK(unipotent_degree(steinberg_symbol(n), q) == ipow(q, n * (n - 1)));
    }
}

TEST_CASE("Steinberg degree is the q-part of the order") {
  for (unsigned n = 2; n <= 8; ++n)
    for (uint64_t q : {2, 3, 4}) CHECK(unipotent_degree(steinberg_symbol(n), q) == dn_order(n, q).q_part);
}

TEST_CASE("unipotent degrees divide the group order") {
  // all symbols of rank 4 with small entries
  for (uint32_t mask = 1; mask < (1u << 6); ++mask)
    for (uint32_t mask2 = 0; mask2 < (1u << 6); ++mask2) {
      Symbol s;
      for (uint32_t i = 0; i < 6; ++i) {
        if ((mask >> i) & 1) s.X.push_back(i);
        if ((mask2 >> i) & 1) s.Y.push_back(i);
      }
      try {
        s.validate();
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (symbol_rank(s) != 4) continue;
      for (uint64_t q : {2, 3}) {
        CAPTURE(s.str());
        BigInt d;
        REQUIRE_NOTHROW(d = unipotent_degree(s, q));
        CHECK(d > 0);
        CHECK(dn_order(4, q).order % d == 0);
      }
    }
}
