#pragma once
// Symbols of unipotent characters of even-dimensional orthogonal groups and
// their degrees via hooks and cohooks.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "waring/numth.hpp"

namespace waring {

struct Symbol {
  std::vector<uint32_t> X, Y;
  // Throws std::invalid_argument unless both rows are strictly increasing,
  // 0 is not in both, 4 | (|X| - |Y|) and the rank is positive.
  void validate() const;
  std::string str() const;  // "({1,2},{0,3})"
  // Accepts the str() form.
  static Symbol parse(const std::string& text);
  bool operator==(const Symbol&) const = default;
};

struct HookData {
  // Hooks from X and from Y are listed separately; a pair may occur twice.
  std::vector<std::pair<uint32_t, uint32_t>> hooks, cohooks;
  int64_t a_stat = 0;
  int64_t b_stat = 0;
};

int64_t symbol_rank(const Symbol& S);
HookData hooks_and_cohooks(const Symbol& S);
// q^a |G|_q' / (2^b prod(q^h - 1) prod(q^c + 1)), |G|_q' = (q^n - 1) prod_{i<n} (q^2i - 1).
// Throws std::domain_error if the quotient is not an integer and
// std::invalid_argument if q is not a prime power.
BigInt unipotent_degree(const Symbol& S, uint64_t q);

Symbol trivial_symbol(unsigned n);
Symbol steinberg_symbol(unsigned n);
Symbol alpha_symbol(unsigned n);
Symbol beta_symbol(unsigned n);
// (q^n - 1)(q^(n-1) + q)/(q^2 - 1)
BigInt alpha_degree(unsigned n, uint64_t q);
// q^(n^2-3n+3) (q^n - 1)(q^(n-2) + 1)/(q^2 - 1)
BigInt beta_degree(unsigned n, uint64_t q);

}  // namespace waring
