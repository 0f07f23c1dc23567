#include "waring/symbols.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace waring {

namespace {

bool strictly_increasing(const std::vector<uint32_t>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) return false;
  return true;
}

bool has(const std::vector<uint32_t>& v, int64_t x) {
  return x >= 0 && std::binary_search(v.begin(), v.end(), static_cast<uint32_t>(x));
}

int64_t raw_rank(const Symbol& S) {
  int64_t s = 0;
  for (auto x : S.X) s += x;
  for (auto y : S.Y) s += y;
  const int64_t m = int64_t(S.X.size() + S.Y.size());
  return s - m * (m - 2) / 4;
}

BigInt ipow(uint64_t b, uint64_t e) { return boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(e)); }

std::vector<uint32_t> parse_row(const std::string& body) {
  std::vector<uint32_t> out;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    out.push_back(static_cast<uint32_t>(std::stoul(tok)));
  }
  return out;
}

}  // namespace

void Symbol::validate() const {
  if (!strictly_increasing(X) || !strictly_increasing(Y)) throw std::invalid_argument("symbol rows must be strictly increasing");
  if (has(X, 0) && has(Y, 0)) throw std::invalid_argument("0 lies in both rows of the symbol");
  const int64_t d = int64_t(X.size()) - int64_t(Y.size());
  if (d % 4 != 0) throw std::invalid_argument("row lengths must differ by a multiple of 4");
  if (raw_rank(*this) <= 0) throw std::invalid_argument("symbol rank must be positive");
}

std::string Symbol::str() const {
  auto row = [](const std::vector<uint32_t>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  return "(" + row(X) + "," + row(Y) + ")";
}

Symbol Symbol::parse(const std::string& text) {
  static const std::regex re(R"(^\s*\(?\s*\{([0-9,\s]*)\}\s*[,;]\s*\{([0-9,\s]*)\}\s*\)?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("cannot parse symbol: " + text);
  Symbol S{parse_row(m[1]), parse_row(m[2])};
  S.validate();
  return S;
}

int64_t symbol_rank(const Symbol& S) {
  S.validate();
  return raw_rank(S);
}

HookData hooks_and_cohooks(const Symbol& S) {
  S.validate();
  HookData h;
  auto scan = [](const std::vector<uint32_t>& from, const std::vector<uint32_t>& to,
                 std::vector<std::pair<uint32_t, uint32_t>>& out) {
    for (uint32_t c : to)
      for (uint32_t b = 0; b < c; ++b)
        if (!has(from, b)) out.emplace_back(b, c);
  };
  scan(S.X, S.X, h.hooks);
  scan(S.Y, S.Y, h.hooks);
  scan(S.Y, S.X, h.cohooks);
  scan(S.X, S.Y, h.cohooks);
  std::sort(h.hooks.begin(), h.hooks.end());
  std::sort(h.cohooks.begin(), h.cohooks.end());

  std::vector<uint32_t> all = S.X;
  all.insert(all.end(), S.Y.begin(), S.Y.end());
  std::sort(all.begin(), all.end());
  const int64_t m = int64_t(all.size());
  // sorted ascending, so entry i is the minimum of its pairs with the m-1-i later entries
  for (int64_t i = 0; i < m; ++i) h.a_stat += int64_t(all[i]) * (m - 1 - i);
  for (int64_t i = 1; m - 2 * i >= 2; ++i) h.a_stat -= (m - 2 * i) * (m - 2 * i - 1) / 2;

  if (S.X != S.Y) {
    int64_t common = 0;
    for (uint32_t x : S.X) common += has(S.Y, x);
    h.b_stat = (m - 1) / 2 - common;
  }
  return h;
}

BigInt unipotent_degree(const Symbol& S, uint64_t q) {
  if (q < 2 || distinct_primes(q).size() != 1) throw std::invalid_argument("q must be a prime power");
  const int64_t n = symbol_rank(S);
  HookData h = hooks_and_cohooks(S);
  if (h.a_stat < 0 || h.b_stat < 0) throw std::domain_error("negative symbol statistic");
  BigInt num = ipow(q, h.a_stat) * (ipow(q, n) - 1);
  for (int64_t i = 1; i < n; ++i) num *= ipow(q, 2 * i) - 1;
  BigInt den = ipow(2, h.b_stat);
  for (auto [b, c] : h.hooks) den *= ipow(q, c - b) - 1;
  for (auto [b, c] : h.cohooks) den *= ipow(q, c - b) + 1;
  if (num % den != 0) throw std::domain_error("non-integral degree for symbol " + S.str());
  return num / den;
}

Symbol trivial_symbol(unsigned n) { return Symbol{{n}, {0}}; }

Symbol steinberg_symbol(unsigned n) {
  Symbol S;
  for (unsigned i = 1; i <= n; ++i) S.X.push_back(i);
  for (unsigned i = 0; i < n; ++i) S.Y.push_back(i);
  return S;
}

Symbol alpha_symbol(unsigned n) {
  if (n < 2) throw std::invalid_argument("alpha symbol needs n >= 2");
  return Symbol{{n - 1}, {1}};
}

Symbol beta_symbol(unsigned n) {
  if (n < 4) throw std::invalid_argument("beta symbol needs n >= 4");
  Symbol S;
  for (unsigned i = 0; i <= n - 3; ++i) S.X.push_back(i);
  S.X.push_back(n - 1);
  for (unsigned i = 1; i <= n - 1; ++i) S.Y.push_back(i);
  return S;
}

BigInt alpha_degree(unsigned n, uint64_t q) {
  BigInt num = (ipow(q, n) - 1) * (ipow(q, n - 1) + q);
  return num / (ipow(q, 2) - 1);
}

BigInt beta_degree(unsigned n, uint64_t q) {
  BigInt num = ipow(q, n * n - 3 * n + 3) * (ipow(q, n) - 1) * (ipow(q, n - 2) + 1);
  return num / (ipow(q, 2) - 1);
}

}  // namespace waring
