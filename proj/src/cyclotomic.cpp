#include "waring/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "waring/kernels.hpp"
#include "waring/numth.hpp"

namespace waring {

const std::vector<int64_t>& cyclotomic_poly(uint32_t n) {
  static std::mutex mu;
  static std::map<uint32_t, std::vector<int64_t>> memo;
  if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  std::vector<int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (uint32_t d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& den = cyclotomic_poly(d);
    // exact division of num by the monic den
    const size_t dd = den.size() - 1;
    std::vector<int64_t> q(num.size() - dd, 0);
    for (size_t t = num.size(); t-- > dd;) {
      int64_t c = num[t];
      q[t - dd] = c;
      if (c) kernels::submul_i64(num.data() + (t - dd), den.data(), c, dd + 1);
    }
    num = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(n, std::move(num)).first->second;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (uint64_t p : distinct_primes(n)) r = r / p * (p - 1);
  return r;
}

int mobius(uint64_t n) {
  auto f = factorize(n);
  for (auto& [p, e] : f)
    if (e > 1) return 0;
  return (f.size() % 2) ? -1 : 1;
}

int64_t ramanujan_sum(uint32_t e, uint32_t t) {
  uint64_t g = std::gcd<uint64_t>(t % e, e);
  uint64_t m = e / g;
  return mobius(m) * static_cast<int64_t>(euler_phi(e) / euler_phi(m));
}

bool is_zero_cyclotomic(uint32_t e, std::vector<int64_t> v) {
  if (v.size() != e) throw std::invalid_argument("is_zero_cyclotomic: length mismatch");
  const auto& phi = cyclotomic_poly(e);
  const size_t deg = phi.size() - 1;
  int64_t hmax = 0;
  for (int64_t c : phi) hmax = std::max<int64_t>(hmax, std::llabs(c));
  const int64_t limit = int64_t(1) << 61;
  bool safe = true;
  int64_t cur = 0;
  for (int64_t c : v) cur = std::max<int64_t>(cur, std::llabs(c));
  for (size_t t = v.size(); t-- > deg;) {
    int64_t c = v[t];
    if (!c) continue;
    if (std::llabs(c) > limit / std::max<int64_t>(hmax, 1) || cur > limit / 2) {
      safe = false;
      break;
    }
    kernels::submul_i64(v.data() + (t - deg), phi.data(), c, deg + 1);
    for (size_t i = t - deg; i <= t; ++i) cur = std::max<int64_t>(cur, std::llabs(v[i]));
  }
  if (safe) {
    for (size_t t = 0; t < deg; ++t)
      if (v[t]) return false;
    return true;
  }
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> w(v.begin(), v.end());
  for (size_t t = w.size(); t-- > deg;) {
    if (w[t] == 0) continue;
    cpp_int c = w[t];
    for (size_t i = 0; i <= deg; ++i) w[t - deg + i] -= c * phi[i];
  }
  for (size_t t = 0; t < deg; ++t)
    if (w[t] != 0) return false;
  return true;
}

std::vector<std::pair<uint32_t, int64_t>> CyclotomicInt::nonzeros() const {
  std::vector<std::pair<uint32_t, int64_t>> out;
  for (uint32_t t = 0; t < e_; ++t)
    if (mult_[t]) out.emplace_back(t, mult_[t]);
  return out;
}

int64_t CyclotomicInt::weight() const { return std::accumulate(mult_.begin(), mult_.end(), int64_t(0)); }

CyclotomicInt CyclotomicInt::conj() const {
  CyclotomicInt r(e_);
  for (uint32_t t = 0; t < e_; ++t) r.mult_[(e_ - t) % e_] = mult_[t];
  return r;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  if (e_ != o.e_) throw std::invalid_argument("conductor mismatch");
  CyclotomicInt r(e_);
  for (uint32_t t = 0; t < e_; ++t) r.mult_[t] = mult_[t] + o.mult_[t];
  return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  if (e_ != o.e_) throw std::invalid_argument("conductor mismatch");
  CyclotomicInt r(e_);
  for (uint32_t t = 0; t < e_; ++t) r.mult_[t] = mult_[t] - o.mult_[t];
  return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  if (e_ != o.e_) throw std::invalid_argument("conductor mismatch");
  CyclotomicInt r(e_);
  auto a = nonzeros(), b = o.nonzeros();
  for (auto [s, x] : a)
    for (auto [t, y] : b) r.mult_[(s + t) % e_] += x * y;
  return r;
}

bool CyclotomicInt::equals(const CyclotomicInt& o) const { return is_zero_cyclotomic(e_, (*this - o).mult_); }

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<double> z = 0;
  for (auto [t, m] : nonzeros())
    z += static_cast<double>(m) * std::polar(1.0, 2 * std::numbers::pi * t / e_);
  return z;
}

std::string CyclotomicInt::str() const {
  std::string s;
  for (auto [t, m] : nonzeros()) {
    if (!s.empty()) s += m < 0 ? " - " : " + ";
    else if (m < 0) s += "-";
    int64_t a = std::llabs(m);
    if (t == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += "z^" + std::to_string(t);
  }
  return s.empty() ? "0" : s;
}

}  // namespace waring
