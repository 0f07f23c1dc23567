#pragma once
// Elements of Z[zeta_e] stored as coefficient vectors over the powers
// zeta_e^0 .. zeta_e^(e-1) (not reduced modulo the cyclotomic polynomial).

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace waring {

// Integer coefficients of Phi_n, low to high.
const std::vector<int64_t>& cyclotomic_poly(uint32_t n);
uint64_t euler_phi(uint64_t n);
int mobius(uint64_t n);
// Trace of zeta_e^t from Q(zeta_e) to Q.
int64_t ramanujan_sum(uint32_t e, uint32_t t);

// True when sum v[t] zeta_e^t is zero, decided by exact long division by
// Phi_e (falls back to big integers if 64-bit lanes could overflow).
bool is_zero_cyclotomic(uint32_t e, std::vector<int64_t> v);

class CyclotomicInt {
 public:
  CyclotomicInt() = default;
  explicit CyclotomicInt(uint32_t e) : e_(e), mult_(e, 0) {}
  static CyclotomicInt integer(uint32_t e, int64_t v) {
    CyclotomicInt c(e);
    c.mult_[0] = v;
    return c;
  }

  uint32_t conductor() const { return e_; }
  int64_t operator[](uint32_t t) const { return mult_[t]; }
  int64_t& operator[](uint32_t t) { return mult_[t]; }
  const std::vector<int64_t>& coeffs() const { return mult_; }
  std::vector<std::pair<uint32_t, int64_t>> nonzeros() const;
  // Sum of coefficients (the value at zeta = 1).
  int64_t weight() const;

  CyclotomicInt conj() const;
  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  bool equals(const CyclotomicInt& o) const;  // equality in Z[zeta_e]
  bool operator==(const CyclotomicInt& o) const { return e_ == o.e_ && mult_ == o.mult_; }
  std::complex<double> to_complex() const;
  // e.g. "2 + z^3" with z = zeta_e
  std::string str() const;

 private:
  uint32_t e_ = 1;
  std::vector<int64_t> mult_;
};

}  // namespace waring
