#pragma once
// Finite fields GF(p^f) with elements encoded as integers in [0, p^f).
//
// An element with power-basis coefficients (c_0, ..., c_{f-1}) over the
// defining modulus is encoded as sum c_i p^i (little-endian base-p packing).
// This encoding is what every matrix, cache record and report uses.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace waring {

using Elem = uint32_t;

class FieldSpec {
 public:
  // Builds GF(p^f). Throws std::invalid_argument when p is not prime, f is
  // outside [1, 12], or p^f exceeds 2^31.
  static std::shared_ptr<const FieldSpec> make(uint32_t p, uint32_t f);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return f_; }
  uint64_t order() const { return q_; }
  // Monic defining polynomial, coefficients low to high (size f + 1).
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  bool modulus_is_conway() const { return conway_; }
  bool is_prime_field() const { return f_ == 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws std::domain_error on zero
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, uint64_t e) const;
  // a^(p^k)
  Elem frobenius(Elem a, unsigned k = 1) const;
  // Image of an integer in the prime subfield.
  Elem from_int(int64_t v) const;

  std::vector<uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const uint32_t> c) const;

  // Least n >= 1 with a^n = 1; throws std::domain_error for zero.
  uint64_t mult_order(Elem a) const;
  // Least-encoding element of multiplicative order q - 1.
  Elem primitive_element() const { return primitive_; }

  std::string to_string(Elem a) const;
  // GF(p) or GF(p^f) label.
  std::string name() const;

  bool same_as(const FieldSpec& other) const {
    return p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_;
  }

 private:
  FieldSpec() = default;
  Elem mul_poly(Elem a, Elem b) const;
  Elem add_digits(Elem a, Elem b, bool subtract) const;

  uint32_t p_ = 2;
  uint32_t f_ = 1;
  uint64_t q_ = 2;
  bool conway_ = false;
  std::vector<uint32_t> modulus_;
  std::vector<uint64_t> order_factors_;  // distinct primes of q - 1
  Elem primitive_ = 1;
  // log/exp tables for q <= 2^20 with f > 1; exp has 2(q-1) entries.
  std::vector<uint32_t> log_;
  std::vector<uint32_t> exp_;
  // add table for non-prime fields with q <= 1024
  std::vector<uint16_t> add_table_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

inline FieldPtr make_field(uint32_t p, uint32_t f) { return FieldSpec::make(p, f); }

// Value type pairing an encoding with its field; arithmetic across distinct
// fields throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);
  static FieldElement from_coeffs(FieldPtr field, std::span<const uint32_t> c);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<uint32_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(uint64_t e) const;
  uint64_t mult_order() const { return field_->mult_order(value_); }
  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;
  FieldPtr field_;
  Elem value_;
};

// GF(q) -> GF(q^k): the defining generator of the small field is sent to the
// least-encoding root of the small modulus inside the large field.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr small, FieldPtr large);
  Elem operator()(Elem a) const { return image_[a]; }
  std::optional<Elem> preimage(Elem b) const;
  const FieldPtr& small() const { return small_; }
  const FieldPtr& large() const { return large_; }

 private:
  FieldPtr small_, large_;
  std::vector<Elem> image_;
};

// Polynomials over a FieldSpec, coefficients low to high, trimmed so that the
// leading coefficient is nonzero (the zero polynomial is empty).
namespace poly {
using Poly = std::vector<Elem>;
void trim(Poly& a);
int degree(const Poly& a);
Poly add(const FieldSpec& F, const Poly& a, const Poly& b);
Poly sub(const FieldSpec& F, const Poly& a, const Poly& b);
Poly mul(const FieldSpec& F, const Poly& a, const Poly& b);
// Returns remainder; quotient stored when requested.
Poly divmod(const FieldSpec& F, const Poly& a, const Poly& b, Poly* quotient = nullptr);
Poly gcd(const FieldSpec& F, Poly a, Poly b);  // monic
Poly derivative(const FieldSpec& F, const Poly& a);
Poly powmod(const FieldSpec& F, const Poly& base, uint64_t e, const Poly& m);
Elem eval(const FieldSpec& F, const Poly& a, Elem x);
// Irreducibility over F via gcd(f, x^(|F|^k) - x) = 1 for k <= deg/2.
bool is_irreducible(const FieldSpec& F, const Poly& f);
bool is_squarefree(const FieldSpec& F, const Poly& f);
}  // namespace poly

}  // namespace waring
