#include "waring/field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "waring/numth.hpp"

namespace waring {
namespace {

// Conway polynomials, coefficients low to high.
const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>>& conway_table() {
  static const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> t = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 12}, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
      {{3, 8}, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
      {{17, 2}, {3, 16, 1}},
      {{19, 2}, {2, 18, 1}},
  };
  return t;
}

}  // namespace

std::shared_ptr<const FieldSpec> FieldSpec::make(uint32_t p, uint32_t f) {
  if (!is_prime_u64(p)) throw std::invalid_argument("make_field: p is not prime");
  if (f < 1 || f > 12) throw std::invalid_argument("make_field: degree outside [1, 12]");
  uint64_t q = 1;
  for (uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > (uint64_t(1) << 31)) throw std::invalid_argument("make_field: p^f exceeds 2^31");
  }
  std::shared_ptr<FieldSpec> F(new FieldSpec());
  F->p_ = p;
  F->f_ = f;
  F->q_ = q;
  if (f == 1) {
    F->modulus_ = {0, 1};
  } else if (auto it = conway_table().find({p, f}); it != conway_table().end() && q <= 65536) {
    F->modulus_ = it->second;
    F->conway_ = true;
  } else {
    auto Fp = make(p, 1);
    uint64_t pf = q;
    for (uint64_t t = 0; t < pf; ++t) {
      poly::Poly m(f + 1);
      uint64_t v = t;
      for (uint32_t i = 0; i < f; ++i) {
        m[i] = static_cast<Elem>(v % p);
        v /= p;
      }
      m[f] = 1;
      if (m[0] == 0) continue;
      if (poly::is_irreducible(*Fp, m)) {
        F->modulus_.assign(m.begin(), m.end());
        break;
      }
    }
  }
  F->order_factors_ = distinct_primes(q - 1 == 0 ? 1 : q - 1);
  if (q == 2) {
    F->primitive_ = 1;
  } else {
    for (Elem g = 1; g < q; ++g) {
      bool ok = true;
      for (uint64_t r : F->order_factors_) {
        if (F->pow(g, (q - 1) / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        F->primitive_ = g;
        break;
      }
    }
  }
  if (f > 1 && q <= (uint64_t(1) << 20)) {
    std::vector<uint32_t> lg(q, 0), ex(2 * (q - 1));
    Elem x = 1;
    for (uint64_t i = 0; i < q - 1; ++i) {
      ex[i] = x;
      lg[x] = static_cast<uint32_t>(i);
      x = F->mul_poly(x, F->primitive_);
    }
    for (uint64_t i = q - 1; i < 2 * (q - 1); ++i) ex[i] = ex[i - (q - 1)];
    F->log_ = std::move(lg);
    F->exp_ = std::move(ex);
  }
  if (f > 1 && p != 2 && q <= 1024) {
    std::vector<uint16_t> at(q * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) at[a * q + b] = static_cast<uint16_t>(F->add_digits(a, b, false));
    F->add_table_ = std::move(at);
  }
  return F;
}

Elem FieldSpec::add_digits(Elem a, Elem b, bool subtract) const {
  Elem r = 0, scale = 1;
  for (uint32_t i = 0; i < f_; ++i) {
    uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    uint32_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    r += d * scale;
    scale *= p_;
  }
  return r;
}

Elem FieldSpec::add(Elem a, Elem b) const {
  if (f_ == 1) return static_cast<Elem>((uint64_t(a) + b) % p_);
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  return add_digits(a, b, false);
}

Elem FieldSpec::sub(Elem a, Elem b) const {
  if (f_ == 1) return static_cast<Elem>((uint64_t(a) + p_ - b) % p_);
  if (p_ == 2) return a ^ b;
  return add_digits(a, b, true);
}

Elem FieldSpec::neg(Elem a) const { return sub(0, a); }

Elem FieldSpec::mul_poly(Elem a, Elem b) const {
  if (f_ == 1) return static_cast<Elem>(uint64_t(a) * b % p_);
  std::vector<uint64_t> ca(f_), cb(f_), prod(2 * f_ - 1, 0);
  for (uint32_t i = 0; i < f_; ++i) {
    ca[i] = a % p_;
    a /= p_;
    cb[i] = b % p_;
    b /= p_;
  }
  for (uint32_t i = 0; i < f_; ++i)
    for (uint32_t j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  for (int k = 2 * static_cast<int>(f_) - 2; k >= static_cast<int>(f_); --k) {
    uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (uint32_t i = 0; i < f_; ++i)
      prod[k - f_ + i] = (prod[k - f_ + i] + (p_ - c) * modulus_[i]) % p_;
  }
  Elem r = 0, scale = 1;
  for (uint32_t i = 0; i < f_; ++i) {
    r += static_cast<Elem>(prod[i]) * scale;
    scale *= p_;
  }
  return r;
}

Elem FieldSpec::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return exp_[log_[a] + log_[b]];
  return mul_poly(a, b);
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw std::domain_error("field inverse of zero");
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Elem FieldSpec::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem FieldSpec::pow(Elem a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (!log_.empty()) return exp_[(uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul_poly(r, a);
    a = mul_poly(a, a);
    e >>= 1;
  }
  return r;
}

Elem FieldSpec::frobenius(Elem a, unsigned k) const {
  for (unsigned i = 0; i < k; ++i) a = pow(a, p_);
  return a;
}

Elem FieldSpec::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<uint32_t> FieldSpec::coeffs(Elem a) const {
  std::vector<uint32_t> c(f_);
  for (uint32_t i = 0; i < f_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem FieldSpec::from_coeffs(std::span<const uint32_t> c) const {
  if (c.size() != f_) throw std::invalid_argument("from_coeffs: wrong length");
  Elem r = 0, scale = 1;
  for (uint32_t i = 0; i < f_; ++i) {
    if (c[i] >= p_) throw std::invalid_argument("from_coeffs: coefficient out of range");
    r += c[i] * scale;
    scale *= p_;
  }
  return r;
}

uint64_t FieldSpec::mult_order(Elem a) const {
  if (a == 0) throw std::domain_error("multiplicative order of zero");
  uint64_t n = q_ - 1;
  for (uint64_t r : order_factors_) {
    while (n % r == 0 && pow(a, n / r) == 1) n /= r;
  }
  return n;
}

std::string FieldSpec::to_string(Elem a) const {
  if (f_ == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::string s;
  for (int i = static_cast<int>(f_) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string FieldSpec::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_->order()) throw std::invalid_argument("field element out of range");
}

FieldElement FieldElement::from_coeffs(FieldPtr field, std::span<const uint32_t> c) {
  Elem v = field->from_coeffs(c);
  return FieldElement(std::move(field), v);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    throw std::invalid_argument("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(uint64_t e) const { return {field_, field_->pow(value_, e)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return value_ == o.value_;
}

FieldEmbedding::FieldEmbedding(FieldPtr small, FieldPtr large)
    : small_(std::move(small)), large_(std::move(large)) {
  const uint32_t a = small_->degree(), b = large_->degree();
  if (small_->characteristic() != large_->characteristic() || b % a != 0)
    throw std::invalid_argument("FieldEmbedding: no embedding between these fields");
  const FieldSpec& L = *large_;
  Elem root = 0;
  if (a == 1) {
    root = 0;
  } else {
    poly::Poly m;
    for (uint32_t c : small_->modulus()) m.push_back(L.from_int(c));
    bool found = false;
    for (Elem r = 0; r < L.order(); ++r) {
      if (poly::eval(L, m, r) == 0) {
        root = r;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("FieldEmbedding: modulus has no root");
  }
  image_.resize(small_->order());
  for (Elem x = 0; x < small_->order(); ++x) {
    if (a == 1) {
      image_[x] = L.from_int(x);
      continue;
    }
    auto c = small_->coeffs(x);
    Elem v = 0, rp = 1;
    for (uint32_t i = 0; i < a; ++i) {
      v = L.add(v, L.mul(L.from_int(c[i]), rp));
      rp = L.mul(rp, root);
    }
    image_[x] = v;
  }
}

std::optional<Elem> FieldEmbedding::preimage(Elem b) const {
  auto it = std::find(image_.begin(), image_.end(), b);
  if (it == image_.end()) return std::nullopt;
  return static_cast<Elem>(it - image_.begin());
}

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly add(const FieldSpec& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly sub(const FieldSpec& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

Poly mul(const FieldSpec& F, const Poly& a, const Poly& b) {
  if (degree(a) < 0 || degree(b) < 0) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly divmod(const FieldSpec& F, const Poly& a, const Poly& b, Poly* quotient) {
  int db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  trim(r);
  Poly q;
  int dr = degree(r);
  if (dr >= db) q.assign(dr - db + 1, 0);
  Elem lead_inv = F.inv(b[db]);
  while ((dr = degree(r)) >= db) {
    Elem c = F.mul(r[dr], lead_inv);
    q[dr - db] = c;
    for (int i = 0; i <= db; ++i) r[dr - db + i] = F.sub(r[dr - db + i], F.mul(c, b[i]));
    trim(r);
  }
  if (quotient) {
    trim(q);
    *quotient = q;
  }
  return r;
}

Poly gcd(const FieldSpec& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (degree(b) >= 0) {
    Poly r = divmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  int d = degree(a);
  if (d < 0) return {};
  Elem li = F.inv(a[d]);
  for (auto& c : a) c = F.mul(c, li);
  return a;
}

Poly derivative(const FieldSpec& F, const Poly& a) {
  Poly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(F.from_int(static_cast<int64_t>(i)), a[i]));
  trim(r);
  return r;
}

Poly powmod(const FieldSpec& F, const Poly& base, uint64_t e, const Poly& m) {
  Poly r{1};
  r = divmod(F, r, m);
  Poly b = divmod(F, base, m);
  while (e) {
    if (e & 1) r = divmod(F, mul(F, r, b), m);
    b = divmod(F, mul(F, b, b), m);
    e >>= 1;
  }
  return r;
}

Elem eval(const FieldSpec& F, const Poly& a, Elem x) {
  Elem r = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) r = F.add(F.mul(r, x), a[i]);
  return r;
}

bool is_irreducible(const FieldSpec& F, const Poly& f) {
  int d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  Poly x{0, 1};
  Poly h = divmod(F, x, f);
  for (int k = 1; k <= d / 2; ++k) {
    h = powmod(F, h, F.order(), f);
    Poly g = gcd(F, f, sub(F, h, x));
    if (degree(g) > 0) return false;
  }
  return true;
}

bool is_squarefree(const FieldSpec& F, const Poly& f) {
  Poly df = derivative(F, f);
  if (degree(df) < 0) return degree(f) <= 0;
  return degree(gcd(F, f, df)) == 0;
}

}  // namespace poly
}  // namespace waring
