#pragma once
// Fully enumerated finite groups: permutation groups and classical matrix
// groups over finite fields, plus central quotients.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "waring/field.hpp"
#include "waring/numth.hpp"

namespace waring {

enum class GroupKind { Cyclic, Sym, Alt, SL, PSL, SU, PSU, Sp, PSp, OmegaPlusSampler, Quotient };

struct GroupSpec {
  GroupKind kind = GroupKind::Alt;
  unsigned n = 5;   // degree, matrix dimension, or cyclic order
  uint64_t q = 0;   // field size for matrix kinds (SU: q, matrices over GF(q^2))

  // Accepts "Alt(5)", "A5", "Sym(5)", "S5", "C3", "Cyclic(3)", "SL(2,5)",
  // "PSL(3,2)", "SU(3,3)", "SU3(3)", "SU4(2)", "PSU3(3)", "Sp(4,3)",
  // "Sp4(3)", "PSp4(3)", "OmegaPlus(8,2)".
  static GroupSpec parse(const std::string& text);
  std::string name() const;
  bool is_matrix() const;
  bool is_projective() const;
  bool operator==(const GroupSpec&) const = default;
};

struct OrderSplit {
  BigInt order;
  BigInt q_part;
  BigInt q_prime_part;
};

// Exact order of the named group (SU uses the unitary group over GF(q^2)).
OrderSplit closed_form_order(const GroupSpec& spec);
// Order convention used for D_n symbol degrees:
// q^(n(n-1)) (q^n - 1) prod_{i=1}^{n-1} (q^(2i) - 1).
OrderSplit dn_order(unsigned n, const BigInt& q);

// How an element's data is interpreted and multiplied. Elements are fixed
// width arrays of uint32: permutation images or row-major matrix entries.
class Realization {
 public:
  virtual ~Realization() = default;
  virtual unsigned width() const = 0;
  virtual void identity(uint32_t* out) const = 0;
  virtual void multiply(const uint32_t* a, const uint32_t* b, uint32_t* out) const = 0;
  virtual void inverse(const uint32_t* a, uint32_t* out) const = 0;
  virtual uint64_t key(const uint32_t* a) const = 0;
  // Maps data to the canonical representative (quotients only).
  virtual void canonicalize(uint32_t*) const {}
  virtual bool is_matrix() const { return false; }
  virtual unsigned dim() const { return 0; }
  virtual FieldPtr field() const { return nullptr; }
  virtual std::string format(const uint32_t* a) const;
};

class PermRealization final : public Realization {
 public:
  explicit PermRealization(unsigned degree);
  unsigned width() const override { return n_; }
  void identity(uint32_t* out) const override;
  // (a*b)(i) = b(a(i)): a is applied first.
  void multiply(const uint32_t* a, const uint32_t* b, uint32_t* out) const override;
  void inverse(const uint32_t* a, uint32_t* out) const override;
  uint64_t key(const uint32_t* a) const override;
  std::string format(const uint32_t* a) const override;

 private:
  unsigned n_;
  unsigned bits_;
};

class MatrixRealization final : public Realization {
 public:
  MatrixRealization(FieldPtr field, unsigned dim);
  unsigned width() const override { return n_ * n_; }
  void identity(uint32_t* out) const override;
  void multiply(const uint32_t* a, const uint32_t* b, uint32_t* out) const override;
  void inverse(const uint32_t* a, uint32_t* out) const override;
  uint64_t key(const uint32_t* a) const override;
  bool is_matrix() const override { return true; }
  unsigned dim() const override { return n_; }
  FieldPtr field() const override { return F_; }
  std::string format(const uint32_t* a) const override;

 private:
  FieldPtr F_;
  unsigned n_;
  unsigned bits_;
  std::vector<uint32_t> mul_table_;  // q*q products for q <= 256
};

// Elements are cosets of a central subgroup, each stored as its member with
// the least key.
class QuotientRealization final : public Realization {
 public:
  QuotientRealization(std::shared_ptr<const Realization> parent,
                      std::vector<std::vector<uint32_t>> central);
  unsigned width() const override { return parent_->width(); }
  void identity(uint32_t* out) const override;
  void multiply(const uint32_t* a, const uint32_t* b, uint32_t* out) const override;
  void inverse(const uint32_t* a, uint32_t* out) const override;
  uint64_t key(const uint32_t* a) const override { return parent_->key(a); }
  void canonicalize(uint32_t* a) const override;
  bool is_matrix() const override { return parent_->is_matrix(); }
  unsigned dim() const override { return parent_->dim(); }
  FieldPtr field() const override { return parent_->field(); }
  std::string format(const uint32_t* a) const override { return parent_->format(a); }
  const Realization& parent() const { return *parent_; }

 private:
  std::shared_ptr<const Realization> parent_;
  std::vector<std::vector<uint32_t>> central_;
};

inline constexpr uint64_t kDefaultCap = 1000000;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  // Throws std::length_error when the order exceeds cap and
  // std::invalid_argument for unsupported kinds or parameters.
  static GroupPtr build(const GroupSpec& spec, uint64_t cap = kDefaultCap);
  // Closure of explicit generators; elements are in breadth-first order.
  static GroupPtr from_generators(const GroupSpec& spec, std::shared_ptr<const Realization> real,
                                  const std::vector<std::vector<uint32_t>>& gens,
                                  uint64_t cap = kDefaultCap);

  const GroupSpec& spec() const { return spec_; }
  std::string name() const { return spec_.name(); }
  uint32_t order() const { return static_cast<uint32_t>(inv_.size()); }
  const Realization& realization() const { return *real_; }
  std::shared_ptr<const Realization> realization_ptr() const { return real_; }
  unsigned width() const { return w_; }
  std::span<const uint32_t> element(uint32_t i) const { return {data_.data() + size_t(i) * w_, w_}; }
  uint64_t key(uint32_t i) const { return keys_[i]; }

  static constexpr uint32_t identity() { return 0; }
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  // h^-1 g h
  uint32_t conj(uint32_t g, uint32_t h) const { return mul(inv_[h], mul(g, h)); }
  uint32_t pow(uint32_t g, uint64_t e) const;
  uint32_t element_order(uint32_t g) const { return orders_[g]; }
  uint64_t exponent() const { return exponent_; }
  std::optional<uint32_t> index_of(std::span<const uint32_t> data) const;
  std::optional<uint32_t> index_of_key(uint64_t key) const;

  const std::vector<uint32_t>& generators() const { return gens_; }
  const std::vector<uint32_t>& center() const { return center_; }
  bool is_central(uint32_t g) const { return central_flag_[g]; }
  uint32_t characteristic() const;

  // G/Z(G); returns a group equal to this one when the center is trivial.
  GroupPtr central_quotient() const;
  // Index of the coset of g in a quotient built by central_quotient.
  std::vector<uint32_t> quotient_map(const Group& quotient) const;

  std::string format(uint32_t g) const { return real_->format(element(g).data()); }

 private:
  Group() = default;
  void finish();

  GroupSpec spec_;
  std::shared_ptr<const Realization> real_;
  unsigned w_ = 0;
  std::vector<uint32_t> data_;
  std::vector<uint64_t> keys_;
  std::unordered_map<uint64_t, uint32_t> index_;
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> orders_;
  std::vector<uint32_t> gens_;
  std::vector<uint32_t> center_;
  std::vector<bool> central_flag_;
  uint64_t exponent_ = 1;
};

// Per-element defining-relation checks for matrix kinds (det 1 and form
// preservation).
bool satisfies_relations(const GroupSpec& spec, const Realization& real,
                         std::span<const uint32_t> g);

}  // namespace waring
