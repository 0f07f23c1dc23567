#pragma once
// Class multiplication coefficients and class-set products.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "waring/classes.hpp"

namespace waring {

// Bit set over the class ids of one decomposition.
class ClassSet {
 public:
  ClassSet() = default;
  ClassSet(const ClassDecomposition* D) : D_(D), bits_((D->count() + 63) / 64, 0) {}
  static ClassSet all(const ClassDecomposition& D);
  static ClassSet single(const ClassDecomposition& D, uint32_t c);
  static ClassSet noncentral(const ClassDecomposition& D);
  static ClassSet nonidentity(const ClassDecomposition& D);

  const ClassDecomposition* decomposition() const { return D_; }
  uint32_t universe() const { return D_ ? D_->count() : 0; }
  bool contains(uint32_t c) const { return (bits_[c >> 6] >> (c & 63)) & 1; }
  void insert(uint32_t c) { bits_[c >> 6] |= uint64_t(1) << (c & 63); }
  void erase(uint32_t c) { bits_[c >> 6] &= ~(uint64_t(1) << (c & 63)); }
  uint32_t size() const;
  bool empty() const { return size() == 0; }
  // Returns true when this set grew.
  bool unite(const ClassSet& o);
  bool intersects(const ClassSet& o) const;
  bool includes(const ClassSet& o) const;
  std::vector<uint32_t> members() const;
  // Classes of `target` missing from this set.
  std::vector<uint32_t> missing_from(const ClassSet& target) const;
  // Total number of group elements in the listed classes.
  uint64_t element_count() const;
  bool operator==(const ClassSet& o) const { return D_ == o.D_ && bits_ == o.bits_; }
  const std::vector<uint64_t>& words() const { return bits_; }

 private:
  void check(const ClassSet& o) const;
  const ClassDecomposition* D_ = nullptr;
  std::vector<uint64_t> bits_;
};

class StructureConstants;
using AlgebraPtr = std::shared_ptr<const StructureConstants>;

class StructureConstants {
 public:
  // Full tensor by one pass over G per class representative.
  static AlgebraPtr compute(ClassesPtr D, unsigned threads = 1);

  const ClassDecomposition& classes() const { return *D_; }
  const ClassesPtr& classes_ptr() const { return D_; }
  uint32_t count() const { return k_; }
  // a_{ijk}: pairs (x, y) in C_i x C_j with x y = g_k.
  uint64_t at(uint32_t i, uint32_t j, uint32_t k) const { return a_[(size_t(k) * k_ + i) * k_ + j]; }
  std::vector<uint64_t> row(uint32_t i, uint32_t j) const;
  const ClassSet& support(uint32_t i, uint32_t j) const { return supp_[size_t(i) * k_ + j]; }

 private:
  StructureConstants() = default;
  ClassesPtr D_;
  uint32_t k_ = 0;
  std::vector<uint64_t> a_;
  std::vector<ClassSet> supp_;
};

// Counts pairs directly from the group: x over C_i, y = x^-1 g_k.
uint64_t structure_constant_direct(const ClassDecomposition& D, uint32_t i, uint32_t j, uint32_t k);
// Early-exit positivity test of the above.
bool in_class_product(const ClassDecomposition& D, uint32_t i, uint32_t j, uint32_t k);
std::vector<uint64_t> structure_constants(const StructureConstants& A, uint32_t i, uint32_t j);

ClassSet product_support(const StructureConstants& A, const ClassSet& a, const ClassSet& b);
// Support-only variant that never builds the tensor.
ClassSet product_support_direct(const ClassDecomposition& D, const ClassSet& a, const ClassSet& b);
bool covers_noncentral(const StructureConstants& A, uint32_t i, uint32_t j);
bool triple_product_full(const StructureConstants& A, uint32_t i, uint32_t j, uint32_t k);

enum class CoverTarget { All, NonCentral, NonIdentity };
std::string to_string(CoverTarget t);
ClassSet target_set(const ClassDecomposition& D, CoverTarget t);

struct ClassConstraint {
  enum class Kind { Any, PrimeOrder, SquarefreeOrder, OrderEquals, RegularSemisimple, AtMostTwoPrimes, NonCentral };
  Kind kind = Kind::Any;
  uint64_t m = 0;
  static ClassConstraint parse(const std::string& text);
  std::string str() const;
};

struct PairSearch {
  std::vector<ClassConstraint> x, y;  // all constraints must hold
  bool same_class = false;            // only (C, C)
  bool inverse_pair = false;          // only (C, C^-1)
  CoverTarget target = CoverTarget::NonCentral;
};

struct PairRecord {
  uint32_t i = 0, j = 0;
  uint32_t order_i = 0, order_j = 0;
  bool covers = false;
  bool exact = false;  // support equals the target exactly
  std::vector<uint32_t> missing;
};

struct PairReport {
  std::vector<PairRecord> scanned;
  std::vector<PairRecord> covering;
  CoverTarget target = CoverTarget::NonCentral;
};

// Scans unordered class pairs i <= j meeting the constraints.
PairReport search_covering_pair(const StructureConstants& A, const PairSearch& s, unsigned threads = 1);

bool class_satisfies(const ClassDecomposition& D, uint32_t c, const ClassConstraint& k);

void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& body);

}  // namespace waring
