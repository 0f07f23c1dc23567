#pragma once
// Conjugacy classes of an enumerated group.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "waring/group.hpp"

namespace waring {

struct ConjClass {
  uint32_t rep = 0;  // member with the lexicographically least encoding
  std::vector<uint32_t> members;
  uint32_t order = 1;
  uint64_t size = 0;
  uint64_t centralizer_order = 0;
};

class ClassDecomposition;
using ClassesPtr = std::shared_ptr<const ClassDecomposition>;

class ClassDecomposition {
 public:
  // Classes are ordered by element order, then size, then representative
  // encoding; the identity class is always 0.
  static ClassesPtr compute(GroupPtr G);

  const Group& group() const { return *G_; }
  const GroupPtr& group_ptr() const { return G_; }
  uint32_t count() const { return static_cast<uint32_t>(classes_.size()); }
  const ConjClass& cls(uint32_t c) const { return classes_.at(c); }
  const std::vector<ConjClass>& classes() const { return classes_; }

  uint32_t class_of(uint32_t g) const { return class_of_[g]; }
  const std::vector<uint32_t>& class_of_table() const { return class_of_; }
  uint32_t inverse_class(uint32_t c) const { return inverse_[c]; }
  // Class of rep(c)^m.
  uint32_t power_class(uint32_t c, uint64_t m) const {
    const auto& row = power_map_[c];
    return row[m % row.size()];
  }
  bool is_central(uint32_t c) const { return classes_[c].size == 1; }
  bool is_real(uint32_t c) const { return inverse_[c] == c; }

 private:
  ClassDecomposition() = default;
  GroupPtr G_;
  std::vector<ConjClass> classes_;
  std::vector<uint32_t> class_of_;
  std::vector<uint32_t> inverse_;
  std::vector<std::vector<uint32_t>> power_map_;
};

// Class of an element given by its data; throws std::invalid_argument when
// the element is not in the group.
uint32_t class_of(const ClassDecomposition& D, std::span<const uint32_t> element);

std::vector<uint32_t> centralizer(const Group& G, uint32_t g);
// True when the listed elements pairwise commute, checked on a greedily
// chosen generating set of the subgroup they form.
bool is_abelian_subgroup(const Group& G, const std::vector<uint32_t>& elements);

struct RegularSemisimpleReport {
  bool regular_semisimple = false;
  bool p_prime_order = false;
  bool abelian_centralizer = false;
  uint64_t centralizer_order = 0;
  // Sufficient witness: the characteristic polynomial has no repeated root.
  bool squarefree_charpoly = false;
};

// Throws std::invalid_argument for permutation groups.
RegularSemisimpleReport is_regular_semisimple(const Group& G, uint32_t g);

}  // namespace waring
