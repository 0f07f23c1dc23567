#pragma once
// Images of power words, widths of class sets, and the alternating-group
// cycle-type checks.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "waring/classalg.hpp"

namespace waring {

// Classes of rep^m over all class representatives.
ClassSet power_image_classes(const ClassDecomposition& D, uint64_t m);

struct WidthReport {
  std::optional<uint32_t> width;  // empty means "infinite"
  uint32_t stabilized_size = 0;   // classes in the last support computed
  // Support size and missing target classes after each step t = 1, 2, ...
  std::vector<uint32_t> sizes;
  std::vector<std::vector<uint32_t>> missing;
  bool infinite() const { return !width; }
};

// Least t with X^t containing the target. When X holds the identity the
// supports grow monotonically and the search stops once they stabilize;
// otherwise it stops on the first repeated support.
WidthReport set_width(const StructureConstants& A, const ClassSet& X, CoverTarget target = CoverTarget::All);

WidthReport power_word_width(const StructureConstants& A, uint64_t m, CoverTarget target = CoverTarget::All);

struct WaringPairReport {
  bool covers = false;
  std::vector<uint32_t> missing;
};
WaringPairReport waring_pair_check(const StructureConstants& A, uint64_t k, uint64_t l);

// Classes of elements of p-power order, the identity included.
ClassSet p_element_classes(const ClassDecomposition& D, uint64_t p);
// Throws std::invalid_argument when p is not a prime dividing |G|.
WidthReport p_element_width(const StructureConstants& A, uint64_t p, CoverTarget target = CoverTarget::All);

// Width of the m-th power image computed on elements: the power set is
// multiplied out as a subset of G, no class data involved.
std::optional<uint32_t> power_word_width_elements(const Group& G, uint64_t m);

// Cycle lengths (sorted, fixed points omitted) of a permutation element.
std::vector<uint32_t> cycle_type(std::span<const uint32_t> perm);

struct AltinvReport {
  unsigned n = 0, ell = 0;
  uint32_t power = 0;          // 3 for ell = 2, 4 for odd ell
  std::vector<uint32_t> x_classes;  // without the identity
  bool holds_with_identity = false;
  bool holds_without_identity = false;
  // X^2 meets a class of n-cycles (n odd) or (n-1)-cycles (n even); odd ell only
  bool long_cycle_in_square = false;
  std::optional<uint32_t> width_with_identity, width_without_identity;
  bool readings_differ() const { return holds_with_identity != holds_without_identity; }
  bool ok() const { return holds_with_identity && holds_without_identity && (ell == 2 || long_cycle_in_square); }
};

// A must be the algebra of Alt(n). Throws std::invalid_argument unless
// 5 <= n <= 12 and ell = 2 or ell odd with 3 <= ell <= n.
AltinvReport altinv_check(const StructureConstants& A, unsigned ell);
void altinv_validate(unsigned n, unsigned ell);

struct PowerScanEntry {
  std::vector<uint64_t> exponents;  // every k in 1..e-1 sharing this image
  std::vector<uint32_t> image;
  WidthReport width;
};
struct PowerScanReport {
  std::vector<PowerScanEntry> entries;
  uint32_t max_width = 0;
  bool any_infinite = false;
};
// Widths of x^k for all k in 1..exp(G)-1, one computation per distinct image.
PowerScanReport power_width_scan(const StructureConstants& A, unsigned threads = 1);

struct ClassIdentityReport {
  uint32_t cls = 0;
  bool product_with_inverse_full = false;  // C C^-1 = G
  bool inverse_in_square = false;          // C^-1 inside C C
};
// Every class of elements of the given order, with both identities tested.
std::vector<ClassIdentityReport> class_identities(const StructureConstants& A, uint32_t order);

}  // namespace waring
