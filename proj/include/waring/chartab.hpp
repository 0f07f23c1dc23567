#pragma once
// Character tables by the Dixon-Schneider method and the character-sum
// count of class products.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "waring/classalg.hpp"
#include "waring/cyclotomic.hpp"

namespace waring {

using Rational = boost::multiprecision::cpp_rational;

struct CharacterTable {
  ClassesPtr classes;
  uint32_t e = 1;      // group exponent; values live in Z[zeta_e]
  uint64_t ell = 2;    // modular prime used for the computation
  uint64_t zeta = 1;   // image of zeta_e in GF(ell)
  std::vector<uint64_t> degrees;
  std::vector<std::vector<CyclotomicInt>> values;  // [character][class]
  bool verified = false;
  // Nonzero (t, m) pairs of every value and traces of zeta_e^t; filled by
  // index().
  std::vector<std::vector<std::vector<std::pair<uint32_t, int64_t>>>> sparse;
  std::vector<int64_t> traces;

  void index();
  uint32_t size() const { return static_cast<uint32_t>(degrees.size()); }
  const CyclotomicInt& value(uint32_t chi, uint32_t c) const { return values.at(chi).at(c); }
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Least prime ell = 1 (mod e) with ell > 2 sqrt(order).
uint64_t dixon_prime(uint64_t e, uint64_t order);

// Throws std::runtime_error if the computed table fails verification and
// std::length_error above 256 classes.
TablePtr dixon_table(const StructureConstants& A);

struct TableCheck {
  bool rows = false;
  bool columns = false;
  bool degree_sum = false;
  bool degrees_divide = false;
  bool roots_of_unity = false;  // value at an order-n class lies on n-th roots
  bool ok() const { return rows && columns && degree_sum && degrees_divide && roots_of_unity; }
};
TableCheck verify_table(const CharacterTable& T);

struct FrobeniusResult {
  Rational sum;  // sum over chi of chi(x) chi(y) conj(chi(g)) / chi(1)
  BigInt count;  // |C_i| |C_j| sum / |G|
};
// Throws std::invalid_argument on an unverified table.
FrobeniusResult frobenius_sum(const CharacterTable& T, uint32_t i, uint32_t j, uint32_t k);

inline constexpr const char* kTableSchema = "waring-chartab/1";
inline constexpr const char* kCodeVersion = "1";

nlohmann::json table_to_json(const CharacterTable& T);
// Returns nullptr when the record does not match the decomposition or fails
// verification.
TablePtr table_from_json(const nlohmann::json& j, ClassesPtr D);

}  // namespace waring
