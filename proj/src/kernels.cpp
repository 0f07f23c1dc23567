#include "waring/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace waring::kernels {
namespace {

struct Table {
  decltype(&scalar::compose_u32) compose;
  decltype(&scalar::axpy_mod) axpy;
  decltype(&scalar::submul_i64) submul;
  decltype(&scalar::or_into) orr;
  decltype(&scalar::intersects) inter;
};

constexpr Table kScalar{scalar::compose_u32, scalar::axpy_mod, scalar::submul_i64,
                        scalar::or_into, scalar::intersects};
#if defined(WARING_HAVE_AVX2)
constexpr Table kAvx2{avx2::compose_u32, avx2::axpy_mod, avx2::submul_i64, avx2::or_into,
                      avx2::intersects};
#endif

bool cpu_has_avx2() {
#if defined(WARING_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("WARING_ISA")) {
    if (std::string(env) == "scalar") return Isa::Scalar;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

const Table& table() {
#if defined(WARING_HAVE_AVX2)
  if (current().load(std::memory_order_relaxed) == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

Isa active_isa() { return current().load(); }

bool avx2_available() { return cpu_has_avx2(); }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && !cpu_has_avx2())
    throw std::runtime_error("AVX2 kernels are not available on this machine");
  current().store(isa);
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void compose_u32(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n) {
  table().compose(a, b, out, n);
}
void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t m, size_t n) {
  table().axpy(dst, src, c, m, n);
}
void submul_i64(int64_t* dst, const int64_t* src, int64_t c, size_t n) {
  table().submul(dst, src, c, n);
}
bool or_into(uint64_t* dst, const uint64_t* src, size_t words) {
  return table().orr(dst, src, words);
}
bool intersects(const uint64_t* a, const uint64_t* b, size_t words) {
  return table().inter(a, b, words);
}

}  // namespace waring::kernels
