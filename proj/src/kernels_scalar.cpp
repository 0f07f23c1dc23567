#include "waring/kernels.hpp"

namespace waring::kernels::scalar {

void compose_u32(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = b[a[i]];
}

void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t m, size_t n) {
  const uint64_t cc = c;
  for (size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<uint32_t>((dst[i] + cc * src[i]) % m);
  }
}

void submul_i64(int64_t* dst, const int64_t* src, int64_t c, size_t n) {
  const uint64_t cu = static_cast<uint64_t>(c);
  for (size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<int64_t>(static_cast<uint64_t>(dst[i]) -
                                  cu * static_cast<uint64_t>(src[i]));
  }
}

bool or_into(uint64_t* dst, const uint64_t* src, size_t words) {
  uint64_t changed = 0;
  for (size_t i = 0; i < words; ++i) {
    changed |= src[i] & ~dst[i];
    dst[i] |= src[i];
  }
  return changed != 0;
}

bool intersects(const uint64_t* a, const uint64_t* b, size_t words) {
  for (size_t i = 0; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

}  // namespace waring::kernels::scalar
