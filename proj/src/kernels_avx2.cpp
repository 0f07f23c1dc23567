// AVX2 variants of the kernels in kernels.hpp. This translation unit is the
// only one compiled with -mavx2; callers reach it through the dispatcher.
#include "waring/kernels.hpp"

#include <immintrin.h>

#include "kernels_avx2_impl.hpp"

namespace waring::kernels::avx2 {

void compose_u32(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n) {
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(b), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
  }
  for (; i < n; ++i) out[i] = b[a[i]];
}

// Lanes are widened to double: c*src < 2^52 and the sum < 2^53 stay exact.
void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t m, size_t n) {
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  const __m256d vm = _mm256_set1_pd(static_cast<double>(m));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(m));
  const __m256d zero = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i)));
    __m256d s = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)));
    __m256d r = _mm256_add_pd(d, _mm256_mul_pd(vc, s));
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(r, vinv));
    __m256d t = _mm256_sub_pd(r, _mm256_mul_pd(q, vm));
    // floor(r/m) may be off by one in either direction
    t = _mm256_add_pd(t, _mm256_and_pd(_mm256_cmp_pd(t, zero, _CMP_LT_OQ), vm));
    t = _mm256_sub_pd(t, _mm256_and_pd(_mm256_cmp_pd(t, vm, _CMP_GE_OQ), vm));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(t));
  }
  const uint64_t cc = c;
  for (; i < n; ++i) dst[i] = static_cast<uint32_t>((dst[i] + cc * src[i]) % m);
}

void submul_i64(int64_t* dst, const int64_t* src, int64_t c, size_t n) {
  const __m256i vc = _mm256_set1_epi64x(c);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    d = _mm256_sub_epi64(d, detail::mullo_epi64(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  const uint64_t cu = static_cast<uint64_t>(c);
  for (; i < n; ++i) {
    dst[i] = static_cast<int64_t>(static_cast<uint64_t>(dst[i]) -
                                  cu * static_cast<uint64_t>(src[i]));
  }
}

bool or_into(uint64_t* dst, const uint64_t* src, size_t words) {
  __m256i changed = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    changed = _mm256_or_si256(changed, _mm256_andnot_si256(d, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
  }
  uint64_t tail = 0;
  for (; i < words; ++i) {
    tail |= src[i] & ~dst[i];
    dst[i] |= src[i];
  }
  return tail != 0 || !_mm256_testz_si256(changed, changed);
}

bool intersects(const uint64_t* a, const uint64_t* b, size_t words) {
  size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

}  // namespace waring::kernels::avx2
