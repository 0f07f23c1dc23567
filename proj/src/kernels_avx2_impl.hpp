#pragma once
#include <immintrin.h>

namespace waring::kernels::avx2::detail {

// Low 64 bits of a 64x64 lane product; AVX2 has no native instruction.
inline __m256i mullo_epi64(__m256i a, __m256i b) {
  __m256i bswap = _mm256_shuffle_epi32(b, 0xB1);
  __m256i cross = _mm256_mullo_epi32(a, bswap);
  __m256i cross_sum = _mm256_hadd_epi32(cross, _mm256_setzero_si256());
  __m256i cross_hi = _mm256_shuffle_epi32(cross_sum, 0x73);
  __m256i low = _mm256_mul_epu32(a, b);
  return _mm256_add_epi64(low, cross_hi);
}

}  // namespace waring::kernels::avx2::detail
