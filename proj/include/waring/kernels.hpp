#pragma once
// Data-parallel inner loops used across the library.
//
// Every kernel has a portable scalar reference in namespace `scalar` and, on
// x86-64, an AVX2 variant in namespace `avx2`. The unqualified entry points
// dispatch once at startup: AVX2 when the CPU reports it, unless the
// environment variable WARING_ISA=scalar forces the reference path. The two
// variants must agree bit-for-bit; tests/test_kernels.cpp checks that.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace waring::kernels {

enum class Isa { Scalar, Avx2 };

// Currently selected instruction set.
Isa active_isa();
// Whether the running CPU (and this build) can execute the AVX2 variants.
bool avx2_available();
// Overrides dispatch. Selecting Avx2 on a machine without it throws.
void force_isa(Isa isa);
std::string_view isa_name(Isa isa);

// out[i] = b[a[i]] for i < n, i.e. the permutation "a then b" on image
// sequences. `out` may alias neither input.
void compose_u32(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n);

// dst[i] = (dst[i] + c * src[i]) mod m. Requires m < 2^26 and all entries
// (and c) already reduced below m.
void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t m, size_t n);

// dst[i] -= c * src[i] with two's-complement wraparound.
void submul_i64(int64_t* dst, const int64_t* src, int64_t c, size_t n);

// dst |= src; returns true when any bit of dst changed.
bool or_into(uint64_t* dst, const uint64_t* src, size_t words);

// True when (a & b) has a set bit.
bool intersects(const uint64_t* a, const uint64_t* b, size_t words);

namespace scalar {
void compose_u32(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n);
void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t m, size_t n);
void submul_i64(int64_t* dst, const int64_t* src, int64_t c, size_t n);
bool or_into(uint64_t* dst, const uint64_t* src, size_t words);
bool intersects(const uint64_t* a, const uint64_t* b, size_t words);
}  // namespace scalar

#if defined(WARING_HAVE_AVX2)
namespace avx2 {
void compose_u32(const uint32_t* a, const uint32_t* b, uint32_t* out, size_t n);
void axpy_mod(uint32_t* dst, const uint32_t* src, uint32_t c, uint32_t m, size_t n);
void submul_i64(int64_t* dst, const int64_t* src, int64_t c, size_t n);
bool or_into(uint64_t* dst, const uint64_t* src, size_t words);
bool intersects(const uint64_t* a, const uint64_t* b, size_t words);
}  // namespace avx2
#endif

}  // namespace waring::kernels
