#include "rfhkit/z2/bit_kernels.hpp"

#include <bit>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define RFH_HAVE_AVX2_TU 1
#endif

namespace rfh::z2 {

#ifdef RFH_HAVE_AVX2_TU

namespace {

__attribute__((target("avx2"))) void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                                   std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2"))) bool and_parity_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                                     std::size_t words) {
    // XOR-fold the ANDed lanes; parity of the folded word equals parity of the whole row.
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < words; ++i) folded ^= a[i] & b[i];
    return std::popcount(folded) & 1;
}

__attribute__((target("avx2"))) bool is_zero_avx2(const std::uint64_t* a, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    if (!_mm256_testz_si256(acc, acc)) return false;
    for (; i < words; ++i)
        if (a[i]) return false;
    return true;
}

const BitKernels kAvx2{xor_into_avx2, and_parity_avx2, is_zero_avx2, Backend::Avx2};

}  // namespace

const BitKernels* avx2_kernels() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? &kAvx2 : nullptr;
}

#else

const BitKernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace rfh::z2
