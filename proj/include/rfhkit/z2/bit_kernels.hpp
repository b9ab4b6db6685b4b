#pragma once
// Word-level GF(2) row kernels. Rows are packed little-endian into uint64_t words.
// Each kernel has a scalar reference and an AVX2 variant; the active table is
// picked once at startup from CPUID and can be forced for testing.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace rfh::z2 {

enum class Backend { Scalar, Avx2 };

struct BitKernels {
    // dst ^= src
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    // parity of popcount(a & b), i.e. the GF(2) dot product
    bool (*and_parity)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    bool (*is_zero)(const std::uint64_t* a, std::size_t words);
    Backend backend;
};

const BitKernels& scalar_kernels();
// Null when the build or the CPU lacks AVX2.
const BitKernels* avx2_kernels();

const BitKernels& active_kernels();
// Returns false if the requested backend is unavailable on this machine.
bool force_backend(Backend b);
// Back to CPUID selection (RFHKIT_SIMD=scalar in the environment pins scalar).
void reset_backend();

std::string_view backend_name(Backend b);

}  // namespace rfh::z2
