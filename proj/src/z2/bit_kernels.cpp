#include "rfhkit/z2/bit_kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>

namespace rfh::z2 {

namespace {

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

bool and_parity_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words; ++i) acc ^= a[i] & b[i];
    return std::popcount(acc) & 1;
}

bool is_zero_scalar(const std::uint64_t* a, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i]) return false;
    return true;
}

const BitKernels kScalar{xor_into_scalar, and_parity_scalar, is_zero_scalar, Backend::Scalar};

const BitKernels* pick_default() {
    const char* env = std::getenv("RFHKIT_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &kScalar;
    if (const BitKernels* k = avx2_kernels()) return k;
    return &kScalar;
}

std::atomic<const BitKernels*>& slot() {
    static std::atomic<const BitKernels*> s{pick_default()};
    return s;
}

}  // namespace

const BitKernels& scalar_kernels() { return kScalar; }

const BitKernels& active_kernels() { return *slot().load(std::memory_order_relaxed); }

bool force_backend(Backend b) {
    if (b == Backend::Scalar) {
        slot().store(&kScalar);
        return true;
    }
    const BitKernels* k = avx2_kernels();
    if (!k) return false;
    slot().store(k);
    return true;
}

void reset_backend() { slot().store(pick_default()); }

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

}  // namespace rfh::z2
