#include "weylpi/simd/kernels.hpp"

namespace weylpi::simd::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n) {
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = static_cast<std::uint32_t>((dst[i] + cc * src[i]) % p);
    }
}

void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p, std::size_t n) {
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>((cc * v[i]) % p);
}

}  // namespace weylpi::simd::scalar
