#include <atomic>
#include <cstdlib>
#include <cstring>

#include "weylpi/simd/kernels.hpp"

namespace weylpi::simd {

namespace {

Isa detect() noexcept {
    if (const char* env = std::getenv("WEYLPI_SIMD"); env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& selected() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

void set_isa(Isa isa) noexcept { selected().store(isa_supported(isa) ? isa : Isa::Scalar); }

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p) {
    const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
    if (active_isa() == Isa::Avx2 && p < kMaxVectorModulus)
        avx2::axpy_mod(dst.data(), src.data(), c, p, n);
    else
        scalar::axpy_mod(dst.data(), src.data(), c, p, n);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p) {
    if (active_isa() == Isa::Avx2 && p < kMaxVectorModulus)
        avx2::scale_mod(v.data(), c, p, v.size());
    else
        scalar::scale_mod(v.data(), c, p, v.size());
}

}  // namespace weylpi::simd
