#pragma once
// Row kernels for dense elimination over F_p.
//
// Every kernel has a portable reference in `scalar::` and, where the CPU
// allows, a vector variant. The public entry points dispatch at runtime.
// Inputs and outputs are residues in [0, p).

#include <cstdint>
#include <span>
#include <string_view>

namespace weylpi::simd {

enum class Isa { Scalar, Avx2 };

/// Largest modulus accepted by the vector variants (they compute in doubles).
inline constexpr std::uint32_t kMaxVectorModulus = 1u << 26;

bool isa_supported(Isa isa) noexcept;
/// Selected once on first use: AVX2+FMA when present, unless the environment
/// variable WEYLPI_SIMD=scalar asks otherwise.
Isa active_isa() noexcept;
/// Overrides the selection; an unsupported ISA falls back to Scalar.
void set_isa(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// dst[i] = (dst[i] + c * src[i]) mod p
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
/// v[i] = (c * v[i]) mod p
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n);
void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p, std::size_t n);
}  // namespace scalar

namespace avx2 {
// Require p < kMaxVectorModulus and a CPU with AVX2 and FMA.
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p, std::size_t n);
void scale_mod(std::uint32_t* v, std::uint32_t c, std::uint32_t p, std::size_t n);
}  // namespace avx2

}  // namespace weylpi::simd
