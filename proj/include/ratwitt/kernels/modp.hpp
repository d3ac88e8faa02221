#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ratwitt::kernels {

// y[i] <- (y[i] + c * x[i]) mod p for i < n. Entries and c lie in [0, p).
using AxpyFn = void (*)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::uint32_t p, std::size_t n);

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::uint32_t p, std::size_t n);
// Four lanes of exact double arithmetic; requires p < 2^25 and AVX2+FMA.
void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::uint32_t p, std::size_t n);

// Largest modulus the vector variant accepts.
constexpr std::uint32_t kMaxVectorModulus = 1u << 25;

bool cpu_has_avx2();
enum class Variant { Scalar, Avx2 };
// Runtime choice for modulus p: AVX2 when the CPU supports it and p fits,
// scalar otherwise. RATWITT_KERNEL=scalar forces the reference kernel.
Variant select_variant(std::uint32_t p);
AxpyFn kernel_for(Variant v);
const char* variant_name(Variant v);

// Rank of a row-major rows x cols matrix over GF(p), p prime < 2^31.
std::size_t rank_mod_p(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols, std::uint32_t p,
                       Variant v);
std::size_t rank_mod_p(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols, std::uint32_t p);

}  // namespace ratwitt::kernels
