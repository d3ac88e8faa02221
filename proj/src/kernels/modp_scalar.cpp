#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "ratwitt/kernels/modp.hpp"

namespace ratwitt::kernels {

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(c) * x[i]) % p);
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Variant select_variant(std::uint32_t p) {
  const char* force = std::getenv("RATWITT_KERNEL");
  if (force && std::strcmp(force, "scalar") == 0) return Variant::Scalar;
  static const bool avx2 = cpu_has_avx2();
  return avx2 && p < kMaxVectorModulus ? Variant::Avx2 : Variant::Scalar;
}

AxpyFn kernel_for(Variant v) {
#if defined(__x86_64__) || defined(__i386__)
  if (v == Variant::Avx2) return axpy_mod_avx2;
#else
  if (v == Variant::Avx2) throw std::runtime_error("AVX2 kernel not built on this architecture");
#endif
  return axpy_mod_scalar;
}

const char* variant_name(Variant v) { return v == Variant::Avx2 ? "avx2" : "scalar"; }

namespace {
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}
}  // namespace

std::size_t rank_mod_p(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols, std::uint32_t p,
                       Variant v) {
  if (a.size() != rows * cols) throw std::invalid_argument("rank_mod_p: size mismatch");
  if (v == Variant::Avx2 && p >= kMaxVectorModulus) v = Variant::Scalar;
  AxpyFn axpy = kernel_for(v);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    std::uint32_t* prow = &a[rank * cols];
    std::uint32_t inv = inverse_mod(prow[c], p);
    for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(prow[j]) * inv % p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint32_t f = a[i * cols + c];
      if (f) axpy(&a[i * cols + c], prow + c, p - f, p, cols - c);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(std::vector<std::uint32_t> a, std::size_t rows, std::size_t cols, std::uint32_t p) {
  return rank_mod_p(std::move(a), rows, cols, p, select_variant(p));
}

}  // namespace ratwitt::kernels
