#pragma once
// Dense int64 coefficient kernels behind LaurentPoly arithmetic.
// A scalar reference set is always available; an AVX2 set is compiled on
// x86-64 and chosen at startup when the CPU supports it. Setting
// THREEPAGE_SIMD=scalar in the environment forces the reference set.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace threepage::kernels {

/// dst[i] += k * src[i] for i < n (wrapping two's-complement arithmetic).
using AxpyFn = void (*)(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t k);
/// dst[i] += src[i]
using AddFn = void (*)(std::int64_t* dst, const std::int64_t* src, std::size_t n);
/// Index of the first nonzero entry, or n.
using ScanFn = std::size_t (*)(const std::int64_t* v, std::size_t n);

struct KernelSet {
  std::string_view name;
  AxpyFn axpy;
  AddFn add;
  AddFn sub;
  ScanFn first_nonzero;
};

const KernelSet& scalar_kernels();
/// nullptr when the AVX2 set was not compiled in.
const KernelSet* avx2_kernels();
bool cpu_has_avx2();

const KernelSet& active();
/// Overrides the startup choice; used by equivalence tests and benchmarks.
void set_active(const KernelSet& set);

}  // namespace threepage::kernels
