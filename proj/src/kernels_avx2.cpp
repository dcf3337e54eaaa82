#include "threepage/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace threepage::kernels {

#if defined(__AVX2__)

namespace {

// Low 64 bits of a 64x64 product from three 32x32->64 multiplies.
inline __m256i mullo_epi64(__m256i a, __m256i b) {
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a_hi, b), _mm256_mul_epu32(a, b_hi));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

void add_avx2(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(d, s));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       static_cast<std::uint64_t>(src[i]));
}

void sub_avx2(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_sub_epi64(d, s));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) -
                                       static_cast<std::uint64_t>(src[i]));
}

void axpy_avx2(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t k) {
  if (k == 1) return add_avx2(dst, src, n);
  if (k == -1) return sub_avx2(dst, src, n);
  const __m256i kv = _mm256_set1_epi64x(k);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(d, mullo_epi64(s, kv)));
  }
  const auto uk = static_cast<std::uint64_t>(k);
  for (; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       uk * static_cast<std::uint64_t>(src[i]));
}

std::size_t first_nonzero_avx2(const std::int64_t* v, std::size_t n) {
  std::size_t i = 0;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const int eq = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(x, zero)));
    if (eq != 0xF) return i + static_cast<std::size_t>(__builtin_ctz(~eq & 0xF));
  }
  while (i < n && v[i] == 0) ++i;
  return i;
}

}  // namespace

const KernelSet* avx2_kernels() {
  static const KernelSet set{"avx2", axpy_avx2, add_avx2, sub_avx2, first_nonzero_avx2};
  return &set;
}

#else

const KernelSet* avx2_kernels() { return nullptr; }

#endif

}  // namespace threepage::kernels
