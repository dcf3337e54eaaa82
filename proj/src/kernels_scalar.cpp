#include "threepage/kernels.hpp"

namespace threepage::kernels {

namespace {

// Unsigned arithmetic keeps overflow defined; results match the AVX2 lanes.
void axpy_scalar(std::int64_t* dst, const std::int64_t* src, std::size_t n, std::int64_t k) {
  const auto uk = static_cast<std::uint64_t>(k);
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       uk * static_cast<std::uint64_t>(src[i]));
}

void add_scalar(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       static_cast<std::uint64_t>(src[i]));
}

void sub_scalar(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) -
                                       static_cast<std::uint64_t>(src[i]));
}

std::size_t first_nonzero_scalar(const std::int64_t* v, std::size_t n) {
  std::size_t i = 0;
  while (i < n && v[i] == 0) ++i;
  return i;
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", axpy_scalar, add_scalar, sub_scalar, first_nonzero_scalar};
  return set;
}

}  // namespace threepage::kernels
