#include <atomic>
#include <cstdlib>
#include <string_view>

#include "threepage/kernels.hpp"

namespace threepage::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const KernelSet* startup_choice() {
  const char* env = std::getenv("THREEPAGE_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
  if (avx2_kernels() != nullptr && cpu_has_avx2()) return avx2_kernels();
  return &scalar_kernels();
}

std::atomic<const KernelSet*>& slot() {
  static std::atomic<const KernelSet*> current{startup_choice()};
  return current;
}

}  // namespace

const KernelSet& active() { return *slot().load(std::memory_order_relaxed); }

void set_active(const KernelSet& set) { slot().store(&set, std::memory_order_relaxed); }

}  // namespace threepage::kernels
