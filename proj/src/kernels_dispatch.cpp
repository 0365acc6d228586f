#include "etpa/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace etpa::kernels {

bool avx2_available() {
#if defined(__x86_64__) && defined(ETPA_HAVE_AVX2_TU)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const Ops* pick(const std::string& name) {
  if (name == "scalar") return &scalar_ops;
#if defined(__x86_64__) && defined(ETPA_HAVE_AVX2_TU)
  if (name == "avx2") {
    if (!avx2_available())
      throw std::invalid_argument("kernels: avx2 requested but not supported on this cpu");
    return &avx2_ops;
  }
#endif
  if (name == "auto") {
#if defined(__x86_64__) && defined(ETPA_HAVE_AVX2_TU)
    if (avx2_available()) return &avx2_ops;
#endif
    return &scalar_ops;
  }
  throw std::invalid_argument("kernels: unknown backend '" + name + "'");
}

std::atomic<const Ops*>& slot() {
  static std::atomic<const Ops*> s{nullptr};
  return s;
}

}  // namespace

const Ops& active() {
  const Ops* ops = slot().load(std::memory_order_acquire);
  if (!ops) {
    const char* env = std::getenv("ETPA_SIMD");
    ops = pick(env ? env : "auto");
    slot().store(ops, std::memory_order_release);
  }
  return *ops;
}

void set_backend(const std::string& name) {
  slot().store(pick(name), std::memory_order_release);
}

}  // namespace etpa::kernels
