#pragma once

#include <cstddef>
#include <string>

// Batch kernels for the hot inner loops: three-term recurrences advanced
// across a whole array of quadrature nodes, and weighted reductions over
// node or mode arrays.  Each kernel has a scalar reference implementation
// and an AVX2 variant; the active set is chosen once at startup from CPU
// support (override with set_backend or the ETPA_SIMD environment variable,
// values "scalar" / "avx2" / "auto").  Scalar and AVX2 variants are
// equivalence-tested against each other.

namespace etpa::kernels {

struct Ops {
  // out[i] = (a + b*x[i]) * cur[i] + c * prev[i]
  void (*recurrence_step)(double* out, const double* cur, const double* prev,
                          const double* x, double a, double b, double c, std::size_t n);
  // sum_i q[i]*a[i]*b[i]
  double (*dot3)(const double* q, const double* a, const double* b, std::size_t n);
  // sum_i q[i]*a[i]*a[i]
  double (*dot_sq)(const double* q, const double* a, std::size_t n);
  // sum_i a[i]*b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double* y, double alpha, const double* x, std::size_t n);
  // out[i] = a[i]*b[i]
  void (*mul)(double* out, const double* a, const double* b, std::size_t n);
  const char* name;
};

extern const Ops scalar_ops;
#ifdef __x86_64__
extern const Ops avx2_ops;  // defined only when the AVX2 TU is built
#endif

// active backend (thread-safe initialization, constant afterwards unless
// explicitly overridden)
const Ops& active();

// force a backend by name; throws std::invalid_argument for unknown names
// or when the requested backend is unavailable on this machine
void set_backend(const std::string& name);

bool avx2_available();

}  // namespace etpa::kernels
