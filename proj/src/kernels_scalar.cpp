#include "etpa/kernels.hpp"

// Reference implementations.  Plain loops, kept branch-free so results are
// reproducible and easy to compare against the vector variants.

namespace etpa::kernels {

namespace {

void recurrence_step_scalar(double* out, const double* cur, const double* prev,
                            const double* x, double a, double b, double c,
                            std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = (a + b * x[i]) * cur[i] + c * prev[i];
}

double dot3_scalar(const double* q, const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += q[i] * a[i] * b[i];
  return s;
}

double dot_sq_scalar(const double* q, const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += q[i] * a[i] * a[i];
  return s;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double* y, double alpha, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void mul_scalar(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

}  // namespace

const Ops scalar_ops = {recurrence_step_scalar, dot3_scalar, dot_sq_scalar,
                        dot_scalar,             axpy_scalar, mul_scalar,
                        "scalar"};

}  // namespace etpa::kernels
