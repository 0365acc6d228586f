#include "etpa/kernels.hpp"

#ifdef __x86_64__

#include <immintrin.h>

// AVX2 + FMA variants, 4 doubles per lane group.  Reductions keep four
// independent accumulators and fold them once at the end, so the summation
// order is fixed and runs are reproducible.

namespace etpa::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

void recurrence_step_avx2(double* out, const double* cur, const double* prev,
                          const double* x, double a, double b, double c,
                          std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vx = _mm256_loadu_pd(x + i);
    __m256d vcur = _mm256_loadu_pd(cur + i);
    __m256d vprev = _mm256_loadu_pd(prev + i);
    __m256d coef = _mm256_fmadd_pd(vb, vx, va);
    __m256d r = _mm256_fmadd_pd(coef, vcur, _mm256_mul_pd(vc, vprev));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = (a + b * x[i]) * cur[i] + c * prev[i];
}

double dot3_avx2(const double* q, const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vq = _mm256_loadu_pd(q + i);
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(vq, va), vb, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += q[i] * a[i] * b[i];
  return s;
}

double dot_sq_avx2(const double* q, const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vq = _mm256_loadu_pd(q + i);
    __m256d va = _mm256_loadu_pd(a + i);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(vq, va), va, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += q[i] * a[i] * a[i];
  return s;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_fmadd_pd(va, vb, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_avx2(double* y, double alpha, const double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void mul_avx2(double* out, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

}  // namespace

const Ops avx2_ops = {recurrence_step_avx2, dot3_avx2, dot_sq_avx2,
                      dot_avx2,             axpy_avx2, mul_avx2,
                      "avx2"};

}  // namespace etpa::kernels

#endif  // __x86_64__
