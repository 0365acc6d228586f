// scalar kernels against long-double naive loops; AVX2 kernels against both

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "etpa/kernels.hpp"

using namespace etpa;

namespace {

std::vector<double> random_vec(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng) * std::pow(10.0, (int)(u(rng) * 2.99));
  return v;
}

// reduction reference in long double plus the condition scale sum |terms|
struct Ref {
  double value;
  double scale;
};

Ref dot3_ref(const std::vector<double>& q, const std::vector<double>& a,
             const std::vector<double>& b) {
  long double s = 0.0L, m = 0.0L;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const long double t = (long double)q[i] * a[i] * b[i];
    s += t;
    m += std::abs((double)t);
  }
  return {(double)s, (double)m};
}

Ref dotsq_ref(const std::vector<double>& q, const std::vector<double>& a) {
  long double s = 0.0L, m = 0.0L;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const long double t = (long double)q[i] * a[i] * a[i];
    s += t;
    m += std::abs((double)t);
  }
  return {(double)s, (double)m};
}

Ref dot_ref(const std::vector<double>& a, const std::vector<double>& b) {
  long double s = 0.0L, m = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long double t = (long double)a[i] * b[i];
    s += t;
    m += std::abs((double)t);
  }
  return {(double)s, (double)m};
}

// |got - ref| within n-independent multiple of eps times the term mass
bool red_close(double got, const Ref& r, std::size_t n) {
  const double bound = (2.0 + (double)n) * 1.1e-16 * r.scale + 1e-300;
  return std::abs(got - r.value) <= bound;
}

const std::vector<std::size_t> kSizes{0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17,
                                      31, 64, 100, 1037};

void check_ops(const kernels::Ops& ops, unsigned seed_base) {
  for (std::size_t n : kSizes) {
    CAPTURE(n);
    auto q = random_vec(n, seed_base + 1);
    auto a = random_vec(n, seed_base + 2);
    auto b = random_vec(n, seed_base + 3);

    CHECK(red_close(ops.dot3(q.data(), a.data(), b.data(), n), dot3_ref(q, a, b), n));
    CHECK(red_close(ops.dot_sq(q.data(), a.data(), n), dotsq_ref(q, a), n));
    CHECK(red_close(ops.dot(a.data(), b.data(), n), dot_ref(a, b), n));

    // elementwise kernels: bound every slot by its own term mass (the fused
    // and unfused contraction orders may differ by a few ulp)
    std::vector<double> out(n, 0.0);
    ops.recurrence_step(out.data(), a.data(), b.data(), q.data(), 0.7, -1.3, 0.25, n);
    std::vector<double> y = b;
    ops.axpy(y.data(), 2.5, a.data(), n);
    std::vector<double> prod(n, 1.0);
    ops.mul(prod.data(), a.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      CAPTURE(i);
      const double want_r = (0.7 + -1.3 * q[i]) * a[i] + 0.25 * b[i];
      const double mass_r =
          (0.7 + 1.3 * std::abs(q[i])) * std::abs(a[i]) + 0.25 * std::abs(b[i]);
      CHECK(std::abs(out[i] - want_r) <= 4.4e-16 * mass_r);
      const double mass_y = std::abs(b[i]) + 2.5 * std::abs(a[i]);
      CHECK(std::abs(y[i] - (b[i] + 2.5 * a[i])) <= 4.4e-16 * mass_y);
      CHECK(prod[i] == a[i] * b[i]);
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels match naive long-double loops") {
  check_ops(kernels::scalar_ops, 100);
}

#ifdef __x86_64__
TEST_CASE("avx2 kernels match naive long-double loops" *
          doctest::skip(!kernels::avx2_available())) {
  check_ops(kernels::avx2_ops, 100);
}

TEST_CASE("avx2 and scalar reductions agree pairwise" *
          doctest::skip(!kernels::avx2_available())) {
  const kernels::Ops& s = kernels::scalar_ops;
  const kernels::Ops& v = kernels::avx2_ops;
  for (std::size_t n : kSizes) {
    CAPTURE(n);
    auto q = random_vec(n, 201), a = random_vec(n, 202), b = random_vec(n, 203);
    const Ref r3 = dot3_ref(q, a, b);
    const double bound = (2.0 + (double)n) * 2.2e-16 * r3.scale + 1e-300;
    CHECK(std::abs(v.dot3(q.data(), a.data(), b.data(), n) -
                   s.dot3(q.data(), a.data(), b.data(), n)) <= bound);
    const Ref rd = dot_ref(a, b);
    const double bound_d = (2.0 + (double)n) * 2.2e-16 * rd.scale + 1e-300;
    CHECK(std::abs(v.dot(a.data(), b.data(), n) -
                   s.dot(a.data(), b.data(), n)) <= bound_d);
  }
}
#endif

TEST_CASE("backend selection") {
  const std::string before = kernels::active().name;

  kernels::set_backend("scalar");
  CHECK(std::string(kernels::active().name) == "scalar");

  if (kernels::avx2_available()) {
    kernels::set_backend("avx2");
    CHECK(std::string(kernels::active().name) == "avx2");
    kernels::set_backend("auto");
    CHECK(std::string(kernels::active().name) == "avx2");
  } else {
    CHECK_THROWS_AS(kernels::set_backend("avx2"), std::invalid_argument);
    kernels::set_backend("auto");
    CHECK(std::string(kernels::active().name) == "scalar");
  }

  CHECK_THROWS_AS(kernels::set_backend("neon"), std::invalid_argument);
  CHECK_THROWS_AS(kernels::set_backend(""), std::invalid_argument);

  kernels::set_backend(before);  // restore for other assertions in this binary
}
