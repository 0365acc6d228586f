#pragma once

#include <cstddef>
#include <vector>

namespace etpa::specfun {

// Orthonormal Hermite function h_n(x) = (2^n n! sqrt(pi))^(-1/2) H_n(x) e^(-x^2/2).
// Evaluated with the pre-normalized recurrence
//   h_{n+1} = x sqrt(2/(n+1)) h_n - sqrt(n/(n+1)) h_{n-1},
// which keeps every intermediate bounded; no factorials appear.
double hermite_fn(int n, double x);

// All orders 0..n_max at one point, same recurrence.  out must hold n_max+1.
void hermite_fn_all(int n_max, double x, double* out);

// Associated Laguerre polynomial L_n^(alpha)(x) by the standard three-term
// recurrence, forward in n.
double laguerre_assoc(int n, double alpha, double x);

// Scaled complementary error function e^(x^2) erfc(x).  Stays accurate for
// large positive x where erfc alone underflows.
double erfcx(double x);

// Real part of the Faddeeva function w(x+iy), y >= 0.  y < 0 throws.
double faddeeva_re(double x, double y);

// Area-normalized Lorentzian, width gamma > 0 (else throws).
double lorentzian(double delta, double gamma);

// log(n!) for integer n >= 0
double log_factorial(int n);

}  // namespace etpa::specfun
