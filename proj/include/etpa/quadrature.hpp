#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace etpa::specfun {

enum class Domain { finite, half_infinite_up, infinite };

// Controls for the adaptive integrator.  For infinite domains the integrand
// is mapped onto a finite interval with x = t/(1-t^2) (both tails) or
// x = a + t/(1-t) (one tail).  Interior breakpoints are honored before any
// adaptive splitting so that sharp features (Lorentzian cores) start on
// their own subintervals.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 4000;
  Domain domain = Domain::finite;
  double a = 0.0;  // lower endpoint (finite / half-infinite)
  double b = 0.0;  // upper endpoint (finite only)
  std::vector<double> breakpoints;
};

// Raised when the subdivision budget runs out before the error estimate
// meets tolerance.  Carries the best estimate so callers can decide whether
// to propagate or accept it.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, double estimate, double error_bound)
      : std::runtime_error(msg), estimate_(estimate), error_bound_(error_bound) {}
  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

double integrate_adaptive(const std::function<double(double)>& f,
                          const QuadratureSpec& spec);

// Appends an n-point Gauss-Legendre rule for [a,b], 2 <= n <= 64.  Nodes are
// generated once per order by Newton iteration on the Legendre recurrence.
void gauss_legendre(double a, double b, int n,
                    std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace etpa::specfun
