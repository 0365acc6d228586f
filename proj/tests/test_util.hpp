// shared helpers for the test binaries
#pragma once

#include <cmath>

namespace testutil {

// strict relative closeness; no absolute floor, so tiny magnitudes are held
// to the same standard as O(1) values
inline bool rel_close(double got, double want, double tol) {
  if (want == 0.0) return got == 0.0;
  return std::abs(got - want) <= tol * std::abs(want);
}

// relative error for CAPTURE output
inline double rel_err(double got, double want) {
  if (want == 0.0) return got == 0.0 ? 0.0 : INFINITY;
  return std::abs(got - want) / std::abs(want);
}

}  // namespace testutil
