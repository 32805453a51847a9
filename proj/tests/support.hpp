#pragma once

#include <doctest.h>

#include "multifold/gaussian.hpp"

namespace multifold::testing {

/// |a - b| <= tol * max(|b|, floor)
inline bool close_rel(const Real& a, const Real& b, const Real& tol, const Real& floor = Real(1)) {
  return abs(a - b) <= tol * max(abs(b), floor);
}

inline bool mat_close(const Mat2& a, const Mat2& b, const Real& tol) {
  const Real scale = max(Real(1), b.max_abs());
  return (a - b).max_abs() <= tol * scale;
}

inline OscillatorParams unit_params(const char* delta_ratio = "1e-3") {
  return OscillatorParams::natural(1, Real(delta_ratio));
}

}  // namespace multifold::testing
