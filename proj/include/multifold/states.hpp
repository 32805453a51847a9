#pragma once

#include <vector>

#include "multifold/evolution.hpp"

namespace multifold {

/// Schedule of a multifold evolution: start offset t_s, final offset t_f and
/// the insertion times t_1..t_N (any reals, repeats allowed).
struct TimeFold {
  Real t_start{0};
  Real t_final{0};
  std::vector<Real> times;

  [[nodiscard]] std::size_t size() const { return times.size(); }
};

struct LoschmidtOptions {
  /// Wrap the echo in exp(-i H t_f) ... exp(i H t_s); off by default.
  bool outer_evolution = false;
};

/// Total symplectic map of the Loschmidt echo,
/// prod_{j=N..1} M'(t_j) M(t_j), earliest factor rightmost.
Symplectic loschmidt_map(const TimeFold& fold, const OscillatorParams& params,
                         LoschmidtOptions options = {});

/// G_L = A G_R A^T with A = loschmidt_map(fold).
CovMatrix loschmidt_covariance(const TimeFold& fold, const OscillatorParams& params,
                               LoschmidtOptions options = {});

/// Total map of the precursor state,
/// M(t_f) [prod_{j=N..1} M(-t_j) W M(t_j)] M(-t_s).
Symplectic precursor_map(const TimeFold& fold, const OscillatorParams& params);

CovMatrix precursor_covariance(const TimeFold& fold, const OscillatorParams& params);

/// Single kick inserted into harmonic evolution, M_h(-t1) W M_h(t1), acting on
/// the doubled-frequency harmonic reference.
CovMatrix harmonic_precursor_covariance(const Real& t1, const OscillatorParams& params);

}  // namespace multifold
