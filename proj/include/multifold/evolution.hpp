#pragma once

#include "multifold/gaussian.hpp"

namespace multifold {

/// Symmetric coefficient matrix k of a quadratic Gaussian unitary
/// exp(-(i/2) k_ab xi^a xi^b).
class Generator {
 public:
  Generator(Real k11, Real k12, Real k22) : k_{k11, k12, k12, k22} {}
  static Generator zero() { return {0, 0, 0}; }

  [[nodiscard]] const Mat2& matrix() const { return k_; }

 private:
  Mat2 k_;
};

/// exp(Omega k) with Omega = [[0, 1], [-1, 0]], in closed form. Omega k is
/// traceless, so (Omega k)^2 = -det(Omega k) I and the exponential reduces to
/// cosh/sinh, cos/sin or 1 + K depending on the sign of that determinant.
Symplectic exp_generator(const Generator& k);

// Generators. Sign convention: exp(-i H t) <-> M(t), exp(i H' t) <-> M'(t).

/// exp(-i H t) for the inverted oscillator.
Generator inverted_generator(const Real& t, const OscillatorParams& params);
/// exp(i H' t), the inverted oscillator at frequency omega + delta_omega.
Generator perturbed_generator(const Real& t, const OscillatorParams& params);
/// exp(-i H_h t) for the ordinary harmonic oscillator.
Generator harmonic_generator(const Real& t, const OscillatorParams& params);
/// exp(-(i/2) m delta_omega q^2).
Generator kick_generator(const OscillatorParams& params);

/// M(t) = [[cosh wt, (g^2/mw) sinh wt], [(mw/g^2) sinh wt, cosh wt]].
Symplectic inverted_propagator(const Real& t, const OscillatorParams& params);

/// M'(t): the inverted propagator at frequency w + dw run backwards,
/// so that M'(t) equals inverted_propagator(-t) when dw = 0.
Symplectic perturbed_propagator(const Real& t, const OscillatorParams& params);

/// M_h(t) = [[cos wt, (g^2/mw) sin wt], [-(mw/g^2) sin wt, cos wt]].
Symplectic harmonic_propagator(const Real& t, const OscillatorParams& params);

/// W = [[1, 0], [-m dw / g^2, 1]].
Symplectic kick(const OscillatorParams& params);

}  // namespace multifold
