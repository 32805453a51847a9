#include "multifold/evolution.hpp"

namespace multifold {
namespace {

// M for a hyperbolic flow at rate `rate` for time t, with the off-diagonal
// entries scaled by the oscillator's length scale g^2 / (m rate).
Mat2 hyperbolic(const Real& rate, const Real& t, const OscillatorParams& params) {
  const Real g2 = params.gate_scale() * params.gate_scale();
  const Real mw = params.mass() * rate;
  const Real phase = rate * t;
  const Real c = cosh(phase);
  const Real s = sinh(phase);
  return {c, g2 / mw * s, mw / g2 * s, c};
}

}  // namespace

Symplectic exp_generator(const Generator& k) {
  const Mat2& m = k.matrix();
  // K = Omega k = [[k21, k22], [-k11, -k12]]
  const Mat2 big_k{m.a21, m.a22, -m.a11, -m.a12};
  // K^2 = s I with s = -det K.
  const Real s = -big_k.det();
  Real even;  // coefficient of I
  Real odd;   // coefficient of K
  if (s.is_zero()) {
    even = 1;
    odd = 1;
  } else if (s > 0) {
    const Real mu = sqrt(s);
    even = cosh(mu);
    odd = sinh(mu) / mu;
  } else {
    const Real mu = sqrt(-s);
    even = cos(mu);
    odd = sin(mu) / mu;
  }
  return Symplectic(Mat2{even + odd * big_k.a11, odd * big_k.a12, odd * big_k.a21,
                         even + odd * big_k.a22});
}

Generator inverted_generator(const Real& t, const OscillatorParams& params) {
  const Real g2 = params.gate_scale() * params.gate_scale();
  const Real& w = params.omega();
  return {-(w * w * params.mass() * t) / g2, 0, g2 * t / params.mass()};
}

Generator perturbed_generator(const Real& t, const OscillatorParams& params) {
  const Real g2 = params.gate_scale() * params.gate_scale();
  const Real w = params.omega() + params.delta_omega();
  return {w * w * params.mass() * t / g2, 0, -(g2 * t) / params.mass()};
}

Generator harmonic_generator(const Real& t, const OscillatorParams& params) {
  const Real g2 = params.gate_scale() * params.gate_scale();
  const Real& w = params.omega();
  return {w * w * params.mass() * t / g2, 0, g2 * t / params.mass()};
}

Generator kick_generator(const OscillatorParams& params) {
  const Real g2 = params.gate_scale() * params.gate_scale();
  return {params.mass() * params.delta_omega() / g2, 0, 0};
}

Symplectic inverted_propagator(const Real& t, const OscillatorParams& params) {
  return Symplectic(hyperbolic(params.omega(), t, params));
}

Symplectic perturbed_propagator(const Real& t, const OscillatorParams& params) {
  return Symplectic(hyperbolic(params.omega() + params.delta_omega(), -t, params));
}

Symplectic harmonic_propagator(const Real& t, const OscillatorParams& params) {
  const Real g2 = params.gate_scale() * params.gate_scale();
  const Real mw = params.mass() * params.omega();
  const Real phase = params.omega() * t;
  const Real c = cos(phase);
  const Real s = sin(phase);
  return Symplectic(Mat2{c, g2 / mw * s, -(mw / g2) * s, c});
}

Symplectic kick(const OscillatorParams& params) {
  const Real g2 = params.gate_scale() * params.gate_scale();
  return Symplectic(Mat2{1, 0, -(params.mass() * params.delta_omega()) / g2, 1});
}

}  // namespace multifold
