#include "multifold/states.hpp"

namespace multifold {

Symplectic loschmidt_map(const TimeFold& fold, const OscillatorParams& params,
                         LoschmidtOptions options) {
  Symplectic total = options.outer_evolution
                         ? inverted_propagator(-fold.t_start, params)
                         : Symplectic::identity();
  for (const Real& t : fold.times) {
    total = perturbed_propagator(t, params) * inverted_propagator(t, params) * total;
  }
  if (options.outer_evolution) total = inverted_propagator(fold.t_final, params) * total;
  return total;
}

CovMatrix loschmidt_covariance(const TimeFold& fold, const OscillatorParams& params,
                               LoschmidtOptions options) {
  return conjugate(reference_covariance(params), loschmidt_map(fold, params, options));
}

Symplectic precursor_map(const TimeFold& fold, const OscillatorParams& params) {
  const Symplectic w = kick(params);
  Symplectic total = inverted_propagator(-fold.t_start, params);
  for (const Real& t : fold.times) {
    total = inverted_propagator(-t, params) * w * inverted_propagator(t, params) * total;
  }
  return inverted_propagator(fold.t_final, params) * total;
}

CovMatrix precursor_covariance(const TimeFold& fold, const OscillatorParams& params) {
  return conjugate(reference_covariance(params), precursor_map(fold, params));
}

CovMatrix harmonic_precursor_covariance(const Real& t1, const OscillatorParams& params) {
  const Symplectic map =
      harmonic_propagator(-t1, params) * kick(params) * harmonic_propagator(t1, params);
  return conjugate(harmonic_reference_covariance(params), map);
}

}  // namespace multifold
