#pragma once

#include "multifold/real.hpp"

namespace multifold {

/// Plain 2x2 real matrix, row-major.
struct Mat2 {
  Real a11{0}, a12{0}, a21{0}, a22{0};

  static Mat2 identity() { return {1, 0, 0, 1}; }

  [[nodiscard]] Real det() const { return a11 * a22 - a12 * a21; }
  [[nodiscard]] Real trace() const { return a11 + a22; }
  [[nodiscard]] Mat2 transpose() const { return {a11, a21, a12, a22}; }
  /// Largest absolute entry.
  [[nodiscard]] Real max_abs() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
};

/// Mass, frequency, frequency perturbation and gate scale of a one-mode
/// (inverted) oscillator. Natural units, hbar = 1.
class OscillatorParams {
 public:
  /// Throws DomainError unless mass, omega, gate_scale > 0 and delta_omega >= 0.
  OscillatorParams(Real mass, Real omega, Real delta_omega, Real gate_scale);

  /// m = g = 1 with the perturbation given as the ratio delta_omega / omega.
  static OscillatorParams natural(const Real& omega, const Real& delta_ratio);

  [[nodiscard]] const Real& mass() const { return mass_; }
  [[nodiscard]] const Real& omega() const { return omega_; }
  [[nodiscard]] const Real& delta_omega() const { return delta_omega_; }
  [[nodiscard]] const Real& gate_scale() const { return gate_scale_; }

  [[nodiscard]] Real delta_ratio() const { return delta_omega_ / omega_; }
  /// alpha = delta_omega^2 / (4 omega^2), the small parameter of the
  /// leading-order expansions.
  [[nodiscard]] Real alpha() const;
  /// False once delta_omega / omega exceeds 0.1.
  [[nodiscard]] bool perturbative() const;

 private:
  Real mass_, omega_, delta_omega_, gate_scale_;
};

/// Covariance matrix G of a one-mode Gaussian state in the dimensionless
/// basis (q g, p / g). Symmetric by construction.
class CovMatrix {
 public:
  /// Throws DomainError if the matrix is not positive definite within the
  /// working precision.
  CovMatrix(Real g11, Real g12, Real g22);

  [[nodiscard]] const Mat2& matrix() const { return m_; }
  [[nodiscard]] const Real& g11() const { return m_.a11; }
  [[nodiscard]] const Real& g12() const { return m_.a12; }
  [[nodiscard]] const Real& g22() const { return m_.a22; }
  [[nodiscard]] Real det() const { return m_.det(); }

 private:
  Mat2 m_;
};

/// Real 2x2 matrix with unit determinant.
class Symplectic {
 public:
  /// Throws DomainError if |det - 1| exceeds the rounding budget of the
  /// working precision scaled by the entry magnitude.
  explicit Symplectic(Mat2 m);

  static Symplectic identity() { return Symplectic(Mat2::identity()); }

  [[nodiscard]] const Mat2& matrix() const { return m_; }
  [[nodiscard]] Symplectic inverse() const;
  [[nodiscard]] Symplectic transpose() const;

  friend Symplectic operator*(const Symplectic& x, const Symplectic& y);

 private:
  struct Trusted {};
  Symplectic(Mat2 m, Trusted) : m_(std::move(m)) {}

  Mat2 m_;
};

/// Ground state of the oscillator: diag(g^2/(m w), m w/g^2).
CovMatrix reference_covariance(const OscillatorParams& params);

/// Ground state at doubled frequency: diag(g^2/(2 m w), 2 m w/g^2).
CovMatrix harmonic_reference_covariance(const OscillatorParams& params);

/// M G M^T.
CovMatrix conjugate(const CovMatrix& g, const Symplectic& m);

/// Delta = G_T G_R^{-1}.
Mat2 relative_covariance(const CovMatrix& target, const CovMatrix& reference);

/// Larger eigenvalue of Delta from the exact radical
/// (D11 + D22 + sqrt((D11 - D22)^2 + 4 D12 D21)) / 2.
/// A discriminant below -1e-20 tr^2 throws DegenerateSpectrum; smaller
/// negative values are clamped to zero. The result is never below 1.
Real rho_exact(const Mat2& delta);

/// Convenience: rho of target relative to reference.
Real rho_between(const CovMatrix& target, const CovMatrix& reference);

/// Circuit complexity 0.5 log rho (identical for the F1 and F2 costs).
Real complexity(const Real& rho);

struct InnerProduct {
  Real value;     // 2 sqrt(rho) / (1 + rho)
  Real neg_log;   // -log(value)
};

/// Squared overlap of reference and target.
InnerProduct inner_product(const Real& rho);

}  // namespace multifold
