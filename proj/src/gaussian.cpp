#include "multifold/gaussian.hpp"

#include <utility>

#include "multifold/errors.hpp"

namespace multifold {
namespace {

// Rounding budget for quantities of unit magnitude at working precision.
Real unit_roundoff_budget() { return pow(Real(10), -(working_digits() - 8)); }

const Real kRhoFloorTolerance{1e-25};

}  // namespace

Real Mat2::max_abs() const { return max(max(abs(a11), abs(a12)), max(abs(a21), abs(a22))); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
}

OscillatorParams::OscillatorParams(Real mass, Real omega, Real delta_omega, Real gate_scale)
    : mass_(std::move(mass)),
      omega_(std::move(omega)),
      delta_omega_(std::move(delta_omega)),
      gate_scale_(std::move(gate_scale)) {
  if (!(mass_ > 0) || !(omega_ > 0) || !(gate_scale_ > 0)) {
    throw DomainError("mass, omega and gate scale must be positive");
  }
  if (!(delta_omega_ >= 0)) throw DomainError("delta_omega must be non-negative");
}

OscillatorParams OscillatorParams::natural(const Real& omega, const Real& delta_ratio) {
  return {1, omega, delta_ratio * omega, 1};
}

Real OscillatorParams::alpha() const {
  const Real r = delta_omega_ / omega_;
  return r * r / 4;
}

bool OscillatorParams::perturbative() const { return delta_omega_ / omega_ <= Real(0.1); }

CovMatrix::CovMatrix(Real g11, Real g12, Real g22) : m_{g11, g12, g12, g22} {
  if (!(m_.a11 > 0) || !(m_.a22 > 0)) {
    throw DomainError("covariance matrix must have positive diagonal");
  }
  if (m_.det() < -unit_roundoff_budget() * m_.a11 * m_.a22) {
    throw DomainError("covariance matrix is not positive definite");
  }
}

Symplectic::Symplectic(Mat2 m) : m_(std::move(m)) {
  const Real scale = max(Real(1), m_.max_abs() * m_.max_abs());
  if (abs(m_.det() - 1) > unit_roundoff_budget() * scale) {
    throw DomainError("matrix is not symplectic: det = " + m_.det().to_string());
  }
}

Symplectic Symplectic::inverse() const {
  return {Mat2{m_.a22, -m_.a12, -m_.a21, m_.a11}, Trusted{}};
}

Symplectic Symplectic::transpose() const { return {m_.transpose(), Trusted{}}; }

Symplectic operator*(const Symplectic& x, const Symplectic& y) {
  return {x.m_ * y.m_, Symplectic::Trusted{}};
}

CovMatrix reference_covariance(const OscillatorParams& params) {
  const Real g2 = params.gate_scale() * params.gate_scale();
  const Real mw = params.mass() * params.omega();
  return {g2 / mw, 0, mw / g2};
}

CovMatrix harmonic_reference_covariance(const OscillatorParams& params) {
  const Real g2 = params.gate_scale() * params.gate_scale();
  const Real mw2 = 2 * params.mass() * params.omega();
  return {g2 / mw2, 0, mw2 / g2};
}

CovMatrix conjugate(const CovMatrix& g, const Symplectic& m) {
  const Mat2& s = m.matrix();
  const Real& x = g.g11();
  const Real& y = g.g12();
  const Real& z = g.g22();
  return {s.a11 * s.a11 * x + 2 * s.a11 * s.a12 * y + s.a12 * s.a12 * z,
          s.a11 * s.a21 * x + (s.a11 * s.a22 + s.a12 * s.a21) * y + s.a12 * s.a22 * z,
          s.a21 * s.a21 * x + 2 * s.a21 * s.a22 * y + s.a22 * s.a22 * z};
}

Mat2 relative_covariance(const CovMatrix& target, const CovMatrix& reference) {
  const Real det = reference.det();
  const Mat2 inv{reference.g22() / det, -reference.g12() / det, -reference.g12() / det,
                 reference.g11() / det};
  return target.matrix() * inv;
}

Real rho_exact(const Mat2& delta) {
  const Real tr = delta.trace();
  const Real split = delta.a11 - delta.a22;
  Real disc = split * split + 4 * delta.a12 * delta.a21;
  if (disc < 0) {
    if (disc < Real(-1e-20) * tr * tr) {
      throw DegenerateSpectrum("relative covariance has complex eigenvalues (discriminant " +
                               disc.to_string() + ")");
    }
    disc = 0;
  }
  Real rho = (tr + sqrt(disc)) / 2;
  if (rho < 1) rho = 1;
  return rho;
}

Real rho_between(const CovMatrix& target, const CovMatrix& reference) {
  return rho_exact(relative_covariance(target, reference));
}

Real complexity(const Real& rho) {
  if (rho < 1 - kRhoFloorTolerance) throw DomainError("complexity requires rho >= 1");
  if (rho <= 1) return 0;
  return log(rho) / 2;
}

InnerProduct inner_product(const Real& rho) {
  if (rho < 1 - kRhoFloorTolerance) throw DomainError("inner product requires rho >= 1");
  const Real r = max(rho, Real(1));
  return {2 * sqrt(r) / (1 + r), log1p(r) - Real::log2() - log(r) / 2};
}

}  // namespace multifold
