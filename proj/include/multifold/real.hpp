#pragma once

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace multifold {

/// Working precision in significant decimal digits for the calling thread.
/// Every arithmetic result is rounded to this precision; stored values keep
/// whatever precision they were created with.
int working_digits() noexcept;

/// Sets the calling thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int previous_;
};

inline constexpr int kDefaultDigits = 40;

/// Extended-precision real backed by MPFR. Exponent range is that of MPFR
/// (about 2^±2^30), far beyond the e^{±400} magnitudes produced here.
class Real {
 public:
  Real();
  Real(double v);  // NOLINT(google-explicit-constructor)
  Real(int v);     // NOLINT(google-explicit-constructor)
  /// Parses a decimal literal such as "1e-3" at working precision.
  explicit Real(std::string_view text);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  [[nodiscard]] double to_double() const;
  [[nodiscard]] bool is_finite() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] int sign() const;
  [[nodiscard]] long precision_bits() const;

  /// Scientific notation with `significant` digits, C printf style
  /// ("2.48171960720e+01").
  [[nodiscard]] std::string to_scientific(int significant) const;

  /// Shortest-ish general representation for metadata and messages.
  [[nodiscard]] std::string to_string(int significant = 17) const;

  friend Real abs(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real exp(const Real& x);
  friend Real log(const Real& x);
  friend Real log1p(const Real& x);
  friend Real cosh(const Real& x);
  friend Real sinh(const Real& x);
  friend Real cos(const Real& x);
  friend Real sin(const Real& x);
  friend Real pow(const Real& base, long exponent);
  friend Real max(const Real& a, const Real& b);
  friend Real min(const Real& a, const Real& b);

  static Real pi();
  static Real log2();

  mpfr_srcptr raw() const { return value_; }

 private:
  template <typename Fn>
  static Real apply_unary(const Real& x, Fn fn);

  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace multifold
