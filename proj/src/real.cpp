#include "multifold/real.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace multifold {
namespace {

thread_local int t_digits = kDefaultDigits;

mpfr_prec_t bits_for(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 4;
}

mpfr_prec_t working_bits() { return bits_for(t_digits); }

}  // namespace

int working_digits() noexcept { return t_digits; }

PrecisionScope::PrecisionScope(int digits) : previous_(t_digits) {
  if (digits < 10 || digits > 10000) {
    throw std::invalid_argument("precision must be between 10 and 10000 digits");
  }
  t_digits = digits;
}

PrecisionScope::~PrecisionScope() { t_digits = previous_; }

Real::Real() {
  mpfr_init2(value_, working_bits());
  mpfr_set_zero(value_, 1);
}

Real::Real(double v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(int v) {
  mpfr_init2(value_, working_bits());
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(std::string_view text) {
  mpfr_init2(value_, working_bits());
  const std::string buf(text);
  char* end = nullptr;
  mpfr_strtofr(value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: '" + buf + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

void apply_in_place(mpfr_t lhs, mpfr_srcptr rhs, BinaryOp op) {
  const mpfr_prec_t bits = working_bits();
  if (mpfr_get_prec(lhs) == bits) {
    op(lhs, lhs, rhs, MPFR_RNDN);
    return;
  }
  mpfr_t tmp;
  mpfr_init2(tmp, bits);
  op(tmp, lhs, rhs, MPFR_RNDN);
  mpfr_swap(lhs, tmp);
  mpfr_clear(tmp);
}

}  // namespace

Real& Real::operator+=(const Real& rhs) {
  apply_in_place(value_, rhs.value_, mpfr_add);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  apply_in_place(value_, rhs.value_, mpfr_sub);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  apply_in_place(value_, rhs.value_, mpfr_mul);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  apply_in_place(value_, rhs.value_, mpfr_div);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
bool Real::is_finite() const { return mpfr_number_p(value_) != 0; }
bool Real::is_zero() const { return mpfr_zero_p(value_) != 0; }
int Real::sign() const { return mpfr_sgn(value_); }
long Real::precision_bits() const { return static_cast<long>(mpfr_get_prec(value_)); }

std::string Real::to_scientific(int significant) const {
  if (significant < 1) significant = 1;
  char* text = nullptr;
  mpfr_asprintf(&text, "%.*Re", significant - 1, value_);
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

std::string Real::to_string(int significant) const {
  char* text = nullptr;
  mpfr_asprintf(&text, "%.*Rg", significant, value_);
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

// Applies a unary MPFR function into a fresh value at working precision.
template <typename Fn>
Real Real::apply_unary(const Real& x, Fn fn) {
  Real out;
  fn(out.value_, x.value_, MPFR_RNDN);
  return out;
}

Real abs(const Real& x) {
  return Real::apply_unary(x, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t r) { return mpfr_abs(o, i, r); });
}
Real sqrt(const Real& x) { return Real::apply_unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return Real::apply_unary(x, mpfr_exp); }
Real log(const Real& x) { return Real::apply_unary(x, mpfr_log); }
Real log1p(const Real& x) { return Real::apply_unary(x, mpfr_log1p); }
Real cosh(const Real& x) { return Real::apply_unary(x, mpfr_cosh); }
Real sinh(const Real& x) { return Real::apply_unary(x, mpfr_sinh); }
Real cos(const Real& x) { return Real::apply_unary(x, mpfr_cos); }
Real sin(const Real& x) { return Real::apply_unary(x, mpfr_sin); }

Real pow(const Real& base, long exponent) {
  Real out;
  mpfr_pow_si(out.value_, base.value_, exponent, MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real Real::pi() {
  Real out;
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

Real Real::log2() {
  Real out;
  mpfr_const_log2(out.value_, MPFR_RNDN);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

}  // namespace multifold
