#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "equiareal/algebra/rational.hpp"

namespace equiareal::algebra {

inline constexpr unsigned kDefaultPrecisionBits = 192;
inline constexpr unsigned kMinPrecisionBits = 64;

/// Binary floating-point value with an explicit working precision (bits).
/// Arithmetic results carry the larger precision of the operands and are
/// correctly rounded to nearest at that precision.
class Real {
 public:
  explicit Real(unsigned precision = kDefaultPrecisionBits);
  Real(long value, unsigned precision);
  Real(const Integer& value, unsigned precision);
  Real(const Rational& value, unsigned precision);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  Real with_precision(unsigned bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string str(int digits = 20) const;
  /// Fixed notation with the given number of digits after the point.
  std::string fixed(int decimals) const;
  Integer floor() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  void raise_precision(unsigned bits);
  mpfr_t v_;
};

Real log(const Real& x);
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp2(long e, unsigned precision);
Real max(const Real& a, const Real& b);

}  // namespace equiareal::algebra
