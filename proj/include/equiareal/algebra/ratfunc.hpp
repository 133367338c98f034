#pragma once

#include <string>

#include "equiareal/algebra/upoly.hpp"

namespace equiareal::algebra {

/// Element of Q(t) in canonical form: gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                 // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFunc(const UPoly& p) : num_(p), den_(1) {}         // NOLINT(google-explicit-constructor)
  RatFunc(const UPoly& num, const UPoly& den);

  static RatFunc t() { return RatFunc(UPoly::t()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  RatFunc inverse() const;

  /// Throws PoleError when t0 is a root of the denominator.
  Rational eval(const Rational& t0) const;
  Rational operator()(const Rational& t0) const { return eval(t0); }

  std::string str(const std::string& var = "t") const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;
  friend RatFunc pow(const RatFunc& base, int exponent);

 private:
  struct Canonical {};
  RatFunc(UPoly num, UPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();
  UPoly num_;
  UPoly den_;
};

RatFunc pow(const RatFunc& base, int exponent);
std::string to_string(const RatFunc& f);

}  // namespace equiareal::algebra
