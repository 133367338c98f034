#include "equiareal/algebra/ratfunc.hpp"

#include <stdexcept>

#include "equiareal/errors.hpp"

namespace equiareal::algebra {

RatFunc::RatFunc(const UPoly& num, const UPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    UPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Rational lead = den_.leading();
  if (lead != Rational(1)) {
    UPoly inv(lead.inverse());
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& t0) const {
  Rational d = den_.eval(t0);
  if (d.is_zero()) {
    throw PoleError("t = " + t0.str() + " is a pole (denominator " + den_.str() + " vanishes)");
  }
  return num_.eval(t0) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_ == UPoly(1)) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    UPoly g = gcd(den_, o.den_);
    UPoly a = exact_div(den_, g), b = exact_div(o.den_, g);
    num_ = num_ * b + o.num_ * a;
    den_ = a * o.den_;
  }
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  // Cross-cancel before multiplying so the final gcd is trivial.
  UPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  UPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  UPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  if (n.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  Rational lead = d.leading();
  if (lead != Rational(1)) {
    UPoly inv(lead.inverse());
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc pow(const RatFunc& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  // Powers of coprime polynomials stay coprime; a monic power stays monic.
  return RatFunc(pow(base.num_, exponent),
                 pow(base.den_, exponent), RatFunc::Canonical{});
}

std::string to_string(const RatFunc& f) { return f.str(); }

}  // namespace equiareal::algebra
