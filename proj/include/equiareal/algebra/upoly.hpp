#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equiareal/algebra/rational.hpp"

namespace equiareal::algebra {

/// Dense univariate polynomial over Q in the indeterminate t.
/// Coefficients are stored low-to-high with no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  UPoly(const Rational& c);              // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<long> coeffs);

  static UPoly t();
  static UPoly monomial(const Rational& c, unsigned degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(unsigned i) const;
  Rational leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t0) const { return eval(t0); }
  Rational eval(const Rational& t0) const;
  UPoly monic() const;

  /// Positive-leading rational c with (*this / c) primitive in Z[t].
  Rational content() const;
  bool has_integer_coeffs() const;

  std::string str(const std::string& var = "t") const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UPoly pow(const UPoly& base, int exponent);

/// Quotient and remainder with deg(r) < deg(b); throws on b == 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Exact quotient; throws std::domain_error when b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);

/// Monic gcd (zero only when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// r with r*r == p and positive leading coefficient, when one exists over Q.
std::optional<UPoly> poly_sqrt(const UPoly& p);

std::string to_string(const UPoly& p);

}  // namespace equiareal::algebra
