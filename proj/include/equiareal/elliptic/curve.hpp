#pragma once

// Short Weierstrass curves y^2 = x^3 + a4 x + a6 and the chord-tangent group
// law over any exact field (Rational or RatFunc).

#include <array>
#include <string>
#include <utility>

#include "equiareal/algebra/ratfunc.hpp"
#include "equiareal/algebra/rational.hpp"
#include "equiareal/algebra/scalar.hpp"
#include "equiareal/errors.hpp"
#include "equiareal/octic.hpp"

namespace equiareal::elliptic {

using algebra::Integer;
using algebra::Rational;
using algebra::RatFunc;
using algebra::UPoly;

template <class K>
struct Point {
  bool infinity = true;
  K x{}, y{};

  static Point at_infinity() { return {}; }
  static Point affine(K x, K y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const Point&, const Point&) = default;
};

template <class K>
std::string to_string(const Point<K>& p) {
  using std::to_string;
  using algebra::to_string;
  if (p.infinity) return "O";
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

template <class K>
class Curve {
 public:
  /// Throws SingularCurveError when the discriminant vanishes.
  Curve(K a4, K a6 = K(0)) : a4_(std::move(a4)), a6_(std::move(a6)) {
    if (algebra::is_zero(discriminant())) throw SingularCurveError("singular curve: discriminant is zero");
  }

  const K& a4() const { return a4_; }
  const K& a6() const { return a6_; }
  K discriminant() const {
    return K(-16) * (K(4) * a4_ * a4_ * a4_ + K(27) * a6_ * a6_);
  }

  bool contains(const Point<K>& p) const {
    return p.infinity || p.y * p.y == p.x * p.x * p.x + a4_ * p.x + a6_;
  }

  Point<K> negate(const Point<K>& p) const {
    if (p.infinity) return p;
    return Point<K>::affine(p.x, -p.y);
  }

  Point<K> add(const Point<K>& p, const Point<K>& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    K slope;
    if (p.x == q.x) {
      if (algebra::is_zero(p.y + q.y)) return Point<K>::at_infinity();
      slope = (K(3) * p.x * p.x + a4_) / (K(2) * p.y);
    } else {
      slope = (q.y - p.y) / (q.x - p.x);
    }
    K x = slope * slope - p.x - q.x;
    K y = slope * (p.x - x) - p.y;
    return Point<K>::affine(std::move(x), std::move(y));
  }

  Point<K> subtract(const Point<K>& p, const Point<K>& q) const { return add(p, negate(q)); }
  Point<K> twice(const Point<K>& p) const { return add(p, p); }

  /// Double-and-add; negative n multiplies the negated point.
  Point<K> scalar_mul(long n, const Point<K>& p) const {
    Point<K> base = n < 0 ? negate(p) : p;
    unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    Point<K> acc = Point<K>::at_infinity();
    while (k != 0) {
      if (k & 1UL) acc = add(acc, base);
      k >>= 1;
      if (k != 0) base = twice(base);
    }
    return acc;
  }

  /// Sum of coeffs[i] * points[i].
  template <class Coeffs, class Points>
  Point<K> combination(const Coeffs& coeffs, const Points& points) const {
    Point<K> acc = Point<K>::at_infinity();
    auto c = std::begin(coeffs);
    for (auto p = std::begin(points); p != std::end(points) && c != std::end(coeffs); ++p, ++c) {
      acc = add(acc, scalar_mul(static_cast<long>(*c), *p));
    }
    return acc;
  }

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  K a4_, a6_;
};

enum class SignMatch { Exact, Negated, None };
std::string to_string(SignMatch m);

/// Compares P with Q and with -Q; both lie on the same curve by assumption.
template <class K>
SignMatch match_up_to_sign(const Point<K>& p, const Point<K>& q) {
  if (p == q) return SignMatch::Exact;
  if (!p.infinity && !q.infinity && p.x == q.x && p.y == -q.y) return SignMatch::Negated;
  return SignMatch::None;
}

/// Curve Y^2 = X^3 + (phi/4) X attached to a solution, with the five points
/// whose abscissae are x1^2x2^2, x1^2x3^2, x2^2x3^2, y1^2y2^2, y1^2y3^2.
template <class K>
struct SolutionCurve {
  Curve<K> curve;
  std::array<Point<K>, 5> points;
};

template <class K>
SolutionCurve<K> curve_from_solution(const octic::SolutionPair<K>& s) {
  const K f = octic::phi(s.x);
  if (algebra::is_zero(f)) throw DegenerateError("phi vanishes on this solution: no elliptic curve");
  Curve<K> curve(f / K(4));
  auto quartic = [](const K& a, const K& b, const K& c) { return algebra::fourth(a) + algebra::fourth(b) - algebra::fourth(c); };
  auto point = [](const K& a, const K& b, const K& w) {
    return Point<K>::affine(a * a * b * b, a * b * w / K(2));
  };
  const auto& x = s.x;
  const auto& y = s.y;
  SolutionCurve<K> out{curve,
                       {point(x.x1, x.x2, quartic(x.x1, x.x2, x.x3)),
                        point(x.x1, x.x3, quartic(x.x1, x.x3, x.x2)),
                        point(x.x2, x.x3, -quartic(x.x2, x.x3, x.x1)),
                        point(y.x1, y.x2, quartic(y.x1, y.x2, y.x3)),
                        point(y.x1, y.x3, quartic(y.x1, y.x3, y.x2))}};
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    if (!curve.contains(out.points[i])) {
      throw VerificationError("point P" + std::to_string(i + 1) + " is not on the curve");
    }
  }
  return out;
}

enum class Torsion { Z2, Z4, Z2xZ2 };
std::string to_string(Torsion t);

/// Torsion subgroup of y^2 = x^3 + D x over Q (a6 must be zero).
Torsion torsion_classify(const Curve<Rational>& c);

}  // namespace equiareal::elliptic
