#pragma once

// The rank >= 5 family E_t: V^2 = U^3 + 36 h1...h6(t) U attached to the second
// parametric solution, its five points and the two halving generators.

#include <array>
#include <string>
#include <vector>

#include "equiareal/elliptic/curve.hpp"

namespace equiareal::elliptic {

struct CurveFamily {
  std::array<UPoly, 6> h;
  UPoly a4_poly;                  // 36 * h1 * ... * h6
  RatFunc m;                      // (m^2 X, m^3 Y) maps the solution curve onto E_t
  std::array<UPoly, 3> theta;
  Curve<RatFunc> curve;
  std::array<Point<RatFunc>, 5> points;
  Point<RatFunc> g1, g2;
};

/// Built once and verified symbolically; throws VerificationError on failure.
const CurveFamily& family();

const std::array<UPoly, 6>& family_h();
const std::array<UPoly, 3>& family_theta();

/// Solves m^4 = 144 prod h_i / phi(sol2(t)) for a rational function m.
RatFunc model_scaling();

/// Closed forms for G1(t), G2(t) built from theta1..theta3.
std::pair<Point<RatFunc>, Point<RatFunc>> generator_formulas();

/// Throws SingularCurveError naming the vanishing h_i.
Curve<Rational> family_curve(const Rational& t0);
std::array<Point<Rational>, 5> family_points(const Rational& t0);

/// Throw PoleError or SingularCurveError.
Curve<Rational> specialize(const Curve<RatFunc>& c, const Rational& t0);
Point<Rational> specialize(const Point<RatFunc>& p, const Rational& t0);

/// E_2 and its generators G1..G5 as printed in the literature, together with
/// the expressions of P1(2)..P5(2) in terms of them.
struct E2Data {
  Curve<Rational> curve;
  std::array<Point<Rational>, 5> points;
  std::array<Point<Rational>, 5> generators;
  std::array<std::array<long, 5>, 5> relations;
  std::array<std::array<long, 5>, 5> starred_relations;  // rows for P1, P2*, P3, P4*, P5*
};
const E2Data& e2_data();

/// The curve attached to sol1(4) and its five printed points.
const SolutionCurve<Rational>& t4_data();

}  // namespace equiareal::elliptic
