#include "equiareal/octic.hpp"

#include <algorithm>
#include <stdexcept>

#include "equiareal/errors.hpp"

namespace equiareal::octic {

namespace {

UPoly t_poly() { return UPoly::t(); }

FirstFactorSolution make_first_factor_seed() {
  const UPoly t = t_poly();
  const UPoly t2 = t * t;
  FirstFactorSolution s;
  s.p = t2 - UPoly(3);
  s.q = UPoly(4) * t;
  s.u = (t2 - UPoly(3)) * (t2 + UPoly(9)) * (t2 + UPoly(1));
  s.v = UPoly(4) * t * (t2 + UPoly(2) * t + UPoly(3)) * (t2 - UPoly(2) * t + UPoly(3));
  s.x1 = UPoly(16) * t2 * (t2 - UPoly(3)) * (t2 + UPoly(3));
  s.y1 = UPoly{81, 0, 36, 0, 86, 0, 4, 0, 1};
  return s;
}

SolutionPair<UPoly> make_sol2() {
  // Second-factor solution at p = t, q = 1, pushed through the p,q,u,v substitution.
  const UPoly t = t_poly();
  auto f = second_factor_solution<UPoly>(t, UPoly(1));
  return substitute_pquv<UPoly>(t, UPoly(1), f.u, f.v, f.x1, f.y1);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace

bool triangle_check(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) {
    throw InputError("triangle_check requires positive side lengths");
  }
  return a + b > c && a + c > b && b + c > a;
}

std::string to_string(Family f) { return f == Family::Sol1 ? "sol1" : "sol2"; }

Family parse_family(const std::string& name) {
  if (name == "sol1") return Family::Sol1;
  if (name == "sol2") return Family::Sol2;
  throw InputError("unknown solution family '" + name + "' (expected sol1 or sol2)");
}

const FirstFactorSolution& first_factor_seed() {
  static const FirstFactorSolution s = make_first_factor_seed();
  return s;
}

UPoly FirstFactorSolution::lhs() const {
  return (algebra::fourth(p) + algebra::fourth(q)) * (algebra::fourth(u) + algebra::fourth(v));
}

UPoly FirstFactorSolution::rhs() const { return algebra::fourth(x1) + algebra::fourth(y1); }

const SolutionPair<UPoly>& sol1() {
  static const SolutionPair<UPoly> s = [] {
    const auto& f = first_factor_seed();
    return substitute_pquv<UPoly>(f.p, f.q, f.u, f.v, f.x1, f.y1);
  }();
  return s;
}

const SolutionPair<UPoly>& sol2() {
  static const SolutionPair<UPoly> s = make_sol2();
  return s;
}

const SolutionPair<UPoly>& solution(Family f) { return f == Family::Sol1 ? sol1() : sol2(); }

SolutionPair<Rational> evaluate(const SolutionPair<UPoly>& s, const Rational& t) {
  return {{s.x.x1(t), s.x.x2(t), s.x.x3(t)}, {s.y.x1(t), s.y.x2(t), s.y.x3(t)}};
}

bool is_degenerate(const SolutionPair<Rational>& s) {
  for (const Rational* v : {&s.x.x1, &s.x.x2, &s.x.x3, &s.y.x1, &s.y.x2, &s.y.x3}) {
    if (v->is_zero()) return true;
  }
  return phi(s.x).is_zero();
}

ReductionCheck reduction_identity_check() {
  auto vars = MPoly::declare({"x1", "y1", "p", "q", "u", "v"});
  const MPoly x1 = MPoly::var(vars, "x1"), y1 = MPoly::var(vars, "y1"), p = MPoly::var(vars, "p"),
              q = MPoly::var(vars, "q"), u = MPoly::var(vars, "u"), v = MPoly::var(vars, "v");
  auto s = substitute_pquv<MPoly>(p, q, u, v, x1, y1);

  ReductionCheck out{0, phi(s.x) - phi(s.y), MPoly(vars), MPoly(vars)};
  using algebra::fourth;
  const MPoly f1 = fourth(x1) + fourth(y1) - (fourth(p) + fourth(q)) * (fourth(u) + fourth(v));
  const MPoly f2 = fourth(x1) - fourth(y1) - (fourth(p) - fourth(q)) * (fourth(u) - fourth(v));
  out.product = f1 * f2;
  if (out.difference == out.product) {
    out.sign = 1;
  } else if (out.difference == -out.product) {
    out.sign = -1;
  }
  out.residual = out.sign < 0 ? out.difference + out.product : out.difference - out.product;
  return out;
}

bool is_trivial(const SolutionPair<Rational>& s) {
  std::array<Rational, 3> a{s.x.x1.abs(), s.x.x2.abs(), s.x.x3.abs()};
  std::array<Rational, 3> b{s.y.x1.abs(), s.y.x2.abs(), s.y.x3.abs()};
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

PrimitiveSolution scale_to_primitive(const SolutionPair<Rational>& s) {
  const std::array<const Rational*, 6> entries{&s.x.x1, &s.x.x2, &s.x.x3, &s.y.x1, &s.y.x2, &s.y.x3};
  Integer num_gcd = 0, den_lcm = 1;
  for (const Rational* v : entries) {
    num_gcd = gcd(num_gcd, v->numerator());
    den_lcm = lcm(den_lcm, v->denominator());
  }
  if (num_gcd == 0) throw DegenerateError("cannot scale the zero solution");
  const Rational scale(den_lcm, num_gcd);
  auto to_int = [&](const Rational& v) {
    Rational w = v * scale;
    return w.numerator();
  };
  PrimitiveSolution out;
  out.scale = scale;
  out.pair = {{to_int(s.x.x1), to_int(s.x.x2), to_int(s.x.x3)},
              {to_int(s.y.x1), to_int(s.y.x2), to_int(s.y.x3)}};
  return out;
}

TrianglePair triangle_pair(Family family, const Rational& t) {
  const SolutionPair<Rational> s = solution(family, t);
  if (is_degenerate(s)) {
    throw DegenerateError(to_string(family) + " at t = " + t.str() +
                          " is degenerate (zero entry or phi = 0)");
  }
  const PrimitiveSolution prim = scale_to_primitive(s);
  TrianglePair out;
  out.family = family;
  out.t = t;
  const auto& x = prim.pair.x;
  const auto& y = prim.pair.y;
  out.roots_x = {abs(x.x1), abs(x.x2), abs(x.x3)};
  out.roots_y = {abs(y.x1), abs(y.x2), abs(y.x3)};
  for (size_t i = 0; i < 3; ++i) {
    out.sides_x[i] = out.roots_x[i] * out.roots_x[i];
    out.sides_y[i] = out.roots_y[i] * out.roots_y[i];
  }
  auto valid = [](const std::array<Integer, 3>& sides) {
    return triangle_check(Rational(sides[0]), Rational(sides[1]), Rational(sides[2]));
  };
  if (!valid(out.sides_x) || !valid(out.sides_y)) {
    throw NotTriangleError(to_string(family) + " at t = " + t.str() +
                           ": not a triangle (squared sides violate a triangle inequality)");
  }
  const Integer ax = sixteen_area_squared(out.sides_x[0], out.sides_x[1], out.sides_x[2]);
  const Integer ay = sixteen_area_squared(out.sides_y[0], out.sides_y[1], out.sides_y[2]);
  if (ax != ay) throw VerificationError("equiareal check failed: 16A^2 differs between the triangles");
  out.sixteen_area_sq = ax;
  Integer g = 0;
  for (const auto& r : out.roots_x) g = gcd(g, r);
  for (const auto& r : out.roots_y) g = gcd(g, r);
  out.primitive = g == 1;
  out.rational_area = algebra::is_perfect_square(Rational(ax, Integer(16))).has_value();
  return out;
}

}  // namespace equiareal::octic
