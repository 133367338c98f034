#pragma once

// The octic form phi(x1, x2, x3) = x1^8 + x2^8 + x3^8 - 2(x1^4 x2^4 + x1^4 x3^4 + x2^4 x3^4),
// its parametric solutions of phi(x) = phi(y), and equiareal triangles with
// perfect-square sides. Everything here is exact and templated on the scalar
// type where it makes sense (Integer, Rational, UPoly, RatFunc, MPoly).

#include <array>
#include <string>

#include "equiareal/algebra/mpoly.hpp"
#include "equiareal/algebra/ratfunc.hpp"
#include "equiareal/algebra/scalar.hpp"
#include "equiareal/algebra/upoly.hpp"

namespace equiareal::octic {

using algebra::Integer;
using algebra::MPoly;
using algebra::Rational;
using algebra::RatFunc;
using algebra::UPoly;

template <class K>
struct Triple {
  K x1, x2, x3;

  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Two triples over the same scalar type; a solution when phi(x) == phi(y).
template <class K>
struct SolutionPair {
  Triple<K> x, y;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

template <class K>
K phi(const Triple<K>& t) {
  const K a = algebra::fourth(t.x1), b = algebra::fourth(t.x2), c = algebra::fourth(t.x3);
  const K cross = a * b + a * c + b * c;
  return a * a + b * b + c * c - cross - cross;
}

/// (x1^2 - x2^2 - x3^2, x1^2 - x2^2 + x3^2, x1^2 + x2^2 - x3^2, x1^2 + x2^2 + x3^2);
/// their product is phi.
template <class K>
std::array<K, 4> phi_factors(const Triple<K>& t) {
  const K a = algebra::square(t.x1), b = algebra::square(t.x2), c = algebra::square(t.x3);
  return {a - b - c, a - b + c, a + b - c, a + b + c};
}

/// (4 * Area)^2 of a triangle with side lengths a, b, c (Heron's formula
/// without the square root); equals -phi(x) for sides x1^2, x2^2, x3^2.
template <class K>
K sixteen_area_squared(const K& a, const K& b, const K& c) {
  const K a2 = a * a, b2 = b * b, c2 = c * c;
  const K cross = a2 * b2 + a2 * c2 + b2 * c2;
  return cross + cross - (a2 * a2 + b2 * b2 + c2 * c2);
}

/// Strict triangle inequalities; sides must be positive.
bool triangle_check(const Rational& a, const Rational& b, const Rational& c);

enum class Family { Sol1, Sol2 };

std::string to_string(Family f);
Family parse_family(const std::string& name);

/// Degree-8 solution built from the parametric seed of the first factor.
const SolutionPair<UPoly>& sol1();
/// Degree-5 solution obtained from the second factor with p = q t.
const SolutionPair<UPoly>& sol2();
const SolutionPair<UPoly>& solution(Family f);

SolutionPair<Rational> evaluate(const SolutionPair<UPoly>& s, const Rational& t);
inline SolutionPair<Rational> sol1(const Rational& t) { return evaluate(sol1(), t); }
inline SolutionPair<Rational> sol2(const Rational& t) { return evaluate(sol2(), t); }
inline SolutionPair<Rational> solution(Family f, const Rational& t) { return evaluate(solution(f), t); }

template <class K>
bool satisfies_octic(const SolutionPair<K>& s) {
  return phi(s.x) == phi(s.y);
}

/// True when some entry is zero or phi(x) == 0.
bool is_degenerate(const SolutionPair<Rational>& s);

/// Polynomials with (p^4 + q^4)(u^4 + v^4) = x1^4 + y1^4 identically.
struct FirstFactorSolution {
  UPoly p, q, u, v, x1, y1;

  UPoly lhs() const;
  UPoly rhs() const;
  UPoly residual() const { return lhs() - rhs(); }
};

const FirstFactorSolution& first_factor_seed();

/// A solution of x1^4 + h v^4 = y1^4 + h u^4 with h = p^4 - q^4.
template <class K>
struct SecondFactorSolution {
  K x1, y1, u, v, h;

  K residual() const {
    return algebra::fourth(x1) + h * algebra::fourth(v) - algebra::fourth(y1) - h * algebra::fourth(u);
  }
};

/// First iterate of the chord construction seeded with (x1, y1, u, v) = (p, q, 1, 0).
template <class K>
SecondFactorSolution<K> second_factor_solution(const K& p, const K& q) {
  auto c = [&](long v) { return algebra::constant_like(p, v); };
  const K p2 = p * p, q2 = q * q, p3 = p2 * p, q3 = q2 * q, p4 = p2 * p2, q4 = q2 * q2;
  const K mid = c(3) * p3 * q + c(3) * p2 * q2 + c(3) * p * q3;
  SecondFactorSolution<K> s{
      p * (c(2) * p4 + mid - q4),
      q * (p4 - mid - c(2) * q4),
      c(2) * p4 + mid + c(2) * q4,
      c(3) * (p2 + p * q + q2) * p * q,
      p4 - q4,
  };
  return s;
}

/// x = (x1, p u, q v), y = (y1, p v, q u); always x2 x3 == y2 y3.
template <class K>
SolutionPair<K> substitute_pquv(const K& p, const K& q, const K& u, const K& v, const K& x1, const K& y1) {
  return {{x1, p * u, q * v}, {y1, p * v, q * u}};
}

/// Outcome of expanding phi(x1, p u, q v) - phi(y1, p v, q u) in
/// Q[x1, y1, p, q, u, v] and comparing with sign * F1 * F2 where
/// F1 = x1^4 + y1^4 - (p^4 + q^4)(u^4 + v^4) and
/// F2 = x1^4 - y1^4 - (p^4 - q^4)(u^4 - v^4).
struct ReductionCheck {
  int sign = 0;  // 0 when neither sign works
  MPoly difference;
  MPoly product;
  MPoly residual;

  bool holds() const { return sign != 0 && residual.is_zero(); }
};

ReductionCheck reduction_identity_check();

/// Whether {|y1|, |y2|, |y3|} equals {|x1|, |x2|, |x3|} as multisets.
bool is_trivial(const SolutionPair<Rational>& s);

/// Integer solution obtained by one common positive factor (signs kept).
struct PrimitiveSolution {
  SolutionPair<Integer> pair;
  Rational scale;
};

/// Throws DegenerateError when every entry is zero.
PrimitiveSolution scale_to_primitive(const SolutionPair<Rational>& s);

struct TrianglePair {
  Family family;
  Rational t;
  std::array<Integer, 3> roots_x, roots_y;  // |x_i|, |y_i| of the primitive solution
  std::array<Integer, 3> sides_x, sides_y;  // squares of the roots
  Integer sixteen_area_sq;
  bool primitive = true;
  bool rational_area = false;
};

/// Throws DegenerateError for a zero side or phi = 0 and NotTriangleError when
/// either side triple fails a strict triangle inequality.
TrianglePair triangle_pair(Family family, const Rational& t);

}  // namespace equiareal::octic
