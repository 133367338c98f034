#pragma once

// Canonical heights on y^2 = x^3 + a4 x + a6 over Q, the height pairing and
// regulators. Heights use hat-h(P) = lim 4^-n log max(|num x|, |den x|) of
// 2^n P by default; the halved convention is available as a flag.

#include <span>
#include <string>
#include <vector>

#include "equiareal/algebra/factor.hpp"
#include "equiareal/algebra/real.hpp"
#include "equiareal/elliptic/curve.hpp"

namespace equiareal::heights {

using algebra::Factorization;
using algebra::Integer;
using algebra::Rational;
using algebra::Real;
using elliptic::Curve;
using elliptic::Point;

enum class Normalization { Unhalved, Halved };
std::string to_string(Normalization n);
Normalization parse_normalization(const std::string& name);

inline constexpr unsigned kMinHeightPrecisionBits = 128;

struct HeightOptions {
  unsigned precision = algebra::kDefaultPrecisionBits;
  Normalization normalization = Normalization::Unhalved;
};

/// Immutable after construction. `hints` are integers whose prime factors
/// cover the discriminant (the rest is factored blind).
class HeightContext {
 public:
  HeightContext(const Curve<Rational>& curve, std::span<const Integer> hints = {}, HeightOptions options = {});

  const Curve<Rational>& curve() const { return curve_; }
  const Curve<Rational>& integral_model() const { return model_; }
  /// x_model = scale^2 x, y_model = scale^3 y.
  const Rational& scale() const { return scale_; }
  const Factorization& discriminant_factorization() const { return disc_; }
  unsigned precision() const { return options_.precision; }
  Normalization normalization() const { return options_.normalization; }

  Point<Rational> to_model(const Point<Rational>& p) const;
  /// Exact: some multiple nP with 1 <= n <= 12 is the identity.
  bool is_torsion(const Point<Rational>& p) const;
  /// Throws std::invalid_argument for a point off the curve.
  Real canonical_height(const Point<Rational>& p) const;
  /// Bound on the absolute error of a computed height h.
  Real error_bound(const Real& h) const;

 private:
  Real archimedean(const Rational& x) const;
  Real non_archimedean(const Point<Rational>& p) const;

  Curve<Rational> curve_;
  Curve<Rational> model_;
  Rational scale_;
  Factorization disc_;
  HeightOptions options_;
  Integer shift_;  // integer below every real root of the model cubic
};

/// 4^-n h(x(2^n P)) on the given model, in the unhalved convention; n <= 5.
Real naive_doubling_estimate(const Curve<Rational>& c, const Point<Rational>& p, int n,
                             unsigned precision = algebra::kDefaultPrecisionBits);

inline constexpr double kIndependenceThreshold = 1e-4;

struct HeightReport {
  std::vector<Real> heights;
  std::vector<std::vector<Real>> gram;
  Real regulator;
  Real error_bound;
  bool independent = false;
  /// Set when dependence was proved exactly (a torsion point, or P_i +- P_j torsion).
  bool exact_dependence = false;
  std::string note;
};

HeightReport regulator(const HeightContext& ctx, std::span<const Point<Rational>> points);

/// Prime hints for curves attached to solutions: the four quadratic factors
/// of phi at the primitive solution, 2, and the scaling factor.
std::vector<Integer> solution_hints(const octic::SolutionPair<Rational>& s);
/// Prime hints for the family curve at t0 = a/b: the homogenized h_i(a, b), 2, 3, b.
std::vector<Integer> family_hints(const Rational& t0);

}  // namespace equiareal::heights
