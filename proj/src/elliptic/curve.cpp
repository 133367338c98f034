#include "equiareal/elliptic/curve.hpp"

#include <stdexcept>

namespace equiareal::elliptic {

std::string to_string(SignMatch m) {
  switch (m) {
    case SignMatch::Exact: return "exact";
    case SignMatch::Negated: return "negated";
    case SignMatch::None: return "none";
  }
  return "none";
}

std::string to_string(Torsion t) {
  switch (t) {
    case Torsion::Z2: return "Z/2Z";
    case Torsion::Z4: return "Z/4Z";
    case Torsion::Z2xZ2: return "Z/2Z x Z/2Z";
  }
  return "Z/2Z";
}

Torsion torsion_classify(const Curve<Rational>& c) {
  if (!c.a6().is_zero()) throw std::invalid_argument("torsion_classify expects a6 = 0");
  // D = 4 after removing fourth powers exactly when a4/4 is a fourth power.
  if (auto s = algebra::is_perfect_square(c.a4() / Rational(4))) {
    if (algebra::is_perfect_square(*s)) return Torsion::Z4;
  }
  if (algebra::is_perfect_square(-c.a4())) return Torsion::Z2xZ2;
  return Torsion::Z2;
}

}  // namespace equiareal::elliptic
