#pragma once

// Small generic helpers shared by code templated on the scalar type
// (Integer, Rational, UPoly, RatFunc, MPoly).

#include "equiareal/algebra/mpoly.hpp"
#include "equiareal/algebra/rational.hpp"

namespace equiareal::algebra {

template <class K>
K constant_like(const K& /*like*/, long value) {
  return K(value);
}

template <>
inline MPoly constant_like<MPoly>(const MPoly& like, long value) {
  return MPoly(like.variables(), Rational(value));
}

template <class K>
K square(const K& x) {
  return x * x;
}

template <class K>
K fourth(const K& x) {
  K s = x * x;
  return s * s;
}

template <class K>
bool is_zero(const K& x) {
  return x.is_zero();
}

template <>
inline bool is_zero<Integer>(const Integer& x) {
  return x == 0;
}

}  // namespace equiareal::algebra
