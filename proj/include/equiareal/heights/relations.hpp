#pragma once

// Exact relation checks between points, basis-change analysis, and the
// starred generators of the family.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "equiareal/algebra/imatrix.hpp"
#include "equiareal/algebra/upoly.hpp"
#include "equiareal/elliptic/curve.hpp"

namespace equiareal::heights {

using algebra::IMatrix;
using algebra::Integer;
using algebra::Rational;

/// Row i expresses target i as an integer combination of the basis.
struct RelationSet {
  IMatrix coefficients;
};

/// Exact group-law evaluation of every row. SignMatch::Negated marks a row
/// that holds only after negating the target.
template <class K>
std::vector<elliptic::SignMatch> verify_relations(const elliptic::Curve<K>& c, const RelationSet& rel,
                                                  std::span<const elliptic::Point<K>> basis,
                                                  std::span<const elliptic::Point<K>> targets) {
  std::vector<elliptic::SignMatch> out;
  const auto& m = rel.coefficients;
  for (std::size_t i = 0; i < targets.size() && i < m.size(); ++i) {
    std::vector<long> row;
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_si());
    out.push_back(elliptic::match_up_to_sign(c.combination(row, basis), targets[i]));
  }
  return out;
}

struct BasisAnalysis {
  Integer det;
  bool unimodular = false;
  Integer index;  // |det|; zero when the rows are dependent
};

BasisAnalysis basis_analysis(const RelationSet& rel);

/// P2* = P2 + G1 + G2, P4* = P4 + G1 + G2, P5* = P5 + G2.
template <class K>
std::array<elliptic::Point<K>, 3> starred_generators(const elliptic::Curve<K>& c,
                                                     std::span<const elliptic::Point<K>> p,
                                                     const elliptic::Point<K>& g1,
                                                     const elliptic::Point<K>& g2) {
  const auto g12 = c.add(g1, g2);
  return {c.add(p[1], g12), c.add(p[3], g12), c.add(p[4], g2)};
}

/// Gusic-Tadic style injectivity check of the specialization at t0 for E_t.
struct GTRow {
  std::string polynomial;   // "36*prod(h)" or "-144*prod(h)"
  Integer d;                // signed squarefree divisor of the content
  std::vector<int> subset;  // indices into GTReport::factors
  Rational value;
  bool square = false;
  bool counted = false;     // part of the verdict (d = +-1)
};

struct GTReport {
  Rational t0;
  std::vector<algebra::UPoly> factors;
  Integer content_a4, content_disc;
  std::vector<GTRow> rows;
  bool pass = false;
  std::vector<std::string> witnesses;  // counted divisors that specialize to squares
};

/// Throws SingularCurveError when prod h_i(t0) = 0.
GTReport gusic_tadic_check(const Rational& t0);

std::string divisor_name(const GTReport& r, const GTRow& row);

}  // namespace equiareal::heights
