#include "equiareal/heights/relations.hpp"

#include <algorithm>

#include "equiareal/algebra/factor.hpp"
#include "equiareal/elliptic/family.hpp"

namespace equiareal::heights {

using algebra::UPoly;

BasisAnalysis basis_analysis(const RelationSet& rel) {
  BasisAnalysis b;
  b.det = algebra::det(rel.coefficients);
  b.index = b.det < 0 ? Integer(-b.det) : b.det;
  b.unimodular = b.index == 1;
  return b;
}

namespace {

// Signed squarefree divisors of |c|: +-1 first, then by increasing size.
std::vector<Integer> signed_squarefree_divisors(const Integer& c) {
  const auto primes = algebra::factor_integer(c).primes();
  std::vector<Integer> pos{1};
  for (const auto& p : primes) {
    const std::size_t k = pos.size();
    for (std::size_t i = 0; i < k; ++i) pos.push_back(pos[i] * p);
  }
  std::vector<Integer> out;
  for (const auto& d : pos) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

}  // namespace

GTReport gusic_tadic_check(const Rational& t0) {
  const auto& h = elliptic::family_h();
  GTReport r;
  r.t0 = t0;
  Integer content = 1;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i](t0).is_zero()) {
      throw SingularCurveError("singular specialization: h" + std::to_string(i + 1) + "(" + t0.str() + ") = 0");
    }
    auto f = algebra::factor_quartic(h[i]);
    content *= f.content;
    for (auto& g : f.factors) r.factors.push_back(std::move(g));
  }
  r.content_a4 = 36 * content;
  r.content_disc = -144 * content;

  std::vector<Rational> values;
  for (const auto& f : r.factors) values.push_back(f(t0));
  const std::size_t k = r.factors.size();
  r.pass = true;
  for (const auto& [label, c] : {std::pair<std::string, Integer>{"36*prod(h)", r.content_a4},
                                 std::pair<std::string, Integer>{"-144*prod(h)", r.content_disc}}) {
    for (const Integer& d : signed_squarefree_divisors(c)) {
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        GTRow row;
        row.polynomial = label;
        row.d = d;
        Rational v(d);
        for (std::size_t i = 0; i < k; ++i) {
          if (mask & (1u << i)) {
            row.subset.push_back(static_cast<int>(i));
            v *= values[i];
          }
        }
        row.value = v;
        row.square = algebra::is_perfect_square(v).has_value();
        row.counted = d == 1 || d == -1;
        if (row.counted && row.square) {
          r.pass = false;
          const std::string name = divisor_name(r, row);
          if (std::find(r.witnesses.begin(), r.witnesses.end(), name) == r.witnesses.end()) {
            r.witnesses.push_back(name);
          }
        }
        r.rows.push_back(std::move(row));
      }
    }
  }
  return r;
}

std::string divisor_name(const GTReport& r, const GTRow& row) {
  std::string s = row.d == 1 ? "" : row.d == -1 ? "-" : algebra::to_string(row.d) + "*";
  bool first = true;
  for (int i : row.subset) {
    if (!first) s += "*";
    s += "(" + r.factors[static_cast<std::size_t>(i)].str() + ")";
    first = false;
  }
  return s;
}

}  // namespace equiareal::heights
