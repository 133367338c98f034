#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "equiareal/algebra/rational.hpp"

namespace equiareal::algebra {

/// Sparse multivariate polynomial over Q in an explicitly declared variable
/// tuple. Terms are kept in lexicographic order of the exponent vectors
/// (first declared variable most significant); zero coefficients are never
/// stored. Both operands of a binary operation must share the variable tuple.
class MPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Variables = std::shared_ptr<const std::vector<std::string>>;

  explicit MPoly(Variables vars);
  MPoly(Variables vars, const Rational& c);

  static Variables declare(std::vector<std::string> names);
  static MPoly var(const Variables& vars, size_t index);
  static MPoly var(const Variables& vars, const std::string& name);

  const Variables& variables() const { return vars_; }
  const std::map<Exponents, Rational, std::greater<>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;

  Rational eval(std::span<const Rational> values) const;
  std::string str() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  void check_compatible(const MPoly& o) const;
  void add_term(const Exponents& e, const Rational& c);
  Variables vars_;
  std::map<Exponents, Rational, std::greater<>> terms_;
};

MPoly pow(const MPoly& base, int exponent);

}  // namespace equiareal::algebra
