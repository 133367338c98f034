#include "equiareal/algebra/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace equiareal::algebra {

MPoly::MPoly(Variables vars) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("MPoly requires a variable tuple");
}

MPoly::MPoly(Variables vars, const Rational& c) : MPoly(std::move(vars)) {
  add_term(Exponents(vars_->size(), 0), c);
}

MPoly::Variables MPoly::declare(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MPoly MPoly::var(const Variables& vars, size_t index) {
  if (index >= vars->size()) throw std::out_of_range("MPoly variable index");
  MPoly p(vars);
  Exponents e(vars->size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MPoly MPoly::var(const Variables& vars, const std::string& name) {
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw std::out_of_range("undeclared MPoly variable " + name);
  return var(vars, static_cast<size_t>(it - vars->begin()));
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

void MPoly::check_compatible(const MPoly& o) const {
  if (vars_ != o.vars_ && *vars_ != *o.vars_) {
    throw std::invalid_argument("MPoly operands use different variable tuples");
  }
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational MPoly::eval(std::span<const Rational> values) const {
  if (values.size() != vars_->size()) throw std::invalid_argument("MPoly::eval arity mismatch");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= pow(values[i], static_cast<int>(e[i]));
    }
    sum += term;
  }
  return sum;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
    bool star = false;
    if (mag != Rational(1) || constant) {
      os << mag;
      star = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (star) os << "*";
      os << (*vars_)[i];
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  check_compatible(o);
  MPoly out(vars_);
  Exponents e(vars_->size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
}

MPoly pow(const MPoly& base, int exponent) {
  if (exponent < 0) throw std::domain_error("negative polynomial power");
  MPoly result(base.variables(), 1), b = base;
  while (exponent) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

}  // namespace equiareal::algebra
