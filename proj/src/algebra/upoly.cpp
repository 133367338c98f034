#include "equiareal/algebra/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace equiareal::algebra {

namespace {

using ZPoly = std::vector<Integer>;  // low-to-high, trimmed

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_zpoly(const UPoly& p) {
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) {
    Integer d = c.denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (lcm / c.denominator()));
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b (deg a >= deg b), in place.
void pseudo_rem(ZPoly& a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    Integer la = a.back();
    size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    make_primitive(a);
  }
}

}  // namespace

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UPoly UPoly::t() { return monomial(1, 1); }

UPoly UPoly::monomial(const Rational& c, unsigned degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UPoly::coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational UPoly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational UPoly::eval(const Rational& t0) const {
  if (coeffs_.empty()) return {};
  Rational acc = coeffs_.back();
  for (size_t i = coeffs_.size() - 1; i-- > 0;) {
    acc = acc * t0 + coeffs_[i];
  }
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = leading().inverse();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= inv;
  return UPoly(std::move(v));
}

Rational UPoly::content() const {
  if (is_zero()) return {};
  Integer g = 0, lcm = 1;
  for (const auto& c : coeffs_) {
    Integer n = c.numerator(), d = c.denominator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rational c(g, lcm);
  return leading().sign() < 0 ? -c : c;
}

bool UPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  // Accumulate in mpq directly; Rational temporaries dominate otherwise.
  std::vector<mpq_class> acc(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) acc[i + j] += coeffs_[i].raw() * o.coeffs_[j].raw();
  }
  coeffs_.clear();
  coeffs_.reserve(acc.size());
  for (auto& a : acc) coeffs_.emplace_back(a.get_num(), a.get_den());
  trim();
  return *this;
}

UPoly UPoly::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return UPoly(std::move(v));
}

UPoly pow(const UPoly& base, int exponent) {
  if (exponent < 0) throw std::domain_error("negative polynomial power");
  UPoly result(1), b = base;
  while (exponent) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  const Rational inv = b.leading().inverse();
  std::vector<Rational> q(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    Rational f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly x = to_zpoly(a), y = to_zpoly(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return UPoly(1);
    pseudo_rem(x, y);
    std::swap(x, y);
  }
  std::vector<Rational> v;
  v.reserve(x.size());
  for (const auto& c : x) v.emplace_back(c);
  return UPoly(std::move(v)).monic();
}

std::optional<UPoly> poly_sqrt(const UPoly& p) {
  if (p.is_zero()) return UPoly();
  if (p.degree() % 2 != 0) return std::nullopt;
  auto lead = is_perfect_square(p.leading());
  if (!lead) return std::nullopt;
  // Determine the root from the top coefficient down, then verify.
  const int n = p.degree() / 2;
  std::vector<Rational> r(n + 1);
  r[n] = *lead;
  const Rational inv2lead = (Rational(2) * *lead).inverse();
  for (int k = n - 1; k >= 0; --k) {
    // coefficient of t^(n+k) in r^2 must match p
    Rational s;
    for (int i = k + 1; i <= n; ++i) {
      int j = n + k - i;
      if (j > k && j <= n) s += r[i] * r[j];
    }
    r[k] = (p.coeff(n + k) - s) * inv2lead;
  }
  UPoly root(std::move(r));
  if (root * root != p) return std::nullopt;
  return root;
}

std::string to_string(const UPoly& p) { return p.str(); }

}  // namespace equiareal::algebra
