#include "equiareal/algebra/real.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace equiareal::algebra {

namespace {
unsigned checked(unsigned bits) {
  if (bits < kMinPrecisionBits) throw std::invalid_argument("Real precision below 64 bits");
  return bits;
}
}  // namespace

Real::Real(unsigned precision) {
  mpfr_init2(v_, checked(precision));
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, unsigned precision) : Real(precision) { mpfr_set_si(v_, value, MPFR_RNDN); }

Real::Real(const Integer& value, unsigned precision) : Real(precision) {
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& value, unsigned precision) : Real(precision) {
  mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_precision(unsigned bits) const {
  Real r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

void Real::raise_precision(unsigned bits) {
  if (bits > precision()) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

std::string Real::str(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return buf.data();
}

std::string Real::fixed(int decimals) const {
  if (!is_finite()) return str();
  int size = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, v_);
  std::vector<char> buf(static_cast<size_t>(size) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, v_);
  return buf.data();
}

Integer Real::floor() const {
  if (!is_finite()) throw std::domain_error("floor of a non-finite Real");
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}

Real& Real::operator+=(const Real& o) {
  raise_precision(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  raise_precision(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  raise_precision(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  raise_precision(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real exp2(long e, unsigned precision) {
  Real r(1, precision);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

}  // namespace equiareal::algebra
