#include "equiareal/heights/height.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <set>
#include <stdexcept>

#include "equiareal/elliptic/family.hpp"

namespace equiareal::heights {

namespace {

using algebra::ipow;

constexpr int kInfiniteValuation = std::numeric_limits<int>::max();
constexpr int kMaxTorsionOrder = 12;
constexpr int kMaxComponentSearch = 24;

int valuation(Integer n, const Integer& p) {
  if (n == 0) return kInfiniteValuation;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int valuation(const Rational& x, const Integer& p) {
  if (x.is_zero()) return kInfiniteValuation;
  return valuation(x.numerator(), p) - valuation(x.denominator(), p);
}

Integer abs_int(const Integer& n) { return n < 0 ? Integer(-n) : n; }

unsigned bit_length(const Integer& n) {
  return n == 0 ? 1 : static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

Real real(const Rational& q, unsigned prec) { return Real(q, prec); }

Integer discriminant_integer(const Curve<Rational>& c) {
  const Rational d = c.discriminant();
  if (!d.is_integer()) throw std::logic_error("integral model has a non-integral discriminant");
  return d.numerator();
}

// Division polynomial values psi_0 .. psi_n at an affine point.
std::vector<Rational> division_values(const Curve<Rational>& c, const Point<Rational>& p, int n) {
  const Rational &x = p.x, &y = p.y, &a = c.a4(), &b = c.a6();
  const Rational x2 = x * x, x3 = x2 * x, x4 = x2 * x2, a2 = a * a;
  std::vector<Rational> psi{Rational(0), Rational(1), Rational(2) * y,
                            Rational(3) * x4 + Rational(6) * a * x2 + Rational(12) * b * x - a2,
                            Rational(4) * y *
                                (x4 * x2 + Rational(5) * a * x4 + Rational(20) * b * x3 - Rational(5) * a2 * x2 -
                                 Rational(4) * a * b * x - Rational(8) * b * b - a2 * a)};
  const Rational two_y = Rational(2) * y;
  for (int m = 5; m <= n; ++m) {
    const int k = m / 2;
    if (m % 2 == 1) {
      psi.push_back(psi[k + 2] * pow(psi[k], 3) - psi[k - 1] * pow(psi[k + 1], 3));
    } else {
      psi.push_back(psi[k] * (psi[k + 2] * pow(psi[k - 1], 2) - psi[k - 2] * pow(psi[k + 1], 2)) / two_y);
    }
  }
  psi.resize(static_cast<std::size_t>(n) + 1);
  return psi;
}

bool nonsingular_at(const Curve<Rational>& c, const Point<Rational>& q, const Integer& p) {
  if (q.infinity || valuation(q.x, p) < 0) return true;
  return valuation(Rational(3) * q.x * q.x + c.a4(), p) <= 0 || valuation(Rational(2) * q.y, p) <= 0;
}

}  // namespace

std::string to_string(Normalization n) { return n == Normalization::Halved ? "halved" : "unhalved"; }

Normalization parse_normalization(const std::string& name) {
  if (name == "unhalved") return Normalization::Unhalved;
  if (name == "halved") return Normalization::Halved;
  throw InputError("unknown normalization '" + name + "' (expected unhalved or halved)");
}

HeightContext::HeightContext(const Curve<Rational>& curve, std::span<const Integer> hints, HeightOptions options)
    : curve_(curve), model_(curve), scale_(1), options_(options) {
  if (options_.precision < kMinHeightPrecisionBits) {
    throw PrecisionError("height precision must be at least " + std::to_string(kMinHeightPrecisionBits) + " bits");
  }
  // Clear denominators with u^4, u^6.
  const Integer u = curve.a4().denominator() * curve.a6().denominator();
  Rational a4 = curve.a4() * Rational(ipow(u, 4));
  Rational a6 = curve.a6() * Rational(ipow(u, 6));
  Rational scale(u);

  std::vector<Integer> all_hints(hints.begin(), hints.end());
  all_hints.push_back(u);
  all_hints.push_back(2);
  all_hints.push_back(3);
  Factorization f = algebra::factor_with_hints(discriminant_integer(Curve<Rational>(a4, a6)), all_hints);

  // Remove p^4, p^6 wherever possible; only bad primes can qualify.
  for (const Integer& p : f.primes()) {
    const Integer p4 = ipow(p, 4), p6 = ipow(p, 6);
    while ((a4.numerator() % p4 == 0) && (a6.numerator() % p6 == 0)) {
      a4 /= Rational(p4);
      a6 /= Rational(p6);
      scale /= Rational(p);
    }
  }
  model_ = Curve<Rational>(a4, a6);
  scale_ = scale;
  const std::vector<Integer> primes = f.primes();
  disc_ = algebra::factor_with_hints(discriminant_integer(model_), primes);

  // Integer shift below the smallest real root of x^3 + a4 x + a6.
  const unsigned prec = options_.precision;
  const Real A4 = real(a4, prec), A6 = real(a6, prec);
  auto f3 = [&](const Real& x) { return x * x * x + A4 * x + A6; };
  const Integer bound = 1 + std::max(abs_int(a4.numerator()), abs_int(a6.numerator()));
  Real lo = Real(Integer(-bound), prec), hi = Real(bound, prec);
  if (a4.sign() < 0) {
    const Real x0 = -sqrt(-A4 / Real(3, prec));
    if (f3(x0) >= Real(0, prec)) {
      hi = x0;
    } else {
      lo = -x0;
    }
  }
  const Real quarter = Real(Rational(Integer(1), Integer(4)), prec);
  while (hi - lo > quarter) {
    Real mid = (lo + hi) / Real(2, prec);
    if (f3(mid) < Real(0, prec)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  shift_ = lo.floor() - 1;
}

Point<Rational> HeightContext::to_model(const Point<Rational>& p) const {
  if (p.infinity) return p;
  const Rational s2 = scale_ * scale_;
  return Point<Rational>::affine(p.x * s2, p.y * s2 * scale_);
}

bool HeightContext::is_torsion(const Point<Rational>& p) const {
  if (p.infinity) return true;
  Point<Rational> q = p;
  for (int n = 1; n <= kMaxTorsionOrder; ++n) {
    if (q.infinity) return true;
    q = curve_.add(q, p);
  }
  return q.infinity;
}

Real HeightContext::archimedean(const Rational& x) const {
  // Tate's series on the model shifted by x -> x + shift_, where every real
  // point has x' >= 1.
  const Rational c(shift_);
  const Rational a2 = Rational(3) * c;
  const Rational a4 = Rational(3) * c * c + model_.a4();
  const Rational a6 = c * c * c + model_.a4() * c + model_.a6();
  const Rational b2 = Rational(4) * a2, b4 = Rational(2) * a4, b6 = Rational(4) * a6;
  const Rational b8 = Rational(4) * a2 * a6 - a4 * a4;
  unsigned bits = 0;
  for (const Rational* b : {&b2, &b4, &b6, &b8}) bits = std::max(bits, bit_length(b->numerator()));
  const unsigned prec = options_.precision + 2 * bits + 32;
  const Real B2 = real(b2, prec), B4 = real(b4, prec), B6 = real(b6, prec), B8 = real(b8, prec);
  const Real one(1, prec), two(2, prec), four(4, prec);

  const Real xs = real(x - c, prec);
  Real lambda = log(xs) / two;
  Real t = one / xs;
  Real weight = Real(Rational(Integer(1), Integer(8)), prec);
  const unsigned iterations = options_.precision / 2 + 20;
  for (unsigned n = 0; n < iterations; ++n) {
    const Real t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
    const Real z = one - B4 * t2 - two * B6 * t3 - B8 * t4;
    const Real w = four * t + B2 * t2 + two * B4 * t3 + B6 * t4;
    lambda += weight * log(z);
    weight = weight / four;
    t = w / z;
  }
  return lambda;
}

Real HeightContext::non_archimedean(const Point<Rational>& p) const {
  const unsigned prec = options_.precision;
  const Integer& den = p.x.denominator();
  auto d = algebra::exact_sqrt(den);
  if (!d) throw std::logic_error("x-denominator is not a square on the integral model");
  Real total = log(Real(*d, prec));

  const Integer a = p.x.numerator();
  const Integer b = (p.y * Rational(ipow(*d, 3))).numerator();
  const Integer g = ::gcd(3 * a * a + model_.a4().numerator() * ipow(*d, 4), 2 * b);
  for (const auto& [prime, e] : disc_.factors) {
    (void)e;
    if (g % prime != 0 || nonsingular_at(model_, p, prime)) continue;
    Point<Rational> q = p;
    int m = 1;
    do {
      q = model_.add(q, p);
      ++m;
    } while (!nonsingular_at(model_, q, prime) && m < kMaxComponentSearch);
    if (!nonsingular_at(model_, q, prime)) {
      throw std::runtime_error("no multiple with nonsingular reduction at " + algebra::to_string(prime));
    }
    const auto psi = division_values(model_, p, m);
    const Rational half_pole(std::max(0, -valuation(q.x, prime)), 2);
    const Rational lam = (half_pole - Rational(valuation(psi[static_cast<std::size_t>(m)], prime))) /
                         Rational(static_cast<long>(m) * m);
    total += Real(lam, prec) * log(Real(prime, prec));
  }
  return total;
}

Real HeightContext::canonical_height(const Point<Rational>& p) const {
  if (!curve_.contains(p)) throw std::invalid_argument("point is not on the curve");
  const unsigned prec = options_.precision;
  if (is_torsion(p)) return Real(0, prec);
  const Point<Rational> q = to_model(p);
  Real h = archimedean(q.x).with_precision(prec) + non_archimedean(q);
  if (options_.normalization == Normalization::Unhalved) h = h * Real(2, prec);
  return h.with_precision(prec);
}

Real HeightContext::error_bound(const Real& h) const {
  const unsigned prec = options_.precision;
  return algebra::exp2(-static_cast<long>(prec) + 32, prec) * (Real(1, prec) + abs(h));
}

Real naive_doubling_estimate(const Curve<Rational>& c, const Point<Rational>& p, int n, unsigned precision) {
  if (n < 0 || n > 5) throw InputError("doubling estimate supports 0 <= n <= 5");
  if (!c.contains(p)) throw std::invalid_argument("point is not on the curve");
  Point<Rational> q = p;
  for (int i = 0; i < n; ++i) q = c.twice(q);
  if (q.infinity) return Real(0, precision);
  const Integer num = abs_int(q.x.numerator());
  const Integer& den = q.x.denominator();
  const Integer big = std::max(num, den);
  return log(Real(big, precision)) / Real(ipow(Integer(4), static_cast<unsigned>(n)), precision);
}

namespace {

Real determinant(std::vector<std::vector<Real>> m, unsigned prec) {
  const std::size_t n = m.size();
  Real det(1, prec);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(m[r][col]) > abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col].is_zero()) return Real(0, prec);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Real f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] = m[r][k] - f * m[col][k];
    }
  }
  return det;
}

Real row_norm(const std::vector<Real>& row, unsigned prec) {
  Real s(0, prec);
  for (const auto& v : row) s += v * v;
  return sqrt(s);
}

}  // namespace

HeightReport regulator(const HeightContext& ctx, std::span<const Point<Rational>> points) {
  const unsigned prec = ctx.precision();
  const std::size_t n = points.size();
  const auto& c = ctx.curve();
  for (const auto& p : points) {
    if (!c.contains(p)) throw std::invalid_argument("point is not on the curve");
  }
  HeightReport r;
  r.regulator = Real(0, prec);
  r.error_bound = Real(0, prec);

  for (std::size_t i = 0; i < n && !r.exact_dependence; ++i) {
    if (ctx.is_torsion(points[i])) {
      r.exact_dependence = true;
      r.note = "point " + std::to_string(i + 1) + " is torsion";
    }
    for (std::size_t j = i + 1; j < n && !r.exact_dependence; ++j) {
      if (ctx.is_torsion(c.add(points[i], points[j])) || ctx.is_torsion(c.subtract(points[i], points[j]))) {
        r.exact_dependence = true;
        r.note = "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " differ by torsion up to sign";
      }
    }
  }

  // Heights of P_i and P_i + P_j, computed concurrently.
  std::vector<std::future<Real>> single;
  for (std::size_t i = 0; i < n; ++i) {
    single.push_back(std::async(std::launch::async, [&ctx, &points, i] { return ctx.canonical_height(points[i]); }));
  }
  std::vector<std::vector<std::future<Real>>> pair(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pair[i].push_back(std::async(std::launch::async, [&ctx, &c, &points, i, j] {
        return ctx.canonical_height(c.add(points[i], points[j]));
      }));
    }
  }
  for (auto& f : single) r.heights.push_back(f.get());

  r.gram.assign(n, std::vector<Real>(n, Real(0, prec)));
  std::vector<std::vector<Real>> err(n, std::vector<Real>(n, Real(0, prec)));
  const Real two(2, prec);
  for (std::size_t i = 0; i < n; ++i) {
    r.gram[i][i] = r.heights[i];
    err[i][i] = ctx.error_bound(r.heights[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Real hs = pair[i][j - i - 1].get();
      r.gram[i][j] = r.gram[j][i] = (hs - r.heights[i] - r.heights[j]) / two;
      err[i][j] = err[j][i] =
          (ctx.error_bound(hs) + ctx.error_bound(r.heights[i]) + ctx.error_bound(r.heights[j])) / two;
    }
  }

  if (!r.exact_dependence) {
    r.regulator = determinant(r.gram, prec);
    // First-order perturbation bound: sum_i |row error_i| * prod_{j != i} |row_j|.
    for (std::size_t i = 0; i < n; ++i) {
      Real term = row_norm(err[i], prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) term = term * row_norm(r.gram[j], prec);
      }
      r.error_bound += term;
    }
  }
  const Real threshold(Rational(Integer(1), Integer(10000)), prec);
  r.independent = !r.exact_dependence && r.regulator > threshold;
  return r;
}

std::vector<Integer> solution_hints(const octic::SolutionPair<Rational>& s) {
  const auto prim = octic::scale_to_primitive(s);
  std::vector<Integer> out;
  for (const Integer& f : octic::phi_factors(prim.pair.x)) {
    if (f != 0) out.push_back(abs_int(f));
  }
  out.push_back(2);
  out.push_back(prim.scale.numerator());
  out.push_back(prim.scale.denominator());
  return out;
}

std::vector<Integer> family_hints(const Rational& t0) {
  const Integer& b = t0.denominator();
  const Rational b4(ipow(b, 4));
  std::vector<Integer> out;
  for (const auto& h : elliptic::family_h()) {
    const Rational v = h(t0) * b4;
    if (!v.is_zero()) out.push_back(abs_int(v.numerator()));
  }
  out.push_back(2);
  out.push_back(3);
  out.push_back(b);
  return out;
}

}  // namespace equiareal::heights
