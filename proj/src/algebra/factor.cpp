#include "equiareal/algebra/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "equiareal/errors.hpp"

namespace equiareal::algebra {

namespace {

const std::vector<unsigned long>& small_primes(unsigned long bound) {
  static std::vector<unsigned long> primes;
  static unsigned long sieved = 0;
  if (sieved < bound) {
    std::vector<bool> composite(bound + 1, false);
    primes.clear();
    for (unsigned long i = 2; i <= bound; ++i) {
      if (composite[i]) continue;
      primes.push_back(i);
      for (unsigned long j = i * i; j <= bound; j += i) composite[j] = true;
    }
    sieved = bound;
  }
  return primes;
}

// Thread-safe wrapper around the sieve cache.
std::vector<unsigned long> primes_up_to(unsigned long bound) {
  static std::mutex mu;
  std::lock_guard lock(mu);
  const auto& all = small_primes(bound);
  auto end = std::upper_bound(all.begin(), all.end(), bound);
  return {all.begin(), end};
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Returns a nontrivial factor of composite odd n, or 0 after exhausting effort.
Integer pollard_brent(const Integer& n, const FactorOptions& opt, std::mt19937_64& rng) {
  constexpr std::uint64_t kBatch = 128;
  for (unsigned attempt = 0; attempt < opt.rho_attempts; ++attempt) {
    Integer c = Integer(static_cast<unsigned long>(rng() % 1'000'000'007ULL)) % n;
    if (c == 0) c = 1;
    Integer y = Integer(static_cast<unsigned long>(rng() % 1'000'000'007ULL)) % n;
    Integer x, ys, q = 1, g = 1, tmp;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    std::uint64_t r = 1, iterations = 0;
    while (g == 1 && iterations < opt.rho_iterations) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          tmp = x - y;
          q *= abs(tmp);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += lim;
        iterations += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // Batch overshot; back up one step at a time.
      do {
        step(ys);
        tmp = x - ys;
        g = gcd(abs(tmp), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void split(const Integer& n, const FactorOptions& opt, std::mt19937_64& rng,
           std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n, opt.miller_rabin_rounds, opt.seed)) {
    ++out[n];
    return;
  }
  if (auto r = exact_sqrt(n)) {
    split(*r, opt, rng, out);
    split(*r, opt, rng, out);
    return;
  }
  Integer d = pollard_brent(n, opt, rng);
  if (d == 0) {
    throw FactorizationError("could not split composite cofactor " + to_string(n) +
                             " within the configured Pollard rho effort");
  }
  split(d, opt, rng, out);
  split(n / d, opt, rng, out);
}

Factorization from_map(int sign, const std::map<Integer, unsigned>& m) {
  Factorization f;
  f.sign = sign;
  for (const auto& [p, e] : m) f.factors.emplace_back(p, e);
  return f;
}

}  // namespace

Integer Factorization::product() const {
  Integer r = sign;
  for (const auto& [p, e] : factors) r *= ipow(p, e);
  return r;
}

std::vector<Integer> Factorization::primes() const {
  std::vector<Integer> out;
  for (const auto& [p, e] : factors) out.push_back(p);
  return out;
}

bool is_probable_prime(const Integer& n, unsigned rounds, std::uint64_t seed) {
  if (n < 2) return false;
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  std::mt19937_64 rng(seed ^ mpz_get_ui(n.get_mpz_t()));
  gmp_randclass gen(gmp_randinit_mt);
  gen.seed(static_cast<unsigned long>(rng()));
  const Integer n_minus_3 = n - 3;
  Integer a, x;
  for (unsigned round = 0; round < rounds; ++round) {
    a = gen.get_z_range(n_minus_3) + 2;  // a in [2, n-2]
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factor_integer(const Integer& n, const FactorOptions& opt) {
  if (n == 0) throw std::domain_error("factor_integer(0)");
  Integer m = abs(n);
  std::map<Integer, unsigned> out;
  for (unsigned long p : primes_up_to(opt.trial_bound)) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++out[Integer(p)];
    }
  }
  if (m != 1) {
    std::mt19937_64 rng(opt.seed);
    split(m, opt, rng, out);
  }
  return from_map(sgn(n) < 0 ? -1 : 1, out);
}

Factorization factor_with_hints(const Integer& n, std::span<const Integer> hints,
                                const FactorOptions& opt) {
  if (n == 0) throw std::domain_error("factor_with_hints(0)");
  Integer m = abs(n);
  std::map<Integer, unsigned> out;
  for (const auto& h : hints) {
    if (h == 0) continue;
    for (const auto& [p, e] : factor_integer(h, opt).factors) {
      while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++out[p];
      }
    }
  }
  if (m != 1) {
    for (const auto& [p, e] : factor_integer(m, opt).factors) out[p] += e;
  }
  return from_map(sgn(n) < 0 ? -1 : 1, out);
}

std::vector<Integer> divisors(const Factorization& f) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : f.factors) {
    size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

UPoly PolyFactorization::product() const {
  UPoly r{Rational(content)};
  for (const auto& f : factors) r *= f;
  return r;
}

namespace {

std::vector<Integer> signed_divisors(const Integer& n, const FactorOptions& opt) {
  std::vector<Integer> out;
  for (const auto& d : divisors(factor_integer(n, opt))) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

UPoly from_ints(std::initializer_list<Integer> c) {
  std::vector<Rational> v;
  for (const auto& x : c) v.emplace_back(x);
  return UPoly(std::move(v));
}

// Finds a rational root p/q of a primitive integer polynomial with a nonzero
// constant term, returning the primitive linear factor q*t - p.
std::optional<UPoly> linear_factor(const UPoly& f, const FactorOptions& opt) {
  Integer a0 = f.coeff(0).numerator();
  Integer an = f.leading().numerator();
  if (a0 == 0) return UPoly::t();
  auto nums = signed_divisors(a0, opt);
  auto dens = divisors(factor_integer(an, opt));
  for (const auto& q : dens) {
    for (const auto& p : nums) {
      if (gcd(p, q) != 1) continue;
      if (f.eval(Rational(p, q)).is_zero()) return from_ints({-p, q});
    }
  }
  return std::nullopt;
}

// (a t^2 + b t + c)(d t^2 + e t + g) == f, searched over divisor pairs.
std::optional<std::pair<UPoly, UPoly>> quadratic_split(const UPoly& f, const FactorOptions& opt) {
  const Integer c4 = f.coeff(4).numerator(), c3 = f.coeff(3).numerator(),
                c2 = f.coeff(2).numerator(), c1 = f.coeff(1).numerator(),
                c0 = f.coeff(0).numerator();
  auto leads = divisors(factor_integer(c4, opt));
  auto consts = signed_divisors(c0, opt);
  for (const auto& a : leads) {
    Integer d = c4 / a;
    for (const auto& c : consts) {
      Integer g = c0 / c;
      // t^3: a e + b d = c3 ; t^1: b g + c e = c1
      Integer det = d * c - a * g;  // | d a ; g c |
      std::vector<std::pair<Integer, Integer>> candidates;
      if (det != 0) {
        Integer bn = c3 * c - a * c1, en = d * c1 - g * c3;
        if (mpz_divisible_p(bn.get_mpz_t(), det.get_mpz_t()) &&
            mpz_divisible_p(en.get_mpz_t(), det.get_mpz_t())) {
          candidates.emplace_back(bn / det, en / det);
        }
      } else {
        // Degenerate system: use t^2 (a g + b e + c d = c2) with t^3.
        // e = (c3 - b d)/a  =>  b (c3 - b d) = a (c2 - a g - c d)
        // d b^2 - c3 b + a (c2 - a g - c d) = 0
        Integer A = d, B = -c3, C = a * (c2 - a * g - c * d);
        Integer disc = B * B - 4 * A * C;
        if (auto r = exact_sqrt(disc)) {
          for (const Integer& num : {Integer(-B + *r), Integer(-B - *r)}) {
            if (mpz_divisible_p(num.get_mpz_t(), Integer(2 * A).get_mpz_t())) {
              Integer b = num / (2 * A);
              Integer en = c3 - b * d;
              if (mpz_divisible_p(en.get_mpz_t(), a.get_mpz_t())) candidates.emplace_back(b, en / a);
            }
          }
        }
      }
      for (const auto& [b, e] : candidates) {
        UPoly p = from_ints({c, b, a}), q = from_ints({g, e, d});
        if (p * q == f) return std::make_pair(p, q);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PolyFactorization factor_quartic(const UPoly& f, const FactorOptions& opt) {
  if (f.is_zero()) throw std::domain_error("factor_quartic of the zero polynomial");
  if (f.degree() > 4) throw std::domain_error("factor_quartic requires degree <= 4");
  if (!f.has_integer_coeffs()) throw std::domain_error("factor_quartic requires integer coefficients");
  PolyFactorization out;
  Rational content = f.content();
  out.content = content.numerator();
  UPoly rest = f * UPoly(content.inverse());
  while (rest.degree() >= 1) {
    auto lin = linear_factor(rest, opt);
    if (!lin) break;
    out.factors.push_back(*lin);
    rest = exact_div(rest, *lin);
  }
  if (rest.degree() == 4) {
    if (auto qs = quadratic_split(rest, opt)) {
      out.factors.push_back(qs->first);
      out.factors.push_back(qs->second);
      rest = UPoly(1);
    }
  }
  if (rest.degree() >= 1) out.factors.push_back(rest);
  // rest is primitive with positive lead, so any leftover constant is 1.
  std::sort(out.factors.begin(), out.factors.end(), [](const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.str() < b.str();
  });
  return out;
}

}  // namespace equiareal::algebra
