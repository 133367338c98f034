#include <vector>

#include "doctest.h"
#include "equiareal/algebra/factor.hpp"
#include "equiareal/algebra/imatrix.hpp"
#include "equiareal/algebra/mpoly.hpp"
#include "equiareal/algebra/ratfunc.hpp"
#include "equiareal/algebra/real.hpp"
#include "equiareal/errors.hpp"
#include "oracles.hpp"

using namespace equiareal::algebra;

namespace {

Rational random_rational(long bound = 50) {
  long den = 0;
  while (den == 0) den = oracle::uniform(-bound, bound);
  return Rational(Integer(oracle::uniform(-bound, bound)), Integer(den));
}

UPoly random_upoly(int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(9));
  return UPoly(c);
}

const UPoly kH1{-2, 0, -3, 0, 1};
const UPoly kH2{2, 0, 3, 0, 2};

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    Rational q(Integer(6), Integer(-4));
    CHECK(q.numerator() == -3);
    CHECK(q.denominator() == 2);
    CHECK(Rational(Integer(0), Integer(-7)).denominator() == 1);
    CHECK(Rational::parse("-12/8") == Rational(Integer(-3), Integer(2)));
    CHECK(Rational::parse("3/2").str() == "3/2");
    CHECK(Rational::parse("42").str() == "42");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS(Rational(1) / Rational(0));
  }

  TEST_CASE("is_perfect_square examples") {
    // 11096 from an exact bisection square root.
    Integer root = oracle::bisect_isqrt(Integer(123121216));
    REQUIRE(root * root == 123121216);
    CHECK(root == 11096);
    CHECK(is_perfect_square(Rational(123121216)) == Rational(11096));
    CHECK(is_perfect_square(Rational(Integer(4), Integer(9))) == Rational(Integer(2), Integer(3)));
    CHECK_FALSE(is_perfect_square(Rational(2)).has_value());
    CHECK_FALSE(is_perfect_square(Rational(-4)).has_value());
    CHECK(is_perfect_square(Rational(0)) == Rational(0));
  }

  TEST_CASE("is_perfect_square(q^2) == q on random q >= 0") {
    for (int i = 0; i < 100; ++i) {
      Rational q = random_rational(100000).abs();
      CHECK(is_perfect_square(q * q) == q);
    }
  }

  TEST_CASE("field axioms on random samples") {
    for (int i = 0; i < 100; ++i) {
      Rational a = random_rational(), b = random_rational(), c = random_rational();
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
  }
}

TEST_SUITE("factorization") {
  TEST_CASE("factor_integer examples") {
    auto f12 = factor_integer(Integer(12));
    CHECK(f12.sign == 1);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<Integer, unsigned>(2, 2));
    CHECK(f12.factors[1] == std::pair<Integer, unsigned>(3, 1));
    CHECK(factor_integer(Integer(1)).factors.empty());
    CHECK(factor_integer(Integer(-1)).sign == -1);
    CHECK_THROWS(factor_integer(Integer(0)));

    const Integer a4("2624072905728");
    auto expected = oracle::trial_factor(a4);
    auto f = factor_integer(a4);
    CHECK(f.factors == expected);
    CHECK(f.product() == a4);
    std::vector<std::pair<Integer, unsigned>> frozen{{2, 10}, {3, 2},  {23, 1}, {31, 1},
                                                     {37, 1}, {43, 1}, {251, 1}};
    CHECK(f.factors == frozen);
  }

  TEST_CASE("Pollard-Brent splits products of large primes") {
    Integer p("1000000007"), q("998244353"), r("1000000000000000009");
    CHECK(is_probable_prime(p));
    CHECK(is_probable_prime(r));
    CHECK_FALSE(is_probable_prime(p * q));
    CHECK_FALSE(is_probable_prime(Integer(561)));  // Carmichael
    auto f = factor_integer(-(p * q * q));
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == q);
    CHECK(f.factors[0].second == 2);
    CHECK(f.factors[1].first == p);
    CHECK(factor_integer(p * r).product() == p * r);
  }

  TEST_CASE("factorization effort limit is reported") {
    FactorOptions weak;
    weak.trial_bound = 100;
    weak.rho_iterations = 16;
    weak.rho_attempts = 1;
    Integer p("1000000000000000009"), q("1000000000000000003");
    CHECK_THROWS_AS(factor_integer(p * q, weak), equiareal::FactorizationError);
  }

  TEST_CASE("factor_with_hints uses hint primes first") {
    Integer p("1000000000000000009"), q("1000000000000000003");
    FactorOptions weak;
    weak.rho_iterations = 16;
    weak.rho_attempts = 1;
    std::vector<Integer> hints{p * 6, q};
    auto f = factor_with_hints(p * p * q * 12, hints, weak);
    CHECK(f.product() == p * p * q * 12);
    CHECK(f.factors.size() == 4);
  }

  TEST_CASE("factor_integer round-trips on random inputs") {
    for (int i = 0; i < 50; ++i) {
      Integer n = Integer(oracle::uniform(1, 1L << 40)) * oracle::uniform(1, 1L << 20);
      auto f = factor_integer(n);
      CHECK(f.product() == n);
      for (const auto& [p, e] : f.factors) CHECK(is_probable_prime(p));
    }
  }

  TEST_CASE("factor_quartic examples") {
    auto f1 = factor_quartic(UPoly{2, 0, 3, 0, 1});  // t^4 + 3t^2 + 2
    CHECK(f1.content == 1);
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0] == UPoly{1, 0, 1});
    CHECK(f1.factors[1] == UPoly{2, 0, 1});

    auto f2 = factor_quartic(UPoly{-1, 0, 0, 0, 1});  // t^4 - 1
    REQUIRE(f2.factors.size() == 3);
    CHECK(f2.product() == UPoly({-1, 0, 0, 0, 1}));
    CHECK(f2.factors[2] == UPoly{1, 0, 1});

    auto f3 = factor_quartic(kH1);
    CHECK(f3.factors.size() == 1);
    CHECK(f3.factors[0] == kH1);

    auto f4 = factor_quartic(UPoly{-12, 0, 0, 0, 0, 0} + UPoly{0, 0, 0, 0, -6});
    CHECK(f4.content == -6);
    CHECK(f4.product() == UPoly({-12, 0, 0, 0, -6}));
  }

  TEST_CASE("h1 admits no integer quadratic split (exhaustive oracle)") {
    // (a t^2 + b t + c)(d t^2 + e t + g) with a d = 1, c g = -2; b, e bounded
    // by the coefficient size. Brute force over the whole box.
    int hits = 0;
    for (int a : {1, -1})
      for (int c : {1, -1, 2, -2})
        for (int b = -10; b <= 10; ++b)
          for (int e = -10; e <= 10; ++e) {
            int d = a, g = -2 / c;
            UPoly prod = UPoly{c, b, a} * UPoly{g, e, d};
            if (prod == kH1) ++hits;
          }
    CHECK(hits == 0);
    CHECK(factor_quartic(kH1).factors.size() == 1);
  }

  TEST_CASE("factor_quartic round-trips products of random small factors") {
    for (int i = 0; i < 60; ++i) {
      UPoly f{oracle::uniform(-6, 6), oracle::uniform(-6, 6), oracle::uniform(1, 4)};
      UPoly g{oracle::uniform(-6, 6), oracle::uniform(-6, 6), oracle::uniform(1, 4)};
      UPoly fg = f * g * UPoly(oracle::uniform(1, 3));
      if (fg.coeff(0).is_zero()) continue;
      auto out = factor_quartic(fg);
      CHECK(out.product() == fg);
      for (const auto& h : out.factors) {
        CHECK(h.leading().sign() > 0);
        if (h.degree() >= 2) CHECK(factor_quartic(h).factors.size() == 1);
      }
    }
  }
}

TEST_SUITE("polynomials") {
  TEST_CASE("poly_gcd examples") {
    CHECK(gcd(UPoly{-1, 0, 1}, UPoly{-1, 1}) == UPoly{-1, 1});
    CHECK(gcd(UPoly{0, 1}, UPoly{1, 1}) == UPoly(1));
    // Division oracle: the gcd must divide both inputs and equal monic(h2).
    UPoly g = gcd(kH1 * kH2, kH2);
    CHECK(divmod(kH1 * kH2, g).second.is_zero());
    CHECK(divmod(kH2, g).second.is_zero());
    CHECK(g == kH2.monic());
  }

  TEST_CASE("gcd of random products recovers the common factor") {
    for (int i = 0; i < 30; ++i) {
      UPoly c = random_upoly(2), a = random_upoly(3), b = random_upoly(3);
      if (c.degree() < 1) continue;
      UPoly g = gcd(a * c, b * c);
      CHECK(divmod(g, c.monic()).second.is_zero());
      CHECK(divmod(a * c, g).second.is_zero());
      CHECK(divmod(b * c, g).second.is_zero());
    }
  }

  TEST_CASE("divmod and poly_sqrt") {
    UPoly a = random_upoly(7), b = random_upoly(3);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(poly_sqrt(UPoly{4} * pow(kH1, 2)) == UPoly{2} * kH1);
    CHECK_FALSE(poly_sqrt(kH1).has_value());
    CHECK(poly_sqrt(UPoly{1, 2, 1}) == UPoly{1, 1});
  }

  TEST_CASE("RatFunc canonical form and field axioms") {
    RatFunc t = RatFunc::t();
    RatFunc f(UPoly{-1, 0, 1}, UPoly{-2, 2});  // (t^2-1)/(2t-2) = (t+1)/2
    CHECK(f.den() == UPoly(1));
    CHECK(f.num() == UPoly{1, 1} * UPoly(Rational(Integer(1), Integer(2))));
    CHECK(f.eval(3) == Rational(2));
    RatFunc g = RatFunc(1) / t;
    CHECK_THROWS_AS(g.eval(0), equiareal::PoleError);
    for (int i = 0; i < 20; ++i) {
      RatFunc a(random_upoly(2), random_upoly(2) + UPoly::monomial(1, 3));
      RatFunc b(random_upoly(3), random_upoly(1) + UPoly::monomial(1, 2));
      RatFunc c(random_upoly(1), random_upoly(2) + UPoly::monomial(1, 3));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
      Rational t0 = random_rational(7);
      try {
        CHECK((a * b).eval(t0) == a.eval(t0) * b.eval(t0));
      } catch (const equiareal::PoleError&) {
      }
    }
  }
}

TEST_SUITE("mpoly") {
  TEST_CASE("ring axioms and evaluation homomorphism on six variables") {
    auto vars = MPoly::declare({"x1", "y1", "p", "q", "u", "v"});
    auto random_mpoly = [&] {
      MPoly f(vars);
      for (int k = 0; k < 5; ++k) {
        MPoly term(vars, Rational(oracle::uniform(-5, 5)));
        int degree = static_cast<int>(oracle::uniform(0, 4));
        for (int d = 0; d < degree; ++d) term *= MPoly::var(vars, static_cast<size_t>(oracle::uniform(0, 5)));
        f += term;
      }
      return f;
    };
    for (int i = 0; i < 25; ++i) {
      MPoly f = random_mpoly(), g = random_mpoly(), h = random_mpoly();
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      std::vector<Rational> at;
      for (int k = 0; k < 6; ++k) at.push_back(random_rational(9));
      CHECK((f * g).eval(at) == f.eval(at) * g.eval(at));
      CHECK((f - f).is_zero());
    }
  }

  TEST_CASE("string form follows the declared lex order") {
    auto vars = MPoly::declare({"a", "b"});
    MPoly a = MPoly::var(vars, "a"), b = MPoly::var(vars, "b");
    CHECK(pow(a - b, 2).str() == "a^2 - 2*a*b + b^2");
    CHECK_THROWS(MPoly::var(vars, "c"));
    auto other = MPoly::declare({"b", "a"});
    CHECK_THROWS(a + MPoly::var(other, "a"));
  }
}

TEST_SUITE("imatrix") {
  TEST_CASE("det examples") {
    CHECK(det(IMatrix::identity(5)) == 1);
    IMatrix relations{{0, 0, 0, 0, -1},
                      {-2, -2, 1, 1, -1},
                      {0, 0, -1, -1, 0},
                      {-2, -2, 0, 1, -1},
                      {0, -2, -1, 0, -1}};
    IMatrix starred{{0, 0, 0, 0, -1},
                    {-1, -1, 1, 1, -1},
                    {0, 0, -1, -1, 0},
                    {-1, -1, 0, 1, -1},
                    {0, -1, -1, 0, -1}};
    auto rows = [](const IMatrix& m) {
      std::vector<std::vector<Integer>> r;
      for (size_t i = 0; i < m.size(); ++i) r.push_back(m.row(i));
      return r;
    };
    CHECK(oracle::cofactor_det(rows(relations)) == 4);
    CHECK(det(relations) == 4);
    CHECK(oracle::cofactor_det(rows(starred)) == 1);
    CHECK(det(starred) == 1);
  }

  TEST_CASE("Bareiss agrees with cofactor expansion on random small matrices") {
    for (int s = 0; s < 100; ++s) {
      size_t n = static_cast<size_t>(oracle::uniform(1, 4));
      IMatrix m(n);
      std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) rows[i][j] = m(i, j) = oracle::uniform(-5, 5);
      CHECK(det(m) == oracle::cofactor_det(rows));
    }
  }
}

TEST_SUITE("real") {
  TEST_CASE("precision bookkeeping") {
    Real a(Rational(Integer(1), Integer(3)), 128), b(1, 256);
    CHECK((a + b).precision() == 256);
    CHECK_THROWS(Real(32));
    Real l = log(Real(Integer(8), 192)) / log(Real(Integer(2), 192));
    CHECK(abs(l - Real(3, 192)) < exp2(-180, 192));
    CHECK(Real(Rational(Integer(7), Integer(2)), 128).floor() == 3);
    CHECK(Real(Rational(Integer(-7), Integer(2)), 128).floor() == -4);
  }
}
