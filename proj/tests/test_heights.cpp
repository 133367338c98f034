#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "equiareal/elliptic/family.hpp"
#include "equiareal/heights/height.hpp"
#include "equiareal/heights/relations.hpp"
#include "oracles.hpp"

using namespace equiareal;
using namespace equiareal::elliptic;
using namespace equiareal::heights;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
// Decimal literal "123.456" as an exact rational.
Real rl(const std::string& s, unsigned prec = 192) {
  const auto dot = s.find('.');
  const std::string frac = s.substr(dot + 1);
  const Integer num(s.substr(0, dot) + frac);
  return Real(Rational(num, algebra::ipow(Integer(10), static_cast<unsigned>(frac.size()))), prec);
}

double rel_err(const Real& got, const Real& want) { return (abs(got - want) / abs(want)).to_double(); }

const HeightContext& e2_ctx() {
  static const auto hints = family_hints(q(2));
  static const HeightContext ctx(e2_data().curve, hints);
  return ctx;
}

const HeightContext& t4_ctx() {
  static const auto hints = solution_hints(octic::sol1(q(4)));
  static const HeightContext ctx(t4_data().curve, hints);
  return ctx;
}

std::vector<std::vector<Integer>> to_rows(const std::array<std::array<long, 5>, 5>& m) {
  std::vector<std::vector<Integer>> out;
  for (const auto& r : m) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

TEST_CASE("height context") {
  const auto& ctx = e2_ctx();
  CHECK(ctx.discriminant_factorization().product() == ctx.integral_model().discriminant().numerator());
  CHECK(ctx.integral_model().a4().is_integer());
  CHECK(ctx.precision() == 192);
  CHECK(ctx.normalization() == Normalization::Unhalved);
  CHECK_THROWS_AS(HeightContext(e2_data().curve, {}, {64, Normalization::Unhalved}), PrecisionError);
  const auto& t4 = t4_ctx();
  CHECK(t4.discriminant_factorization().product() == t4.integral_model().discriminant().numerator());
  for (const auto& p : t4_data().points) CHECK(t4.integral_model().contains(t4.to_model(p)));
}

TEST_CASE("torsion heights are exactly zero") {
  auto t = Point<Rational>::affine(q(0), q(0));
  CHECK(e2_ctx().canonical_height(t).is_zero());
  CHECK(t4_ctx().canonical_height(t).is_zero());
  CHECK(e2_ctx().canonical_height(Point<Rational>::at_infinity()).is_zero());
  Curve<Rational> c4(q(4));
  HeightContext ctx(c4);
  CHECK(ctx.canonical_height(Point<Rational>::affine(q(2), q(4))).is_zero());
  CHECK(ctx.canonical_height(Point<Rational>::affine(q(2), q(-4))).is_zero());
  CHECK(naive_doubling_estimate(e2_data().curve, t, 0).is_zero());
  CHECK(naive_doubling_estimate(e2_data().curve, t, 3).is_zero());
}

TEST_CASE("quadraticity") {
  const auto& ctx = e2_ctx();
  const auto& c = ctx.curve();
  const auto g2 = e2_data().generators[1];
  const Real h = ctx.canonical_height(g2);
  const Real h2 = ctx.canonical_height(c.twice(g2));
  CHECK(abs(h2 / h - Real(4, 192)).to_double() < 1e-20);
  for (const auto& p : e2_data().points) {
    const Real hp = ctx.canonical_height(p);
    CHECK(hp.sign() > 0);
    const Real h3 = ctx.canonical_height(c.scalar_mul(3, p));
    CHECK(abs(h3 - Real(9, 192) * hp) <= ctx.error_bound(h3) + Real(9, 192) * ctx.error_bound(hp));
  }
}

TEST_CASE("height does not depend on the Weierstrass model") {
  // Rescaling by u: (x, y) -> (u^2 x, u^3 y), a4 -> u^4 a4.
  const auto& e = e2_data();
  for (long u : {5L, 7L}) {
    const Rational u2 = q(u * u), u3 = q(u * u * u);
    Curve<Rational> scaled(e.curve.a4() * u2 * u2);
    std::vector<Integer> hints = family_hints(q(2));
    hints.push_back(u);
    HeightContext ctx(scaled, hints);
    for (std::size_t i : {0u, 2u}) {
      auto p = e.generators[i];
      auto s = Point<Rational>::affine(p.x * u2, p.y * u3);
      CHECK(abs(ctx.canonical_height(s) - e2_ctx().canonical_height(p)).to_double() < 1e-40);
    }
  }
  // A curve given with a non-integral coefficient.
  Curve<Rational> frac(e.curve.a4() / q(16));
  auto g = e.generators[1];
  auto gs = Point<Rational>::affine(g.x / q(4), g.y / q(8));
  HeightContext ctx(frac, family_hints(q(2)));
  CHECK(abs(ctx.canonical_height(gs) - e2_ctx().canonical_height(g)).to_double() < 1e-40);
}

TEST_CASE("parallelogram law") {
  const auto& ctx = e2_ctx();
  const auto& c = ctx.curve();
  const auto& g = e2_data().generators;
  for (int trial = 0; trial < 4; ++trial) {
    std::array<long, 5> a{}, b{};
    for (auto& v : a) v = oracle::uniform(-1, 1);
    for (auto& v : b) v = oracle::uniform(-1, 1);
    auto P = c.combination(a, g), Q = c.combination(b, g);
    const Real lhs = ctx.canonical_height(c.add(P, Q)) + ctx.canonical_height(c.subtract(P, Q));
    const Real rhs = Real(2, 192) * (ctx.canonical_height(P) + ctx.canonical_height(Q));
    CHECK(abs(lhs - rhs) <= Real(6, 192) * ctx.error_bound(lhs));
  }
}

TEST_CASE("doubling estimate") {
  const auto& c = e2_data().curve;
  const auto g2 = e2_data().generators[1];
  CHECK(naive_doubling_estimate(c, g2, 0) == log(Real(Integer(981088), 192)));
  const Real est = naive_doubling_estimate(c, g2, 4);
  CHECK(abs(est - e2_ctx().canonical_height(g2)).to_double() < 1e-2);
  CHECK_THROWS_AS(naive_doubling_estimate(c, g2, 6), InputError);
  // Every printed point: relative agreement within 1e-2.
  for (const auto* set : {&e2_data().points, &e2_data().generators}) {
    for (const auto& p : *set) {
      CHECK(rel_err(naive_doubling_estimate(c, p, 4), e2_ctx().canonical_height(p)) < 1e-2);
    }
  }
  for (const auto& p : t4_data().points) {
    CHECK(rel_err(naive_doubling_estimate(t4_data().curve, p, 4), t4_ctx().canonical_height(p)) < 1e-2);
  }
}

TEST_CASE("regulators reproduce the published values") {
  auto t4 = regulator(t4_ctx(), t4_data().points);
  CHECK(rel_err(t4.regulator, rl("122787391.171313")) < 1e-6);
  CHECK(t4.independent);
  auto e2 = regulator(e2_ctx(), e2_data().points);
  CHECK(rel_err(e2.regulator, rl("123017.788734562")) < 1e-6);
  CHECK(e2.independent);
  CHECK(e2.error_bound < Real(Rational(Integer(1), Integer(1000000)), 192));
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(e2.gram[i][i] == e2.heights[i]);
    for (std::size_t j = 0; j < 5; ++j) CHECK(e2.gram[i][j] == e2.gram[j][i]);
  }
}

TEST_CASE("halved normalization scales the regulator by 2^-5") {
  auto hints = family_hints(q(2));
  HeightContext half(e2_data().curve, hints, {192, Normalization::Halved});
  auto a = regulator(half, e2_data().points);
  auto b = regulator(e2_ctx(), e2_data().points);
  CHECK(rel_err(a.regulator * Real(32, 192), b.regulator) < 1e-30);
  CHECK(parse_normalization("halved") == Normalization::Halved);
  CHECK_THROWS_AS(parse_normalization("third"), InputError);
}

TEST_CASE("regulator invariance and dependence") {
  const auto& e = e2_data();
  auto base = regulator(e2_ctx(), e.points);
  auto neg = e.points;
  neg[2] = e.curve.negate(neg[2]);
  CHECK(rel_err(regulator(e2_ctx(), neg).regulator, base.regulator) < 1e-30);

  auto with_torsion = e.points;
  with_torsion[4] = Point<Rational>::affine(q(0), q(0));
  auto z = regulator(e2_ctx(), with_torsion);
  CHECK(z.regulator.is_zero());
  CHECK(z.exact_dependence);
  CHECK_FALSE(z.independent);

  auto p1 = family_points(q(1));
  HeightContext c1(family_curve(q(1)), family_hints(q(1)));
  auto r1 = regulator(c1, p1);
  CHECK(r1.regulator.is_zero());
  CHECK(r1.exact_dependence);
  CHECK_FALSE(r1.independent);
}

TEST_CASE("relations and basis analysis") {
  const auto& e = e2_data();
  RelationSet rel{IMatrix(to_rows(e.relations))};
  auto checks = verify_relations<Rational>(e.curve, rel, e.generators, e.points);
  REQUIRE(checks.size() == 5);
  for (auto m : checks) CHECK(m == SignMatch::Exact);

  RelationSet zero{IMatrix(1)};
  std::array<Point<Rational>, 1> o{Point<Rational>::at_infinity()};
  std::array<Point<Rational>, 1> g1{e.generators[0]};
  CHECK(verify_relations<Rational>(e.curve, zero, g1, o)[0] == SignMatch::Exact);

  auto b = basis_analysis(rel);
  CHECK(b.det == oracle::cofactor_det(to_rows(e.relations)));
  CHECK(b.det == 4);
  CHECK_FALSE(b.unimodular);
  CHECK(b.index == 4);
  RelationSet starred{IMatrix(to_rows(e.starred_relations))};
  auto s = basis_analysis(starred);
  CHECK(s.det == oracle::cofactor_det(to_rows(e.starred_relations)));
  CHECK(s.unimodular);
  CHECK(basis_analysis({IMatrix::identity(5)}).det == 1);
}

TEST_CASE("starred generators") {
  const auto& e = e2_data();
  auto st = starred_generators<Rational>(e.curve, e.points, e.generators[0], e.generators[1]);
  CHECK(st[0] == e.curve.combination(std::array<long, 5>{-1, -1, 1, 1, -1}, e.generators));
  std::array<Point<Rational>, 5> targets{e.points[0], st[0], e.points[2], st[1], st[2]};
  RelationSet rel{IMatrix(to_rows(e.starred_relations))};
  for (auto m : verify_relations<Rational>(e.curve, rel, e.generators, targets)) CHECK(m == SignMatch::Exact);

  auto rs = regulator(e2_ctx(), targets);
  auto rg = regulator(e2_ctx(), e.generators);
  auto rp = regulator(e2_ctx(), e.points);
  CHECK(rel_err(rs.regulator, rg.regulator) < 1e-20);
  CHECK(rel_err(rp.regulator, Real(16, 192) * rg.regulator) < 1e-4);

  // Over Q(t) with the closed-form generators, then specialized at t = 2.
  const auto& f = family();
  auto sym = starred_generators<RatFunc>(f.curve, f.points, f.g1, f.g2);
  auto g1 = specialize(f.g1, q(2)), g2 = specialize(f.g2, q(2));
  auto at2 = starred_generators<Rational>(e.curve, e.points, g1, g2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(specialize(sym[i], q(2)) == at2[i]);

  auto o = Point<Rational>::at_infinity();
  auto same = starred_generators<Rational>(e.curve, e.points, o, o);
  CHECK(same[0] == e.points[1]);
}

TEST_CASE("Gusic-Tadic check") {
  auto r2 = gusic_tadic_check(q(2));
  CHECK(r2.pass);
  CHECK(r2.factors.size() == 6);
  CHECK(r2.rows.size() == 2 * 63 * 8);
  CHECK(r2.content_a4 == 36);
  for (const auto& row : r2.rows) {
    if (row.counted) CHECK_FALSE(row.square);
  }
  auto r0 = gusic_tadic_check(q(0));
  CHECK_FALSE(r0.pass);
  const std::string h4 = "(4*t^4 + 12*t^3 + 15*t^2 + 12*t + 4)";
  CHECK(std::find(r0.witnesses.begin(), r0.witnesses.end(), h4) != r0.witnesses.end());
  CHECK(r2.witnesses.empty());
  CHECK(family_h()[3](q(0)) == q(4));
}
