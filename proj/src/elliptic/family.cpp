#include "equiareal/elliptic/family.hpp"

#include <optional>

namespace equiareal::elliptic {

namespace {

UPoly fourth_root(const UPoly& p) {
  auto s = algebra::poly_sqrt(p);
  std::optional<UPoly> r = s ? algebra::poly_sqrt(*s) : std::nullopt;
  if (!r) throw VerificationError("no rational fourth root of " + p.str());
  return *r;
}

octic::SolutionPair<RatFunc> to_ratfunc(const octic::SolutionPair<UPoly>& s) {
  auto conv = [](const octic::Triple<UPoly>& t) {
    return octic::Triple<RatFunc>{RatFunc(t.x1), RatFunc(t.x2), RatFunc(t.x3)};
  };
  return {conv(s.x), conv(s.y)};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationError("family identity failed: " + what);
}

CurveFamily build_family() {
  const auto& h = family_h();
  UPoly prod(36);
  for (const auto& hi : h) prod = prod * hi;
  const RatFunc m = model_scaling();

  const auto base = curve_from_solution(to_ratfunc(octic::sol2()));
  const RatFunc m2 = m * m;
  std::array<Point<RatFunc>, 5> pts;
  for (std::size_t i = 0; i < 5; ++i) {
    pts[i] = Point<RatFunc>::affine(m2 * base.points[i].x, m2 * m * base.points[i].y);
  }
  auto [g1, g2] = generator_formulas();
  CurveFamily f{h, prod, m, family_theta(), Curve<RatFunc>(RatFunc(prod)), pts, g1, g2};
  for (std::size_t i = 0; i < 5; ++i) require(f.curve.contains(pts[i]), "P" + std::to_string(i + 1) + "(t) on E_t");
  require(f.curve.contains(g1), "G1(t) on E_t");
  require(f.curve.contains(g2), "G2(t) on E_t");
  return f;
}

}  // namespace

const std::array<UPoly, 6>& family_h() {
  static const std::array<UPoly, 6> h{
      UPoly{-2, 0, -3, 0, 1},
      UPoly{2, 0, 3, 0, 2},
      UPoly{-1, 0, 3, 0, 2},
      UPoly{4, 12, 15, 12, 4},
      UPoly{7, 12, 15, 12, 4},
      UPoly{4, 12, 15, 12, 7},
  };
  return h;
}

const std::array<UPoly, 3>& family_theta() {
  static const std::array<UPoly, 3> theta{
      UPoly{-4, -6, -3, -3, 2},
      UPoly{-32, -144, -312, -492, -588, -522, -381, -183, -27, 27, 66, 12, 16},
      UPoly{8, 12, 6, 3, -20, 3, 6, 12, 8},
  };
  return theta;
}

RatFunc model_scaling() {
  UPoly prod(144);
  for (const auto& hi : family_h()) prod = prod * hi;
  const RatFunc ratio = RatFunc(prod) / RatFunc(octic::phi(octic::sol2().x));
  return RatFunc(fourth_root(ratio.num()), fourth_root(ratio.den()));
}

std::pair<Point<RatFunc>, Point<RatFunc>> generator_formulas() {
  const auto& h = family_h();
  const auto& th = family_theta();
  const RatFunc t = RatFunc::t();
  const RatFunc h26 = RatFunc(h[1] * h[5]);
  const RatFunc h1234 = RatFunc(h[0] * h[1] * h[2] * h[3]);
  const RatFunc t1(th[0]), t2(th[1]), t3(th[2]);
  auto g1 = Point<RatFunc>::affine(RatFunc(2) * h26 * t1 * t1 / pow(t, 4),
                                   RatFunc(4) * h26 * t1 * t2 / pow(t, 6));
  auto g2 = Point<RatFunc>::affine(RatFunc(4) * h1234 / pow(t, 2), RatFunc(4) * h1234 * t3 / pow(t, 3));
  return {g1, g2};
}

const CurveFamily& family() {
  static const CurveFamily f = build_family();
  return f;
}

Curve<Rational> specialize(const Curve<RatFunc>& c, const Rational& t0) {
  return Curve<Rational>(c.a4().eval(t0), c.a6().eval(t0));
}

Point<Rational> specialize(const Point<RatFunc>& p, const Rational& t0) {
  if (p.infinity) return Point<Rational>::at_infinity();
  return Point<Rational>::affine(p.x.eval(t0), p.y.eval(t0));
}

Curve<Rational> family_curve(const Rational& t0) {
  const auto& h = family_h();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i](t0).is_zero()) {
      throw SingularCurveError("singular specialization: h" + std::to_string(i + 1) + "(" + t0.str() + ") = 0");
    }
  }
  return specialize(family().curve, t0);
}

std::array<Point<Rational>, 5> family_points(const Rational& t0) {
  const Curve<Rational> c = family_curve(t0);
  std::array<Point<Rational>, 5> out;
  for (std::size_t i = 0; i < 5; ++i) {
    try {
      out[i] = specialize(family().points[i], t0);
    } catch (const PoleError&) {
      throw PoleError("P" + std::to_string(i + 1) + "(t) has a pole at t = " + t0.str());
    }
    if (!c.contains(out[i])) throw VerificationError("specialized point is off the curve");
  }
  return out;
}

const E2Data& e2_data() {
  static const E2Data d = [] {
    auto pt = [](const char* x, const char* y) {
      return Point<Rational>::affine(Rational::parse(x), Rational::parse(y));
    };
    E2Data e{Curve<Rational>(Rational::parse("2624072905728")),
             {pt("123121216", "1366271251712"), pt("9400356", "-29246291928"),
              pt("10188864", "-32931327744"), pt("1382976", "-2504823552"),
              pt("1132096", "2102770432")},
             {pt("680800", "1449831680"), pt("981088", "1875840256"),
              pt("240126016/49", "3919014764288/343"), pt("55264356", "-411011675928"),
              pt("123121216", "-1366271251712")},
             {{{0, 0, 0, 0, -1},
               {-2, -2, 1, 1, -1},
               {0, 0, -1, -1, 0},
               {-2, -2, 0, 1, -1},
               {0, -2, -1, 0, -1}}},
             {{{0, 0, 0, 0, -1},
               {-1, -1, 1, 1, -1},
               {0, 0, -1, -1, 0},
               {-1, -1, 0, 1, -1},
               {0, -1, -1, 0, -1}}}};
    for (const auto& p : e.points) require(e.curve.contains(p), "printed E_2 point on curve");
    for (const auto& g : e.generators) require(e.curve.contains(g), "printed E_2 generator on curve");
    return e;
  }();
  return d;
}

const SolutionCurve<Rational>& t4_data() {
  static const SolutionCurve<Rational> d = [] {
    auto pt = [](const char* x, const char* y) {
      return Point<Rational>::affine(Rational::parse(x), Rational::parse(y));
    };
    SolutionCurve<Rational> s{
        Curve<Rational>(Rational::parse("-1617508083022593897795364438996422549375/4")),
        {pt("20626479356354560000", "20849350546566884379967280000"),
         pt("23113550675916619776", "54786013676180111350031745024"),
         pt("29822503524802560000", "-120266596559434914904320720000"),
         pt("41748877998578260224", "236399461657400030514050179368"),
         pt("85488908030849440000", "768253474718253155853728585000")}};
    for (const auto& p : s.points) require(s.curve.contains(p), "printed t = 4 point on curve");
    return s;
  }();
  return d;
}

}  // namespace equiareal::elliptic
