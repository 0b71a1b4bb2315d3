#include <functional>

#include <gtest/gtest.h>

#include "bw/curve.hpp"
#include "bw/error.hpp"
#include "bw/text.hpp"
#include "support/random_poly.hpp"

namespace bw {
namespace {

using testing::RandomPolys;

Poly P(const char* text) { return parse_poly(text); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(PlaneCurve, HamiltonianTau) {
  const Curve c = CurveModel::plane(P("y^2 - x^3 - x"));
  ASSERT_EQ(c->kind(), CurveKind::PlaneCurve);
  EXPECT_EQ(c->tau().p, P("2*y"));
  EXPECT_EQ(c->tau().q, P("3*x^2 + 1"));
  EXPECT_TRUE(c->tau().r.is_zero());
  const auto& cert = std::get<PlaneCurve>(c->model()).smooth_certificate;
  EXPECT_TRUE(cert.verify());
  EXPECT_EQ(cert.target(), Poly(1));
  EXPECT_TRUE(c->tau_ideal().is_unit_ideal());
  // tau applied to F lies in (F).
  EXPECT_TRUE(c->reduce(c->tau().apply(P("y^2 - x^3 - x"))).repr.is_zero());
}

TEST(PlaneCurve, Errors) {
  EXPECT_EQ(code_of([] { CurveModel::plane(P("y^2 - x^3")); }), ErrorCode::NotSmooth);
  EXPECT_EQ(code_of([] { CurveModel::plane(P("y^2 - z")); }), ErrorCode::BadVariables);
  EXPECT_EQ(code_of([] { CurveModel::plane(P("3")); }), ErrorCode::InvalidArgument);
}

TEST(PlaneCurve, RationalEmbedding) {
  // f(x) y = 1 is the graph of 1/f, always smooth.
  for (const char* f : {"x", "x^2 - 1", "x^3 - x"}) {
    const Curve c = CurveModel::plane(P(f) * P("y") - Poly(1));
    EXPECT_EQ(c->kind(), CurveKind::PlaneCurve) << f;
  }
}

TEST(SpaceCurve, TwistedCubic) {
  const Curve c = CurveModel::space({P("y - x^2"), P("z - x^3")}, TauLift{P("1"), P("2*x"), P("3*x^2")});
  ASSERT_EQ(c->kind(), CurveKind::SpaceCurve);
  EXPECT_TRUE(std::get<SpaceCurve>(c->model()).unit_certificate.verify());
  EXPECT_EQ(c->reduce(P("y")).repr, P("x^2"));
  EXPECT_EQ(c->reduce(P("y*z")).repr, P("x^5"));
}

TEST(SpaceCurve, EmbeddedPlaneCurve) {
  const Poly f = P("y^2 - x^5 - x - 1");
  const Curve c = CurveModel::space(
      {f, P("z")}, TauLift{derivative(f, Var::Y), -derivative(f, Var::X), Poly()});
  EXPECT_EQ(c->kind(), CurveKind::SpaceCurve);
  EXPECT_TRUE(c->tau_ideal().is_unit_ideal());
}

TEST(SpaceCurve, Errors) {
  const std::vector<Poly> cubic{P("y - x^2"), P("z - x^3")};
  EXPECT_EQ(code_of([&] { CurveModel::space(cubic, TauLift{Poly(), Poly(), Poly()}); }),
            ErrorCode::ZeroTau);
  // Vanishes on the curve without being zero as a polynomial.
  EXPECT_EQ(code_of([&] { CurveModel::space(cubic, TauLift{P("y - x^2"), Poly(), Poly()}); }),
            ErrorCode::ZeroTau);
  EXPECT_EQ(code_of([&] { CurveModel::space(cubic, TauLift{Poly(), P("1"), Poly()}); }),
            ErrorCode::DoesNotPreserveIdeal);
  // x * tau preserves the ideal but vanishes at the origin.
  EXPECT_EQ(code_of([&] { CurveModel::space(cubic, TauLift{P("x"), P("2*x^2"), P("3*x^3")}); }),
            ErrorCode::UnitCertificateAbsent);
  EXPECT_EQ(code_of([] { CurveModel::space({}, TauLift{P("1"), Poly(), Poly()}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { CurveModel::space({P("1")}, TauLift{P("1"), Poly(), Poly()}); }),
            ErrorCode::InvalidArgument);
}

TEST(Reduce, Examples) {
  const Curve plane = CurveModel::plane(P("y^2 - x^3 - x"));
  EXPECT_EQ(plane->reduce(P("y^2")).repr, P("x^3 + x"));
  for (const Curve& c : {plane, CurveModel::affine_line(), parse_curve("space y - x^2; z - x^3 tau 1, 2x, 3x^2")}) {
    EXPECT_TRUE(c->reduce(Poly()).repr.is_zero());
  }
  EXPECT_EQ(code_of([&] { plane->reduce(P("z")); }), ErrorCode::BadVariables);
  EXPECT_EQ(code_of([] { CurveModel::affine_line()->reduce(P("y")); }), ErrorCode::BadVariables);
}

TEST(Reduce, RingHomomorphismOnCorpus) {
  const std::vector<Curve> corpus{
      CurveModel::plane(P("y^2 - x^3 - x")),
      CurveModel::plane(P("y^2 - x^7 - x - 1")),
      parse_curve("space y - x^2; z - x^3 tau 1, 2x, 3x^2"),
      parse_curve("space y^2 - x^3 - x; z tau 2y, 3x^2 + 1, 0"),
      CurveModel::plane(P("y^2 - x^3 - x"), CurveOptions{MonomialOrder::GrLex, {}}),
  };
  RandomPolys rnd(77);
  for (const auto& c : corpus) {
    const bool plane = c->kind() == CurveKind::PlaneCurve;
    for (int i = 0; i < 500; ++i) {
      const Poly p = plane ? rnd.poly({Var::X, Var::Y}, 4, 0.3) : rnd.poly({Var::X, Var::Y, Var::Z}, 3, 0.3);
      const Poly q = plane ? rnd.poly({Var::X, Var::Y}, 4, 0.3) : rnd.poly({Var::X, Var::Y, Var::Z}, 3, 0.3);
      const RingElem rp = c->reduce(p);
      const RingElem rq = c->reduce(q);
      ASSERT_EQ(c->reduce(p * q), c->mul(rp, rq)) << c->describe();
      ASSERT_EQ(c->reduce(p + q).repr, rp.repr + rq.repr);
      ASSERT_EQ(c->reduce(rp.repr), rp);
    }
  }
}

TEST(LocalizedLine, Construction) {
  const Curve c = CurveModel::localized_line(P("x^2 - 1"));
  EXPECT_EQ(c->kind(), CurveKind::LocalizedLine);
  EXPECT_TRUE(std::get<LocalizedLine>(c->model()).squarefree);
  EXPECT_FALSE(std::get<LocalizedLine>(CurveModel::localized_line(P("x^2"))->model()).squarefree);
  EXPECT_EQ(code_of([] { CurveModel::localized_line(P("2")); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { CurveModel::localized_line(P("x - y")); }), ErrorCode::BadVariables);
}

TEST(LocalizedArith, Examples) {
  const Poly f = P("x");
  const LocalizedElem inv{Poly(1), 1};
  const auto two = localized_add(inv, inv, f);
  EXPECT_EQ(two, (LocalizedElem{Poly(2), 1}));
  EXPECT_EQ(normalize(LocalizedElem{f, 1}, f), (LocalizedElem{Poly(1), 0}));
  EXPECT_EQ(normalize(LocalizedElem{P("x^3 + x^2"), 5}, f), (LocalizedElem{P("x + 1"), 3}));
  EXPECT_EQ(normalize(LocalizedElem{Poly(), 4}, f), (LocalizedElem{Poly(), 0}));
  // 1/x - 1/x = 0
  EXPECT_TRUE(localized_sub(inv, inv, f).numerator.is_zero());
}

TEST(LocalizedArith, ProductsMatchClearedDenominators) {
  RandomPolys rnd(6060);
  const std::vector<Poly> fs{P("x"), P("x^2 - 1"), P("x^3 - x"), P("x^2")};
  for (int i = 0; i < 200; ++i) {
    const Poly& f = fs[static_cast<std::size_t>(i) % fs.size()];
    const LocalizedElem a = normalize({rnd.poly({Var::X}, 5, 0.6), static_cast<unsigned>(rnd.integer(0, 4))}, f);
    const LocalizedElem b = normalize({rnd.poly({Var::X}, 5, 0.6), static_cast<unsigned>(rnd.integer(0, 4))}, f);
    const LocalizedElem prod = localized_mul(a, b, f);
    // prod = pq / f^(a+b)  <=>  prod.num * f^(ea+eb) == p q f^(prod.exp)
    ASSERT_EQ(prod.numerator * pow(f, a.exponent + b.exponent),
              a.numerator * b.numerator * pow(f, prod.exponent));
    const LocalizedElem sum = localized_add(a, b, f);
    ASSERT_EQ(sum.numerator * pow(f, a.exponent + b.exponent),
              (a.numerator * pow(f, b.exponent) + b.numerator * pow(f, a.exponent)) * pow(f, sum.exponent));
    // Normal form is idempotent and value preserving.
    ASSERT_EQ(normalize(prod, f), prod);
    const LocalizedElem raw{a.numerator * pow(f, 2), a.exponent + 2};
    ASSERT_TRUE(same_value(raw, a, f));
    ASSERT_EQ(normalize(raw, f), a);
    if (prod.exponent > 0) {
      ASSERT_FALSE(divide_univariate(prod.numerator, f, Var::X).remainder.is_zero());
    }
  }
}

TEST(LocalizedLine, ParseElement) {
  const Curve c = parse_curve("line minus x^2 - 1");
  auto e = std::get<LocalizedElem>(c->parse_element("1 / (x - 1)"));
  EXPECT_EQ(e, (LocalizedElem{P("x + 1"), 1}));
  auto g = std::get<LocalizedElem>(c->parse_element("(x + 1) / (x^2 - 1)^2"));
  EXPECT_EQ(g, (LocalizedElem{P("x + 1"), 2}));
  EXPECT_EQ(code_of([&] { c->parse_element("1 / x"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(std::get<LocalizedElem>(c->parse_element(c->to_string(g))), g);
}

TEST(CurveText, ParseAndDescribeRoundTrip) {
  for (const char* text : {"line", "line minus x^3 - x", "plane y^2 - x^3 - x",
                           "space y - x^2; z - x^3 tau 1, 2*x, 3*x^2"}) {
    const Curve c = parse_curve(text);
    EXPECT_EQ(c->describe(), text);
    EXPECT_EQ(parse_curve(c->describe())->describe(), c->describe());
  }
  for (const char* bad : {"", "circle x", "plane", "line minus", "space y - x^2 tau 1, 2x",
                          "space tau 1, 0, 0", "linex"}) {
    EXPECT_EQ(code_of([&] { parse_curve(bad); }), ErrorCode::ParseError) << bad;
  }
}

}  // namespace
}  // namespace bw
