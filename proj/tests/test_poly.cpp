#include <gtest/gtest.h>

#include "bw/error.hpp"
#include "bw/poly.hpp"
#include "bw/text.hpp"
#include "support/random_poly.hpp"

namespace bw {
namespace {

using testing::RandomPolys;

Poly P(const char* text) { return parse_poly(text); }

const Poly x = Poly::var(Var::X);
const Poly y = Poly::var(Var::Y);
const Poly z = Poly::var(Var::Z);

TEST(Rat, CanonicalForm) {
  Rat r(6, 4);
  r.canonicalize();
  EXPECT_EQ(to_string(r), "3/2");
  EXPECT_EQ(to_string(Rat(-3, 1)), "-3");
  EXPECT_EQ(to_string(Rat(0)), "0");
}

TEST(Mono, OrderPrecedence) {
  // z > y > x in lex.
  EXPECT_GT(compare(MonomialOrder::Lex, Mono(0, 1), Mono(5)), 0);
  EXPECT_GT(compare(MonomialOrder::Lex, Mono(0, 0, 1), Mono(3, 4)), 0);
  // grlex compares degree first.
  EXPECT_LT(compare(MonomialOrder::GrLex, Mono(0, 1), Mono(2)), 0);
  EXPECT_GT(compare(MonomialOrder::GrLex, Mono(1, 1), Mono(2)), 0);
  EXPECT_EQ(compare(MonomialOrder::GrLex, Mono(1, 2, 3), Mono(1, 2, 3)), 0);
}

TEST(Mono, LcmAndCoprime) {
  EXPECT_EQ(lcm(Mono(3, 2), Mono(1, 4, 2)), Mono(3, 4, 2));
  EXPECT_TRUE(coprime(Mono(2), Mono(0, 3)));
  EXPECT_FALSE(coprime(Mono(2, 1), Mono(0, 3)));
}

TEST(PolyArith, Examples) {
  EXPECT_EQ((x + y) + (-y), x);
  EXPECT_TRUE((Poly(0) * P("x^3 + 7*y*z - 2")).is_zero());
  EXPECT_EQ((x + Poly(1)) * (x - Poly(1)), P("x^2 - 1"));
  EXPECT_EQ(P("x + y") * Rat(3, 2), P("3/2*x + 3/2*y"));
}

TEST(PolyArith, ZeroHasNoTerms) {
  EXPECT_TRUE((x - x).terms().empty());
  EXPECT_TRUE((P("x*y") * Rat(0)).is_zero());
  EXPECT_EQ(to_string(Poly()), "0");
}

TEST(PolyArith, ProductTermBound) {
  // A d1-term times d2-term product has at most d1*d2 terms.
  RandomPolys rnd(11);
  for (int i = 0; i < 50; ++i) {
    const Poly a = rnd.poly({Var::X, Var::Y, Var::Z}, 3);
    const Poly b = rnd.poly({Var::X, Var::Y, Var::Z}, 3);
    EXPECT_LE((a * b).size(), a.size() * b.size());
  }
}

TEST(PolyArith, RingAxioms) {
  RandomPolys rnd(20240601);
  for (int i = 0; i < 500; ++i) {
    const Poly a = rnd.poly({Var::X, Var::Y, Var::Z}, 3, 0.3, 9, true);
    const Poly b = rnd.poly({Var::X, Var::Y, Var::Z}, 3, 0.3, 9, true);
    const Poly c = rnd.poly({Var::X, Var::Y, Var::Z}, 3, 0.3, 9, true);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Poly());
    ASSERT_EQ(a * Poly(1), a);
  }
}

TEST(PolyArith, GrlexAgreesWithLex) {
  RandomPolys rnd(5);
  for (int i = 0; i < 100; ++i) {
    const Poly a = rnd.poly({Var::X, Var::Y, Var::Z}, 3, 0.4);
    const Poly b = rnd.poly({Var::X, Var::Y, Var::Z}, 3, 0.4);
    const Poly ga = a.with_order(MonomialOrder::GrLex);
    const Poly gb = b.with_order(MonomialOrder::GrLex);
    ASSERT_EQ((ga * gb).with_order(MonomialOrder::Lex), a * b);
    ASSERT_EQ(ga + gb, a + b);
  }
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(P("x^2*y"), Var::X), P("2*x*y"));
  EXPECT_TRUE(derivative(P("x^3 + x"), Var::Y).is_zero());
  EXPECT_EQ(derivative(P("y^2 - x^3 - x"), Var::Y), P("2*y"));
}

TEST(Derivative, DegreeDropsByOne) {
  const Poly p = P("x^3*y^2*z + 4*y^5 + z");
  const Poly d = derivative(p, Var::Y);
  for (const auto& t : d.terms()) {
    Mono m = t.mono;
    m.exp[1] += 1;
    EXPECT_NE(p.coeff(m), 0);
  }
  EXPECT_EQ(d.degree_in(Var::Y), p.degree_in(Var::Y) - 1);
}

TEST(Derivative, LeibnizRule) {
  RandomPolys rnd(99);
  for (int i = 0; i < 200; ++i) {
    const Poly p = rnd.poly({Var::X, Var::Y, Var::Z}, 3, 0.4);
    const Poly q = rnd.poly({Var::X, Var::Y, Var::Z}, 3, 0.4);
    for (Var v : kAllVars) {
      ASSERT_EQ(derivative(p * q, v), p * derivative(q, v) + q * derivative(p, v));
    }
  }
}

TEST(Antiderivative, Examples) {
  EXPECT_EQ(antiderivative(P("x^2"), Var::X), P("1/3*x^3"));
  EXPECT_TRUE(antiderivative(Poly(), Var::X).is_zero());
  EXPECT_EQ(antiderivative(P("y"), Var::X), P("x*y"));
}

TEST(Antiderivative, RoundTripAndNoConstant) {
  RandomPolys rnd(7);
  for (int i = 0; i < 200; ++i) {
    const Poly p = rnd.poly({Var::X, Var::Y, Var::Z}, 4, 0.4, 9, true);
    for (Var v : kAllVars) {
      const Poly r = antiderivative(p, v);
      ASSERT_EQ(derivative(r, v), p);
      for (const auto& t : r.terms()) ASSERT_GT(t.mono[v], 0u);
    }
  }
}

TEST(Division, Examples) {
  const Poly ds[] = {P("y^2 - x^3 - x")};
  auto r = divide_multivariate(P("y^2"), ds, MonomialOrder::Lex);
  ASSERT_EQ(r.quotients.size(), 1u);
  EXPECT_EQ(r.quotients[0], Poly(1));
  EXPECT_EQ(r.remainder, P("x^3 + x"));

  const Poly dy[] = {y};
  auto s = divide_multivariate(x, dy, MonomialOrder::Lex);
  EXPECT_TRUE(s.quotients[0].is_zero());
  EXPECT_EQ(s.remainder, x);
}

TEST(Division, RejectsZeroAndEmptyDivisors) {
  const Poly bad[] = {x, Poly()};
  EXPECT_THROW(divide_multivariate(x, bad, MonomialOrder::Lex), Error);
  EXPECT_THROW(divide_multivariate(x, std::span<const Poly>{}, MonomialOrder::Lex), Error);
}

TEST(Division, EarliestDivisorWins) {
  const Poly ds[] = {P("x"), P("x + 1")};
  auto r = divide_multivariate(P("x^2"), ds, MonomialOrder::Lex);
  EXPECT_EQ(r.quotients[0], x);
  EXPECT_TRUE(r.quotients[1].is_zero());
}

TEST(Division, ReconstructionAndIrreducibleRemainder) {
  RandomPolys rnd(31337);
  for (int i = 0; i < 500; ++i) {
    const auto order = i % 2 == 0 ? MonomialOrder::Lex : MonomialOrder::GrLex;
    const Poly p = rnd.poly({Var::X, Var::Y, Var::Z}, 4, 0.3);
    std::vector<Poly> ds;
    const int n = rnd.integer(1, 3);
    while (static_cast<int>(ds.size()) < n) {
      Poly d = rnd.poly({Var::X, Var::Y, Var::Z}, 2, 0.4);
      if (!d.is_zero()) ds.push_back(d);
    }
    auto r = divide_multivariate(p, ds, order);
    Poly sum = r.remainder;
    for (std::size_t k = 0; k < ds.size(); ++k) sum += r.quotients[k] * ds[k];
    ASSERT_EQ(sum, p);
    for (const auto& t : r.remainder.terms()) {
      for (const auto& d : ds) {
        ASSERT_FALSE(d.with_order(order).leading_mono().divides(t.mono));
      }
    }
  }
}

TEST(Univariate, GcdAndDivision) {
  const Poly a = P("x^3 - x");
  const Poly b = P("x^2 + 2*x + 1");
  EXPECT_EQ(gcd_univariate(a, b, Var::X), P("x + 1"));
  EXPECT_EQ(gcd_univariate(P("2*x^2"), Poly(), Var::X), P("x^2"));
  auto d = divide_univariate(a, P("x - 1"), Var::X);
  EXPECT_EQ(d.quotient, P("x^2 + x"));
  EXPECT_TRUE(d.remainder.is_zero());
  EXPECT_THROW(gcd_univariate(P("x*y"), x, Var::X), Error);
}

TEST(Text, ParsesGrammar) {
  EXPECT_EQ(P("y^2 - x^3 - x"), y * y - x * x * x - x);
  EXPECT_EQ(P("3/2*x^2 + 1"), Rat(3, 2) * (x * x) + Poly(1));
  EXPECT_EQ(P("2xy"), Rat(2) * (x * y));
  EXPECT_EQ(P("2 x y^2"), Rat(2) * (x * y * y));
  EXPECT_EQ(P("-(x + 1)^2"), -((x + Poly(1)) * (x + Poly(1))));
  EXPECT_EQ(P("x*(y - z)"), x * y - x * z);
  EXPECT_EQ(P("1/2x"), Rat(1, 2) * x);
  EXPECT_EQ(P("6/4"), Poly(Rat(3, 2)));
}

TEST(Text, RejectsMalformedInput) {
  for (const char* bad : {"", "x +", "1.5*x", "x^", "w", "x / y", "(x", "x)", "2e3", "x / 0",
                          "x^-1"}) {
    EXPECT_THROW(parse_poly(bad), Error) << bad;
  }
  try {
    parse_poly("x ** 2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(Text, PrintedPolynomialsReparse) {
  RandomPolys rnd(42);
  for (int i = 0; i < 300; ++i) {
    const auto order = i % 2 == 0 ? MonomialOrder::Lex : MonomialOrder::GrLex;
    const Poly p = rnd.poly({Var::X, Var::Y, Var::Z}, 4, 0.3, 20, true).with_order(order);
    ASSERT_EQ(parse_poly(to_string(p), order), p) << to_string(p);
  }
}

TEST(Text, PrintFormat) {
  EXPECT_EQ(to_string(P("x - 3/2*y^2*x + 1")), "-3/2*x*y^2 + x + 1");
  EXPECT_EQ(to_string(P("-x")), "-x");
  EXPECT_EQ(to_string(P("-7")), "-7");
}

}  // namespace
}  // namespace bw
