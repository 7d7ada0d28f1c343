#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tpsurf/tpsurf.hpp"

using namespace tpsurf;

namespace {

XPoly xp(const char* text) { return parse_xpoly(text); }
BiPoly bp(const char* text) { return parse_bipoly(text); }

const char* kTwoToOneF = "x0^3*x2 + x1^3*x3 - x0^2*x1^2";

std::array<BiPoly, 4> two_to_one() {
  return {bp("t^2*u^2 + s^2*u*v"), bp("t^2*u*v + s^2*v^2"), bp("t^2*v^2"), bp("s^2*u^2")};
}

template <class Rng>
XPoly random_xpoly(int deg, Rng& rng, int terms = 4) {
  std::uniform_int_distribution<int> c(-6, 6), e(0, deg);
  XPoly f(deg);
  for (int k = 0; k < terms; ++k) {
    const int e0 = e(rng);
    const int e1 = std::uniform_int_distribution<int>(0, deg - e0)(rng);
    const int e2 = std::uniform_int_distribution<int>(0, deg - e0 - e1)(rng);
    f.add_term(pack({e0, e1, e2, deg - e0 - e1 - e2}), c(rng));
  }
  if (f.is_zero()) f.add_term(pack({deg, 0, 0, 0}), 1);
  return f;
}

}  // namespace

TEST(XPoly, Arithmetic) {
  EXPECT_EQ(xp("x0 + x1") * xp("x0 - x1"), xp("x0^2 - x1^2"));
  EXPECT_EQ(xp("x0 + x1").pow(3), xp("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3"));
  EXPECT_EQ(xp("x0^2*x3").derivative(0), xp("2*x0*x3"));
  EXPECT_TRUE(xp("x0^2").derivative(1).is_zero());
  EXPECT_THROW(xp("x0") + xp("x0^2"), Error);
  EXPECT_EQ(XPoly(2) + xp("x0^2"), xp("x0^2"));
}

TEST(XPoly, HomogeneityEnforced) {
  EXPECT_THROW(xp("x0 + x1^2"), ParseError);
  EXPECT_THROW(xp("x4"), ParseError);
}

TEST(XPoly, Evaluate) {
  const std::array<Rational, 4> x{1, 2, Rational(1, 2), -1};
  EXPECT_EQ(xp("x0^3*x2 + x1^3*x3 - x0^2*x1^2").evaluate(x), Rational(1, 2) - 8 - 4);
}

TEST(XPoly, NormalizedIsPrimitiveWithPositiveLead) {
  EXPECT_EQ(to_string(xp("-4*x0*x1 + 6/5*x2^2").normalized()), "10*x0*x1 - 3*x2^2");
  EXPECT_EQ(xp("x1^3*x3 - 2*x0^4").normalized(), xp("2*x0^4 - x1^3*x3"));
}

TEST(XPoly, PrintingUsesLexOrder) {
  EXPECT_EQ(to_string(xp(kTwoToOneF)), "x0^3*x2 - x0^2*x1^2 + x1^3*x3");
}

TEST(XPoly, ParsePrintRoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    XPoly f = random_xpoly(static_cast<int>(rng() % 6) + 1, rng, 6);
    Rational q(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 4) + 1);
    q.canonicalize();
    f *= q;
    EXPECT_EQ(parse_xpoly(to_string(f)), f);
  }
}

TEST(Substitute, CoordinateProjection) {
  const auto p = two_to_one();
  EXPECT_EQ(substitute(xp("x0"), p), p[0]);
  EXPECT_EQ(substitute(xp("x3"), p), p[3]);
}

TEST(Substitute, SegreRelation) {
  const std::array<BiPoly, 4> q{bp("s*u"), bp("s*v"), bp("t*u"), bp("t*v")};
  const BiPoly r = substitute(xp("x0*x3 - x1*x2"), q);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(r.deg(), (BiDeg{2, 2}));
}

TEST(Substitute, TwoToOneEquation) {
  EXPECT_TRUE(substitute(xp(kTwoToOneF), two_to_one()).is_zero());
  EXPECT_FALSE(substitute(xp("x0^3*x2 + x1^3*x3 + x0^2*x1^2"), two_to_one()).is_zero());
}

TEST(Substitute, ResultBidegree) {
  const auto p = two_to_one();
  EXPECT_EQ(substitute(xp("x0^2*x1 + x3^3"), p).deg(), (BiDeg{6, 6}));
}

TEST(Substitute, IsARingMap) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    std::array<BiPoly, 4> q;
    for (auto& f : q) f = random_form({1, 2}, rng);
    const XPoly F = random_xpoly(2, rng), G = random_xpoly(1, rng);
    EXPECT_EQ(substitute(F * G, q), substitute(F, q) * substitute(G, q));
    EXPECT_EQ(substitute(F + F, q), substitute(F, q) * Rational(2));
  }
}

TEST(Substitute, AgreesWithEvaluation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::array<BiPoly, 4> q;
    for (auto& f : q) f = random_form({2, 1}, rng);
    const XPoly F = random_xpoly(3, rng, 8);
    const auto pt = oracle::random_point(rng);
    const std::array<Rational, 4> vals{oracle::eval(q[0], pt), oracle::eval(q[1], pt), oracle::eval(q[2], pt),
                                       oracle::eval(q[3], pt)};
    EXPECT_EQ(oracle::eval(substitute(F, q), pt), F.evaluate(vals));
  }
}

TEST(Squarefree, TwoToOneSquare) {
  EXPECT_EQ(squarefree_part(xp(kTwoToOneF).pow(2)), xp(kTwoToOneF));
}

TEST(Squarefree, PurePower) { EXPECT_EQ(squarefree_part(xp("x0^5")), xp("x0")); }

TEST(Squarefree, MixedMultiplicities) {
  const XPoly G = xp("x0 + x1").pow(2) * xp("x2 - x3");
  EXPECT_EQ(squarefree_part(G), (xp("x0 + x1") * xp("x2 - x3")).normalized());
}

TEST(Squarefree, ZeroRejected) {
  try {
    squarefree_part(XPoly(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInput);
  }
}

TEST(Squarefree, ConstantsAndNormalization) {
  EXPECT_EQ(squarefree_part(XPoly::constant(-7)), XPoly::constant(1));
  // -2 x1 x3 (3 x1 - 2 x3)
  EXPECT_EQ(squarefree_part(xp("-6*x1^2*x3 + 4*x1*x3^2")), xp("3*x1^2*x3 - 2*x1*x3^2"));
}

TEST(Squarefree, StableUnderPowers) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 12; ++trial) {
    const XPoly a = random_xpoly(2, rng, 5), b = random_xpoly(1, rng, 3);
    const XPoly G = a * b;
    const XPoly base = squarefree_part(G);
    for (int k = 2; k <= 3; ++k) EXPECT_EQ(squarefree_part(G.pow(k)), base) << to_string(G);
  }
}

TEST(Squarefree, SquaredFactorRemoved) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const XPoly a = random_xpoly(2, rng, 6), b = random_xpoly(3, rng, 6);
    const XPoly sa = squarefree_part(a), sb = squarefree_part(b);
    // a^2 b^3 and a b share the squarefree part
    EXPECT_EQ(squarefree_part(a.pow(2) * b.pow(3)), squarefree_part(a * b));
    EXPECT_TRUE(proportional(squarefree_part(a * b), squarefree_part(sa * sb)));
  }
}
