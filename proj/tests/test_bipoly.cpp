#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tpsurf/tpsurf.hpp"

using namespace tpsurf;

namespace {

BiPoly bp(const char* text) { return parse_bipoly(text); }

}  // namespace

TEST(BiDeg, ArithmeticAndDimension) {
  EXPECT_EQ((BiDeg{2, 1} + BiDeg{1, 3}), (BiDeg{3, 4}));
  EXPECT_EQ((BiDeg{2, 1} - BiDeg{1, 1}), (BiDeg{1, 0}));
  EXPECT_EQ((BiDeg{3, 1}).dim(), 8u);
  EXPECT_EQ((BiDeg{0, 0}).dim(), 1u);
  EXPECT_TRUE((BiDeg{1, 2}).fits_in({1, 3}));
  EXPECT_FALSE((BiDeg{2, 0}).fits_in({1, 3}));
}

TEST(BiDeg, NegativeSubtractionThrows) {
  try {
    (void)(BiDeg{1, 0} - BiDeg{0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeDegree);
  }
}

TEST(PolyMul, TwoToOneGenerator) {
  EXPECT_EQ(BiPoly::u() * bp("t^2*u + s^2*v"), bp("t^2*u^2 + s^2*u*v"));
}

TEST(PolyMul, BinomialSquare) {
  const BiPoly f = bp("s*u + t*v");
  EXPECT_EQ(poly_mul(f, f), bp("s^2*u^2 + 2*s*t*u*v + t^2*v^2"));
}

TEST(PolyMul, ZeroAnnihilates) {
  const BiPoly f = bp("s*u + t*v");
  const BiPoly z(BiDeg{2, 0});
  const BiPoly prod = f * z;
  EXPECT_TRUE(prod.is_zero());
  EXPECT_EQ(prod.deg(), (BiDeg{3, 1}));
}

TEST(PolyMul, RingAxiomsOnRandomForms) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const BiPoly f = random_form({1, 2}, rng), g = random_form({2, 0}, rng), h = random_form({2, 0}, rng);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(g * h, h * g);
  }
}

TEST(PolyMul, AgreesWithEvaluation) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const BiPoly f = random_form({2, 1}, rng), g = random_form({1, 3}, rng);
    const auto x = oracle::random_point(rng);
    EXPECT_EQ(oracle::eval(f * g, x), oracle::eval(f, x) * oracle::eval(g, x));
  }
}

TEST(ExactDiv, TwoToOne) {
  EXPECT_EQ(exact_div(bp("t^2*u^2 + s^2*u*v"), BiPoly::u()), bp("t^2*u + s^2*v"));
}

TEST(ExactDiv, SelfIsOne) {
  const BiPoly f = bp("3*s^2*u - t^2*v + s*t*u");
  EXPECT_EQ(exact_div(f, f), BiPoly::constant(1));
}

TEST(ExactDiv, NotDivisible) {
  try {
    exact_div(bp("s^2*u + t^2*v"), BiPoly::u());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
  }
}

TEST(ExactDiv, ZeroDivisorRejected) {
  try {
    exact_div(bp("s*u"), BiPoly(BiDeg{1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInput);
  }
}

TEST(ExactDiv, RoundTripOnRandomForms) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const BiPoly f = random_form({2, 2}, rng), d = random_form({1, 2}, rng);
    EXPECT_EQ(exact_div(f * d, d), f);
  }
}

TEST(CoeffVector, CanonicalOrder) {
  const auto v = coeff_vector(bp("t^2*u + s^2*v"), {2, 1});
  EXPECT_EQ(v, (std::vector<Rational>{0, 1, 0, 0, 1, 0}));
}

TEST(CoeffVector, ZeroForm) {
  EXPECT_EQ(coeff_vector(BiPoly(BiDeg{1, 1}), {1, 1}), (std::vector<Rational>{0, 0, 0, 0}));
}

TEST(CoeffVector, FirstMonomialIsSmUn) {
  const auto v = coeff_vector(bp("s^3*u^2"), {3, 2});
  ASSERT_EQ(v.size(), 12u);
  EXPECT_EQ(v[0], 1);
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_EQ(v[i], 0);
}

TEST(CoeffVector, DegreeMismatch) {
  try {
    coeff_vector(bp("s*u"), {2, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
}

TEST(CoeffVector, LinearAndInvertible) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const BiPoly f = random_form({2, 3}, rng), g = random_form({2, 3}, rng);
    const auto vf = f.coeff_vector({2, 3}), vg = g.coeff_vector({2, 3});
    auto sum = (f + g).coeff_vector({2, 3});
    for (std::size_t i = 0; i < sum.size(); ++i) EXPECT_EQ(sum[i], vf[i] + vg[i]);
    EXPECT_EQ(BiPoly::from_coeff_vector({2, 3}, vf), f);
  }
}

TEST(BiPoly, BihomogeneityEnforced) {
  EXPECT_THROW(bp("s*u + t"), ParseError);
  BiPoly f(BiDeg{1, 1});
  EXPECT_THROW(f += bp("s^2*u"), Error);
}

TEST(BiPoly, SwappedExchangesFactors) {
  const BiPoly f = bp("s^2*v + 3*t*s*u");
  EXPECT_EQ(f.swapped(), bp("u^2*t + 3*v*u*s"));
  EXPECT_EQ(f.swapped().swapped(), f);
}

TEST(BiPoly, MonomialBasisOrder) {
  const auto basis = monomial_basis({1, 1});
  ASSERT_EQ(basis.size(), 4u);
  EXPECT_EQ(basis[0], bp("s*u"));
  EXPECT_EQ(basis[1], bp("s*v"));
  EXPECT_EQ(basis[2], bp("t*u"));
  EXPECT_EQ(basis[3], bp("t*v"));
}

TEST(Format, BiPolyPrinting) {
  EXPECT_EQ(to_string(bp("t^2*u + s^2*v")), "s^2*v + t^2*u");
  EXPECT_EQ(to_string(bp("-3/2*s^2*t*u*v^3")), "-3/2*s^2*t*u*v^3");
  EXPECT_EQ(to_string(BiPoly(BiDeg{1, 1})), "0");
}

TEST(Format, ParseSyntax) {
  EXPECT_EQ(bp("2 s t u - s^2 u"), bp("2*s*t*u - s^2*u"));
  EXPECT_EQ(bp("s*s*u"), bp("s^2*u"));
  EXPECT_EQ(bp("1/2*s*u + 1/2*s*u"), bp("s*u"));
}

TEST(Format, ParseErrorsAreLocated) {
  try {
    parse_bipoly("s*u + x", std::nullopt, 4, 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 10);
  }
  EXPECT_THROW(bp(""), ParseError);
  EXPECT_THROW(bp("s*u +"), ParseError);
  EXPECT_THROW(bp("3/0*s"), ParseError);
}

TEST(Format, RoundTripRandomForms) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const BiDeg d{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
    BiPoly f = random_form(d, rng);
    Rational q(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 5) + 1);
    q.canonicalize();
    f *= q;
    EXPECT_EQ(parse_bipoly(to_string(f), d), f);
  }
}

TEST(RandomForm, DeterministicPerSeed) {
  EXPECT_EQ(random_form({2, 2}, std::uint64_t{42}), random_form({2, 2}, std::uint64_t{42}));
  EXPECT_NE(random_form({2, 2}, std::uint64_t{42}), random_form({2, 2}, std::uint64_t{43}));
}

TEST(RandomForm, ConstantIsNonzero) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const BiPoly f = random_form({0, 0}, seed);
    EXPECT_FALSE(f.is_zero());
    EXPECT_EQ(f.deg(), (BiDeg{0, 0}));
  }
}

TEST(RandomForm, CoefficientsInRange) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BiPoly f = random_form({3, 2}, seed);
    for (const auto& [k, c] : f.terms()) {
      EXPECT_EQ(c.get_den(), 1);
      EXPECT_LE(abs(c), kRandomCoeffBound);
    }
  }
}

TEST(RandomForm, MostlyDense) {
  int dense = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    if (random_form({2, 2}, seed).size() == 9) ++dense;
  EXPECT_GE(dense, 900);
}
