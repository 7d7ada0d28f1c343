#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tpsurf/tpsurf.hpp"

using namespace tpsurf;
using fixture::bp;

namespace {

/// f at a point of P1 x P1 over F_p, term by term.
std::uint64_t eval_mod(const BiPoly& f, const BasepointWitness& w) {
  const std::uint64_t p = w.prime;
  auto pw = [p](std::uint64_t x, int e) {
    std::uint64_t r = 1;
    for (int k = 0; k < e; ++k) r = r * x % p;
    return r;
  };
  std::uint64_t acc = 0;
  const BiDeg d = f.deg();
  for (const auto& [k, c] : f.terms()) {
    const int i = BiPoly::key_i(k), j = BiPoly::key_j(k);
    mpz_class num = c.get_num() % p, den = c.get_den() % p;
    if (num < 0) num += p;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
    std::uint64_t term = mpz_class(num * inv % p).get_ui();
    term = term * pw(w.st[0], d.m - i) % p * pw(w.st[1], i) % p;
    term = term * pw(w.uv[0], d.n - j) % p * pw(w.uv[1], j) % p;
    acc = (acc + term) % p;
  }
  return acc;
}

bool nonzero_point(const BasepointWitness& w) {
  return (w.st[0] % w.prime || w.st[1] % w.prime) && (w.uv[0] % w.prime || w.uv[1] % w.prime);
}

}  // namespace

TEST(Basepoint, TwoToOneIsFree) {
  const BasepointResult r = basepoint_check(fixture::two_to_one());
  EXPECT_TRUE(r.free);
  EXPECT_EQ(r.status, BasepointStatus::Free);
  ASSERT_TRUE(r.certifying_degree.has_value());
  EXPECT_EQ(r.certificate, "surjective-at-" + std::to_string(r.certifying_degree->m) + "-" +
                               std::to_string(r.certifying_degree->n));
  EXPECT_TRUE(multiplication_surjective(fixture::two_to_one(), *r.certifying_degree));
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Basepoint, MonomialsAreFree) {
  const TPSurface s(2, 2, {bp("s^2*u^2"), bp("s^2*v^2"), bp("t^2*u^2"), bp("t^2*v^2")});
  EXPECT_TRUE(basepoint_check(s).free);
}

TEST(Basepoint, RandomLinearInstancesAreFree) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 6; ++trial)
    EXPECT_TRUE(basepoint_check(fixture::random_linear(2 + trial % 2, 2 + trial / 3, rng)).free);
}

TEST(Basepoint, PQFamilyHasWitness) {
  std::mt19937_64 rng(2);
  int found = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const BiPoly p = random_form({2, 1}, rng), q = random_form({2, 1}, rng);
    const TPSurface s(2, 2, {p * BiPoly::u(), p * BiPoly::v(), q * BiPoly::u(), q * BiPoly::v()});
    const BasepointResult r = basepoint_check(s, {.seed = static_cast<std::uint64_t>(trial)});
    EXPECT_FALSE(r.free);
    EXPECT_FALSE(r.certifying_degree.has_value());
    if (!r.witness) continue;
    ++found;
    EXPECT_EQ(r.status, BasepointStatus::NotFree);
    EXPECT_EQ(r.certificate, "finite-field-witness");
    const BasepointWitness& w = *r.witness;
    EXPECT_TRUE(nonzero_point(w));
    for (const auto& f : s.p()) EXPECT_EQ(eval_mod(f, w), 0u);
    // the witness lies on V(p, q)
    EXPECT_EQ(eval_mod(p, w), 0u);
    EXPECT_EQ(eval_mod(q, w), 0u);
  }
  EXPECT_GE(found, 9);
}

TEST(Basepoint, RationalBasepointFound) {
  // every generator vanishes at s = u = 0
  std::mt19937_64 rng(3);
  std::array<BiPoly, 4> gens;
  for (auto& g : gens) g = random_form({1, 2}, rng) * BiPoly::s() + random_form({2, 1}, rng) * BiPoly::u();
  const TPSurface s(2, 2, gens);
  const BasepointResult r = basepoint_check(s);
  EXPECT_FALSE(r.free);
  ASSERT_TRUE(r.witness.has_value());
  for (const auto& f : s.p()) EXPECT_EQ(eval_mod(f, *r.witness), 0u);
}

TEST(Basepoint, NoWitnessWithoutTrialsIsUnknown) {
  std::mt19937_64 rng(4);
  const BasepointResult r = basepoint_check(fixture::pq_family(rng), {.seed = 1, .trials = 0});
  EXPECT_FALSE(r.free);
  EXPECT_EQ(r.status, BasepointStatus::Unknown);
  EXPECT_EQ(r.certificate, "no-surjectivity-no-witness");
  EXPECT_EQ(to_string(r.status), std::string("unknown"));
}

TEST(Basepoint, DeterministicPerSeed) {
  std::mt19937_64 rng(5);
  const TPSurface s = fixture::pq_family(rng);
  const BasepointResult a = basepoint_check(s, {.seed = 7}), b = basepoint_check(s, {.seed = 7});
  ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
  EXPECT_EQ(a.log, b.log);
  if (a.witness) {
    EXPECT_EQ(a.witness->prime, b.witness->prime);
    EXPECT_EQ(a.witness->st, b.witness->st);
    EXPECT_EQ(a.witness->uv, b.witness->uv);
  }
}
