#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace tpsurf {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs_int(const Integer& z) { return abs(z); }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Smallest positive integer c such that c*v is integral and has content 1.
/// Returns 1 for the zero vector.
inline Rational primitive_scale(std::span<const Rational> v) {
  Integer den_lcm = 1;
  for (const auto& q : v)
    if (q != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& q : v) {
    if (q == 0) continue;
    Integer n = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return Rational(1);
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  return s;
}

/// Scales v in place to integer primitive form, first nonzero entry positive.
inline void make_primitive(std::vector<Rational>& v) {
  Rational s = primitive_scale(v);
  for (const auto& q : v) {
    if (q != 0) {
      if (q < 0) s = -s;
      break;
    }
  }
  for (auto& q : v) q *= s;
}

inline Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& z : v) {
    if (z == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace tpsurf
