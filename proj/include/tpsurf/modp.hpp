#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "tpsurf/rational.hpp"

// Arithmetic in F_p for primes below 2^31 and dense univariate polynomials
// over F_p. Used only by the randomized parts of the library.
namespace tpsurf::modp {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }
inline u64 addmod(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 submod(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

/// Deterministic Miller-Rabin for n < 3,215,031,751.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull})
    if (n % q == 0) return n == q;
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Uniform random prime in [2^30, 2^31).
template <class Rng>
u64 random_prime(Rng& rng) {
  std::uniform_int_distribution<u64> dist(u64{1} << 30, (u64{1} << 31) - 1);
  for (;;) {
    u64 n = dist(rng) | 1;
    if (is_prime(n)) return n;
  }
}

/// Reduces q mod p; nullopt when p divides the denominator.
inline std::optional<u64> reduce(const Rational& q, u64 p) {
  const Integer pp(static_cast<unsigned long>(p));
  Integer den = q.get_den() % pp;
  if (den == 0) return std::nullopt;
  Integer num = q.get_num() % pp;
  if (num < 0) num += pp;
  return mulmod(num.get_ui(), invmod(den.get_ui(), p), p);
}

/// Dense univariate polynomial, coefficient of x^i at index i, no trailing zeros.
using UPoly = std::vector<u64>;

inline void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

inline u64 eval(const UPoly& f, u64 x, u64 p) {
  u64 r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = addmod(mulmod(r, x, p), *it, p);
  return r;
}

inline UPoly sub(UPoly a, const UPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

inline UPoly mul(const UPoly& a, const UPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

/// Remainder of a modulo nonzero b.
inline UPoly rem(UPoly a, const UPoly& b, u64 p) {
  const int db = degree(b);
  const u64 inv_lc = invmod(b.back(), p);
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const u64 c = mulmod(a.back(), inv_lc, p);
    for (int i = 0; i <= db; ++i) {
      auto& ai = a[static_cast<std::size_t>(i + shift)];
      ai = submod(ai, mulmod(c, b[static_cast<std::size_t>(i)], p), p);
    }
    trim(a);
  }
  return a;
}

/// Quotient of a by b when b divides a.
inline UPoly quo(UPoly a, const UPoly& b, u64 p) {
  const int db = degree(b);
  if (degree(a) < db) return {};
  UPoly q(static_cast<std::size_t>(degree(a) - db + 1), 0);
  const u64 inv_lc = invmod(b.back(), p);
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const u64 c = mulmod(a.back(), inv_lc, p);
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& ai = a[static_cast<std::size_t>(i + shift)];
      ai = submod(ai, mulmod(c, b[static_cast<std::size_t>(i)], p), p);
    }
    trim(a);
  }
  trim(q);
  return q;
}

inline UPoly monic(UPoly f, u64 p) {
  if (f.empty()) return f;
  const u64 inv = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

/// Monic gcd; the gcd of two zero polynomials is zero.
inline UPoly gcd(UPoly a, UPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

/// base^e modulo f.
inline UPoly powmod(UPoly base, u64 e, const UPoly& f, u64 p) {
  UPoly r{1};
  base = rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = rem(mul(r, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

/// Distinct roots in F_p of a nonzero polynomial, ascending.
template <class Rng>
std::vector<u64> roots(const UPoly& f_in, u64 p, Rng& rng) {
  UPoly f = monic(f_in, p);
  trim(f);
  std::vector<u64> out;
  if (degree(f) <= 0) return out;
  // Product of the distinct linear factors: gcd(f, x^p - x).
  UPoly xp = powmod(UPoly{0, 1}, p, f, p);
  UPoly g = gcd(f, sub(xp, UPoly{0, 1}, p), p);
  std::vector<UPoly> stack{g};
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (!stack.empty()) {
    UPoly h = std::move(stack.back());
    stack.pop_back();
    if (degree(h) <= 0) continue;
    if (degree(h) == 1) {
      out.push_back(submod(0, h[0], p));  // h is monic: x + h0
      continue;
    }
    // Equal-degree splitting with a random shift.
    for (;;) {
      const u64 delta = dist(rng);
      UPoly w = powmod(UPoly{delta, 1}, (p - 1) / 2, h, p);
      UPoly d = gcd(h, sub(w, UPoly{1}, p), p);
      if (degree(d) > 0 && degree(d) < degree(h)) {
        stack.push_back(quo(h, d, p));
        stack.push_back(std::move(d));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Interpolates the polynomial of degree < xs.size() through (xs[i], ys[i]).
inline UPoly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  const std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<u64> c = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      c[i] = mulmod(submod(c[i], c[i - 1], p), invmod(submod(xs[i], xs[i - j], p), p), p);
      if (i == j) break;
    }
  UPoly r;
  for (std::size_t k = n; k-- > 0;) {
    // r = r * (x - xs[k]) + c[k]
    UPoly nr(r.size() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      nr[i + 1] = addmod(nr[i + 1], r[i], p);
      nr[i] = submod(nr[i], mulmod(r[i], xs[k], p), p);
    }
    if (nr.empty()) nr.push_back(0);
    nr[0] = addmod(nr[0], c[k], p);
    r = std::move(nr);
  }
  trim(r);
  return r;
}

/// Determinant of a dense square matrix over F_p (destroys the input).
inline u64 det(std::vector<std::vector<u64>> a, u64 p) {
  const std::size_t n = a.size();
  u64 d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      d = submod(0, d, p);
    }
    d = mulmod(d, a[k][k], p);
    const u64 inv = invmod(a[k][k], p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const u64 f = mulmod(a[i][k], inv, p);
      for (std::size_t j = k; j < n; ++j) a[i][j] = submod(a[i][j], mulmod(f, a[k][j], p), p);
    }
  }
  return d;
}

}  // namespace tpsurf::modp
