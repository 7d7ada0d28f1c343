#pragma once

#include <array>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "tpsurf/error.hpp"
#include "tpsurf/modp.hpp"
#include "tpsurf/rational.hpp"
#include "tpsurf/xpoly.hpp"

namespace tpsurf {

namespace detail {

/// Integer polynomial in x0..x3, not necessarily homogeneous. Used for gcds.
using ZTerms = std::map<XKey, Integer, std::greater<>>;

struct ZPoly {
  ZTerms terms;

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first == 0); }

  void add(XKey k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  int degree_in(int v) const {
    int d = -1;
    for (const auto& [k, c] : terms) d = std::max(d, exponent_of(k, v));
    return d;
  }

  const Integer& lc() const { return terms.begin()->second; }
};

inline ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) r.add(ka + kb, ca * cb);
  return r;
}
inline ZPoly operator-(ZPoly a, const ZPoly& b) {
  for (const auto& [k, c] : b.terms) a.add(k, -c);
  return a;
}
inline ZPoly scaled(ZPoly a, const Integer& c) {
  if (c == 0) return {};
  for (auto& [k, q] : a.terms) q *= c;
  return a;
}
inline ZPoly divexact_int(ZPoly a, const Integer& c) {
  for (auto& [k, q] : a.terms) mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), c.get_mpz_t());
  return a;
}

inline Integer int_content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& [k, c] : a.terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Exact multivariate division in lex order; false if b does not divide a.
inline bool try_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  q.terms.clear();
  if (b.is_zero()) return false;
  ZPoly r = a;
  const XKey bk = b.terms.begin()->first;
  const Integer& bc = b.terms.begin()->second;
  const Exponent be = unpack(bk);
  while (!r.is_zero()) {
    const auto [rk, rc] = *r.terms.begin();
    const Exponent re = unpack(rk);
    for (std::size_t i = 0; i < 4; ++i)
      if (re[i] < be[i]) return false;
    if (!mpz_divisible_p(rc.get_mpz_t(), bc.get_mpz_t())) return false;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), bc.get_mpz_t());
    const XKey qk = rk - bk;
    q.add(qk, qc);
    for (const auto& [k, c] : b.terms) r.add(k + qk, -qc * c);
  }
  return true;
}

inline ZPoly divide(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!try_divide(a, b, q)) fail(ErrorCode::Internal, "inexact multivariate division");
  return q;
}

/// Coefficients of a as a polynomial in x_v; entry i holds the coefficient of x_v^i.
inline std::vector<ZPoly> coefficients_in(const ZPoly& a, int v) {
  std::vector<ZPoly> out(static_cast<std::size_t>(std::max(a.degree_in(v), -1) + 1));
  for (const auto& [k, c] : a.terms) {
    const int e = exponent_of(k, v);
    out[static_cast<std::size_t>(e)].add(k - static_cast<XKey>(e) * unit_key(v), c);
  }
  return out;
}

inline ZPoly times_var_power(ZPoly a, int v, int e) {
  ZPoly r;
  const XKey shift = static_cast<XKey>(e) * unit_key(v);
  for (auto& [k, c] : a.terms) r.terms.emplace(k + shift, std::move(c));
  return r;
}

/// Highest variable index occurring in a, or -1 for constants.
inline int main_var(const ZPoly& a) {
  for (int v = 3; v >= 0; --v)
    if (a.degree_in(v) > 0) return v;
  return -1;
}

inline ZPoly gcd(const ZPoly& a, const ZPoly& b);
template <class Rng>
bool certify_coprime(const ZPoly& a, const ZPoly& b, Rng& rng);

/// gcd of the coefficients of a with respect to x_v.
inline ZPoly content_in(const ZPoly& a, int v) {
  ZPoly g;
  for (const auto& c : coefficients_in(a, v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

/// Pseudo-remainder of a by b with respect to x_v.
inline ZPoly prem(ZPoly a, const ZPoly& b, int v) {
  const int db = b.degree_in(v);
  const std::vector<ZPoly> bc = coefficients_in(b, v);
  const ZPoly& lb = bc.back();
  int da = a.degree_in(v);
  while (!a.is_zero() && da >= db) {
    std::vector<ZPoly> ac = coefficients_in(a, v);
    const ZPoly la = ac.back();
    // a = lb*a - la*x^(da-db)*b
    ZPoly t = times_var_power(la * b, v, da - db);
    a = lb * a - t;
    da = a.degree_in(v);
  }
  return a;
}

/// Sign-normalized gcd: positive leading coefficient in lex order.
inline ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    ZPoly g = a.is_zero() ? b : a;
    g = divexact_int(g, int_content(g));
    if (g.lc() < 0) g = scaled(g, -1);
    return g;
  }
  const int v = std::max(main_var(a), main_var(b));
  if (v < 0) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.lc().get_mpz_t(), b.lc().get_mpz_t());
    ZPoly r;
    r.add(0, g);
    return r;
  }
  if (a.degree_in(v) <= 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) <= 0) return gcd(content_in(a, v), b);

  const ZPoly ca = content_in(a, v), cb = content_in(b, v);
  const ZPoly c = gcd(ca, cb);
  ZPoly f = divide(a, ca), g = divide(b, cb);
  f = divexact_int(f, int_content(f));
  g = divexact_int(g, int_content(g));
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  {
    std::mt19937_64 rng(0x9cd5ULL ^ (f.terms.size() << 20) ^ g.terms.size());
    if (certify_coprime(f, g, rng)) {
      ZPoly out = c;
      out = divexact_int(out, int_content(out));
      if (out.lc() < 0) out = scaled(out, -1);
      return out;
    }
  }
  // Primitive PRS.
  while (!g.is_zero() && g.degree_in(v) > 0) {
    ZPoly r = prem(f, g, v);
    f = std::move(g);
    if (r.is_zero()) {
      g = {};
      break;
    }
    g = divide(r, content_in(r, v));
    g = divexact_int(g, int_content(g));
  }
  ZPoly h;
  if (g.is_zero()) {
    h = divide(f, content_in(f, v));
  } else {
    h.add(0, 1);  // g is a nonzero constant in x_v: coprime parts
  }
  ZPoly out = c * h;
  out = divexact_int(out, int_content(out));
  if (out.lc() < 0) out = scaled(out, -1);
  return out;
}

inline ZPoly to_zpoly(const XPoly& f) {
  std::vector<Rational> c;
  for (const auto& [k, q] : f.terms()) c.push_back(q);
  const Rational s = primitive_scale(c);
  ZPoly r;
  for (const auto& [k, q] : f.terms()) {
    Rational x = q * s;
    r.terms.emplace(k, x.get_num());
  }
  return r;
}

inline XPoly from_zpoly(const ZPoly& f, int deg) {
  XPoly r(deg);
  for (const auto& [k, c] : f.terms) r.add_term(k, Rational(c));
  return r;
}

/// Certifies gcd(a, b) == 1 by univariate images modulo a random prime: for
/// every variable w of a, specializing the other variables keeps deg_w a and
/// leaves coprime images. False means "not certified", not "not coprime".
template <class Rng>
bool certify_coprime(const ZPoly& a, const ZPoly& b, Rng& rng) {
  const modp::u64 p = modp::random_prime(rng);
  std::uniform_int_distribution<modp::u64> dist(1, p - 1);
  const Integer pz(static_cast<unsigned long>(p));
  for (int w = 0; w < 4; ++w) {
    const int dw = a.degree_in(w);
    if (dw <= 0) continue;
    std::array<modp::u64, 4> point{};
    for (auto& x : point) x = dist(rng);
    auto image = [&](const ZPoly& f) {
      modp::UPoly u(static_cast<std::size_t>(std::max(f.degree_in(w), 0) + 1), 0);
      for (const auto& [k, c] : f.terms) {
        Integer cm = c % pz;
        if (cm < 0) cm += pz;
        modp::u64 term = cm.get_ui();
        for (int i = 0; i < 4; ++i) {
          if (i == w) continue;
          term = modp::mulmod(term, modp::powmod(point[static_cast<std::size_t>(i)],
                                                 static_cast<modp::u64>(exponent_of(k, i)), p), p);
        }
        auto& slot = u[static_cast<std::size_t>(exponent_of(k, w))];
        slot = modp::addmod(slot, term, p);
      }
      modp::trim(u);
      return u;
    };
    const modp::UPoly ia = image(a), ib = image(b);
    if (modp::degree(ia) != dw) return false;
    if (modp::degree(modp::gcd(ia, ib, p)) != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Product of the distinct irreducible factors of G, normalized to integer
/// primitive form with a positive lex-leading coefficient.
inline XPoly squarefree_part(const XPoly& G) {
  if (G.is_zero()) fail(ErrorCode::ZeroInput, "squarefree_part of zero");
  if (G.deg() == 0) return XPoly::constant(1);
  const detail::ZPoly g = detail::to_zpoly(G);

  int first_var = 0;
  while (!G.uses_var(first_var)) ++first_var;
  const detail::ZPoly d0 = detail::to_zpoly(G.derivative(first_var));

  // gcd(G, dG/dx_v) == 1 already means G has no repeated factor.
  std::mt19937_64 rng(0x5eed5eedULL ^ static_cast<std::uint64_t>(G.size()));
  for (int attempt = 0; attempt < 2; ++attempt)
    if (detail::certify_coprime(g, d0, rng)) return G.normalized();

  detail::ZPoly d = detail::gcd(g, d0);
  for (int v = first_var + 1; v < 4 && !d.is_constant(); ++v) {
    if (!G.uses_var(v)) continue;
    d = detail::gcd(d, detail::to_zpoly(G.derivative(v)));
  }
  if (d.is_constant()) return G.normalized();
  int ddeg = 0;
  for (int v = 0; v < 4; ++v) ddeg += std::max(0, exponent_of(d.terms.begin()->first, v));
  const detail::ZPoly q = detail::divide(g, d);
  return detail::from_zpoly(q, G.deg() - ddeg).normalized();
}

}  // namespace tpsurf
