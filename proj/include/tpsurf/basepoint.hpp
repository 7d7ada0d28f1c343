#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tpsurf/exactla.hpp"
#include "tpsurf/modp.hpp"
#include "tpsurf/surface.hpp"

namespace tpsurf {

enum class BasepointStatus { Free, NotFree, Unknown };

inline const char* to_string(BasepointStatus s) {
  switch (s) {
    case BasepointStatus::Free: return "free";
    case BasepointStatus::NotFree: return "not_free";
    case BasepointStatus::Unknown: return "unknown";
  }
  return "?";
}

/// A common zero of p0..p3 over F_prime, in homogeneous coordinates.
struct BasepointWitness {
  std::uint64_t prime = 0;
  std::array<std::uint64_t, 2> st{};
  std::array<std::uint64_t, 2> uv{};
};

struct BasepointResult {
  bool free = false;
  BasepointStatus status = BasepointStatus::Unknown;
  std::string certificate;
  std::optional<BiDeg> certifying_degree;
  std::optional<BasepointWitness> witness;
  std::vector<std::string> log;
};

struct BasepointOptions {
  std::uint64_t seed = 1;
  int trials = 8;
};

namespace detail {

using modp::u64;
using modp::UPoly;

/// Coefficients c[i][j] of s^(m-i) t^i u^(n-j) v^j reduced mod p.
struct ModForm {
  BiDeg d;
  std::vector<std::vector<u64>> c;
};

inline std::optional<ModForm> reduce_form(const BiPoly& f, u64 p) {
  ModForm out{f.deg(), std::vector<std::vector<u64>>(static_cast<std::size_t>(f.deg().m + 1),
                                                     std::vector<u64>(static_cast<std::size_t>(f.deg().n + 1), 0))};
  for (const auto& [k, q] : f.terms()) {
    const auto r = modp::reduce(q, p);
    if (!r) return std::nullopt;
    out.c[static_cast<std::size_t>(BiPoly::key_i(k))][static_cast<std::size_t>(BiPoly::key_j(k))] = *r;
  }
  return out;
}

/// Affine chart: s=1 or t=1 on the first factor, u=1 or v=1 on the second.
struct Chart {
  bool s_one;
  bool u_one;
};

/// f(x, y) in the chart with x fixed, as a polynomial in y.
inline UPoly restrict_to_x(const ModForm& f, Chart ch, u64 x, u64 p) {
  const int m = f.d.m, n = f.d.n;
  std::vector<u64> xp(static_cast<std::size_t>(m + 1), 1);
  for (int e = 1; e <= m; ++e) xp[static_cast<std::size_t>(e)] = modp::mulmod(xp[static_cast<std::size_t>(e - 1)], x, p);
  UPoly out(static_cast<std::size_t>(n + 1), 0);
  for (int i = 0; i <= m; ++i) {
    const u64 w = xp[static_cast<std::size_t>(ch.s_one ? i : m - i)];
    for (int j = 0; j <= n; ++j) {
      const u64 c = f.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c == 0) continue;
      auto& slot = out[static_cast<std::size_t>(ch.u_one ? j : n - j)];
      slot = modp::addmod(slot, modp::mulmod(c, w, p), p);
    }
  }
  return out;
}

/// Sylvester resultant of two polynomials of formal degree n.
inline u64 sylvester(const UPoly& f, const UPoly& g, int n, u64 p) {
  const auto sz = static_cast<std::size_t>(2 * n);
  if (sz == 0) return 1;
  std::vector<std::vector<u64>> m(sz, std::vector<u64>(sz, 0));
  for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
      // highest power first
      m[r][r + k] = f[static_cast<std::size_t>(n) - k];
      m[r + static_cast<std::size_t>(n)][r + k] = g[static_cast<std::size_t>(n) - k];
    }
  return modp::det(std::move(m), p);
}

inline std::optional<BasepointWitness> search_chart(const std::array<ModForm, 4>& f, const ModForm& h1,
                                                    const ModForm& h2, Chart ch, u64 p, std::mt19937_64& rng) {
  const int m = h1.d.m, n = h1.d.n;
  const int npts = 2 * m * n + 1;
  std::vector<u64> xs, ys;
  for (int k = 0; k < npts; ++k) {
    const auto x = static_cast<u64>(k);
    xs.push_back(x);
    ys.push_back(sylvester(restrict_to_x(h1, ch, x, p), restrict_to_x(h2, ch, x, p), n, p));
  }
  UPoly res = modp::interpolate(xs, ys, p);
  modp::trim(res);
  if (res.empty()) return std::nullopt;
  for (u64 x0 : modp::roots(res, p, rng)) {
    UPoly g;
    for (const auto& fi : f) {
      UPoly r = restrict_to_x(fi, ch, x0, p);
      modp::trim(r);
      if (r.empty()) continue;
      g = g.empty() ? modp::monic(r, p) : modp::gcd(g, r, p);
    }
    std::optional<u64> y0;
    if (g.empty())
      y0 = 0;
    else if (modp::degree(g) > 0) {
      const auto ys0 = modp::roots(g, p, rng);
      if (!ys0.empty()) y0 = ys0.front();
    }
    if (!y0) continue;
    BasepointWitness w;
    w.prime = p;
    w.st = ch.s_one ? std::array<u64, 2>{1, x0} : std::array<u64, 2>{x0, 1};
    w.uv = ch.u_one ? std::array<u64, 2>{1, *y0} : std::array<u64, 2>{*y0, 1};
    return w;
  }
  return std::nullopt;
}

inline u64 eval_form(const ModForm& f, const BasepointWitness& w) {
  const u64 p = w.prime;
  u64 acc = 0;
  for (int i = 0; i <= f.d.m; ++i)
    for (int j = 0; j <= f.d.n; ++j) {
      const u64 c = f.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c == 0) continue;
      u64 t = c;
      t = modp::mulmod(t, modp::powmod(w.st[0], static_cast<u64>(f.d.m - i), p), p);
      t = modp::mulmod(t, modp::powmod(w.st[1], static_cast<u64>(i), p), p);
      t = modp::mulmod(t, modp::powmod(w.uv[0], static_cast<u64>(f.d.n - j), p), p);
      t = modp::mulmod(t, modp::powmod(w.uv[1], static_cast<u64>(j), p), p);
      acc = modp::addmod(acc, t, p);
    }
  return acc;
}

}  // namespace detail

/// True when (R_mu)^4 -> R_{mu+(a,b)} is onto.
inline bool multiplication_surjective(const TPSurface& s, BiDeg mu) {
  const MatQ m = multiplication_matrix(s, mu);
  return rank(m) == m.rows();
}

/// Exact when a surjectivity certificate exists; otherwise searches for a
/// common zero over random prime fields.
inline BasepointResult basepoint_check(const TPSurface& s, const BasepointOptions& opt = {}) {
  BasepointResult out;
  const int a = s.a(), b = s.b();
  for (BiDeg mu : {BiDeg{2 * a - 1, b - 1}, BiDeg{a - 1, 2 * b - 1}, BiDeg{2 * a - 1, 2 * b - 1}, BiDeg{3 * a, 3 * b}}) {
    const bool onto = multiplication_surjective(s, mu);
    out.log.push_back("surjectivity at " + mu.str() + ": " + (onto ? "yes" : "no"));
    if (onto) {
      out.free = true;
      out.status = BasepointStatus::Free;
      out.certifying_degree = mu;
      out.certificate = "surjective-at-" + std::to_string(mu.m) + "-" + std::to_string(mu.n);
      return out;
    }
  }

  std::mt19937_64 rng(opt.seed);
  for (int trial = 0; trial < opt.trials; ++trial) {
    const detail::u64 p = modp::random_prime(rng);
    std::array<detail::ModForm, 4> f;
    bool ok = true;
    for (std::size_t i = 0; i < 4 && ok; ++i) {
      auto r = detail::reduce_form(s.p(i), p);
      if (r)
        f[i] = std::move(*r);
      else
        ok = false;
    }
    if (!ok) {
      out.log.push_back("trial " + std::to_string(trial) + ": prime " + std::to_string(p) + " divides a denominator");
      continue;
    }
    std::uniform_int_distribution<detail::u64> coef(1, p - 1);
    detail::ModForm h1{s.bideg(), f[0].c}, h2{s.bideg(), f[0].c};
    for (auto* h : {&h1, &h2}) {
      std::array<detail::u64, 4> w{coef(rng), coef(rng), coef(rng), coef(rng)};
      for (std::size_t i = 0; i < h->c.size(); ++i)
        for (std::size_t j = 0; j < h->c[i].size(); ++j) {
          detail::u64 acc = 0;
          for (std::size_t k = 0; k < 4; ++k) acc = modp::addmod(acc, modp::mulmod(w[k], f[k].c[i][j], p), p);
          h->c[i][j] = acc;
        }
    }
    for (detail::Chart ch : {detail::Chart{true, true}, detail::Chart{true, false}, detail::Chart{false, true},
                             detail::Chart{false, false}}) {
      auto w = detail::search_chart(f, h1, h2, ch, p, rng);
      if (!w) continue;
      bool zero = true;
      for (const auto& fi : f) zero = zero && detail::eval_form(fi, *w) == 0;
      if (!zero) continue;
      out.log.push_back("trial " + std::to_string(trial) + ": common zero mod " + std::to_string(p));
      out.free = false;
      out.status = BasepointStatus::NotFree;
      out.witness = w;
      out.certificate = "finite-field-witness";
      return out;
    }
    out.log.push_back("trial " + std::to_string(trial) + ": no common zero mod " + std::to_string(p));
  }
  out.free = false;
  out.status = BasepointStatus::Unknown;
  out.certificate = "no-surjectivity-no-witness";
  return out;
}

}  // namespace tpsurf
