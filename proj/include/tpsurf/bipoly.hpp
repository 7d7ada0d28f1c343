#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tpsurf/bideg.hpp"
#include "tpsurf/error.hpp"
#include "tpsurf/rational.hpp"

namespace tpsurf {

/// Bihomogeneous polynomial in s,t (degree (1,0)) and u,v (degree (0,1)).
///
/// A monomial of bidegree (m,n) is addressed by (i,j), standing for
/// s^(m-i) t^i u^(n-j) v^j. Terms are kept sparse with nonzero coefficients,
/// ordered by i then j, which is also the canonical row order used by every
/// coefficient vector and matrix in the library.
class BiPoly {
 public:
  using Key = std::uint32_t;
  using Terms = std::map<Key, Rational>;

  static constexpr Key key(int i, int j) {
    return (static_cast<Key>(i) << 16) | static_cast<Key>(j);
  }
  static constexpr int key_i(Key k) { return static_cast<int>(k >> 16); }
  static constexpr int key_j(Key k) { return static_cast<int>(k & 0xffffu); }

  BiPoly() = default;
  explicit BiPoly(BiDeg d) : deg_(d) {
    if (!d.valid()) fail(ErrorCode::NegativeDegree, "negative bidegree " + d.str());
  }

  static BiPoly monomial(BiDeg d, int i, int j, const Rational& c = 1) {
    BiPoly p(d);
    p.set_coeff(i, j, c);
    return p;
  }
  static BiPoly constant(const Rational& c) { return monomial({0, 0}, 0, 0, c); }
  static BiPoly s() { return monomial({1, 0}, 0, 0); }
  static BiPoly t() { return monomial({1, 0}, 1, 0); }
  static BiPoly u() { return monomial({0, 1}, 0, 0); }
  static BiPoly v() { return monomial({0, 1}, 0, 1); }

  /// Builds the form of bidegree d from a dense vector in canonical order.
  static BiPoly from_coeff_vector(BiDeg d, std::span<const Rational> c) {
    if (c.size() != d.dim())
      fail(ErrorCode::DegreeMismatch, "coefficient vector length does not match " + d.str());
    BiPoly p(d);
    for (int i = 0; i <= d.m; ++i)
      for (int j = 0; j <= d.n; ++j) {
        const auto& q = c[static_cast<std::size_t>(i * (d.n + 1) + j)];
        if (q != 0) p.terms_.emplace_hint(p.terms_.end(), key(i, j), q);
      }
    return p;
  }

  BiDeg deg() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Rational coeff(int i, int j) const {
    auto it = terms_.find(key(i, j));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void set_coeff(int i, int j, const Rational& c) {
    if (i < 0 || i > deg_.m || j < 0 || j > deg_.n)
      fail(ErrorCode::DegreeMismatch, "monomial outside bidegree " + deg_.str());
    if (c == 0)
      terms_.erase(key(i, j));
    else
      terms_[key(i, j)] = c;
  }

  /// Dense coefficients over R_mu; index i*(n+1)+j.
  std::vector<Rational> coeff_vector(BiDeg mu) const {
    if (mu != deg_)
      fail(ErrorCode::DegreeMismatch,
           "coeff_vector: form has bidegree " + deg_.str() + ", asked for " + mu.str());
    std::vector<Rational> out(mu.dim());
    for (const auto& [k, c] : terms_)
      out[static_cast<std::size_t>(key_i(k) * (mu.n + 1) + key_j(k))] = c;
    return out;
  }

  BiPoly& operator+=(const BiPoly& o) {
    require_same_degree(o, "addition");
    for (const auto& [k, c] : o.terms_) accumulate(k, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    require_same_degree(o, "subtraction");
    for (const auto& [k, c] : o.terms_) accumulate(k, -c);
    return *this;
  }
  BiPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [k, q] : terms_) q *= c;
    }
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) { return a *= Rational(-1); }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }

  friend BiPoly operator*(const BiPoly& f, const BiPoly& g) {
    BiPoly r(f.deg_ + g.deg_);
    for (const auto& [kf, cf] : f.terms_)
      for (const auto& [kg, cg] : g.terms_) r.accumulate(kf + kg, cf * cg);
    return r;
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.deg_ == b.deg_ && a.terms_ == b.terms_;
  }

  /// The involution s<->u, t<->v; bidegree (m,n) becomes (n,m).
  BiPoly swapped() const {
    BiPoly r(deg_.swapped());
    for (const auto& [k, c] : terms_) r.terms_.emplace(key(key_j(k), key_i(k)), c);
    return r;
  }

  /// Largest c (up to sign) making all coefficients coprime integers; leading
  /// canonical term positive.
  BiPoly primitive() const {
    std::vector<Rational> c;
    c.reserve(terms_.size());
    for (const auto& [k, q] : terms_) c.push_back(q);
    if (c.empty()) return *this;
    Rational s = primitive_scale(c);
    if (c.front() < 0) s = -s;
    return *this * s;
  }

 private:
  void require_same_degree(const BiPoly& o, const char* what) const {
    if (o.deg_ != deg_)
      fail(ErrorCode::DegreeMismatch,
           std::string(what) + " of bidegrees " + deg_.str() + " and " + o.deg_.str());
  }
  void accumulate(Key k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BiDeg deg_{0, 0};
  Terms terms_;
};

inline BiPoly poly_mul(const BiPoly& f, const BiPoly& g) { return f * g; }

/// Returns q with q*d == f, or throws NotDivisible.
inline BiPoly exact_div(const BiPoly& f, const BiPoly& d) {
  if (d.is_zero()) fail(ErrorCode::ZeroInput, "exact_div by zero");
  const BiDeg fd = f.deg(), dd = d.deg();
  if (!dd.fits_in(fd)) fail(ErrorCode::NotDivisible, "divisor bidegree exceeds dividend");
  const BiDeg qd{fd.m - dd.m, fd.n - dd.n};
  BiPoly q(qd);
  if (f.is_zero()) return q;

  // Lex division on (i,j): leading term is the largest key.
  const auto& [dk, dc] = *d.terms().rbegin();
  const int di = BiPoly::key_i(dk), dj = BiPoly::key_j(dk);
  BiPoly::Terms rem = f.terms();
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    const int ri = BiPoly::key_i(lead->first), rj = BiPoly::key_j(lead->first);
    const int qi = ri - di, qj = rj - dj;
    if (qi < 0 || qj < 0 || qi > qd.m || qj > qd.n)
      fail(ErrorCode::NotDivisible, "form is not divisible");
    const Rational qc = lead->second / dc;
    q.set_coeff(qi, qj, qc);
    const BiPoly::Key shift = BiPoly::key(qi, qj);
    for (const auto& [k, c] : d.terms()) {
      auto [it, inserted] = rem.try_emplace(k + shift, -qc * c);
      if (!inserted) {
        it->second -= qc * c;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return q;
}

inline std::vector<Rational> coeff_vector(const BiPoly& f, BiDeg mu) { return f.coeff_vector(mu); }

/// All monomials of bidegree d in canonical order.
inline std::vector<BiPoly> monomial_basis(BiDeg d) {
  std::vector<BiPoly> out;
  out.reserve(d.dim());
  for (int i = 0; i <= d.m; ++i)
    for (int j = 0; j <= d.n; ++j) out.push_back(BiPoly::monomial(d, i, j));
  return out;
}

}  // namespace tpsurf
