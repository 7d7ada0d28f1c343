#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "tpsurf/bipoly.hpp"
#include "tpsurf/error.hpp"
#include "tpsurf/rational.hpp"

namespace tpsurf {

using Exponent = std::array<int, 4>;

/// Packed exponent of a monomial in x0..x3, 16 bits per variable with x0 in
/// the high bits, so numeric order is lex order with x0 > x1 > x2 > x3.
using XKey = std::uint64_t;

constexpr XKey pack(const Exponent& e) {
  return (static_cast<XKey>(e[0]) << 48) | (static_cast<XKey>(e[1]) << 32) |
         (static_cast<XKey>(e[2]) << 16) | static_cast<XKey>(e[3]);
}
constexpr Exponent unpack(XKey k) {
  return {static_cast<int>(k >> 48), static_cast<int>((k >> 32) & 0xffff),
          static_cast<int>((k >> 16) & 0xffff), static_cast<int>(k & 0xffff)};
}
constexpr int exponent_of(XKey k, int var) {
  return static_cast<int>((k >> (16 * (3 - var))) & 0xffff);
}
constexpr XKey unit_key(int var) { return XKey{1} << (16 * (3 - var)); }

/// Homogeneous polynomial in x0..x3 with rational coefficients. Terms iterate
/// from the lex-largest monomial down.
class XPoly {
 public:
  using Terms = std::map<XKey, Rational, std::greater<>>;

  XPoly() = default;
  explicit XPoly(int deg) : deg_(deg) {
    if (deg < 0) fail(ErrorCode::NegativeDegree, "negative degree");
  }

  static XPoly constant(const Rational& c) {
    XPoly p(0);
    if (c != 0) p.terms_.emplace(0, c);
    return p;
  }
  static XPoly var(int i, const Rational& c = 1) {
    XPoly p(1);
    if (c != 0) p.terms_.emplace(unit_key(i), c);
    return p;
  }
  static XPoly monomial(const Exponent& e, const Rational& c = 1) {
    XPoly p(e[0] + e[1] + e[2] + e[3]);
    if (c != 0) p.terms_.emplace(pack(e), c);
    return p;
  }
  /// c0*x0 + c1*x1 + c2*x2 + c3*x3.
  static XPoly linear(std::span<const Rational> c) {
    XPoly p(1);
    for (int i = 0; i < 4; ++i)
      if (c[static_cast<std::size_t>(i)] != 0) p.terms_.emplace(unit_key(i), c[static_cast<std::size_t>(i)]);
    return p;
  }

  int deg() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(pack(e));
    return it == terms_.end() ? Rational(0) : it->second;
  }
  void set_coeff(const Exponent& e, const Rational& c) {
    if (e[0] + e[1] + e[2] + e[3] != deg_)
      fail(ErrorCode::DegreeMismatch, "monomial degree differs from form degree");
    if (c == 0)
      terms_.erase(pack(e));
    else
      terms_[pack(e)] = c;
  }
  /// Adds c to the coefficient of the packed monomial k (caller keeps degree).
  void add_term(XKey k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Highest exponent of x_var occurring; -1 for the zero form.
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, exponent_of(k, var));
    return d;
  }
  bool uses_var(int var) const { return degree_in(var) > 0; }

  XPoly& operator+=(const XPoly& o) {
    require_same_degree(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  XPoly& operator-=(const XPoly& o) {
    require_same_degree(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  XPoly& operator*=(const Rational& c) {
    if (c == 0)
      terms_.clear();
    else
      for (auto& [k, q] : terms_) q *= c;
    return *this;
  }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator-(XPoly a) { return a *= Rational(-1); }
  friend XPoly operator*(XPoly a, const Rational& c) { return a *= c; }
  friend XPoly operator*(const Rational& c, XPoly a) { return a *= c; }

  friend XPoly operator*(const XPoly& f, const XPoly& g) {
    XPoly r(f.deg_ + g.deg_);
    for (const auto& [kf, cf] : f.terms_)
      for (const auto& [kg, cg] : g.terms_) r.add_term(kf + kg, cf * cg);
    return r;
  }

  friend bool operator==(const XPoly& a, const XPoly& b) {
    return a.deg_ == b.deg_ && a.terms_ == b.terms_;
  }

  XPoly pow(int k) const {
    XPoly r = constant(1);
    XPoly base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

  /// Partial derivative in x_var.
  XPoly derivative(int var) const {
    if (deg_ == 0) return XPoly(0);
    XPoly r(deg_ - 1);
    for (const auto& [k, c] : terms_) {
      const int e = exponent_of(k, var);
      if (e > 0) r.terms_.emplace(k - unit_key(var), c * e);
    }
    return r;
  }

  Rational evaluate(std::span<const Rational> x) const {
    Rational acc = 0;
    for (const auto& [k, c] : terms_) {
      Rational m = c;
      const Exponent e = unpack(k);
      for (int i = 0; i < 4; ++i) {
        if (e[static_cast<std::size_t>(i)] == 0) continue;
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), x[static_cast<std::size_t>(i)].get_num_mpz_t(),
                   static_cast<unsigned long>(e[static_cast<std::size_t>(i)]));
        mpz_pow_ui(p.get_den_mpz_t(), x[static_cast<std::size_t>(i)].get_den_mpz_t(),
                   static_cast<unsigned long>(e[static_cast<std::size_t>(i)]));
        m *= p;
      }
      acc += m;
    }
    return acc;
  }

  /// Integer primitive with a positive coefficient on the lex-first monomial.
  XPoly normalized() const {
    if (terms_.empty()) return *this;
    std::vector<Rational> c;
    c.reserve(terms_.size());
    for (const auto& [k, q] : terms_) c.push_back(q);
    Rational s = primitive_scale(c);
    if (terms_.begin()->second < 0) s = -s;
    return *this * s;
  }

  /// Permutes and scales variables: x_i -> scale[i] * x_{perm[i]}.
  XPoly rename(const std::array<int, 4>& perm, std::span<const Rational> scale) const {
    XPoly r(deg_);
    for (const auto& [k, c] : terms_) {
      const Exponent e = unpack(k);
      Exponent ne{0, 0, 0, 0};
      Rational nc = c;
      for (int i = 0; i < 4; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        ne[static_cast<std::size_t>(perm[ui])] += e[ui];
        for (int p = 0; p < e[ui]; ++p) nc *= scale[ui];
      }
      r.add_term(pack(ne), nc);
    }
    return r;
  }

 private:
  // The zero form adopts the degree of whatever is added to it.
  void require_same_degree(const XPoly& o) {
    if (o.deg_ == deg_ || o.is_zero()) return;
    if (is_zero()) {
      deg_ = o.deg_;
      return;
    }
    fail(ErrorCode::DegreeMismatch,
         "adding forms of degrees " + std::to_string(deg_) + " and " + std::to_string(o.deg_));
  }

  int deg_ = 0;
  Terms terms_;
};

/// True when a == c*b for a nonzero rational c, which is stored in ratio.
inline bool proportional(const XPoly& a, const XPoly& b, Rational* ratio = nullptr) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.size() != b.size() || a.deg() != b.deg()) return false;
  const Rational c = a.terms().begin()->second / b.terms().begin()->second;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (ia->second != c * ib->second) return false;
  }
  if (ratio) *ratio = c;
  return true;
}

namespace detail {

using SubTerm = std::pair<Exponent, Rational>;

/// Horner in x_v with coefficients in x_{v+1}..x_3; every term has total
/// degree deg in those variables.
inline BiPoly horner(std::vector<SubTerm> terms, std::size_t v, int deg, std::span<const BiPoly> q) {
  const BiDeg d = q[0].deg();
  if (terms.empty()) return BiPoly(deg * d);
  if (v == 3) {
    BiPoly r = BiPoly::constant(terms.front().second);
    for (int k = 0; k < deg; ++k) r = r * q[3];
    return r;
  }
  std::map<int, std::vector<SubTerm>> by_exp;
  for (auto& t : terms) {
    const int e = t.first[v];
    by_exp[e].push_back(std::move(t));
  }
  const int top = by_exp.rbegin()->first;
  BiPoly acc = horner(std::move(by_exp[top]), v + 1, deg - top, q);
  for (int e = top - 1; e >= 0; --e) {
    acc = acc * q[v];
    auto it = by_exp.find(e);
    if (it != by_exp.end()) acc += horner(std::move(it->second), v + 1, deg - e, q);
  }
  return acc;
}

}  // namespace detail

/// F(q0, q1, q2, q3), a form of bidegree deg(F) * deg(q_i).
inline BiPoly substitute(const XPoly& F, std::span<const BiPoly> q) {
  if (q.size() != 4) fail(ErrorCode::DegreeMismatch, "substitute needs four forms");
  const BiDeg d = q[0].deg();
  for (const auto& p : q)
    if (p.deg() != d) fail(ErrorCode::DegreeMismatch, "substituted forms differ in bidegree");
  if (F.is_zero()) return BiPoly(F.deg() * d);
  std::vector<detail::SubTerm> terms;
  for (const auto& [k, c] : F.terms()) terms.emplace_back(unpack(k), c);
  return detail::horner(std::move(terms), 0, F.deg(), q);
}

}  // namespace tpsurf
