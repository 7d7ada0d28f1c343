#pragma once

// Slow, obviously-correct reference computations used to check the library.

#include <array>
#include <ostream>
#include <random>
#include <vector>

#include "tpsurf/tpsurf.hpp"

namespace tpsurf {

// readable gtest failure messages
inline void PrintTo(const BiPoly& f, std::ostream* os) { *os << to_string(f) << " in " << f.deg(); }
inline void PrintTo(const XPoly& f, std::ostream* os) { *os << to_string(f) << " (deg " << f.deg() << ")"; }
inline void PrintTo(const BiDeg& d, std::ostream* os) { *os << d; }

}  // namespace tpsurf

namespace oracle {

using tpsurf::BiPoly;
using tpsurf::MatQ;
using tpsurf::MatX;
using tpsurf::Rational;
using tpsurf::XPoly;

inline Rational mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational add(const Rational& a, const Rational& b) { return a + b; }
inline Rational neg(const Rational& a) { return -a; }

inline XPoly mul(const XPoly& a, const XPoly& b) { return a * b; }
inline XPoly neg(const XPoly& a) { return -a; }
inline XPoly add(const XPoly& a, const XPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return a + b;
}

/// Laplace expansion along the first row.
template <class T>
T cofactor_det(const tpsurf::Matrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  if (n == 0) return one;
  if (n == 1) return m(0, 0);
  T acc{};
  bool have = false;
  for (std::size_t c = 0; c < n; ++c) {
    tpsurf::Matrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    T term = mul(m(0, c), cofactor_det(minor, one));
    if (c % 2) term = neg(term);
    acc = have ? add(acc, term) : term;
    have = true;
  }
  return acc;
}

/// Plain Gauss-Jordan over Q.
inline std::size_t gauss_rank(MatQ m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(piv, k));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

/// f(s,t,u,v) at a rational point.
inline Rational eval(const BiPoly& f, const std::array<Rational, 4>& x) {
  Rational acc = 0;
  const auto d = f.deg();
  for (const auto& [k, c] : f.terms()) {
    const int i = BiPoly::key_i(k), j = BiPoly::key_j(k);
    Rational t = c;
    for (int e = 0; e < d.m - i; ++e) t *= x[0];
    for (int e = 0; e < i; ++e) t *= x[1];
    for (int e = 0; e < d.n - j; ++e) t *= x[2];
    for (int e = 0; e < j; ++e) t *= x[3];
    acc += t;
  }
  return acc;
}

template <class Rng>
Rational small_rational(Rng& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

template <class Rng>
std::array<Rational, 4> random_point(Rng& rng) {
  return {small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng)};
}

/// Random matrix of linear forms with small integer coefficients; some entries zero.
template <class Rng>
MatX random_matx(std::size_t rows, std::size_t cols, Rng& rng, int bound = 5) {
  std::uniform_int_distribution<int> c(-bound, bound);
  std::bernoulli_distribution zero(0.25);
  MatX m(rows, cols, XPoly(1));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < cols; ++k) {
      if (zero(rng)) continue;
      std::array<Rational, 4> v{c(rng), c(rng), c(rng), c(rng)};
      m(r, k) = XPoly::linear(v);
    }
  return m;
}

template <class Rng>
MatQ random_matq(std::size_t rows, std::size_t cols, Rng& rng, int bound = 5) {
  std::uniform_int_distribution<int> c(-bound, bound);
  MatQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < cols; ++k) m(r, k) = c(rng);
  return m;
}

/// Random low-rank matrix: product of rows x k and k x cols factors.
template <class Rng>
MatQ random_low_rank(std::size_t rows, std::size_t cols, std::size_t k, Rng& rng) {
  return tpsurf::multiply(random_matq(rows, k, rng, 3), random_matq(k, cols, rng, 3));
}

}  // namespace oracle
