#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tpsurf/error.hpp"
#include "tpsurf/matrix.hpp"
#include "tpsurf/rational.hpp"
#include "tpsurf/xpoly.hpp"

namespace tpsurf {

namespace detail {

using IntRow = std::vector<Integer>;

inline std::size_t height(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

/// Rows of m scaled to coprime integers. Zero rows stay zero.
inline std::vector<IntRow> integer_rows(const MatQ& m, std::vector<Rational>* scales = nullptr) {
  std::vector<IntRow> out(m.rows(), IntRow(m.cols()));
  if (scales) scales->assign(m.rows(), Rational(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Rational s = primitive_scale(m.row(r));
    if (scales) (*scales)[r] = s;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      Rational q = m(r, c) * s;
      out[r][c] = q.get_num();
    }
  }
  return out;
}

inline void strip_content(IntRow& row, std::size_t from = 0) {
  Integer g = content(std::span<const Integer>(row).subspan(from));
  if (g > 1)
    for (std::size_t c = from; c < row.size(); ++c)
      if (row[c] != 0) mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
}

struct Echelon {
  std::vector<IntRow> rows;  // first `pivots.size()` rows are the nonzero echelon rows
  std::vector<std::size_t> pivots;
};

/// Fraction-free row echelon form with content stripping. The pivot in each
/// column is the remaining entry of smallest bit height.
inline Echelon integer_echelon(const MatQ& m) {
  Echelon e;
  e.rows = integer_rows(m);
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t best = R;
    for (std::size_t r = rank; r < R; ++r) {
      if (e.rows[r][col] == 0) continue;
      if (best == R || height(e.rows[r][col]) < height(e.rows[best][col])) best = r;
    }
    if (best == R) continue;
    std::swap(e.rows[rank], e.rows[best]);
    const IntRow& piv = e.rows[rank];
    for (std::size_t r = rank + 1; r < R; ++r) {
      IntRow& row = e.rows[r];
      if (row[col] == 0) continue;
      const Integer f = row[col];
      for (std::size_t c = col; c < C; ++c) {
        row[c] *= piv[col];
        if (piv[c] != 0) mpz_submul(row[c].get_mpz_t(), f.get_mpz_t(), piv[c].get_mpz_t());
      }
      strip_content(row, col);
    }
    e.pivots.push_back(col);
    ++rank;
  }
  e.rows.resize(rank);
  return e;
}

/// Determinant of an integer matrix by Bareiss elimination.
inline Integer bareiss_det(std::vector<IntRow> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r][k] == 0) continue;
      if (best == n || height(a[r][k]) < height(a[best][k])) best = r;
    }
    if (best == n) return 0;
    if (best != k) {
      std::swap(a[best], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = a[i][j];
        x *= a[k][k];
        mpz_submul(x.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Integer d = a[n - 1][n - 1];
  return sign < 0 ? Integer(-d) : d;
}

// ---------------------------------------------------------------------------
// Homogeneous integer forms with dense scratch space, for polynomial Bareiss.

/// Number of monomials of degree d in four variables.
constexpr std::size_t monomial_count(int d) {
  const auto n = static_cast<std::size_t>(d);
  return (n + 3) * (n + 2) * (n + 1) / 6;
}

/// Position of a degree-d monomial in descending lex order.
constexpr std::size_t lex_rank(XKey k, int d) {
  const auto r0 = static_cast<std::size_t>(d - exponent_of(k, 0));
  const auto r1 = r0 - static_cast<std::size_t>(exponent_of(k, 1));
  const auto r2 = r1 - static_cast<std::size_t>(exponent_of(k, 2));
  return (r0 + 2) * (r0 + 1) * r0 / 6 + (r1 + 1) * r1 / 2 + r2;
}

struct HForm {
  int deg = 0;
  std::vector<std::pair<XKey, Integer>> terms;  // descending lex

  bool is_zero() const { return terms.empty(); }
};

class DenseScratch {
 public:
  std::vector<Integer>& slots(std::size_t n) {
    if (slots_.size() < n) slots_.resize(n);
    return slots_;
  }

 private:
  std::vector<Integer> slots_;
};

/// Visits every degree-d monomial in descending lex order with its rank.
template <class F>
void for_each_monomial(int d, F&& f) {
  std::size_t idx = 0;
  for (int e0 = d; e0 >= 0; --e0)
    for (int e1 = d - e0; e1 >= 0; --e1)
      for (int e2 = d - e0 - e1; e2 >= 0; --e2) f(idx++, pack({e0, e1, e2, d - e0 - e1 - e2}));
}

/// (p*a - b*c) / prev, exact. prev == nullptr means division by one.
inline HForm bareiss_update(const HForm& p, const HForm& a, const HForm& b, const HForm& c,
                            const HForm* prev, DenseScratch& scratch) {
  const bool t1 = !p.is_zero() && !a.is_zero();
  const bool t2 = !b.is_zero() && !c.is_zero();
  HForm out;
  if (!t1 && !t2) return out;
  const int D = t1 ? p.deg + a.deg : b.deg + c.deg;
  if (t1 && t2 && b.deg + c.deg != D)
    fail(ErrorCode::DegreeMismatch, "determinant of a matrix with inhomogeneous minors");
  auto& ws = scratch.slots(monomial_count(D));
  if (t1)
    for (const auto& [kp, cp] : p.terms)
      for (const auto& [ka, ca] : a.terms)
        mpz_addmul(ws[lex_rank(kp + ka, D)].get_mpz_t(), cp.get_mpz_t(), ca.get_mpz_t());
  if (t2)
    for (const auto& [kb, cb] : b.terms)
      for (const auto& [kc, cc] : c.terms)
        mpz_submul(ws[lex_rank(kb + kc, D)].get_mpz_t(), cb.get_mpz_t(), cc.get_mpz_t());

  if (prev == nullptr || prev->deg == 0) {
    out.deg = D;
    const Integer* divisor = prev ? &prev->terms.front().second : nullptr;
    for_each_monomial(D, [&](std::size_t idx, XKey k) {
      Integer& s = ws[idx];
      if (s == 0) return;
      if (divisor) {
        if (!mpz_divisible_p(s.get_mpz_t(), divisor->get_mpz_t()))
          fail(ErrorCode::Internal, "Bareiss division is not exact");
        mpz_divexact(s.get_mpz_t(), s.get_mpz_t(), divisor->get_mpz_t());
      }
      out.terms.emplace_back(k, std::move(s));
      s = 0;
    });
    return out;
  }

  const auto& [lk, lc] = prev->terms.front();
  out.deg = D - prev->deg;
  Integer qc;
  for_each_monomial(D, [&](std::size_t idx, XKey k) {
    Integer& s = ws[idx];
    if (s == 0) return;
    for (int v = 0; v < 4; ++v)
      if (exponent_of(k, v) < exponent_of(lk, v))
        fail(ErrorCode::Internal, "Bareiss division is not exact");
    if (!mpz_divisible_p(s.get_mpz_t(), lc.get_mpz_t()))
      fail(ErrorCode::Internal, "Bareiss division is not exact");
    mpz_divexact(qc.get_mpz_t(), s.get_mpz_t(), lc.get_mpz_t());
    const XKey qk = k - lk;
    for (const auto& [tk, tc] : prev->terms)
      mpz_submul(ws[lex_rank(qk + tk, D)].get_mpz_t(), qc.get_mpz_t(), tc.get_mpz_t());
    out.terms.emplace_back(qk, qc);
  });
  return out;
}

}  // namespace detail

/// Basis of the right kernel {v : M v = 0}. Vectors come from the reduced
/// row echelon form (one per free column, in column order) and are scaled to
/// coprime integers with a positive free-variable entry.
inline std::vector<std::vector<Rational>> kernel_basis(const MatQ& m) {
  const detail::Echelon e = detail::integer_echelon(m);
  const std::size_t C = m.cols();
  const std::size_t r = e.pivots.size();

  // Reduced echelon form over Q.
  std::vector<std::vector<Rational>> rref(r, std::vector<Rational>(C));
  for (std::size_t i = 0; i < r; ++i) {
    const Rational inv = Rational(1) / Rational(e.rows[i][e.pivots[i]]);
    for (std::size_t c = 0; c < C; ++c)
      if (e.rows[i][c] != 0) rref[i][c] = Rational(e.rows[i][c]) * inv;
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = e.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      if (rref[k][pc] == 0) continue;
      const Rational f = rref[k][pc];
      for (std::size_t c = pc; c < C; ++c)
        if (rref[i][c] != 0) rref[k][c] -= f * rref[i][c];
    }
  }

  std::vector<bool> is_pivot(C, false);
  for (auto pc : e.pivots) is_pivot[pc] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(C);
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[e.pivots[i]] = -rref[i][f];
    const Rational s = primitive_scale(v);
    for (auto& x : v) x *= s;
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t rank(const MatQ& m) { return detail::integer_echelon(m).pivots.size(); }

inline Rational det_scalar(const MatQ& m) {
  if (!m.square()) fail(ErrorCode::NotSquare, "det_scalar of a non-square matrix");
  std::vector<Rational> scales;
  auto rows = detail::integer_rows(m, &scales);
  Rational d(detail::bareiss_det(std::move(rows)));
  for (const auto& s : scales) d /= s;
  return d;
}

/// Exact determinant of a square matrix of forms by fraction-free (Bareiss)
/// elimination with full pivoting on the entry with fewest terms, then
/// smallest coefficient height. Rows are first scaled to coprime integers.
inline XPoly det_poly(const MatX& m) {
  if (!m.square()) fail(ErrorCode::NotSquare, "det_poly of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return XPoly::constant(1);

  using detail::HForm;
  std::vector<HForm> a(n * n);
  auto at = [&](std::size_t r, std::size_t c) -> HForm& { return a[r * n + c]; };
  Rational total_scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Rational> coeffs;
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [k, q] : m(r, c).terms()) coeffs.push_back(q);
    const Rational s = primitive_scale(coeffs);
    total_scale *= s;
    for (std::size_t c = 0; c < n; ++c) {
      HForm& h = at(r, c);
      h.deg = m(r, c).deg();
      for (const auto& [k, q] : m(r, c).terms()) {
        Rational x = q * s;
        h.terms.emplace_back(k, x.get_num());
      }
    }
  }

  detail::DenseScratch scratch;
  int sign = 1;
  HForm prev;
  bool have_prev = false;
  auto complexity = [](const HForm& h) {
    std::size_t hmax = 0;
    for (const auto& [k, c] : h.terms) hmax = std::max(hmax, detail::height(c));
    return std::pair{h.terms.size(), hmax};
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t br = n, bc = n;
    std::pair<std::size_t, std::size_t> best{};
    for (std::size_t r = k; r < n; ++r)
      for (std::size_t c = k; c < n; ++c) {
        if (at(r, c).is_zero()) continue;
        auto cx = complexity(at(r, c));
        if (br == n || cx < best) {
          br = r;
          bc = c;
          best = cx;
        }
      }
    if (br == n) return XPoly(0);
    if (br != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(br, c), at(k, c));
      sign = -sign;
    }
    if (bc != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, bc), at(r, k));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        at(i, j) = detail::bareiss_update(at(k, k), at(i, j), at(i, k), at(k, j),
                                          have_prev ? &prev : nullptr, scratch);
    prev = at(k, k);
    have_prev = true;
  }

  const HForm& d = at(n - 1, n - 1);
  XPoly out(d.deg);
  const Rational factor = Rational(sign) / total_scale;
  for (const auto& [k, c] : d.terms) out.add_term(k, Rational(c) * factor);
  return out;
}

namespace detail {

/// Coefficients in the monomial basis of the polynomial of degree <= n taking
/// values[i] at y = i, i = 0..n.
inline std::vector<Rational> interpolate_on_naturals(std::vector<Rational> values) {
  const std::size_t n = values.size();
  // Forward differences give Newton coefficients in the falling-factorial basis.
  std::vector<Rational> newton(n);
  Rational fact = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) fact *= static_cast<unsigned long>(k);
    newton[k] = values[0] / fact;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  std::vector<Rational> poly;
  for (std::size_t k = n; k-- > 0;) {
    // poly = poly * (y - k) + newton[k]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * static_cast<unsigned long>(k);
    }
    next[0] += newton[k];
    poly = std::move(next);
  }
  poly.resize(n);
  return poly;
}

}  // namespace detail

/// Determinant of a square matrix of linear forms by evaluation on the grid
/// (1, i, j, k), 0 <= i,j,k <= n, and tensor Newton interpolation. The result
/// is checked against three further random evaluations before it is returned.
inline XPoly det_poly_interpolate(const MatX& m, std::uint64_t seed = 1) {
  if (!m.square()) fail(ErrorCode::NotSquare, "det_poly_interpolate of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return XPoly::constant(1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!m(r, c).is_zero() && m(r, c).deg() != 1)
        fail(ErrorCode::DegreeMismatch, "interpolation path needs linear entries");

  // Integer linear coefficients after row scaling.
  Rational total_scale = 1;
  std::vector<std::array<Integer, 4>> lin(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Rational> coeffs;
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [k, q] : m(r, c).terms()) coeffs.push_back(q);
    const Rational s = primitive_scale(coeffs);
    total_scale *= s;
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [k, q] : m(r, c).terms()) {
        int var = 0;
        while (exponent_of(k, var) == 0) ++var;
        Rational x = q * s;
        lin[r * n + c][static_cast<std::size_t>(var)] = x.get_num();
      }
  }
  auto det_at = [&](const std::array<Integer, 4>& x) {
    std::vector<detail::IntRow> a(n, detail::IntRow(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& l = lin[r * n + c];
        Integer v = 0;
        for (std::size_t i = 0; i < 4; ++i)
          if (l[i] != 0) mpz_addmul(v.get_mpz_t(), l[i].get_mpz_t(), x[i].get_mpz_t());
        a[r][c] = std::move(v);
      }
    return detail::bareiss_det(std::move(a));
  };

  const std::size_t g = n + 1;
  auto idx = [g](std::size_t i, std::size_t j, std::size_t k) { return (i * g + j) * g + k; };
  std::vector<Rational> grid(g * g * g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k)
        grid[idx(i, j, k)] = Rational(det_at({Integer(1), Integer(static_cast<unsigned long>(i)),
                                              Integer(static_cast<unsigned long>(j)),
                                              Integer(static_cast<unsigned long>(k))}));

  // Interpolate along the last axis, then the middle, then the first.
  std::vector<Rational> line(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      for (std::size_t k = 0; k < g; ++k) line[k] = grid[idx(i, j, k)];
      auto c = detail::interpolate_on_naturals(line);
      for (std::size_t k = 0; k < g; ++k) grid[idx(i, j, k)] = c[k];
    }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t k = 0; k < g; ++k) {
      for (std::size_t j = 0; j < g; ++j) line[j] = grid[idx(i, j, k)];
      auto c = detail::interpolate_on_naturals(line);
      for (std::size_t j = 0; j < g; ++j) grid[idx(i, j, k)] = c[j];
    }
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = 0; k < g; ++k) {
      for (std::size_t i = 0; i < g; ++i) line[i] = grid[idx(i, j, k)];
      auto c = detail::interpolate_on_naturals(line);
      for (std::size_t i = 0; i < g; ++i) grid[idx(i, j, k)] = c[i];
    }

  const int D = static_cast<int>(n);
  XPoly scaled(D);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k) {
        const Rational& c = grid[idx(i, j, k)];
        if (c == 0) continue;
        const int tot = static_cast<int>(i + j + k);
        if (tot > D) fail(ErrorCode::Internal, "interpolated determinant exceeds degree bound");
        scaled.add_term(pack({D - tot, static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)}), c);
      }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int trial = 0; trial < 3; ++trial) {
    std::array<Integer, 4> xi;
    std::array<Rational, 4> xq;
    for (std::size_t i = 0; i < 4; ++i) {
      xi[i] = dist(rng);
      xq[i] = Rational(xi[i]);
    }
    if (Rational(det_at(xi)) != scaled.evaluate(xq))
      fail(ErrorCode::Internal, "interpolated determinant failed a verification point");
  }
  return scaled * (Rational(1) / total_scale);
}

}  // namespace tpsurf
