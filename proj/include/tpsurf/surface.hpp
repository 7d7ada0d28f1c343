#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tpsurf/bipoly.hpp"
#include "tpsurf/error.hpp"
#include "tpsurf/exactla.hpp"
#include "tpsurf/matrix.hpp"
#include "tpsurf/squarefree.hpp"
#include "tpsurf/xpoly.hpp"

namespace tpsurf {

/// Four linearly independent forms p0..p3 of bidegree (a,b), a basis of U.
class TPSurface {
 public:
  TPSurface(int a, int b, std::array<BiPoly, 4> p) : a_(a), b_(b), p_(std::move(p)) {
    if (a < 1 || b < 1) fail(ErrorCode::DegreeTooLow, "bidegree must satisfy a,b >= 1");
    const BiDeg d{a, b};
    MatQ m(4, d.dim());
    for (std::size_t i = 0; i < 4; ++i) {
      if (p_[i].deg() != d)
        fail(ErrorCode::DegreeMismatch,
             "p" + std::to_string(i) + " has bidegree " + p_[i].deg().str() + ", expected " + d.str());
      if (p_[i].is_zero()) fail(ErrorCode::DependentGenerators, "generators not independent: zero form");
      auto v = p_[i].coeff_vector(d);
      for (std::size_t c = 0; c < v.size(); ++c) m(i, c) = v[c];
    }
    if (rank(m) != 4) fail(ErrorCode::DependentGenerators, "generators not independent");
  }

  int a() const { return a_; }
  int b() const { return b_; }
  BiDeg bideg() const { return {a_, b_}; }
  const std::array<BiPoly, 4>& p() const { return p_; }
  const BiPoly& p(std::size_t i) const { return p_[i]; }

  /// The same surface after s<->u, t<->v.
  TPSurface swapped() const {
    return TPSurface(b_, a_, {p_[0].swapped(), p_[1].swapped(), p_[2].swapped(), p_[3].swapped()});
  }

 private:
  int a_;
  int b_;
  std::array<BiPoly, 4> p_;
};

/// (g0..g3) of common bidegree mu; a syzygy when sum g_i p_i = 0.
struct SyzygyVector {
  BiDeg mu;
  std::array<BiPoly, 4> g;

  SyzygyVector() = default;
  SyzygyVector(BiDeg mu_, std::array<BiPoly, 4> g_) : mu(mu_), g(std::move(g_)) {
    for (const auto& gi : g)
      if (gi.deg() != mu) fail(ErrorCode::DegreeMismatch, "syzygy entries must share a bidegree");
  }

  /// Coordinates in (R_mu)^4, block i holding g_i.
  std::vector<Rational> to_vector() const {
    std::vector<Rational> out;
    out.reserve(4 * mu.dim());
    for (const auto& gi : g) {
      auto v = gi.coeff_vector(mu);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }
  static SyzygyVector from_vector(BiDeg mu, std::span<const Rational> v) {
    const std::size_t d = mu.dim();
    if (v.size() != 4 * d) fail(ErrorCode::DegreeMismatch, "syzygy vector length mismatch");
    std::array<BiPoly, 4> g;
    for (std::size_t i = 0; i < 4; ++i) g[i] = BiPoly::from_coeff_vector(mu, v.subspan(i * d, d));
    return {mu, std::move(g)};
  }

  SyzygyVector times(const BiPoly& m) const {
    return {mu + m.deg(), {g[0] * m, g[1] * m, g[2] * m, g[3] * m}};
  }
  SyzygyVector swapped() const {
    return {mu.swapped(), {g[0].swapped(), g[1].swapped(), g[2].swapped(), g[3].swapped()}};
  }
  SyzygyVector operator-() const { return {mu, {-g[0], -g[1], -g[2], -g[3]}}; }

  /// sum g_i q_i.
  BiPoly apply(std::span<const BiPoly> q) const {
    BiPoly acc = g[0] * q[0];
    for (std::size_t i = 1; i < 4; ++i) acc += g[i] * q[i];
    return acc;
  }
  bool is_syzygy_of(std::span<const BiPoly> q) const { return apply(q).is_zero(); }
  bool is_syzygy_of(const TPSurface& s) const { return is_syzygy_of(s.p()); }

  friend bool operator==(const SyzygyVector&, const SyzygyVector&) = default;
};

/// True when a and b are nonzero rational multiples of each other.
inline bool proportional(const SyzygyVector& a, const SyzygyVector& b) {
  if (a.mu != b.mu) return false;
  const auto va = a.to_vector(), vb = b.to_vector();
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < va.size(); ++i) {
    if ((va[i] == 0) != (vb[i] == 0)) return false;
    if (va[i] == 0) continue;
    const Rational r = va[i] / vb[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

enum class Orientation { UV, ST };

inline const char* to_string(Orientation o) { return o == Orientation::UV ? "UV" : "ST"; }

struct LinearSyzygy {
  SyzygyVector vector;
  Orientation orientation;
};

class MultipleLinearSyzygiesError : public Error {
 public:
  MultipleLinearSyzygiesError(std::vector<SyzygyVector> uv, std::vector<SyzygyVector> st)
      : Error(ErrorCode::MultipleLinearSyzygies,
              "found " + std::to_string(uv.size() + st.size()) +
                  " linear syzygies; basepoints or a,b < 2 expected"),
        uv_strand(std::move(uv)), st_strand(std::move(st)) {}
  std::vector<SyzygyVector> uv_strand;
  std::vector<SyzygyVector> st_strand;
};

/// Matrix of (g0..g3) -> sum g_i p_i from (R_mu)^4 to R_{mu+(a,b)}.
inline MatQ multiplication_matrix(const TPSurface& s, BiDeg mu) {
  const BiDeg target = mu + s.bideg();
  const std::size_t dmu = mu.dim();
  MatQ m(target.dim(), 4 * dmu);
  const auto monos = monomial_basis(mu);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t c = 0; c < dmu; ++c) {
      const BiPoly prod = monos[c] * s.p(i);
      for (const auto& [k, q] : prod.terms())
        m(static_cast<std::size_t>(BiPoly::key_i(k) * (target.n + 1) + BiPoly::key_j(k)), i * dmu + c) = q;
    }
  return m;
}

/// Basis of the syzygies of coefficient bidegree mu.
inline std::vector<SyzygyVector> syz_strand(const TPSurface& s, BiDeg mu) {
  if (!mu.valid()) return {};
  std::vector<SyzygyVector> out;
  for (const auto& v : kernel_basis(multiplication_matrix(s, mu))) out.push_back(SyzygyVector::from_vector(mu, v));
  return out;
}

/// Incrementally maintained row space over Q, stored as integer echelon rows.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  /// Adds v; returns whether it was independent of what is already stored.
  bool insert(std::span<const Rational> v) {
    if (v.size() != dim_) fail(ErrorCode::DegreeMismatch, "RowSpace dimension mismatch");
    std::vector<Rational> tmp(v.begin(), v.end());
    const Rational s = primitive_scale(tmp);
    detail::IntRow row(dim_);
    for (std::size_t c = 0; c < dim_; ++c)
      if (v[c] != 0) {
        Rational q = v[c] * s;
        row[c] = q.get_num();
      }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t pc = pivots_[k];
      if (row[pc] == 0) continue;
      const Integer f = row[pc];
      const auto& piv = rows_[k];
      for (std::size_t c = 0; c < dim_; ++c) {
        if (row[c] == 0 && piv[c] == 0) continue;
        row[c] *= piv[pc];
        if (piv[c] != 0) mpz_submul(row[c].get_mpz_t(), f.get_mpz_t(), piv[c].get_mpz_t());
      }
      detail::strip_content(row);
    }
    std::size_t pc = 0;
    while (pc < dim_ && row[pc] == 0) ++pc;
    if (pc == dim_) return false;
    rows_.push_back(std::move(row));
    pivots_.push_back(pc);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<detail::IntRow> rows_;
  std::vector<std::size_t> pivots_;
};

struct SyzygyGenerator {
  BiDeg mu;
  SyzygyVector vector;
};

/// Minimal first-syzygy generators with coefficient bidegree inside box,
/// computed degree by degree in order of total degree, then first component.
inline std::vector<SyzygyGenerator> min_syz_generator_vectors(const TPSurface& s, BiDeg box) {
  std::vector<BiDeg> degrees;
  for (int m = 0; m <= box.m; ++m)
    for (int n = 0; n <= box.n; ++n) degrees.push_back({m, n});
  std::stable_sort(degrees.begin(), degrees.end(), [](BiDeg x, BiDeg y) {
    return x.total() != y.total() ? x.total() < y.total() : x.m < y.m;
  });

  std::vector<SyzygyGenerator> gens;
  for (BiDeg mu : degrees) {
    const auto strand = syz_strand(s, mu);
    if (strand.empty()) continue;
    RowSpace span(4 * mu.dim());
    for (const auto& g : gens) {
      if (!g.mu.fits_in(mu) || g.mu == mu) continue;
      for (const auto& mono : monomial_basis(mu - g.mu)) {
        span.insert(g.vector.times(mono).to_vector());
        if (span.rank() == strand.size()) break;
      }
      if (span.rank() == strand.size()) break;
    }
    for (const auto& v : strand) {
      if (span.rank() == strand.size()) break;
      if (span.insert(v.to_vector())) gens.push_back({mu, v});
    }
  }
  return gens;
}

/// Bidegree multiset of the minimal first syzygies inside box, sorted.
inline std::vector<BiDeg> min_syz_generators(const TPSurface& s, BiDeg box) {
  std::vector<BiDeg> out;
  for (const auto& g : min_syz_generator_vectors(s, box)) out.push_back(g.mu);
  std::sort(out.begin(), out.end());
  return out;
}

/// The unique syzygy of bidegree (0,1) or (1,0), if any.
inline std::optional<LinearSyzygy> detect_linear_syzygy(const TPSurface& s) {
  auto uv = syz_strand(s, {0, 1});
  auto st = syz_strand(s, {1, 0});
  if (uv.size() + st.size() > 1) throw MultipleLinearSyzygiesError(std::move(uv), std::move(st));
  if (uv.size() == 1) return LinearSyzygy{uv.front(), Orientation::UV};
  if (st.size() == 1) return LinearSyzygy{st.front(), Orientation::ST};
  return std::nullopt;
}

/// Generators {p*u, p*v, p2, p3} of U obtained from a (0,1) syzygy.
struct NormalizedSurface {
  int a = 0;
  int b = 0;
  BiPoly p;   // bidegree (a, b-1)
  BiPoly p2;  // bidegree (a, b)
  BiPoly p3;
  /// Row j holds the coordinates of normalized generator j in the original basis.
  MatQ basis_change;
  std::array<std::size_t, 2> completing{};  // original indices of p2, p3

  std::array<BiPoly, 4> generators() const { return {p * BiPoly::u(), p * BiPoly::v(), p2, p3}; }
  /// (v, -u, 0, 0) against generators().
  SyzygyVector linear_syzygy() const {
    const BiDeg d{0, 1};
    return {d, {BiPoly::v(), -BiPoly::u(), BiPoly(d), BiPoly(d)}};
  }
};

/// Rewrites U as <p*u, p*v, p2, p3> from the linear syzygy L of bidegree (0,1).
inline NormalizedSurface normalize_linear(const TPSurface& s, const SyzygyVector& L) {
  if (L.mu != BiDeg{0, 1}) fail(ErrorCode::DegreeMismatch, "normalize_linear needs a (0,1) syzygy");
  if (!L.is_syzygy_of(s)) fail(ErrorCode::NotASyzygy, "L is not a syzygy of the surface");
  // L_i = a_i u + b_i v
  std::array<Rational, 4> ca, cb;
  BiPoly A(s.bideg()), B(s.bideg());
  for (std::size_t i = 0; i < 4; ++i) {
    ca[i] = L.g[i].coeff(0, 0);
    cb[i] = L.g[i].coeff(0, 1);
    A += s.p(i) * ca[i];
    B += s.p(i) * cb[i];
  }
  if (A.is_zero() || B.is_zero())
    fail(ErrorCode::DegenerateLinearSyzygy, "linear syzygy has a vanishing u- or v-part");
  if (!(A * BiPoly::u() + B * BiPoly::v()).is_zero())
    fail(ErrorCode::Internal, "A*u + B*v does not vanish");
  const BiPoly p_raw = exact_div(A, BiPoly::v());
  if (!(exact_div(B, BiPoly::u()) == -p_raw)) fail(ErrorCode::Internal, "A/v and -B/u disagree");

  NormalizedSurface out;
  out.a = s.a();
  out.b = s.b();
  out.p = p_raw.primitive();
  const Rational c = out.p.terms().begin()->second / p_raw.terms().begin()->second;
  const BiPoly pu = out.p * BiPoly::u(), pv = out.p * BiPoly::v();

  const BiDeg d = s.bideg();
  bool found = false;
  for (std::size_t i = 0; i < 4 && !found; ++i)
    for (std::size_t j = i + 1; j < 4 && !found; ++j) {
      MatQ m(4, d.dim());
      const std::array<const BiPoly*, 4> rows{&pu, &pv, &s.p(i), &s.p(j)};
      for (std::size_t r = 0; r < 4; ++r) {
        auto v = rows[r]->coeff_vector(d);
        for (std::size_t k = 0; k < v.size(); ++k) m(r, k) = v[k];
      }
      if (rank(m) == 4) {
        out.completing = {i, j};
        found = true;
      }
    }
  if (!found) fail(ErrorCode::DependentGenerators, "p*u and p*v do not extend to a basis of U");
  out.p2 = s.p(out.completing[0]);
  out.p3 = s.p(out.completing[1]);

  // p*u = -B and p*v = A before rescaling p by c.
  out.basis_change = MatQ(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    out.basis_change(0, i) = -c * cb[i];
    out.basis_change(1, i) = c * ca[i];
  }
  out.basis_change(2, out.completing[0]) = 1;
  out.basis_change(3, out.completing[1]) = 1;
  return out;
}

/// q = f*u + g*v: terms with positive u-exponent go to f, the rest to g.
inline std::pair<BiPoly, BiPoly> uv_split(const BiPoly& q) {
  const BiDeg d = q.deg();
  if (d.n < 1) fail(ErrorCode::DegreeTooLow, "uv_split needs u,v-degree >= 1");
  const BiDeg h{d.m, d.n - 1};
  BiPoly f(h), g(h);
  for (const auto& [k, c] : q.terms()) {
    const int i = BiPoly::key_i(k), j = BiPoly::key_j(k);
    if (d.n - j > 0)
      f.set_coeff(i, j, c);  // s^(m-i) t^i u^(n-j) v^j / u
    else
      g.set_coeff(i, j - 1, c);
  }
  return {f, g};
}

/// S1 = (f2, g2, -p, 0) and S2 = (f3, g3, 0, -p) against N.generators().
inline std::pair<SyzygyVector, SyzygyVector> special_pair(const NormalizedSurface& N) {
  const auto [f2, g2] = uv_split(N.p2);
  const auto [f3, g3] = uv_split(N.p3);
  const BiDeg mu = N.p.deg();
  SyzygyVector s1(mu, {f2, g2, -N.p, BiPoly(mu)});
  SyzygyVector s2(mu, {f3, g3, BiPoly(mu), -N.p});
  const auto gens = N.generators();
  if (!s1.is_syzygy_of(gens) || !s2.is_syzygy_of(gens))
    fail(ErrorCode::Internal, "special pair failed the syzygy identity");
  return {s1, s2};
}

/// Column of d1 for the syzygy g: row r is sum_i coeff_r(g_i) x_i in R_nu.
inline void fill_d1_column(MatX& m, std::size_t col, const SyzygyVector& g, BiDeg nu) {
  if (g.mu != nu) fail(ErrorCode::DegreeMismatch, "column syzygy is not in the nu strand");
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& [k, c] : g.g[i].terms()) {
      const auto r = static_cast<std::size_t>(BiPoly::key_i(k) * (nu.n + 1) + BiPoly::key_j(k));
      XPoly& e = m(r, col);
      if (e.is_zero()) e = XPoly(1);
      e.add_term(unit_key(static_cast<int>(i)), c);
    }
}

inline BiDeg nu_degree(int a, int b) { return {2 * a - 1, b - 1}; }

/// The nu = (2a-1, b-1) strand of d1 spanned by L, S1 and S2: L times each
/// monomial of bidegree (2a-1, b-2), then S1 and S2 times each monomial of
/// bidegree (a-1, 0). Variables x_i refer to N.generators().
inline MatX build_d1_nu(const NormalizedSurface& N, const SyzygyVector& L, const SyzygyVector& S1,
                        const SyzygyVector& S2) {
  if (N.a < 2 || N.b < 2) fail(ErrorCode::DegreeTooLow, "build_d1_nu needs a,b >= 2");
  const auto gens = N.generators();
  for (const SyzygyVector* g : {&L, &S1, &S2})
    if (!g->is_syzygy_of(gens)) fail(ErrorCode::NotASyzygy, "build_d1_nu: column is not a syzygy");
  const BiDeg nu = nu_degree(N.a, N.b);
  const std::size_t size = nu.dim();
  MatX m(size, size, XPoly(1));
  std::size_t col = 0;
  auto add_block = [&](const SyzygyVector& g) {
    for (const auto& mono : monomial_basis(nu - g.mu)) {
      if (col >= size) fail(ErrorCode::Internal, "too many columns in the nu strand");
      fill_d1_column(m, col++, g.times(mono), nu);
    }
  };
  add_block(L);
  add_block(S1);
  add_block(S2);
  if (col != size) fail(ErrorCode::Internal, "nu strand column count differs from 2ab");
  return m;
}

/// All of Syz_nu as columns; may be non-square on degenerate input.
inline MatX build_d1_nu_generic(const TPSurface& s) {
  const BiDeg nu = nu_degree(s.a(), s.b());
  const auto strand = syz_strand(s, nu);
  MatX m(nu.dim(), strand.size(), XPoly(1));
  for (std::size_t c = 0; c < strand.size(); ++c) fill_d1_column(m, c, strand[c], nu);
  return m;
}

/// Re-expresses entries written in normalized coordinates y = C x in x.
inline MatX to_original_coordinates(const MatX& m, const MatQ& C) {
  MatX out(m.rows(), m.cols(), XPoly(1));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::array<Rational, 4> h;
      for (const auto& [k, q] : m(r, c).terms())
        for (int v = 0; v < 4; ++v)
          if (exponent_of(k, v) == 1) h[static_cast<std::size_t>(v)] = q;
      std::array<Rational, 4> x;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          if (h[j] != 0 && C(j, i) != 0) x[i] += h[j] * C(j, i);
      out(r, c) = XPoly::linear(x);
    }
  return out;
}

inline std::size_t line_multiplicity(const XPoly& G, std::pair<int, int> vars) {
  if (G.is_zero()) fail(ErrorCode::ZeroInput, "line_multiplicity of zero");
  int best = G.deg();
  for (const auto& [k, c] : G.terms())
    best = std::min(best, exponent_of(k, vars.first) + exponent_of(k, vars.second));
  return static_cast<std::size_t>(best);
}

inline long intersection_number(BiDeg d1, BiDeg d2) {
  return static_cast<long>(d1.m) * d2.n + static_cast<long>(d1.n) * d2.m;
}

enum class P22Class { Irreducible, OnQ, OnSegre };

inline const char* to_string(P22Class c) {
  switch (c) {
    case P22Class::Irreducible: return "Irreducible";
    case P22Class::OnQ: return "OnQ";
    case P22Class::OnSegre: return "OnSegre";
  }
  return "?";
}

/// Coordinates of a (2,1) form on (s^2u, stu, t^2u, s^2v, stv, t^2v).
inline std::array<Rational, 6> p22_coordinates(const BiPoly& p) {
  return {p.coeff(0, 0), p.coeff(1, 0), p.coeff(2, 0), p.coeff(0, 1), p.coeff(1, 1), p.coeff(2, 1)};
}

/// The quartic cutting out (1,1)x(1,0) factorizations of (2,1) forms.
inline Rational quartic_q(const std::array<Rational, 6>& x) {
  return x[2] * x[2] * x[3] * x[3] - x[1] * x[2] * x[3] * x[4] + x[0] * x[2] * x[4] * x[4] +
         x[1] * x[1] * x[3] * x[5] - 2 * x[0] * x[2] * x[3] * x[5] - x[0] * x[1] * x[4] * x[5] +
         x[0] * x[0] * x[5] * x[5];
}

inline P22Class classify_p22(const BiPoly& p) {
  if (p.deg() != BiDeg{2, 1}) fail(ErrorCode::DegreeMismatch, "classify_p22 needs bidegree (2,1)");
  if (p.is_zero()) fail(ErrorCode::ZeroInput, "classify_p22 of zero");
  const auto x = p22_coordinates(p);
  const bool segre = x[0] * x[4] - x[1] * x[3] == 0 && x[0] * x[5] - x[2] * x[3] == 0 &&
                     x[1] * x[5] - x[2] * x[4] == 0;
  if (segre) return P22Class::OnSegre;
  if (quartic_q(x) == 0) return P22Class::OnQ;
  return P22Class::Irreducible;
}

// ---------------------------------------------------------------------------
// Implicitization

struct ImplicitOptions {
  bool fast_det = false;  // interpolation determinant instead of Bareiss
};

struct ImplicitResult {
  XPoly det;  // in the original coordinates x_i <-> p_i
  XPoly F;
  int k = 0;
  BiDeg nu;  // in the original variable order
  bool used_linear_syzygy = false;
  std::optional<Orientation> orientation;
  std::size_t rows = 0;
  std::size_t cols = 0;
  MatX matrix;  // the nu strand used, original coordinates
  /// Pipeline data when a linear syzygy drove the construction (in the
  /// UV frame, i.e. after s<->u, t<->v for orientation ST).
  std::optional<NormalizedSurface> normalized;
  std::optional<std::array<SyzygyVector, 3>> syzygies;  // L, S1, S2 in the frame
  std::optional<XPoly> det_normalized;                  // det in y = C x
};

inline XPoly determinant(const MatX& m, const ImplicitOptions& opt) {
  return opt.fast_det ? det_poly_interpolate(m) : det_poly(m);
}

/// Implicit equation from the nu strand of d1. Assumes U is basepoint free.
inline ImplicitResult implicitize(const TPSurface& s, const ImplicitOptions& opt = {}) {
  ImplicitResult res;
  const auto lin = detect_linear_syzygy(s);
  const bool st = lin && lin->orientation == Orientation::ST;
  if (lin && s.a() >= 2 && s.b() >= 2) {
    const TPSurface frame = st ? s.swapped() : s;
    const SyzygyVector L = st ? lin->vector.swapped() : lin->vector;
    NormalizedSurface N = normalize_linear(frame, L);
    const SyzygyVector Ln = N.linear_syzygy();
    const auto [S1, S2] = special_pair(N);
    const MatX mn = build_d1_nu(N, Ln, S1, S2);
    res.matrix = to_original_coordinates(mn, N.basis_change);
    res.used_linear_syzygy = true;
    res.orientation = lin->orientation;
    const BiDeg nu = nu_degree(frame.a(), frame.b());
    res.nu = st ? nu.swapped() : nu;
    res.syzygies = std::array<SyzygyVector, 3>{Ln, S1, S2};
    res.det = determinant(res.matrix, opt);
    res.det_normalized = determinant(mn, opt);
    res.normalized = std::move(N);
  } else {
    if (lin) res.orientation = lin->orientation;
    res.matrix = build_d1_nu_generic(s);
    res.nu = nu_degree(s.a(), s.b());
    if (!res.matrix.square())
      fail(ErrorCode::NotSquare, "nu strand is " + std::to_string(res.matrix.rows()) + "x" +
                                     std::to_string(res.matrix.cols()) + "; basepoints or degenerate input");
    res.det = determinant(res.matrix, opt);
  }
  res.rows = res.matrix.rows();
  res.cols = res.matrix.cols();

  const int expected = 2 * s.a() * s.b();
  if (res.det.is_zero()) fail(ErrorCode::SingularStrand, "determinant of the nu strand vanishes");
  if (res.det.deg() != expected)
    fail(ErrorCode::DegreeAnomaly, "determinant has degree " + std::to_string(res.det.deg()) + ", expected " +
                                       std::to_string(expected));
  res.F = squarefree_part(res.det);
  if (res.F.deg() == 0 || expected % res.F.deg() != 0)
    fail(ErrorCode::DegreeAnomaly, "implicit degree does not divide 2ab");
  res.k = expected / res.F.deg();
  if (!proportional(res.det, res.F.pow(res.k)))
    fail(ErrorCode::Internal, "determinant is not a power of its squarefree part");
  return res;
}

}  // namespace tpsurf
