#pragma once

// Surfaces and matrices shared by several test files.

#include <array>
#include <random>

#include "tpsurf/tpsurf.hpp"

namespace fixture {

using namespace tpsurf;

inline const char* const kTwoToOneF = "x0^3*x2 + x1^3*x3 - x0^2*x1^2";

inline BiPoly bp(const char* text) { return parse_bipoly(text); }
inline XPoly xp(const char* text) { return parse_xpoly(text); }

inline std::array<BiPoly, 4> two_to_one_generators() {
  return {bp("t^2*u^2 + s^2*u*v"), bp("t^2*u*v + s^2*v^2"), bp("t^2*v^2"), bp("s^2*u^2")};
}

inline TPSurface two_to_one() { return TPSurface(2, 2, two_to_one_generators()); }

inline MatX matx(std::initializer_list<std::initializer_list<const char*>> rows) {
  MatX m(rows.size(), rows.begin()->size(), XPoly(1));
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const char* v : row) {
      XPoly e = xp(v);
      m(r, c++) = e.is_zero() ? XPoly(1) : e;
    }
    ++r;
  }
  return m;
}

// Reference nu-strand matrix of the two-to-one surface.
inline MatX reference_matrix() {
  return matx({{"x0", "0", "0", "0", "x2", "0", "-x3", "0"},
               {"-x1", "0", "0", "0", "0", "0", "x0", "0"},
               {"0", "x0", "0", "0", "0", "x2", "0", "-x3"},
               {"0", "-x1", "0", "0", "0", "0", "0", "x0"},
               {"0", "0", "x0", "0", "-x1", "0", "0", "0"},
               {"0", "0", "-x1", "0", "x2", "0", "-x3", "0"},
               {"0", "0", "0", "x0", "0", "-x1", "0", "0"},
               {"0", "0", "0", "-x1", "0", "x2", "0", "-x3"}});
}

/// {p*u, p*v, p2, p3} with random p of bidegree (a, b-1).
template <class Rng>
TPSurface random_linear(int a, int b, Rng& rng) {
  for (;;) {
    const BiPoly p = random_form({a, b - 1}, rng);
    try {
      return TPSurface(a, b, {p * BiPoly::u(), p * BiPoly::v(), random_form({a, b}, rng), random_form({a, b}, rng)});
    } catch (const Error&) {
    }
  }
}

/// {p*s, p*t, p2, p3} with random p of bidegree (a-1, b).
template <class Rng>
TPSurface random_linear_st(int a, int b, Rng& rng) {
  for (;;) {
    const BiPoly p = random_form({a - 1, b}, rng);
    try {
      return TPSurface(a, b, {p * BiPoly::s(), p * BiPoly::t(), random_form({a, b}, rng), random_form({a, b}, rng)});
    } catch (const Error&) {
    }
  }
}

template <class Rng>
TPSurface random_dense(int a, int b, Rng& rng) {
  for (;;) {
    std::array<BiPoly, 4> p;
    for (auto& f : p) f = random_form({a, b}, rng);
    try {
      return TPSurface(a, b, p);
    } catch (const Error&) {
    }
  }
}

/// {p*u, p*v, q*u, q*v}: basepoints at V(p, q).
template <class Rng>
TPSurface pq_family(Rng& rng) {
  for (;;) {
    const BiPoly p = random_form({2, 1}, rng), q = random_form({2, 1}, rng);
    try {
      return TPSurface(2, 2, {p * BiPoly::u(), p * BiPoly::v(), q * BiPoly::u(), q * BiPoly::v()});
    } catch (const Error&) {
    }
  }
}

}  // namespace fixture
