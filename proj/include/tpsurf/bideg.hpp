#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>

#include "tpsurf/error.hpp"

namespace tpsurf {

/// Bidegree (m, n): m is the degree in s,t and n the degree in u,v.
struct BiDeg {
  int m = 0;
  int n = 0;

  constexpr BiDeg() = default;
  constexpr BiDeg(int m_, int n_) : m(m_), n(n_) {}

  /// dim R_{(m,n)} = (m+1)(n+1); zero for negative degrees.
  constexpr std::size_t dim() const {
    if (m < 0 || n < 0) return 0;
    return static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(n + 1);
  }
  constexpr bool valid() const { return m >= 0 && n >= 0; }
  constexpr int total() const { return m + n; }

  /// Componentwise <=.
  constexpr bool fits_in(BiDeg o) const { return m <= o.m && n <= o.n; }

  constexpr BiDeg swapped() const { return {n, m}; }

  friend constexpr bool operator==(BiDeg, BiDeg) = default;
  friend constexpr auto operator<=>(BiDeg, BiDeg) = default;

  friend constexpr BiDeg operator+(BiDeg a, BiDeg b) { return {a.m + b.m, a.n + b.n}; }
  friend BiDeg operator-(BiDeg a, BiDeg b) {
    BiDeg r{a.m - b.m, a.n - b.n};
    if (!r.valid())
      fail(ErrorCode::NegativeDegree,
           "bidegree difference (" + std::to_string(r.m) + "," + std::to_string(r.n) +
               ") is negative");
    return r;
  }
  friend BiDeg operator*(int k, BiDeg a) { return {k * a.m, k * a.n}; }

  std::string str() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }
  friend std::ostream& operator<<(std::ostream& os, BiDeg d) { return os << d.str(); }
};

}  // namespace tpsurf
