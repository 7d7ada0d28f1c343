#pragma once

#include <cstdint>
#include <random>

#include "tpsurf/bipoly.hpp"

namespace tpsurf {

inline constexpr int kRandomCoeffBound = 50;

/// Form of bidegree mu with every coefficient uniform in [-50, 50], redrawn
/// until nonzero.
template <class Rng>
BiPoly random_form(BiDeg mu, Rng& rng) {
  std::uniform_int_distribution<int> dist(-kRandomCoeffBound, kRandomCoeffBound);
  for (;;) {
    BiPoly f(mu);
    for (int i = 0; i <= mu.m; ++i)
      for (int j = 0; j <= mu.n; ++j) f.set_coeff(i, j, dist(rng));
    if (!f.is_zero()) return f;
  }
}

inline BiPoly random_form(BiDeg mu, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_form(mu, rng);
}

}  // namespace tpsurf
