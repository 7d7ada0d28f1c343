// Implicitizes the two-to-one surface and prints the pieces of the
// construction: the linear syzygy, the special pair, and the equation.
#include <iostream>

#include "tpsurf/tpsurf.hpp"

using namespace tpsurf;

int main() {
  const BiDeg d{2, 2};
  const TPSurface s(2, 2,
                    {parse_bipoly("t^2*u^2 + s^2*u*v", d), parse_bipoly("t^2*u*v + s^2*v^2", d),
                     parse_bipoly("t^2*v^2", d), parse_bipoly("s^2*u^2", d)});

  const auto lin = detect_linear_syzygy(s);
  if (!lin) {
    std::cout << "no linear syzygy\n";
    return 1;
  }
  std::cout << "linear syzygy (" << to_string(lin->orientation) << "):";
  for (const auto& g : lin->vector.g) std::cout << "  " << to_string(g);
  std::cout << '\n';

  const NormalizedSurface N = normalize_linear(s, lin->vector);
  std::cout << "p = " << to_string(N.p) << '\n';
  const auto [S1, S2] = special_pair(N);
  for (const auto* S : {&S1, &S2}) {
    std::cout << "special syzygy:";
    for (const auto& g : S->g) std::cout << "  " << to_string(g);
    std::cout << '\n';
  }

  const ImplicitResult r = implicitize(s);
  std::cout << "matrix " << r.rows << "x" << r.cols << '\n'
            << to_string(r.matrix) << '\n'
            << "det = " << to_string(r.det) << '\n'
            << "F = " << to_string(r.F) << "  (det = c*F^" << r.k << ")\n"
            << "multiplicity along x0 = x1 = 0: " << line_multiplicity(r.det, {0, 1}) << '\n';
}
