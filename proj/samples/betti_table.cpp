// First syzygies of the (2,2) surfaces <p*u, p*v, p2, p3> for the three
// kinds of p: irreducible, on the quartic Q, on the Segre variety.
#include <iostream>
#include <map>

#include "tpsurf/tpsurf.hpp"

using namespace tpsurf;

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
  std::mt19937_64 rng(seed);
  const BiDeg d{2, 1};
  for (const char* text : {"s^2*u + t^2*v", "s^2*u + 2*s*t*u + t^2*u + s^2*v + s*t*v",
                           "s^2*u + s*t*u + t^2*u + s^2*v + s*t*v + t^2*v"}) {
    const BiPoly p = parse_bipoly(text, d);
    const TPSurface s(2, 2, {p * BiPoly::u(), p * BiPoly::v(), random_form({2, 2}, rng), random_form({2, 2}, rng)});
    std::map<BiDeg, int> shifts;
    for (BiDeg g : min_syz_generators(s, {6, 3})) ++shifts[{-(g.m + 2), -(g.n + 2)}];
    std::cout << "p = " << text << "  [" << to_string(classify_p22(p)) << "]\n ";
    for (const auto& [sh, mult] : shifts) {
      std::cout << ' ' << sh;
      if (mult > 1) std::cout << '^' << mult;
    }
    std::cout << '\n';
  }
}
