// Shared test fixtures: the six-point example configuration and its
// derived data, frozen from the coordinates and checked by oracles.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "capcup/configuration.hpp"
#include "capcup/geometry.hpp"

namespace fixtures {

// A(-4,0) B(-3/2,-1) C(-1/2,-3) D(1/2,3) E(3/2,1) F(4,0); 4-cap and
// 4-cup free, realizable.
inline std::vector<capcup::point> fig_points() {
  using capcup::point;
  using capcup::rational;
  return {
      point{rational(-4), rational(0)}, point{rational(-3, 2), rational(-1)},
      point{rational(-1, 2), rational(-3)}, point{rational(1, 2), rational(3)},
      point{rational(3, 2), rational(1)}, point{rational(4), rational(0)}};
}

inline std::string fig_points_text() {
  return "# six points, 4-cap and 4-cup free\n"
         "-4 0\n-3/2 -1\n-1/2 -3\n1/2 3\n3/2 1\n4 0\n";
}

// orientation string of the six-point set, lexicographic triple order
inline const char* cfg6_triples() { return "AUUUUUUAAAUUUAAAAAAU"; }

inline capcup::configuration cfg6() {
  return capcup::configuration::from_triple_string(6, cfg6_triples());
}

// the 15 canonical edge labels of cfg6 at a = 4, lexicographic edge order:
// AB AC AD AE AF BC BD BE BF CD CE CF DE DF EF
inline std::vector<int> cfg6_labels() {
  return {2, 1, 2, 2, 1, 1, 2, 2, 1, 2, 2, 1, 1, 1, 1};
}

// (alpha, beta) pairs of cfg6 at (a,b) = (4,4), per vertex
inline std::vector<std::pair<int, int>> cfg6_alpha_beta() {
  return {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}};
}

}  // namespace fixtures
