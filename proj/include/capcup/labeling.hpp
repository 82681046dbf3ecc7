#pragma once

#include <optional>
#include <vector>

#include "capcup/chains.hpp"
#include "capcup/configuration.hpp"

namespace capcup {

// Edge labels in [1, a-2] such that s(xy) <= s(yz) forces xyz to be a cup.
struct slope_labeling {
  int a = 0;
  int m = 0;
  std::vector<int> labels;  // lexicographic edge order

  int edge_index(int x, int y) const;
  int label(int x, int y) const;
  void set_label(int x, int y, int value);
};

// label(e) = (longest cap starting with e) - 1. Throws a domain_error
// carrying the cap witness if s is not a-cap free.
slope_labeling canonical_labeling(const configuration& s, int a);
slope_labeling canonical_labeling(const configuration& s,
                                  const chain_tables& t, int a);

struct labeling_violation {
  int x, y, z;  // s(xy) <= s(yz) but xyz is a cap
};

std::optional<labeling_violation> validate_labeling(const configuration& s,
                                                    const slope_labeling& sl);

// The labeling of mirror(S): reflected edge of (x,y) gets a - 1 - s(xy).
slope_labeling mirror_labeling(const slope_labeling& sl);

// The restriction of a valid labeling to a vertex subset is a valid labeling
// of the restricted configuration.
slope_labeling restrict_labeling(const slope_labeling& sl,
                                 const std::vector<int>& keep);

// Per-vertex tuple (alpha_1,...,alpha_{a-2}): alpha_i(p) is the size of the
// longest cup ending at p whose final edge has label <= i, or 1 if none.
struct alpha_statistic {
  int a = 0;
  int b = 0;
  std::vector<std::vector<int>> tuples;  // per vertex, length a-2

  int value(int v, int i) const { return tuples[v][i - 1]; }
  // aliases for a = 4
  int alpha(int v) const { return value(v, 1); }
  int beta(int v) const { return value(v, 2); }
};

// Requires s a-cap free (under sl.a) and b-cup free; errors carry the
// witness. The statistic's guaranteed properties (monotone tuple in
// [1, b-1], strict growth along labeled edges, injectivity) are asserted.
alpha_statistic compute_alpha(const configuration& s, const slope_labeling& sl,
                              int b);
alpha_statistic compute_alpha(const configuration& s, const chain_tables& t,
                              const slope_labeling& sl, int b);

// All weakly increasing (a-2)-tuples with entries in [1, b-1].
struct grid_simplex {
  int a = 0;
  int b = 0;
  std::vector<std::vector<int>> cells;  // lexicographic

  std::int64_t size() const { return static_cast<std::int64_t>(cells.size()); }
  // tuple (x_1..x_{a-2}) <-> the (a-2)-subset {x_i + i - 1} of {1..a+b-4}
  static std::vector<int> cell_to_subset(const std::vector<int>& cell);
};

grid_simplex make_grid_simplex(int a, int b);

// The a = 4 statistic drawn as a triangular grid: vertex v sits at
// (alpha(v), beta(v)); unoccupied cells are holes.
struct alpha_beta_plane {
  int n = 0;
  alpha_statistic stat;
  std::vector<std::vector<int>> occupied;  // [beta-1][alpha-1] = vertex or -1
  std::vector<std::pair<int, int>> holes;  // (alpha, beta), lexicographic

  int vertex_at(int alpha, int beta) const;
};

alpha_beta_plane make_alpha_beta_plane(const configuration& s, int n);
alpha_beta_plane make_alpha_beta_plane(const configuration& s,
                                       const slope_labeling& sl, int n);

}  // namespace capcup
