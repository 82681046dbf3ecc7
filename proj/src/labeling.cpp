#include "capcup/labeling.hpp"

#include <algorithm>

#include "capcup/errors.hpp"

namespace capcup {

int slope_labeling::edge_index(int x, int y) const {
  if (!(0 <= x && x < y && y < m))
    throw domain_error("bad-edge: (" + std::to_string(x) + "," +
                       std::to_string(y) + ") not ascending in [0," +
                       std::to_string(m) + ")");
  return x * (2 * m - x - 1) / 2 + (y - x - 1);
}

int slope_labeling::label(int x, int y) const { return labels[edge_index(x, y)]; }

void slope_labeling::set_label(int x, int y, int value) {
  if (value < 1 || value > a - 2)
    throw domain_error("bad-label: " + std::to_string(value) +
                       " outside [1," + std::to_string(a - 2) + "]");
  labels[edge_index(x, y)] = value;
}

slope_labeling canonical_labeling(const configuration& s,
                                  const chain_tables& t, int a) {
  if (a < 3 && s.size() >= 2)
    throw domain_error("bad-bound: labeling needs a >= 3");
  if (s.size() >= a)
    if (auto cap = find_chain_of(s, t, orient::cap, a))
      throw domain_error("not-cap-free: contains " + format_chain(*cap));
  const int m = s.size();
  slope_labeling sl{a, m, std::vector<int>(m * (m - 1) / 2, 1)};
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      sl.set_label(x, y, t.start_with(orient::cap, x, y) - 1);
  return sl;
}

slope_labeling canonical_labeling(const configuration& s, int a) {
  return canonical_labeling(s, chain_tables(s), a);
}

std::optional<labeling_violation> validate_labeling(const configuration& s,
                                                    const slope_labeling& sl) {
  if (sl.m != s.size() ||
      static_cast<int>(sl.labels.size()) != sl.m * (sl.m - 1) / 2)
    throw domain_error("bad-labeling: not total over the edges of S");
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y)
      for (int z = y + 1; z < s.size(); ++z)
        if (sl.label(x, y) <= sl.label(y, z) &&
            s.triple(x, y, z) == orient::cap)
          return labeling_violation{x, y, z};
  return std::nullopt;
}

slope_labeling mirror_labeling(const slope_labeling& sl) {
  slope_labeling out{sl.a, sl.m, std::vector<int>(sl.labels.size(), 1)};
  for (int x = 0; x < sl.m; ++x)
    for (int y = x + 1; y < sl.m; ++y)
      out.set_label(sl.m - 1 - y, sl.m - 1 - x, sl.a - 1 - sl.label(x, y));
  return out;
}

slope_labeling restrict_labeling(const slope_labeling& sl,
                                 const std::vector<int>& keep) {
  const int m = static_cast<int>(keep.size());
  slope_labeling out{sl.a, m, std::vector<int>(m * (m - 1) / 2, 1)};
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      out.set_label(x, y, sl.label(keep[x], keep[y]));
  return out;
}

alpha_statistic compute_alpha(const configuration& s, const chain_tables& t,
                              const slope_labeling& sl, int b) {
  if (s.size() >= sl.a)
    if (auto cap = find_chain_of(s, t, orient::cap, sl.a))
      throw domain_error("not-cap-free: contains " + format_chain(*cap));
  if (s.size() >= b)
    if (auto cup = find_chain_of(s, t, orient::cup, b))
      throw domain_error("not-cup-free: contains " + format_chain(*cup));
  const int m = s.size();
  const int width = sl.a - 2;
  alpha_statistic st{sl.a, b,
                     std::vector<std::vector<int>>(m, std::vector<int>(width, 1))};
  for (int p = 0; p < m; ++p)
    for (int i = 1; i <= width; ++i) {
      int best = 1;
      for (int u = 0; u < p; ++u)
        if (sl.label(u, p) <= i)
          best = std::max(best, t.end_with(orient::cup, u, p));
      st.tuples[p][i - 1] = best;
    }

  // guaranteed properties, asserted on every computed statistic
  for (int p = 0; p < m && width > 0; ++p) {
    check_internal(st.tuples[p][0] >= 1, "alpha tuple below 1");
    for (int i = 1; i < width; ++i)
      check_internal(st.tuples[p][i - 1] <= st.tuples[p][i],
                     "alpha tuple not weakly increasing");
    check_internal(st.tuples[p][width - 1] <= b - 1, "alpha tuple above b-1");
  }
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      const int i = sl.label(x, y);
      check_internal(st.value(x, i) < st.value(y, i),
                     "alpha not increasing along labeled edge");
    }
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      check_internal(st.tuples[p] != st.tuples[q], "alpha not injective");
  check_internal(static_cast<std::int64_t>(m) <= binom(sl.a + b - 4, sl.a - 2),
                 "size above the grid simplex cardinality");
  return st;
}

alpha_statistic compute_alpha(const configuration& s, const slope_labeling& sl,
                              int b) {
  return compute_alpha(s, chain_tables(s), sl, b);
}

std::vector<int> grid_simplex::cell_to_subset(const std::vector<int>& cell) {
  std::vector<int> out(cell.size());
  for (std::size_t i = 0; i < cell.size(); ++i)
    out[i] = cell[i] + static_cast<int>(i);
  return out;
}

grid_simplex make_grid_simplex(int a, int b) {
  if (a < 2 || b < 2) throw domain_error("bad-bound: grid simplex needs a,b >= 2");
  grid_simplex g{a, b, {}};
  std::vector<int> cell(a - 2, 1);
  if (a == 2) {
    g.cells.push_back({});  // single empty tuple
    return g;
  }
  while (true) {
    g.cells.push_back(cell);
    int i = a - 3;
    while (i >= 0 && cell[i] == b - 1) --i;
    if (i < 0) break;
    ++cell[i];
    for (int j = i + 1; j <= a - 3; ++j) cell[j] = cell[i];
  }
  check_internal(g.size() == binom(a + b - 4, a - 2),
                 "grid simplex cardinality mismatch");
  return g;
}

int alpha_beta_plane::vertex_at(int alpha, int beta) const {
  if (beta < 1 || beta > n - 1 || alpha < 1 || alpha > beta)
    throw domain_error("bad-cell: (" + std::to_string(alpha) + "," +
                       std::to_string(beta) + ") outside the grid");
  return occupied[beta - 1][alpha - 1];
}

alpha_beta_plane make_alpha_beta_plane(const configuration& s,
                                       const slope_labeling& sl, int n) {
  if (sl.a != 4) throw domain_error("bad-bound: the plane view needs a = 4");
  alpha_beta_plane pl;
  pl.n = n;
  pl.stat = compute_alpha(s, sl, n);
  pl.occupied.assign(n - 1, {});
  for (int beta = 1; beta <= n - 1; ++beta)
    pl.occupied[beta - 1].assign(beta, -1);
  for (int v = 0; v < s.size(); ++v) {
    const int al = pl.stat.alpha(v), be = pl.stat.beta(v);
    check_internal(pl.occupied[be - 1][al - 1] == -1, "plane cell collision");
    pl.occupied[be - 1][al - 1] = v;
  }
  for (int al = 1; al <= n - 1; ++al)
    for (int be = al; be <= n - 1; ++be)
      if (pl.occupied[be - 1][al - 1] == -1) pl.holes.emplace_back(al, be);

  // row/column ordering: same beta -> label-1 edge ordered by alpha,
  // same alpha -> label-2 edge ordered by beta
  for (int u = 0; u < s.size(); ++u)
    for (int v = u + 1; v < s.size(); ++v) {
      if (pl.stat.beta(u) == pl.stat.beta(v)) {
        check_internal(sl.label(u, v) == 1, "same-row edge not labeled 1");
        check_internal(pl.stat.alpha(u) < pl.stat.alpha(v),
                       "same-row vertices not ordered by alpha");
      }
      if (pl.stat.alpha(u) == pl.stat.alpha(v)) {
        check_internal(sl.label(u, v) == 2, "same-column edge not labeled 2");
        check_internal(pl.stat.beta(u) < pl.stat.beta(v),
                       "same-column vertices not ordered by beta");
      }
    }
  return pl;
}

alpha_beta_plane make_alpha_beta_plane(const configuration& s, int n) {
  return make_alpha_beta_plane(s, canonical_labeling(s, 4), n);
}

}  // namespace capcup
