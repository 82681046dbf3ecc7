#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "capcup/errors.hpp"
#include "capcup/labeling.hpp"
#include "capcup/render.hpp"
#include "capcup/search.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace capcup;

namespace {

// random induced sub-configurations of the (4,b) extremal construction:
// realizable, 4-cap free, arbitrary size up to C(b,2)
std::vector<configuration> capfree_corpus(int max_m, int count,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<configuration> out;
  std::vector<configuration> bases;
  for (int b = 4; b <= 8; ++b)
    bases.push_back(configuration_from_points(capcup_extremal_points(4, b)));
  while (static_cast<int>(out.size()) < count) {
    const configuration& base = bases[rng() % bases.size()];
    const int m = 1 + static_cast<int>(rng() % std::min(max_m, base.size()));
    std::set<int> pick;
    while (static_cast<int>(pick.size()) < m)
      pick.insert(static_cast<int>(rng() % base.size()));
    out.push_back(
        restrict_to(base, std::vector<int>(pick.begin(), pick.end())).sub);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical labeling of the six-point example") {
  const configuration s = fixtures::cfg6();
  const slope_labeling sl = canonical_labeling(s, 4);
  const auto want = fixtures::cfg6_labels();
  int idx = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y) CHECK(sl.label(x, y) == want[idx++]);
  CHECK_FALSE(validate_labeling(s, sl).has_value());
}

TEST_CASE("canonical labeling edge cases") {
  configuration two(2, {});
  const slope_labeling sl = canonical_labeling(two, 4);
  CHECK(sl.label(0, 1) == 1);  // no 3-cap exists
  // a configuration with a 4-cap is rejected, witness attached
  configuration capped(4, std::vector<bool>(4, false));
  CHECK_THROWS_WITH_AS(canonical_labeling(capped, 4),
                       doctest::Contains("cap 0 1 2 3"), domain_error);
}

TEST_CASE("validate_labeling counterexample") {
  const configuration s = fixtures::cfg6();
  slope_labeling sl = canonical_labeling(s, 4);
  sl.set_label(0, 1, 1);  // labels AB=1 <= BC=1 but ABC is a cap
  const auto viol = validate_labeling(s, sl);
  REQUIRE(viol.has_value());
  CHECK(viol->x == 0);
  CHECK(viol->y == 1);
  CHECK(viol->z == 2);
  configuration two(2, {});
  slope_labeling tiny{4, 2, {2}};
  CHECK_FALSE(validate_labeling(two, tiny).has_value());
  slope_labeling partial{4, 6, {1, 1}};
  CHECK_THROWS_AS(validate_labeling(s, partial), domain_error);
}

TEST_CASE("mirror labeling") {
  const configuration s = fixtures::cfg6();
  const slope_labeling sl = canonical_labeling(s, 4);
  const slope_labeling ml = mirror_labeling(sl);
  // labels swap 1 <-> 2 at a = 4
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y)
      CHECK(ml.label(5 - y, 5 - x) == 3 - sl.label(x, y));
  // involution
  const slope_labeling back = mirror_labeling(ml);
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y) CHECK(back.label(x, y) == sl.label(x, y));
  CHECK_FALSE(validate_labeling(mirror(s), ml).has_value());
}

TEST_CASE("alpha statistic of the six-point example") {
  const configuration s = fixtures::cfg6();
  const slope_labeling sl = canonical_labeling(s, 4);
  const alpha_statistic st = compute_alpha(s, sl, 4);
  const auto want = fixtures::cfg6_alpha_beta();
  for (int v = 0; v < 6; ++v) {
    CHECK(st.alpha(v) == want[v].first);
    CHECK(st.beta(v) == want[v].second);
  }
}

TEST_CASE("alpha statistic edge cases") {
  SUBCASE("leftmost vertex has the all-ones tuple") {
    const configuration s = fixtures::cfg6();
    const alpha_statistic st = compute_alpha(s, canonical_labeling(s, 4), 4);
    CHECK(st.alpha(0) == 1);
    CHECK(st.beta(0) == 1);
  }
  SUBCASE("single vertex") {
    const configuration one(1, {});
    const alpha_statistic st = compute_alpha(one, canonical_labeling(one, 4), 4);
    CHECK(st.tuples.size() == 1);
    CHECK(st.alpha(0) == 1);
    CHECK(st.beta(0) == 1);
  }
  SUBCASE("cup-bound violation carries the witness") {
    const configuration s = fixtures::cfg6();
    CHECK_THROWS_WITH_AS(compute_alpha(s, canonical_labeling(s, 4), 3),
                         doctest::Contains("cup"), domain_error);
  }
}

TEST_CASE("grid simplex") {
  CHECK(make_grid_simplex(4, 4).size() == 6);
  for (int n = 3; n <= 8; ++n)
    CHECK(make_grid_simplex(4, n).size() == binom(n, 2));
  const grid_simplex t45 = make_grid_simplex(4, 5);
  CHECK(grid_simplex::cell_to_subset({1, 3}) == std::vector<int>{1, 4});
  // every cell maps to a distinct subset of {1..a+b-4}
  std::set<std::vector<int>> subsets;
  for (const auto& cell : t45.cells) {
    auto sub = grid_simplex::cell_to_subset(cell);
    for (int x : sub) {
      CHECK(x >= 1);
      CHECK(x <= 5);  // {1, ..., a+b-4}
    }
    CHECK(subsets.insert(sub).second);
  }
}

TEST_CASE("alpha-beta plane") {
  const configuration s = fixtures::cfg6();
  SUBCASE("fully occupied at n = 4") {
    const alpha_beta_plane pl = make_alpha_beta_plane(s, 4);
    CHECK(pl.holes.empty());
    CHECK(pl.vertex_at(1, 1) == 0);
    CHECK(pl.vertex_at(3, 3) == 5);
    CHECK_THROWS_AS(pl.vertex_at(2, 1), domain_error);
  }
  SUBCASE("dropping the last vertex opens the (3,3) hole") {
    // under the restriction of the full labeling (the plane depends on the
    // labeling; the restricted one keeps the remaining vertices in place)
    const std::vector<int> keep{0, 1, 2, 3, 4};
    const configuration sub = restrict_to(s, keep).sub;
    const slope_labeling sl = restrict_labeling(canonical_labeling(s, 4), keep);
    const alpha_beta_plane pl = make_alpha_beta_plane(sub, sl, 4);
    REQUIRE(pl.holes.size() == 1);
    CHECK(pl.holes[0] == std::pair<int, int>{3, 3});
  }
  SUBCASE("single vertex at n = 2") {
    const configuration one(1, {});
    const alpha_beta_plane pl = make_alpha_beta_plane(one, 2);
    CHECK(pl.vertex_at(1, 1) == 0);
    CHECK(pl.holes.empty());
  }
}

TEST_CASE("plane rendering") {
  const configuration s = fixtures::cfg6();
  const alpha_beta_plane pl = make_alpha_beta_plane(s, 4);
  const std::string ascii = render_plane_ascii(pl);
  CHECK(ascii.find("●0") != std::string::npos);
  CHECK(ascii.find("●5") != std::string::npos);
  CHECK(ascii.find("○") == std::string::npos);  // no holes
  const configuration sub = restrict_to(s, {0, 1, 2, 3, 4}).sub;
  const std::string with_hole = render_plane_ascii(make_alpha_beta_plane(sub, 4));
  CHECK(with_hole.find("○") != std::string::npos);
  const std::string svg = render_plane_svg(pl);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find(">5</text>") != std::string::npos);
  // byte-stable output
  CHECK(render_plane_svg(pl) == svg);
  CHECK(render_plane_ascii(pl) == ascii);
}

TEST_CASE("canonical labelings validate on a 4-cap free corpus") {
  for (const configuration& s : capfree_corpus(12, 40, 2024)) {
    const slope_labeling sl = canonical_labeling(s, 4);
    CHECK_FALSE(validate_labeling(s, sl).has_value());
    // restrictions of a valid labeling stay valid
    std::mt19937_64 rng(s.size() * 7919 + 13);
    for (int trial = 0; trial < 4; ++trial) {
      const int m = 1 + static_cast<int>(rng() % s.size());
      std::set<int> pick;
      while (static_cast<int>(pick.size()) < m)
        pick.insert(static_cast<int>(rng() % s.size()));
      const std::vector<int> keep(pick.begin(), pick.end());
      const restriction r = restrict_to(s, keep);
      CHECK_FALSE(
          validate_labeling(r.sub, restrict_labeling(sl, keep)).has_value());
    }
    // the mirrored labeling validates on the mirrored configuration
    CHECK_FALSE(
        validate_labeling(mirror(s), mirror_labeling(sl)).has_value());
  }
}

TEST_CASE("alpha statistic properties on cap and cup free corpora") {
  // compute_alpha asserts monotonicity, growth along edges and injectivity
  // internally; this exercises those asserts across (a,b) combinations
  std::mt19937_64 rng(555);
  for (int a = 4; a <= 5; ++a)
    for (int b = 4; b <= 6; ++b) {
      const configuration base =
          configuration_from_points(capcup_extremal_points(a, b));
      CHECK(base.size() == binom(a + b - 4, a - 2));
      CHECK_FALSE(find_forbidden(base, a, b).has_value());
      const slope_labeling sl = canonical_labeling(base, a);
      const alpha_statistic st = compute_alpha(base, sl, b);
      CHECK(static_cast<int>(st.tuples.size()) == base.size());
      for (int trial = 0; trial < 6; ++trial) {
        const int m = 1 + static_cast<int>(rng() % base.size());
        std::set<int> pick;
        while (static_cast<int>(pick.size()) < m)
          pick.insert(static_cast<int>(rng() % base.size()));
        const std::vector<int> keep(pick.begin(), pick.end());
        const restriction r = restrict_to(base, keep);
        compute_alpha(r.sub, restrict_labeling(sl, keep), b);
      }
    }
}

TEST_CASE("label-1 edges extend cups left, label-2 edges extend right") {
  // exhaustively on every 4-cap free configuration of size <= 6 plus the
  // canonical six-point example
  auto check_one = [](const configuration& s) {
    if (find_cap(s, 4)) return;
    const slope_labeling sl = canonical_labeling(s, 4);
    for (int p = 0; p < s.size(); ++p)
      for (int q = p + 1; q < s.size(); ++q) {
        if (sl.label(p, q) == 1) {
          for (int size = 1; size < s.size(); ++size)
            for (const auto& c : oracle::all_chains(s, orient::cup, size)) {
              if (c.front() != q) continue;
              std::vector<int> ext{p};
              ext.insert(ext.end(), c.begin(), c.end());
              CHECK(is_chain(s, ext, orient::cup));
            }
        } else {
          for (int size = 1; size < s.size(); ++size)
            for (const auto& c : oracle::all_chains(s, orient::cup, size)) {
              if (c.back() != p) continue;
              std::vector<int> ext = c;
              ext.push_back(q);
              CHECK(is_chain(s, ext, orient::cup));
            }
        }
      }
  };
  for (int m = 2; m <= 5; ++m) oracle::sweep_all(m, check_one);
  check_one(fixtures::cfg6());
}

TEST_CASE("plane rows and columns are ordered (same-beta, same-alpha)") {
  // the plane constructor asserts the orderings; run it across the corpus
  for (const configuration& s : capfree_corpus(10, 25, 99)) {
    if (find_cup(s, 9)) continue;
    make_alpha_beta_plane(s, 9);
  }
}
