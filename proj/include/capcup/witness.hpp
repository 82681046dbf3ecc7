#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "capcup/chains.hpp"
#include "capcup/configuration.hpp"
#include "capcup/labeling.hpp"

namespace capcup {

// An (n-1)-cup together with a cup ending at its start and a cup starting at
// its end whose sizes sum to exactly n-1.
struct laced_cup {
  chain cup;
  chain left;
  chain right;
};

// Two laced cups from p to r and q to s with p < q <= r < s.
struct interweaved_pair {
  laced_cup first;
  laced_cup second;
};

// Endpoint sets of all (n-1)-cups: p_s = rightmost left endpoint,
// q_s = leftmost right endpoint; always p_s <= q_s.
struct boundary_data {
  std::vector<int> left_endpoints;
  std::vector<int> right_endpoints;
  int p_s = -1;
  int q_s = -1;
};

bool is_interweaved(const chain& c1, const chain& c2);

// Lacing for a given (n-1)-cup from the chain tables, truncated to an exact
// sum of n-1 (a suffix/prefix of a cup is a cup), or none if too short.
std::optional<std::pair<chain, chain>> lacing_witness(const configuration& s,
                                                      const chain& cup, int n);

// Construction results that may instead surface an n-cup: the contradiction
// branch of the underlying argument, returned as a first-class witness.
using gon_or_cup = std::variant<gon_witness, chain>;

// c1 ends where c2 starts; both are (n-1)-cups in a 4-cap free configuration.
// Produces a (3, n-1)-gon, or the n-cup that refutes n-cup freeness.
gon_or_cup gon_from_colliding_cups(const configuration& s,
                                   const slope_labeling& sl, const chain& c1,
                                   const chain& c2, int n);

gon_or_cup gon_from_interweaved_pair(const configuration& s,
                                     const slope_labeling& sl,
                                     const interweaved_pair& pair, int n);

// From an (n-1)-cup x..y, an (n-2)-cup ending at x and an (n-2)-cup starting
// at y (n >= 4), builds an interweaved pair of laced (n-1)-cups.
interweaved_pair pair_from_special(const configuration& s,
                                   const slope_labeling& sl, const chain& c,
                                   const chain& cx, const chain& cy, int n);

// Requires |S| >= C(n-1,2)+1 and S 4-cap, n-cup free.
boundary_data boundary_points(const configuration& s, int n);

struct rows_data {
  std::vector<int> leftmost;  // x_1 .. x_{n-1}, strictly increasing
  std::vector<int> delta;     // {x_1 .. x_{n-2}}
};

rows_data rows_and_leftmost(const configuration& s, const slope_labeling& sl,
                            int n);

using pair_or_forbidden = std::variant<interweaved_pair, chain>;

// For |S| = C(n-1,2)+2: a pair of interweaved laced (n-1)-cups, found by
// induction on n with one fixed top-level labeling restricted down the
// recursion. If S is not 4-cap free or not n-cup free, returns that chain
// instead. Internal derivation steps are asserted; a failure there would
// falsify the underlying argument and raises internal_error.
pair_or_forbidden find_interweaved_laced_pair(const configuration& s, int n);

enum class certificate_kind { cap, cup, gon, laced_pair, k_family };

// Self-contained, re-checkable against a configuration with no access to the
// algorithm that produced it.
struct certificate {
  certificate_kind kind = certificate_kind::cap;
  int n = 0, a = 0, b = 0;
  chain single;                   // cap / cup kinds
  gon_witness gon;                // gon kind
  std::vector<laced_cup> family;  // laced_pair (2 entries) / k_family
};

std::string kind_name(certificate_kind k);

// For |S| >= C(n-1,2)+2: a verified 4-cap, n-cup, or (3, n-1)-gon
// certificate. When |S| exceeds the bound, runs on the leftmost
// C(n-1,2)+2 vertices (witnesses are in S's own indices either way).
certificate find_gon(const configuration& s, int n);

// For |S| = C(n,2), 4-cap and n-cup free (fully occupied plane): the n-1
// L-shaped row/column cups, all pairwise interweaved, with lacings.
std::vector<laced_cup> full_grid_family(const configuration& s, int n);

struct verify_result {
  bool ok = true;
  std::string reason;
};

// Re-checks every chain, lacing sum, interweaving inequality and endpoint
// condition from scratch.
verify_result verify_certificate(const configuration& s, const certificate& c);

}  // namespace capcup
