#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "capcup/configuration.hpp"
#include "capcup/geometry.hpp"
#include "capcup/witness.hpp"

namespace capcup {

struct gon_bound {
  int a = 3;
  int b = 3;
  bool strong = false;
};

// At least one constraint must be present.
struct avoidance_spec {
  std::optional<int> cap_bound;
  std::optional<int> cup_bound;
  std::optional<gon_bound> gon;

  void validate() const;
  std::string describe() const;
};

struct search_budget {
  double seconds = std::numeric_limits<double>::infinity();
};

struct search_report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::int64_t count = 0;     // canonical configurations found
  int extremal = -1;          // max-size result
  std::int64_t tested = 0;    // checker runs
  std::int64_t verified = 0;  // verified certificates / families found
  std::int64_t counterexamples = 0;
  bool exhausted = true;
  std::vector<configuration> witnesses;  // capped
  std::vector<std::string> notes;
  double elapsed_seconds = 0;
};

// Stable line format "report v1 ..."; timing goes into a trailing comment so
// reports with equal parameters compare byte-identical.
void write_report(std::ostream& out, const search_report& r);

using config_sink = std::function<void(const configuration&)>;

// Depth-first extension vertex by vertex: adding vertex v decides every
// triple (i,j,v) one branch at a time, with incremental chain tables pruning
// any branch that creates a forbidden pattern. Only mirror-canonical
// configurations (triple string <= mirrored triple string) are emitted.
// stop_after > 0 stops once that many configurations were found (serial).
// With threads > 1 the sink is invoked under a lock, in no particular
// order; sink_threadsafe drops the lock for sinks that synchronize
// themselves.
search_report enumerate_free(int m, const avoidance_spec& spec,
                             const search_budget& budget = {}, int threads = 1,
                             const config_sink& sink = nullptr,
                             std::int64_t stop_after = 0,
                             int witness_cap = 4,
                             bool sink_threadsafe = false);

// Largest m <= limit admitting a spec-free configuration, with witness.
search_report max_free_size(const avoidance_spec& spec, int limit,
                            const search_budget& budget = {}, int threads = 1);

enum class search_mode { exhaustive, random };

// Exhaustive: every 4-cap, n-cup, (3,n-1)-gon free configuration count at
// size C(n-1,2)+2 (expected zero) plus find_gon on every 4-cap, n-cup free
// configuration of that size (and its mirror). Random: seeded realizable
// point sets pushed through find_gon.
search_report check_main_theorem(int n, search_mode mode, int trials,
                                 std::uint64_t seed,
                                 const search_budget& budget = {},
                                 int threads = 1);

// Searches every generated or sampled 4-cap, n-cup free configuration of
// size C(n-1,2)+k for k mutually interweaved laced (n-1)-cups; any
// configuration without one is serialized as a counterexample candidate.
search_report check_conjecture_k(int n, int k, search_mode mode, int trials,
                                 std::uint64_t seed,
                                 const search_budget& budget = {},
                                 int threads = 1);

// k mutually interweaved laced (n-1)-cups in S, or none.
std::optional<std::vector<laced_cup>> find_k_family(const configuration& s,
                                                    int n, int k);

// All cups with exactly `size` vertices.
std::vector<chain> enumerate_cups(const configuration& s, int size);

// The classic recursive cap/cup-free extremal construction:
// C(a+b-4, a-2) points containing no a-cap and no b-cup.
point_set capcup_extremal_points(int a, int b);

// Rejection-sampled integer coordinates in [0, coordinate_bound], general
// position guaranteed; deterministic for a fixed seed.
point_set random_point_set(int m, std::uint64_t seed,
                           std::int64_t coordinate_bound = 1000000000);

}  // namespace capcup
