#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capcup/configuration.hpp"

namespace capcup {

// A monotone vertex sequence whose consecutive triples all carry `kind`.
// Sizes 1 and 2 are valid chains of either kind.
struct chain {
  orient kind = orient::cup;
  std::vector<int> vs;

  int size() const { return static_cast<int>(vs.size()); }
  int front() const { return vs.front(); }
  int back() const { return vs.back(); }
};

bool operator==(const chain& a, const chain& b);
std::string format_chain(const chain& c);

bool is_chain(const configuration& s, const std::vector<int>& vs, orient kind);

// Longest-chain sizes keyed by (last or first) edge, for both kinds.
// Chain membership is a property of consecutive triples, so the dynamic
// programming is keyed by edges rather than vertices.
class chain_tables {
 public:
  explicit chain_tables(const configuration& s);

  // Size of the longest chain of `kind` starting / ending with edge (u,v).
  int start_with(orient kind, int u, int v) const;
  int end_with(orient kind, int u, int v) const;

  // Longest chain of `kind` starting at / ending at a single vertex (>= 1).
  int start_at(orient kind, int v) const;
  int end_at(orient kind, int v) const;

  int longest(orient kind) const;

  // Extract a concrete chain of exactly `size` vertices starting (ending) at
  // vertex v; requires start_at/end_at(kind, v) >= size. Choices are
  // deterministic (smallest continuation vertex first).
  chain extract_starting_at(const configuration& s, orient kind, int v,
                            int size) const;
  chain extract_ending_at(const configuration& s, orient kind, int v,
                          int size) const;

 private:
  int m_;
  std::vector<int> tab_[4];  // [start|end][cap|cup], edge-indexed
  int edge(int u, int v) const;
};

// An a-cap or a b-cup if one exists (caps checked first); none otherwise.
std::optional<chain> find_cap(const configuration& s, int a);
std::optional<chain> find_cup(const configuration& s, int b);
std::optional<chain> find_forbidden(const configuration& s, int a, int b);

// same, against prebuilt tables
std::optional<chain> find_chain_of(const configuration& s,
                                   const chain_tables& t, orient kind,
                                   int bound);

struct gon_witness {
  chain cap;  // size a, shares endpoints with cup
  chain cup;  // size b
  bool strong = false;
};

enum class gon_strength { weak, strong };

// A weak (a,b)-gon: an a-cap and a b-cup sharing both endpoints. Exact sizes;
// a longer chain between two endpoints need not contain a shorter one, so
// achievable sizes are tracked per (source, last edge) as a bitmask.
// Strong mode additionally requires the chain interiors to be disjoint.
std::optional<gon_witness> gon_search(const configuration& s, int a, int b,
                                      gon_strength strength);

}  // namespace capcup
