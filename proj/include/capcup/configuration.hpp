#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "capcup/geometry.hpp"

namespace capcup {

enum class orient : std::uint8_t { cap, cup };

inline char orient_char(orient o) { return o == orient::cap ? 'A' : 'U'; }

std::int64_t binom(std::int64_t n, std::int64_t k);

// An ordered vertex set [0, m) with a cap/cup orientation for every ascending
// triple. Orientations are stored one bit per triple (1 = cup) in
// lexicographic order of (i, j, k); this is also the file format order.
class configuration {
 public:
  configuration() = default;
  configuration(int m, std::vector<bool> cup_bits);

  int size() const { return m_; }
  std::int64_t triple_count() const { return binom(m_, 3); }

  // Queries with non-ascending triples are rejected, never reordered.
  orient triple(int i, int j, int k) const;
  void set_triple(int i, int j, int k, orient o);

  std::int64_t triple_index(int i, int j, int k) const;

  // The C(m,3)-character string over {A, U}, lexicographic triple order.
  std::string triple_string() const;
  static configuration from_triple_string(int m, const std::string& aus);

  const std::vector<bool>& bits() const { return cups_; }

  friend bool operator==(const configuration& a, const configuration& b) {
    return a.m_ == b.m_ && a.cups_ == b.cups_;
  }

 private:
  int m_ = 0;
  std::vector<bool> cups_;
};

configuration configuration_from_points(const point_set& ps);

// Same triple orientations, linear order reversed: vertex i becomes m-1-i.
configuration mirror(const configuration& s);

struct restriction {
  configuration sub;
  std::vector<int> to_host;  // to_host[new index] = old index
};

// Induced sub-configuration on an ascending nonempty vertex subset.
restriction restrict_to(const configuration& s, const std::vector<int>& keep);

// Configuration file: line 1 "configuration <m>", line 2 the triple string.
configuration read_configuration(std::istream& in);
void write_configuration(std::ostream& out, const configuration& s);

}  // namespace capcup
