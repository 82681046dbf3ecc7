#include "capcup/chains.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "capcup/errors.hpp"

namespace capcup {

bool operator==(const chain& a, const chain& b) {
  return a.kind == b.kind && a.vs == b.vs;
}

std::string format_chain(const chain& c) {
  std::ostringstream out;
  out << (c.kind == orient::cap ? "cap" : "cup");
  for (int v : c.vs) out << " " << v;
  return out.str();
}

bool is_chain(const configuration& s, const std::vector<int>& vs, orient kind) {
  for (std::size_t t = 0; t < vs.size(); ++t) {
    if (vs[t] < 0 || vs[t] >= s.size())
      throw domain_error("bad-chain: vertex " + std::to_string(vs[t]) +
                         " out of range");
    if (t > 0 && vs[t - 1] >= vs[t])
      throw domain_error("bad-chain: vertices not strictly ascending");
  }
  for (std::size_t t = 2; t < vs.size(); ++t)
    if (s.triple(vs[t - 2], vs[t - 1], vs[t]) != kind) return false;
  return true;
}

int chain_tables::edge(int u, int v) const {
  return u * (2 * m_ - u - 1) / 2 + (v - u - 1);
}

chain_tables::chain_tables(const configuration& s) : m_(s.size()) {
  const int ne = m_ * (m_ - 1) / 2;
  for (auto& t : tab_) t.assign(ne, 2);
  // end_with(u,v): edges in increasing v, so end_with(t,u) is already final.
  for (int v = 1; v < m_; ++v)
    for (int u = 0; u < v; ++u) {
      int& ce = tab_[1][edge(u, v)];  // end, cap
      int& ue = tab_[3][edge(u, v)];  // end, cup
      for (int t = 0; t < u; ++t) {
        if (s.triple(t, u, v) == orient::cap)
          ce = std::max(ce, tab_[1][edge(t, u)] + 1);
        else
          ue = std::max(ue, tab_[3][edge(t, u)] + 1);
      }
    }
  // start_with(u,v): edges in decreasing u.
  for (int u = m_ - 2; u >= 0; --u)
    for (int v = u + 1; v < m_; ++v) {
      int& cs = tab_[0][edge(u, v)];  // start, cap
      int& us = tab_[2][edge(u, v)];  // start, cup
      for (int w = v + 1; w < m_; ++w) {
        if (s.triple(u, v, w) == orient::cap)
          cs = std::max(cs, tab_[0][edge(v, w)] + 1);
        else
          us = std::max(us, tab_[2][edge(v, w)] + 1);
      }
    }
}

int chain_tables::start_with(orient kind, int u, int v) const {
  return tab_[kind == orient::cap ? 0 : 2][edge(u, v)];
}

int chain_tables::end_with(orient kind, int u, int v) const {
  return tab_[kind == orient::cap ? 1 : 3][edge(u, v)];
}

int chain_tables::start_at(orient kind, int v) const {
  int best = 1;
  for (int w = v + 1; w < m_; ++w) best = std::max(best, start_with(kind, v, w));
  return best;
}

int chain_tables::end_at(orient kind, int v) const {
  int best = 1;
  for (int u = 0; u < v; ++u) best = std::max(best, end_with(kind, u, v));
  return best;
}

int chain_tables::longest(orient kind) const {
  if (m_ <= 1) return m_;
  int best = 2;
  const int which = kind == orient::cap ? 1 : 3;
  for (int x : tab_[which]) best = std::max(best, x);
  return best;
}

chain chain_tables::extract_starting_at(const configuration& s, orient kind,
                                        int v, int size) const {
  if (size < 1 || start_at(kind, v) < size)
    throw domain_error("bad-extraction: no chain of size " +
                       std::to_string(size) + " starting at " +
                       std::to_string(v));
  chain c{kind, {v}};
  if (size == 1) return c;
  for (int w = v + 1; w < m_; ++w)
    if (start_with(kind, v, w) >= size) {
      c.vs.push_back(w);
      break;
    }
  while (c.size() < size) {
    const int u = c.vs[c.size() - 2], x = c.vs[c.size() - 1];
    for (int w = x + 1; w < m_; ++w)
      if (s.triple(u, x, w) == kind &&
          start_with(kind, x, w) >= size - c.size() + 1) {
        c.vs.push_back(w);
        break;
      }
  }
  check_internal(c.size() == size, "chain extraction fell short");
  return c;
}

chain chain_tables::extract_ending_at(const configuration& s, orient kind,
                                      int v, int size) const {
  if (size < 1 || end_at(kind, v) < size)
    throw domain_error("bad-extraction: no chain of size " +
                       std::to_string(size) + " ending at " +
                       std::to_string(v));
  chain c{kind, {v}};
  if (size == 1) return c;
  for (int u = 0; u < v; ++u)
    if (end_with(kind, u, v) >= size) {
      c.vs.insert(c.vs.begin(), u);
      break;
    }
  while (c.size() < size) {
    const int x = c.vs[0], w = c.vs[1];
    for (int u = 0; u < x; ++u)
      if (s.triple(u, x, w) == kind &&
          end_with(kind, u, x) >= size - c.size() + 1) {
        c.vs.insert(c.vs.begin(), u);
        break;
      }
  }
  check_internal(c.size() == size, "chain extraction fell short");
  return c;
}

std::optional<chain> find_chain_of(const configuration& s,
                                   const chain_tables& t, orient kind,
                                   int bound) {
  if (bound < 2) throw domain_error("bad-bound: chain bound must be >= 2");
  if (s.size() < bound) return std::nullopt;
  for (int u = 0; u < s.size(); ++u)
    for (int v = u + 1; v < s.size(); ++v)
      if (t.start_with(kind, u, v) >= bound) {
        chain c = t.extract_starting_at(s, kind, u, bound);
        check_internal(is_chain(s, c.vs, kind), "extracted chain invalid");
        return c;
      }
  return std::nullopt;
}

std::optional<chain> find_cap(const configuration& s, int a) {
  if (a < 2) throw domain_error("bad-bound: chain bound must be >= 2");
  if (s.size() < a) return std::nullopt;
  return find_chain_of(s, chain_tables(s), orient::cap, a);
}

std::optional<chain> find_cup(const configuration& s, int b) {
  if (b < 2) throw domain_error("bad-bound: chain bound must be >= 2");
  if (s.size() < b) return std::nullopt;
  return find_chain_of(s, chain_tables(s), orient::cup, b);
}

std::optional<chain> find_forbidden(const configuration& s, int a, int b) {
  if (a < 2 || b < 2) throw domain_error("bad-bound: chain bound must be >= 2");
  if (s.size() < std::min(a, b)) return std::nullopt;
  const chain_tables t(s);
  if (s.size() >= a)
    if (auto c = find_chain_of(s, t, orient::cap, a)) return c;
  if (s.size() >= b)
    if (auto c = find_chain_of(s, t, orient::cup, b)) return c;
  return std::nullopt;
}

namespace {

// Achievable chain sizes from a fixed source x, per last edge, as bitmasks
// (bit k set = a chain of exactly k vertices from x ends with that edge).
struct size_masks {
  int m;
  int x;
  std::vector<std::uint64_t> cap, cup;

  size_masks(const configuration& s, int source)
      : m(s.size()), x(source), cap(m * m, 0), cup(m * m, 0) {
    for (int v = x + 1; v < m; ++v) {
      cap[x * m + v] = cup[x * m + v] = std::uint64_t(1) << 2;
      for (int u = x + 1; u < v; ++u) {
        std::uint64_t mc = 0, mu = 0;
        for (int t = x; t < u; ++t) {
          if (s.triple(t, u, v) == orient::cap)
            mc |= cap[t * m + u] << 1;
          else
            mu |= cup[t * m + u] << 1;
        }
        cap[u * m + v] = mc;
        cup[u * m + v] = mu;
      }
    }
  }

  // A chain of exactly `size` from x to y, walked back deterministically.
  chain extract(const configuration& s, orient kind, int y, int size) const {
    const auto& tab = kind == orient::cap ? cap : cup;
    chain c{kind, {y}};
    if (size == 1) {
      check_internal(y == x, "size-1 extraction endpoint mismatch");
      return c;
    }
    int v = y, u = -1, need = size;
    for (int cand = x; cand < v && u < 0; ++cand)
      if (tab[cand * m + v] >> need & 1) u = cand;
    check_internal(u >= 0, "gon chain extraction: no last edge");
    c.vs.insert(c.vs.begin(), u);
    --need;
    while (need >= 2) {
      int t = -1;
      for (int cand = x; cand < u && t < 0; ++cand)
        if (s.triple(cand, u, v) == kind && (tab[cand * m + u] >> need & 1))
          t = cand;
      check_internal(t >= 0, "gon chain extraction: broken predecessor");
      c.vs.insert(c.vs.begin(), t);
      v = u;
      u = t;
      --need;
    }
    check_internal(c.front() == x && c.size() == size,
                   "gon chain extraction result mismatch");
    return c;
  }
};

// All chains of `kind` with exactly `size` vertices from x to y avoiding
// `blocked` interior vertices; returns the first one found.
bool dfs_avoiding(const configuration& s, const size_masks& masks, orient kind,
                  int y, int size, const std::vector<bool>& blocked,
                  std::vector<int>& acc) {
  const int have = static_cast<int>(acc.size());
  if (have == size) return acc.back() == y;
  const int u = have >= 2 ? acc[have - 2] : -1;
  const int v = acc[have - 1];
  for (int w = v + 1; w <= y; ++w) {
    if (w != y && blocked[w]) continue;
    if (w == y && have + 1 != size) continue;
    if (u >= 0 && s.triple(u, v, w) != kind) continue;
    acc.push_back(w);
    if (dfs_avoiding(s, masks, kind, y, size, blocked, acc)) return true;
    acc.pop_back();
  }
  return false;
}

bool strong_pair(const configuration& s, const size_masks& masks, int x, int y,
                 int a, int b, gon_witness& out) {
  // enumerate a-caps from x to y, then search a disjoint b-cup
  std::vector<int> cap_acc{x};
  std::vector<bool> blocked(s.size(), false);
  // iterative DFS over caps via recursion on a helper
  struct walker {
    const configuration& s;
    const size_masks& masks;
    int x, y, a, b;
    gon_witness& out;
    std::vector<bool>& blocked;

    bool caps(std::vector<int>& acc) {
      const int have = static_cast<int>(acc.size());
      if (have == a) {
        if (acc.back() != y) return false;
        for (std::size_t i = 1; i + 1 < acc.size(); ++i) blocked[acc[i]] = true;
        std::vector<int> cup_acc{x};
        const bool ok =
            dfs_avoiding(s, masks, orient::cup, y, b, blocked, cup_acc);
        for (std::size_t i = 1; i + 1 < acc.size(); ++i)
          blocked[acc[i]] = false;
        if (ok) {
          out.cap = chain{orient::cap, acc};
          out.cup = chain{orient::cup, cup_acc};
          out.strong = true;
        }
        return ok;
      }
      const int u = have >= 2 ? acc[have - 2] : -1;
      const int v = acc[have - 1];
      for (int w = v + 1; w <= y; ++w) {
        if (w == y && have + 1 != a) continue;
        if (u >= 0 && s.triple(u, v, w) != orient::cap) continue;
        acc.push_back(w);
        if (caps(acc)) return true;
        acc.pop_back();
      }
      return false;
    }
  } wk{s, masks, x, y, a, b, out, blocked};
  return wk.caps(cap_acc);
}

}  // namespace

std::optional<gon_witness> gon_search(const configuration& s, int a, int b,
                                      gon_strength strength) {
  if (a < 2 || b < 2) throw domain_error("bad-bound: gon parts must be >= 2");
  if (s.size() > 62) throw domain_error("too-large: gon search needs m <= 62");
  if (strength == gon_strength::strong && s.size() < a + b - 2)
    return std::nullopt;
  for (int x = 0; x + 1 < s.size(); ++x) {
    const size_masks masks(s, x);
    for (int y = x + 1; y < s.size(); ++y) {
      std::uint64_t mc = 0, mu = 0;
      for (int u = x; u < y; ++u) {
        mc |= masks.cap[u * s.size() + y];
        mu |= masks.cup[u * s.size() + y];
      }
      if (!(mc >> a & 1) || !(mu >> b & 1)) continue;
      if (strength == gon_strength::weak) {
        gon_witness w;
        w.cap = masks.extract(s, orient::cap, y, a);
        w.cup = masks.extract(s, orient::cup, y, b);
        w.strong = false;
        check_internal(is_chain(s, w.cap.vs, orient::cap) &&
                           is_chain(s, w.cup.vs, orient::cup),
                       "gon witness chains invalid");
        return w;
      }
      gon_witness w;
      if (strong_pair(s, masks, x, y, a, b, w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace capcup
