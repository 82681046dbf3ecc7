#include "capcup/witness.hpp"

#include <algorithm>

#include "capcup/errors.hpp"

namespace capcup {

namespace {

chain mirror_chain(const chain& c, int m) {
  chain out{c.kind, {}};
  out.vs.reserve(c.vs.size());
  for (auto it = c.vs.rbegin(); it != c.vs.rend(); ++it)
    out.vs.push_back(m - 1 - *it);
  return out;
}

// Lacings swap sides under reflection: the right lacing of C becomes the
// left lacing of the reflected cup.
laced_cup mirror_laced(const laced_cup& lc, int m) {
  return laced_cup{mirror_chain(lc.cup, m), mirror_chain(lc.right, m),
                   mirror_chain(lc.left, m)};
}

interweaved_pair mirror_pair(const interweaved_pair& p, int m) {
  return interweaved_pair{mirror_laced(p.second, m), mirror_laced(p.first, m)};
}

gon_witness mirror_gon(const gon_witness& g, int m) {
  return gon_witness{mirror_chain(g.cap, m), mirror_chain(g.cup, m), g.strong};
}

gon_or_cup mirror_gon_or_cup(const gon_or_cup& r, int m) {
  if (std::holds_alternative<gon_witness>(r))
    return mirror_gon(std::get<gon_witness>(r), m);
  return mirror_chain(std::get<chain>(r), m);
}

chain prepend(int v, const chain& c) {
  chain out{c.kind, {v}};
  out.vs.insert(out.vs.end(), c.vs.begin(), c.vs.end());
  return out;
}

chain append(const chain& c, int v) {
  chain out = c;
  out.vs.push_back(v);
  return out;
}

chain singleton_cup(int v) { return chain{orient::cup, {v}}; }

void require_cup(const configuration& s, const chain& c, const char* what) {
  check_internal(c.kind == orient::cup && is_chain(s, c.vs, c.kind), what);
}

void validate_laced(const configuration& s, const laced_cup& lc, int n,
                    const char* who) {
  if (lc.cup.kind != orient::cup || !is_chain(s, lc.cup.vs, orient::cup) ||
      lc.cup.size() != n - 1)
    throw domain_error(std::string(who) + ": not an (n-1)-cup");
  if (!is_chain(s, lc.left.vs, orient::cup) ||
      !is_chain(s, lc.right.vs, orient::cup))
    throw domain_error(std::string(who) + ": lacing chains invalid");
  if (lc.left.back() != lc.cup.front() || lc.right.front() != lc.cup.back())
    throw domain_error(std::string(who) + ": lacing endpoints mismatch");
  if (lc.left.size() + lc.right.size() != n - 1)
    throw domain_error(std::string(who) + ": lacing sum");
}

}  // namespace

bool is_interweaved(const chain& c1, const chain& c2) {
  if (c1.kind != orient::cup || c2.kind != orient::cup)
    throw domain_error("bad-chain: interweaving is defined for cups");
  return c1.front() < c2.front() && c2.front() <= c1.back() &&
         c1.back() < c2.back();
}

std::optional<std::pair<chain, chain>> lacing_witness(const configuration& s,
                                                      const chain& cup, int n) {
  if (cup.kind != orient::cup || !is_chain(s, cup.vs, orient::cup) ||
      cup.size() != n - 1)
    throw domain_error("bad-chain: lacing needs an (n-1)-cup");
  const chain_tables t(s);
  const int lp = t.end_at(orient::cup, cup.front());
  const int rq = t.start_at(orient::cup, cup.back());
  if (lp + rq < n - 1) return std::nullopt;
  const int lsize = std::min(lp, n - 2);
  const int rsize = n - 1 - lsize;
  chain left = t.extract_ending_at(s, orient::cup, cup.front(), lsize);
  chain right = t.extract_starting_at(s, orient::cup, cup.back(), rsize);
  return std::make_pair(std::move(left), std::move(right));
}

gon_or_cup gon_from_colliding_cups(const configuration& s,
                                   const slope_labeling& sl, const chain& c1,
                                   const chain& c2, int n) {
  if (n < 3) throw domain_error("bad-bound: gon construction needs n >= 3");
  if (sl.a != 4) throw domain_error("bad-labeling: expected a = 4");
  if (c1.size() != n - 1 || c2.size() != n - 1 ||
      !is_chain(s, c1.vs, orient::cup) || !is_chain(s, c2.vs, orient::cup))
    throw domain_error("bad-chain: expected two (n-1)-cups");
  if (c1.back() != c2.front())
    throw domain_error("bad-chain: first cup must end where the second starts");

  const int x = c1.back();
  const int a = c1.vs[c1.size() - 2];
  const int b = c2.vs[1];
  if (sl.label(a, b) == 2) {
    const gon_or_cup sub =
        gon_from_colliding_cups(mirror(s), mirror_labeling(sl),
                                mirror_chain(c2, s.size()),
                                mirror_chain(c1, s.size()), n);
    return mirror_gon_or_cup(sub, s.size());
  }

  // q = c2 minus its start; a extends it to the left along the label-1 edge
  chain q{orient::cup, std::vector<int>(c2.vs.begin() + 1, c2.vs.end())};
  chain aq = prepend(a, q);
  require_cup(s, aq, "label-1 extension failed");
  const int c = q.back();

  if (s.triple(a, x, c) == orient::cap) {
    gon_witness g;
    g.cap = chain{orient::cap, {a, x, c}};
    g.cup = aq;
    check_internal(is_chain(s, g.cap.vs, orient::cap), "gon cap invalid");
    return g;
  }
  chain ncup = append(c1, c);
  require_cup(s, ncup, "colliding cups: extension to an n-cup invalid");
  return ncup;
}

gon_or_cup gon_from_interweaved_pair(const configuration& s,
                                     const slope_labeling& sl,
                                     const interweaved_pair& pair, int n) {
  if (n < 3) throw domain_error("bad-bound: gon construction needs n >= 3");
  if (sl.a != 4) throw domain_error("bad-labeling: expected a = 4");
  validate_laced(s, pair.first, n, "bad-pair");
  validate_laced(s, pair.second, n, "bad-pair");
  if (!is_interweaved(pair.first.cup, pair.second.cup))
    throw domain_error("bad-pair: cups not interweaved");

  const int p = pair.first.cup.front();
  const int r = pair.first.cup.back();
  const int q = pair.second.cup.front();
  if (q == r)
    return gon_from_colliding_cups(s, sl, pair.first.cup, pair.second.cup, n);
  if (sl.label(q, r) == 2) {
    const gon_or_cup sub = gon_from_interweaved_pair(
        mirror(s), mirror_labeling(sl), mirror_pair(pair, s.size()), n);
    return mirror_gon_or_cup(sub, s.size());
  }

  if (sl.label(p, q) == 1) {
    // the pair's second cup extends to the left: an n-cup, surfaced as such
    chain ncup = prepend(p, pair.second.cup);
    require_cup(s, ncup, "interweaved pair: left extension invalid");
    return ncup;
  }
  if (s.triple(p, q, r) == orient::cap) {
    gon_witness g;
    g.cap = chain{orient::cap, {p, q, r}};
    g.cup = pair.first.cup;
    check_internal(is_chain(s, g.cap.vs, orient::cap), "gon cap invalid");
    return g;
  }
  // pqr is a cup: the lacings of the first cup join across q into an n-cup
  chain ncup = pair.first.left;
  ncup.vs.push_back(q);
  ncup.vs.insert(ncup.vs.end(), pair.first.right.vs.begin(),
                 pair.first.right.vs.end());
  require_cup(s, ncup, "interweaved pair: joined lacing cup invalid");
  check_internal(ncup.size() == n, "joined lacing cup has wrong size");
  return ncup;
}

interweaved_pair pair_from_special(const configuration& s,
                                   const slope_labeling& sl, const chain& c,
                                   const chain& cx, const chain& cy, int n) {
  if (n < 4) throw domain_error("bad-bound: special case needs n >= 4");
  if (sl.a != 4) throw domain_error("bad-labeling: expected a = 4");
  if (c.size() != n - 1 || !is_chain(s, c.vs, orient::cup) ||
      c.kind != orient::cup)
    throw domain_error("bad-chain: expected an (n-1)-cup");
  const int x = c.front(), y = c.back();
  if (cx.size() != n - 2 || !is_chain(s, cx.vs, orient::cup) || cx.back() != x)
    throw domain_error("bad-chain: expected an (n-2)-cup ending at the start");
  if (cy.size() != n - 2 || !is_chain(s, cy.vs, orient::cup) ||
      cy.front() != y)
    throw domain_error("bad-chain: expected an (n-2)-cup starting at the end");

  if (sl.label(x, y) == 2) {
    const interweaved_pair sub = pair_from_special(
        mirror(s), mirror_labeling(sl), mirror_chain(c, s.size()),
        mirror_chain(cy, s.size()), mirror_chain(cx, s.size()), n);
    return mirror_pair(sub, s.size());
  }

  // c = x.q_mid.y, cx = p_chain.x, cy = y.r_chain, all of size n-3 >= 1
  chain p_chain{orient::cup,
                std::vector<int>(cx.vs.begin(), cx.vs.end() - 1)};
  chain q_mid{orient::cup, std::vector<int>(c.vs.begin() + 1, c.vs.end() - 1)};
  chain r_chain{orient::cup, std::vector<int>(cy.vs.begin() + 1, cy.vs.end())};
  const int a = p_chain.back();
  const int b = q_mid.front();
  check_internal(a < x && x < b && q_mid.back() < y && y < r_chain.front(),
                 "special case: endpoint order broken");

  // x.cy is a laced (n-1)-cup in every branch
  chain xyr = prepend(x, cy);
  require_cup(s, xyr, "special case: x.cy not a cup");
  laced_cup right_cup{xyr, cx, singleton_cup(cy.back())};

  interweaved_pair out;
  if (sl.label(a, b) == 1) {
    chain qy{orient::cup, std::vector<int>(c.vs.begin() + 1, c.vs.end())};
    chain aqy = prepend(a, qy);
    require_cup(s, aqy, "special case: a.q.y not a cup");
    out = interweaved_pair{laced_cup{aqy, singleton_cup(a), cy}, right_cup};
  } else if (sl.label(b, y) == 1) {
    chain byr = prepend(b, cy);
    require_cup(s, byr, "special case: b.y.r not a cup");
    chain pb = append(p_chain, b);
    require_cup(s, pb, "special case: p.b not a cup");
    laced_cup first{c, cx, singleton_cup(y)};
    out = interweaved_pair{first, laced_cup{byr, pb, singleton_cup(cy.back())}};
  } else {
    chain pby = append(append(p_chain, b), y);
    require_cup(s, pby, "special case: p.b.y not a cup");
    out = interweaved_pair{laced_cup{pby, singleton_cup(p_chain.front()), cy},
                           right_cup};
  }
  validate_laced(s, out.first, n, "special case output");
  validate_laced(s, out.second, n, "special case output");
  check_internal(is_interweaved(out.first.cup, out.second.cup),
                 "special case output not interweaved");
  return out;
}

namespace {

// freeness is the caller's responsibility on this path
boundary_data boundary_from_tables(const configuration& s,
                                   const chain_tables& t, int n) {
  boundary_data bd;
  for (int v = 0; v < s.size(); ++v) {
    if (t.start_at(orient::cup, v) >= n - 1) bd.left_endpoints.push_back(v);
    if (t.end_at(orient::cup, v) >= n - 1) bd.right_endpoints.push_back(v);
  }
  check_internal(!bd.left_endpoints.empty() && !bd.right_endpoints.empty(),
                 "no (n-1)-cup at or above the guaranteed size");
  bd.p_s = bd.left_endpoints.back();
  bd.q_s = bd.right_endpoints.front();
  check_internal(bd.p_s <= bd.q_s, "endpoint separation p_s <= q_s");
  return bd;
}

}  // namespace

boundary_data boundary_points(const configuration& s, int n) {
  if (n < 3) throw domain_error("bad-bound: boundary data needs n >= 3");
  if (s.size() < binom(n - 1, 2) + 1)
    throw domain_error("size-below-bound: need at least C(n-1,2)+1 vertices");
  const chain_tables t(s);
  if (s.size() >= 4)
    if (auto cap = find_chain_of(s, t, orient::cap, 4))
      throw domain_error("not-cap-free: contains " + format_chain(*cap));
  if (s.size() >= n)
    if (auto cup = find_chain_of(s, t, orient::cup, n))
      throw domain_error("not-cup-free: contains " + format_chain(*cup));
  return boundary_from_tables(s, t, n);
}

namespace {

rows_data rows_from_stat(const alpha_statistic& st, int m, int n) {
  rows_data rd;
  rd.leftmost.assign(n - 1, -1);
  for (int v = 0; v < m; ++v) {
    const int be = st.beta(v);
    check_internal(be >= 1 && be <= n - 1, "beta out of range");
    if (rd.leftmost[be - 1] == -1) rd.leftmost[be - 1] = v;  // vertices ascend
  }
  for (int i = 0; i < n - 1; ++i)
    check_internal(rd.leftmost[i] != -1,
                   "row " + std::to_string(i + 1) + " empty");
  for (int i = 0; i + 1 < n - 1; ++i)
    check_internal(rd.leftmost[i] < rd.leftmost[i + 1],
                   "row leftmost vertices not increasing");
  rd.delta.assign(rd.leftmost.begin(), rd.leftmost.end() - 1);
  return rd;
}

}  // namespace

rows_data rows_and_leftmost(const configuration& s, const slope_labeling& sl,
                            int n) {
  if (n < 3) throw domain_error("bad-bound: rows need n >= 3");
  if (s.size() < binom(n - 1, 2) + 1)
    throw domain_error("size-below-bound: need at least C(n-1,2)+1 vertices");
  const alpha_statistic st = compute_alpha(s, sl, n);
  return rows_from_stat(st, s.size(), n);
}

namespace {

chain host_chain(const chain& c, const std::vector<int>& to_host) {
  chain out{c.kind, {}};
  out.vs.reserve(c.vs.size());
  for (int v : c.vs) out.vs.push_back(to_host[v]);
  return out;
}

laced_cup host_laced(const laced_cup& lc, const std::vector<int>& to_host) {
  return laced_cup{host_chain(lc.cup, to_host), host_chain(lc.left, to_host),
                   host_chain(lc.right, to_host)};
}

interweaved_pair recurse_pair(const configuration& s, const chain_tables& t,
                              const slope_labeling& sl, int n);

// The step applied once q_s is known not to start any (n-2)-cup: delete the
// row-leftmost set, recurse on the remainder with the restricted labeling,
// and pull the returned pair back up by one row each.
interweaved_pair inductive_step(const configuration& s, const chain_tables& t,
                                const slope_labeling& sl, int n) {
  const alpha_statistic st = compute_alpha(s, t, sl, n);
  const rows_data rows = rows_from_stat(st, s.size(), n);
  const boundary_data bd = boundary_from_tables(s, t, n);
  check_internal(rows.leftmost[n - 2] == bd.q_s,
                 "leftmost of the top row must be q_s");

  std::vector<int> keep;
  keep.reserve(s.size() - rows.delta.size());
  for (int v = 0; v < s.size(); ++v)
    if (!std::binary_search(rows.delta.begin(), rows.delta.end(), v))
      keep.push_back(v);
  const restriction rs = restrict_to(s, keep);
  check_internal(static_cast<std::int64_t>(rs.sub.size()) ==
                     binom(n - 2, 2) + 2,
                 "reduced configuration has wrong size");
  const chain_tables sub_tables(rs.sub);
  check_internal(sub_tables.longest(orient::cap) < 4,
                 "reduced configuration not 4-cap free");
  check_internal(sub_tables.longest(orient::cup) < n - 1,
                 "reduced configuration not (n-1)-cup free");

  const slope_labeling sub_sl = restrict_labeling(sl, keep);
  const interweaved_pair sub =
      recurse_pair(rs.sub, sub_tables, sub_sl, n - 1);

  const laced_cup sub_host[2] = {host_laced(sub.first, rs.to_host),
                                 host_laced(sub.second, rs.to_host)};
  laced_cup lifted[2];
  int row_of[2] = {0, 0};
  for (int e = 0; e < 2; ++e) {
    const laced_cup& lc = sub_host[e];
    const int pe = lc.cup.front();
    const int ie = st.beta(pe);
    // the derivation's guarantees about any (n-2)-cup starting in S'
    check_internal(pe < bd.q_s, "sub-cup start not left of q_s");
    check_internal(ie <= n - 2, "sub-cup start in the top row");
    const int xi = rows.leftmost[ie - 1];
    check_internal(xi < pe, "row leftmost not left of the sub-cup start");
    check_internal(sl.label(xi, pe) == 1, "row edge not labeled 1");
    check_internal(st.alpha(xi) == 1, "row leftmost has alpha > 1");
    check_internal(st.alpha(pe) == 2, "sub-cup start has alpha != 2");
    row_of[e] = ie;

    chain lifted_cup = prepend(xi, lc.cup);
    require_cup(s, lifted_cup, "lifted cup invalid");

    const int right_size = lc.right.size();
    const int left_size = n - 1 - right_size;
    check_internal(left_size >= 1 && left_size <= ie,
                   "lifted left lacing size out of range");
    chain left = left_size == 1
                     ? singleton_cup(xi)
                     : t.extract_ending_at(s, orient::cup, xi, left_size);
    check_internal(is_chain(s, lc.right.vs, orient::cup),
                   "sub right lacing invalid in the host");
    lifted[e] = laced_cup{lifted_cup, std::move(left), lc.right};
    validate_laced(s, lifted[e], n, "lifted pair");
  }
  check_internal(row_of[0] < row_of[1], "lifted rows not increasing");
  interweaved_pair out{lifted[0], lifted[1]};
  check_internal(is_interweaved(out.first.cup, out.second.cup),
                 "lifted pair not interweaved");
  return out;
}

interweaved_pair recurse_pair(const configuration& s, const chain_tables& t,
                              const slope_labeling& sl, int n) {
  if (n == 3) {
    check_internal(s.size() == 3, "base case needs exactly 3 vertices");
    laced_cup c1{chain{orient::cup, {0, 1}}, singleton_cup(0), singleton_cup(1)};
    laced_cup c2{chain{orient::cup, {1, 2}}, singleton_cup(1), singleton_cup(2)};
    return interweaved_pair{c1, c2};
  }
  const boundary_data bd = boundary_from_tables(s, t, n);
  const bool end_at_ps = t.end_at(orient::cup, bd.p_s) >= n - 2;
  const bool start_at_qs = t.start_at(orient::cup, bd.q_s) >= n - 2;

  if (end_at_ps && start_at_qs) {
    const chain cx = t.extract_ending_at(s, orient::cup, bd.p_s, n - 2);
    const chain cy = t.extract_starting_at(s, orient::cup, bd.q_s, n - 2);
    const chain c_l = t.extract_ending_at(s, orient::cup, bd.q_s, n - 1);
    const chain c_r = t.extract_starting_at(s, orient::cup, bd.p_s, n - 1);
    if (c_l.front() == bd.p_s) return pair_from_special(s, sl, c_l, cx, cy, n);
    if (c_r.back() == bd.q_s) return pair_from_special(s, sl, c_r, cx, cy, n);
    check_internal(c_l.front() < bd.p_s && bd.q_s < c_r.back(),
                   "boundary cups not separated");
    interweaved_pair out{
        laced_cup{c_l, singleton_cup(c_l.front()), cy},
        laced_cup{c_r, cx, singleton_cup(c_r.back())}};
    validate_laced(s, out.first, n, "boundary pair");
    validate_laced(s, out.second, n, "boundary pair");
    check_internal(is_interweaved(out.first.cup, out.second.cup),
                   "boundary pair not interweaved");
    return out;
  }
  if (start_at_qs) {
    // reflect so that q_s is not the starting point of an (n-2)-cup
    const configuration sm = mirror(s);
    const chain_tables tm(sm);
    const interweaved_pair sub = inductive_step(sm, tm, mirror_labeling(sl), n);
    return mirror_pair(sub, s.size());
  }
  return inductive_step(s, t, sl, n);
}

}  // namespace

pair_or_forbidden find_interweaved_laced_pair(const configuration& s, int n) {
  if (n < 3) throw domain_error("bad-bound: need n >= 3");
  if (static_cast<std::int64_t>(s.size()) != binom(n - 1, 2) + 2)
    throw domain_error("bad-size: need exactly C(n-1,2)+2 = " +
                       std::to_string(binom(n - 1, 2) + 2) + " vertices");
  const chain_tables t(s);
  if (s.size() >= 4)
    if (auto cap = find_chain_of(s, t, orient::cap, 4)) return *cap;
  if (s.size() >= n)
    if (auto cup = find_chain_of(s, t, orient::cup, n)) return *cup;
  const slope_labeling sl = canonical_labeling(s, t, 4);
  interweaved_pair out = recurse_pair(s, t, sl, n);
  certificate cert;
  cert.kind = certificate_kind::laced_pair;
  cert.n = n;
  cert.a = 4;
  cert.b = n;
  cert.family = {out.first, out.second};
  const verify_result vr = verify_certificate(s, cert);
  check_internal(vr.ok, "pair failed verification: " + vr.reason);
  return out;
}

std::string kind_name(certificate_kind k) {
  switch (k) {
    case certificate_kind::cap: return "cap";
    case certificate_kind::cup: return "cup";
    case certificate_kind::gon: return "gon";
    case certificate_kind::laced_pair: return "laced-pair";
    case certificate_kind::k_family: return "k-family";
  }
  return "?";
}

certificate find_gon(const configuration& s, int n) {
  if (n < 3) throw domain_error("bad-bound: need n >= 3");
  const std::int64_t bound = binom(n - 1, 2) + 2;
  if (s.size() < bound)
    throw domain_error("size-below-bound: need at least " +
                       std::to_string(bound) + " vertices");
  certificate cert;
  cert.n = n;
  cert.a = 4;
  cert.b = n;
  if (auto cap = find_cap(s, 4)) {
    cert.kind = certificate_kind::cap;
    cert.single = *cap;
  } else if (auto cup = find_cup(s, n)) {
    cert.kind = certificate_kind::cup;
    cert.single = *cup;
  } else {
    // a subset of a free configuration is free; the leftmost C(n-1,2)+2
    // vertices keep their indices
    const configuration* work = &s;
    configuration prefix;
    if (s.size() > bound) {
      std::vector<int> keep(bound);
      for (int i = 0; i < bound; ++i) keep[i] = i;
      prefix = restrict_to(s, keep).sub;
      work = &prefix;
    }
    const chain_tables t(*work);
    const slope_labeling sl = canonical_labeling(*work, t, 4);
    const interweaved_pair pr = recurse_pair(*work, t, sl, n);
    const gon_or_cup g = gon_from_interweaved_pair(*work, sl, pr, n);
    check_internal(std::holds_alternative<gon_witness>(g),
                   "n-cup branch reached on an n-cup free configuration");
    cert.kind = certificate_kind::gon;
    cert.a = 3;
    cert.b = n - 1;
    cert.gon = std::get<gon_witness>(g);
  }
  const verify_result vr = verify_certificate(s, cert);
  check_internal(vr.ok, "certificate failed verification: " + vr.reason);
  return cert;
}

std::vector<laced_cup> full_grid_family(const configuration& s, int n) {
  if (n < 3) throw domain_error("bad-bound: need n >= 3");
  if (static_cast<std::int64_t>(s.size()) != binom(n, 2))
    throw domain_error("bad-size: full grid needs exactly C(n,2) vertices");
  const alpha_beta_plane pl = make_alpha_beta_plane(s, n);
  if (!pl.holes.empty())
    throw domain_error("plane-hole: cell (" +
                       std::to_string(pl.holes.front().first) + "," +
                       std::to_string(pl.holes.front().second) + ") empty");

  std::vector<laced_cup> family;
  for (int k = 1; k <= n - 1; ++k) {
    chain cup{orient::cup, {}};
    for (int al = 1; al <= k; ++al) cup.vs.push_back(pl.vertex_at(al, k));
    for (int be = k + 1; be <= n - 1; ++be)
      cup.vs.push_back(pl.vertex_at(k, be));
    require_cup(s, cup, "grid path not a cup");
    check_internal(cup.size() == n - 1, "grid path has wrong size");

    chain left{orient::cup, {}};
    for (int be = 1; be <= k; ++be) left.vs.push_back(pl.vertex_at(1, be));
    chain right{orient::cup, {}};
    for (int al = k; al <= n - 1; ++al)
      right.vs.push_back(pl.vertex_at(al, n - 1));
    // |left| + |right| = n; trim one vertex at the far end to reach n-1
    if (k >= 2)
      left.vs.erase(left.vs.begin());
    else
      right.vs.pop_back();
    require_cup(s, left, "grid lacing not a cup");
    require_cup(s, right, "grid lacing not a cup");
    laced_cup lc{std::move(cup), std::move(left), std::move(right)};
    validate_laced(s, lc, n, "grid family");
    family.push_back(std::move(lc));
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      check_internal(is_interweaved(family[i].cup, family[j].cup),
                     "grid cups not pairwise interweaved");
  return family;
}

namespace {

bool fail(verify_result& vr, const std::string& reason) {
  vr.ok = false;
  vr.reason = reason;
  return false;
}

bool check_chain(const configuration& s, const chain& c, orient kind, int size,
                 const std::string& who, verify_result& vr) {
  if (c.kind != kind) return fail(vr, who + ": wrong chain kind");
  if (size > 0 && c.size() != size)
    return fail(vr, who + ": expected size " + std::to_string(size) +
                        ", got " + std::to_string(c.size()));
  if (c.vs.empty()) return fail(vr, who + ": empty chain");
  try {
    if (!is_chain(s, c.vs, kind)) {
      for (std::size_t t = 2; t < c.vs.size(); ++t)
        if (s.triple(c.vs[t - 2], c.vs[t - 1], c.vs[t]) != kind)
          return fail(vr, who + ": triple (" + std::to_string(c.vs[t - 2]) +
                              "," + std::to_string(c.vs[t - 1]) + "," +
                              std::to_string(c.vs[t]) + ") has wrong kind");
      return fail(vr, who + ": not a chain");
    }
  } catch (const domain_error& e) {
    return fail(vr, who + ": " + e.what());
  }
  return true;
}

bool check_laced(const configuration& s, const laced_cup& lc, int n,
                 const std::string& who, verify_result& vr) {
  if (!check_chain(s, lc.cup, orient::cup, n - 1, who + " cup", vr))
    return false;
  if (!check_chain(s, lc.left, orient::cup, 0, who + " left lacing", vr))
    return false;
  if (!check_chain(s, lc.right, orient::cup, 0, who + " right lacing", vr))
    return false;
  if (lc.left.back() != lc.cup.front())
    return fail(vr, who + ": left lacing does not end at the cup start");
  if (lc.right.front() != lc.cup.back())
    return fail(vr, who + ": right lacing does not start at the cup end");
  if (lc.left.size() + lc.right.size() != n - 1)
    return fail(vr, who + ": lacing sum " +
                        std::to_string(lc.left.size() + lc.right.size()) +
                        " != " + std::to_string(n - 1));
  return true;
}

bool mutually_interweaved(const chain& a, const chain& b) {
  return is_interweaved(a, b) || is_interweaved(b, a);
}

}  // namespace

verify_result verify_certificate(const configuration& s, const certificate& c) {
  verify_result vr;
  switch (c.kind) {
    case certificate_kind::cap:
      check_chain(s, c.single, orient::cap, c.a, "cap witness", vr);
      break;
    case certificate_kind::cup:
      check_chain(s, c.single, orient::cup, c.b, "cup witness", vr);
      break;
    case certificate_kind::gon: {
      if (!check_chain(s, c.gon.cap, orient::cap, c.a, "gon cap", vr)) break;
      if (!check_chain(s, c.gon.cup, orient::cup, c.b, "gon cup", vr)) break;
      if (c.gon.cap.front() != c.gon.cup.front() ||
          c.gon.cap.back() != c.gon.cup.back()) {
        fail(vr, "gon: chains do not share endpoints");
        break;
      }
      if (c.a + c.b - 2 != c.n) {
        fail(vr, "gon: sizes inconsistent with n");
        break;
      }
      if (c.gon.strong) {
        std::vector<int> inner(c.gon.cap.vs.begin() + 1,
                               c.gon.cap.vs.end() - 1);
        for (std::size_t i = 1; i + 1 < c.gon.cup.vs.size(); ++i)
          if (std::find(inner.begin(), inner.end(), c.gon.cup.vs[i]) !=
              inner.end()) {
            fail(vr, "gon: interiors intersect at " +
                         std::to_string(c.gon.cup.vs[i]));
            break;
          }
      }
      break;
    }
    case certificate_kind::laced_pair: {
      if (c.family.size() != 2) {
        fail(vr, "laced pair: expected exactly 2 cups");
        break;
      }
      if (!check_laced(s, c.family[0], c.n, "first", vr)) break;
      if (!check_laced(s, c.family[1], c.n, "second", vr)) break;
      if (!is_interweaved(c.family[0].cup, c.family[1].cup))
        fail(vr, "laced pair: cups not interweaved");
      break;
    }
    case certificate_kind::k_family: {
      if (c.family.empty()) {
        fail(vr, "family: empty");
        break;
      }
      for (std::size_t i = 0; i < c.family.size() && vr.ok; ++i)
        check_laced(s, c.family[i], c.n, "member " + std::to_string(i), vr);
      for (std::size_t i = 0; i < c.family.size() && vr.ok; ++i)
        for (std::size_t j = i + 1; j < c.family.size() && vr.ok; ++j)
          if (!mutually_interweaved(c.family[i].cup, c.family[j].cup))
            fail(vr, "family: members " + std::to_string(i) + " and " +
                         std::to_string(j) + " not interweaved");
      break;
    }
  }
  return vr;
}

}  // namespace capcup
