#include "capcup/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "capcup/errors.hpp"
#include "capcup/labeling.hpp"

namespace capcup {

void avoidance_spec::validate() const {
  if (!cap_bound && !cup_bound && !gon)
    throw domain_error("bad-spec: at least one avoidance constraint required");
  if ((cap_bound && *cap_bound < 2) || (cup_bound && *cup_bound < 2))
    throw domain_error("bad-spec: cap/cup bounds must be >= 2");
  if (gon && (gon->a < 2 || gon->b < 2))
    throw domain_error("bad-spec: gon parts must be >= 2");
}

std::string avoidance_spec::describe() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] { if (!first) out << " "; first = false; };
  if (cap_bound) { sep(); out << "cap=" << *cap_bound; }
  if (cup_bound) { sep(); out << "cup=" << *cup_bound; }
  if (gon) {
    sep();
    out << "gon=" << gon->a << "," << gon->b << ","
        << (gon->strong ? "strong" : "weak");
  }
  return out.str();
}

void write_report(std::ostream& out, const search_report& r) {
  out << "report v1\n";
  out << "command " << r.command << "\n";
  for (const auto& [k, v] : r.params) out << "param " << k << " " << v << "\n";
  out << "count " << r.count << "\n";
  out << "extremal " << r.extremal << "\n";
  out << "tested " << r.tested << "\n";
  out << "verified " << r.verified << "\n";
  out << "counterexamples " << r.counterexamples << "\n";
  out << "exhausted " << (r.exhausted ? "true" : "false") << "\n";
  for (const configuration& w : r.witnesses) {
    out << "witness\n";
    write_configuration(out, w);
    out << "end-witness\n";
  }
  for (const std::string& n : r.notes) out << n << "\n";
  out << "end-report\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "# elapsed-seconds %.3f", r.elapsed_seconds);
  out << buf << "\n";
}

namespace {

using clock_type = std::chrono::steady_clock;

struct run_clock {
  clock_type::time_point start = clock_type::now();
  double seconds() const {
    return std::chrono::duration<double>(clock_type::now() - start).count();
  }
};

struct shared_deadline {
  bool finite = false;
  clock_type::time_point end{};
  std::atomic<bool> expired{false};

  explicit shared_deadline(const search_budget& b) {
    if (std::isfinite(b.seconds)) {
      finite = true;
      end = clock_type::now() +
            std::chrono::duration_cast<clock_type::duration>(
                std::chrono::duration<double>(std::max(0.0, b.seconds)));
    }
  }
  bool check() {
    if (!finite) return false;
    if (expired.load(std::memory_order_relaxed)) return true;
    if (clock_type::now() >= end) {
      expired.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

// Vertex-incremental DFS. All triples touching the newest vertex are decided
// before the next vertex is added, so forbidden patterns are created (and
// pruned) the moment their last vertex appears.
class enumerator {
 public:
  enumerator(int m, const avoidance_spec& spec, shared_deadline& dl,
             std::atomic<std::int64_t>* global_found, std::int64_t stop_after)
      : m_(m),
        cap_a_(spec.cap_bound.value_or(0)),
        cup_b_(spec.cup_bound.value_or(0)),
        gon_(spec.gon),
        dl_(dl),
        global_found_(global_found),
        stop_after_(stop_after) {
    if (m_ > 62) throw domain_error("too-large: enumeration needs m <= 62");
    tri_idx_.assign(static_cast<std::size_t>(m_) * m_ * m_, -1);
    std::int64_t t = 0;
    for (int i = 0; i < m_; ++i)
      for (int j = i + 1; j < m_; ++j)
        for (int k = j + 1; k < m_; ++k)
          tri_idx_[(static_cast<std::size_t>(i) * m_ + j) * m_ + k] = t++;
    mir_perm_.resize(static_cast<std::size_t>(binom(m_, 3)));
    for (int i = 0; i < m_; ++i)
      for (int j = i + 1; j < m_; ++j)
        for (int k = j + 1; k < m_; ++k)
          mir_perm_[tix(i, j, k)] = tix(m_ - 1 - k, m_ - 1 - j, m_ - 1 - i);
    ori_.assign(static_cast<std::size_t>(binom(m_, 3)), 0);
    cap_end_.assign(static_cast<std::size_t>(m_) * m_, 0);
    cup_end_.assign(static_cast<std::size_t>(m_) * m_, 0);
    if (gon_) {
      msk_cap_.assign(static_cast<std::size_t>(m_) * m_ * m_, 0);
      msk_cup_.assign(static_cast<std::size_t>(m_) * m_ * m_, 0);
    }
  }

  void set_forced(std::vector<std::uint8_t> forced) { forced_ = std::move(forced); }

  // returns false when aborted by budget or stop_after
  bool run(const config_sink& sink) {
    sink_ = &sink;
    if (m_ >= 2) {
      if (cap_a_ == 2 || cup_b_ == 2) return true;  // every edge is a 2-chain
      if (gon_ && gon_->a == 2 && gon_->b == 2) return true;
      cap_end(0, 1) = cup_end(0, 1) = 2;  // no triple ever touches this edge
      if (gon_)
        msk_cap_[1] = msk_cup_[1] = std::uint64_t(1) << 2;  // edge (0,1)
    }
    return dfs_vertex(2);
  }

  std::int64_t found = 0;
  std::vector<configuration> emitted;  // only when collect_all
  bool collect_all = false;
  int witness_cap = 4;
  std::vector<configuration> witnesses;

 private:
  int m_;
  int cap_a_, cup_b_;
  std::optional<gon_bound> gon_;
  shared_deadline& dl_;
  std::atomic<std::int64_t>* global_found_;
  std::int64_t stop_after_;
  const config_sink* sink_ = nullptr;

  std::vector<std::int64_t> tri_idx_;
  std::vector<std::int64_t> mir_perm_;  // triple index -> mirrored index
  std::vector<std::uint8_t> ori_;  // 1 = cup, configuration bit order
  std::vector<int> cap_end_, cup_end_;  // longest chain ending with edge (u,v)
  std::vector<std::uint64_t> msk_cap_, msk_cup_;  // sizes from x ending (u,v)
  std::vector<std::uint8_t> forced_;
  std::int64_t decision_ = 0;
  std::int64_t steps_ = 0;

  std::int64_t tix(int i, int j, int k) const {
    return tri_idx_[(static_cast<std::size_t>(i) * m_ + j) * m_ + k];
  }
  int& cap_end(int u, int v) { return cap_end_[u * m_ + v]; }
  int& cup_end(int u, int v) { return cup_end_[u * m_ + v]; }

  bool tick() {
    if ((++steps_ & 0x1fff) == 0 && dl_.check()) return false;
    return true;
  }

  bool dfs_vertex(int v) {
    if (v >= m_) return emit();
    for (int u = 0; u < v; ++u) cap_end(u, v) = cup_end(u, v) = 2;
    return dfs_pair(v, 0, 1);
  }

  // pairs (i,j) with i<j<v in lexicographic order; (i,j) = pair number pi
  bool dfs_pair(int v, int i, int j) {
    if (!tick()) return false;
    if (i == v - 1) {  // all pairs for v decided
      if (gon_ && gon_blocked(v)) return true;
      return dfs_vertex(v + 1);
    }
    const int ni = (j + 1 < v) ? i : i + 1;
    const int nj = (j + 1 < v) ? j + 1 : ni + 1;
    const std::int64_t t = tix(i, j, v);
    const bool have_forced = decision_ < static_cast<std::int64_t>(forced_.size());
    const std::uint8_t lo = have_forced ? forced_[decision_] : 0;
    const std::uint8_t hi = have_forced ? forced_[decision_] : 1;
    ++decision_;
    for (std::uint8_t o = lo; o <= hi; ++o) {
      if (o == 0) {  // cap
        const int cand = cap_end(i, j) + 1;
        if (cap_a_ && cand >= cap_a_) continue;
        const int old = cap_end(j, v);
        cap_end(j, v) = std::max(old, cand);
        ori_[t] = 0;
        const bool ok = dfs_pair(v, ni, nj);
        cap_end(j, v) = old;
        if (!ok) { --decision_; return false; }
      } else {  // cup
        const int cand = cup_end(i, j) + 1;
        if (cup_b_ && cand >= cup_b_) continue;
        const int old = cup_end(j, v);
        cup_end(j, v) = std::max(old, cand);
        ori_[t] = 1;
        const bool ok = dfs_pair(v, ni, nj);
        cup_end(j, v) = old;
        if (!ok) { --decision_; return false; }
      }
    }
    --decision_;
    return true;
  }

  // Completing vertex v can only create a gon whose right endpoint is v.
  // Achievable chain sizes are tracked exactly: a longer chain between two
  // endpoints need not contain a shorter one.
  bool gon_blocked(int v) {
    const int a = gon_->a, b = gon_->b;
    for (int x = 0; x < v; ++x) {
      std::uint64_t all_cap = 0, all_cup = 0;
      for (int u = x; u < v; ++u) {
        std::uint64_t mc = 0, mu = 0;
        if (u == x) {
          mc = mu = std::uint64_t(1) << 2;
        } else {
          for (int t = x; t < u; ++t) {
            if (ori_[tix(t, u, v)] == 0)
              mc |= msk_cap_[(static_cast<std::size_t>(x) * m_ + t) * m_ + u] << 1;
            else
              mu |= msk_cup_[(static_cast<std::size_t>(x) * m_ + t) * m_ + u] << 1;
          }
        }
        msk_cap_[(static_cast<std::size_t>(x) * m_ + u) * m_ + v] = mc;
        msk_cup_[(static_cast<std::size_t>(x) * m_ + u) * m_ + v] = mu;
        all_cap |= mc;
        all_cup |= mu;
      }
      if ((all_cap >> a & 1) && (all_cup >> b & 1)) {
        if (!gon_->strong) return true;
        if (strong_gon_at(v)) return true;
      }
    }
    return false;
  }

  bool strong_gon_at(int v) {
    configuration s = snapshot(v + 1);
    return gon_search(s, gon_->a, gon_->b, gon_strength::strong).has_value();
  }

  configuration snapshot(int upto) const {
    configuration s(upto, std::vector<bool>(binom(upto, 3)));
    for (int i = 0; i < upto; ++i)
      for (int j = i + 1; j < upto; ++j)
        for (int k = j + 1; k < upto; ++k)
          s.set_triple(i, j, k, ori_[tix(i, j, k)] ? orient::cup : orient::cap);
    return s;
  }

  bool emit() {
    // keep a configuration only if its triple string is <= its mirror's:
    // the reflection is the model's only symmetry
    for (std::size_t t = 0; t < ori_.size(); ++t) {
      const std::uint8_t mine = ori_[t];
      const std::uint8_t theirs = ori_[mir_perm_[t]];
      if (mine < theirs) break;
      if (mine > theirs) return true;  // mirror image is the keeper
    }
    configuration s(m_, std::vector<bool>(ori_.begin(), ori_.end()));
    ++found;
    if (static_cast<int>(witnesses.size()) < witness_cap) witnesses.push_back(s);
    if (collect_all) emitted.push_back(s);
    if (sink_ && *sink_) (*sink_)(s);
    if (stop_after_ > 0 && global_found_) {
      if (global_found_->fetch_add(1, std::memory_order_relaxed) + 1 >=
          stop_after_)
        return false;
    }
    return true;
  }
};

std::vector<std::vector<std::uint8_t>> forced_prefixes(int depth) {
  std::vector<std::vector<std::uint8_t>> out;
  out.emplace_back();
  for (int d = 0; d < depth; ++d) {
    std::vector<std::vector<std::uint8_t>> next;
    next.reserve(out.size() * 2);
    for (const auto& p : out)
      for (std::uint8_t bit = 0; bit <= 1; ++bit) {
        auto q = p;
        q.push_back(bit);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

std::string format_budget(const search_budget& b) {
  if (!std::isfinite(b.seconds)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", b.seconds);
  return buf;
}

}  // namespace

search_report enumerate_free(int m, const avoidance_spec& spec,
                             const search_budget& budget, int threads,
                             const config_sink& sink, std::int64_t stop_after,
                             int witness_cap, bool sink_threadsafe) {
  spec.validate();
  if (m < 1) throw domain_error("bad-size: m must be >= 1");
  if (threads < 1) threads = 1;
  if (stop_after > 0) threads = 1;  // deterministic early stop
  run_clock rc;
  shared_deadline dl(budget);
  std::atomic<std::int64_t> global_found{0};

  search_report r;
  r.command = "enumerate";
  r.params = {{"m", std::to_string(m)},
              {"avoid", spec.describe()},
              {"budget", format_budget(budget)},
              {"threads", std::to_string(threads)}};

  bool aborted = false;
  if (threads == 1) {
    enumerator e(m, spec, dl, &global_found, stop_after);
    e.witness_cap = witness_cap;
    if (!e.run(sink)) aborted = true;
    r.count = e.found;
    r.witnesses = std::move(e.witnesses);
  } else {
    const std::int64_t total_decisions = binom(m, 3);
    int depth = 0;
    while ((1 << depth) < threads * 8 &&
           depth < std::min<std::int64_t>(total_decisions, 12))
      ++depth;
    auto prefixes = forced_prefixes(depth);
    const int ntasks = static_cast<int>(prefixes.size());
    std::vector<std::int64_t> counts(ntasks, 0);
    std::vector<std::vector<configuration>> wits(ntasks);
    std::atomic<int> next{0};
    std::atomic<bool> task_aborted{false};
    std::mutex sink_mutex;
    config_sink locked_sink;
    if (sink && sink_threadsafe)
      locked_sink = sink;
    else if (sink)
      locked_sink = [&](const configuration& c) {
        std::lock_guard<std::mutex> g(sink_mutex);
        sink(c);
      };
    auto worker = [&] {
      while (true) {
        const int task = next.fetch_add(1);
        if (task >= ntasks) return;
        enumerator e(m, spec, dl, &global_found, 0);
        e.witness_cap = witness_cap;
        e.set_forced(prefixes[task]);
        if (!e.run(locked_sink)) task_aborted.store(true);
        counts[task] = e.found;
        wits[task] = std::move(e.witnesses);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    aborted = task_aborted.load();
    for (int t = 0; t < ntasks; ++t) {
      r.count += counts[t];
      for (auto& w : wits[t])
        if (static_cast<int>(r.witnesses.size()) < witness_cap)
          r.witnesses.push_back(std::move(w));
    }
  }
  const bool stopped_early =
      stop_after > 0 && global_found.load() >= stop_after;
  r.exhausted = !(aborted && !stopped_early);
  r.elapsed_seconds = rc.seconds();
  return r;
}

search_report max_free_size(const avoidance_spec& spec, int limit,
                            const search_budget& budget, int threads) {
  spec.validate();
  if (limit < 1) throw domain_error("bad-size: limit must be >= 1");
  (void)threads;  // existence probes run serially for determinism
  run_clock rc;
  search_report r;
  r.command = "max-size";
  r.params = {{"avoid", spec.describe()},
              {"limit", std::to_string(limit)},
              {"budget", format_budget(budget)}};
  r.exhausted = true;
  for (int m = 1; m <= limit; ++m) {
    search_budget remaining = budget;
    if (std::isfinite(budget.seconds))
      remaining.seconds = std::max(0.0, budget.seconds - rc.seconds());
    search_report probe =
        enumerate_free(m, spec, remaining, 1, nullptr, 1, 1);
    if (!probe.exhausted && probe.count == 0) {
      r.exhausted = false;  // budget ran out before settling this size
      break;
    }
    if (probe.count == 0) break;
    r.extremal = m;
    r.count = probe.count;
    r.witnesses = std::move(probe.witnesses);
  }
  r.elapsed_seconds = rc.seconds();
  return r;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// portable uniform draw in [0, n)
std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n) {
  std::uint64_t x, r;
  do {
    x = g();
    r = x % n;
  } while (x - r > std::uint64_t(0) - n);
  return r;
}

std::string kind_count_note(const char* kind, std::int64_t c) {
  return std::string("note certificates-") + kind + " " + std::to_string(c);
}

}  // namespace

search_report check_main_theorem(int n, search_mode mode, int trials,
                                 std::uint64_t seed,
                                 const search_budget& budget, int threads) {
  if (n < 3) throw domain_error("bad-bound: need n >= 3");
  run_clock rc;
  const int size = static_cast<int>(binom(n - 1, 2) + 2);
  search_report r;
  r.command = "check-theorem";
  r.params = {{"n", std::to_string(n)},
              {"mode", mode == search_mode::exhaustive ? "exhaustive" : "random"},
              {"trials", std::to_string(mode == search_mode::random ? trials : 0)},
              {"seed", std::to_string(mode == search_mode::random ? seed : 0)},
              {"budget", format_budget(budget)},
              {"threads", std::to_string(threads)}};

  std::atomic<std::int64_t> tested{0}, verified{0}, failures{0};
  std::atomic<std::int64_t> kinds[3] = {{0}, {0}, {0}};  // cap, cup, gon
  std::mutex note_mutex;

  auto run_one = [&](const configuration& s) {
    tested.fetch_add(1, std::memory_order_relaxed);
    try {
      const certificate cert = find_gon(s, n);
      const verify_result vr = verify_certificate(s, cert);
      if (!vr.ok) {
        failures.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard<std::mutex> g(note_mutex);
        r.notes.push_back("note failure " + vr.reason);
        return;
      }
      verified.fetch_add(1, std::memory_order_relaxed);
      if (cert.kind == certificate_kind::cap) kinds[0].fetch_add(1);
      if (cert.kind == certificate_kind::cup) kinds[1].fetch_add(1);
      if (cert.kind == certificate_kind::gon) kinds[2].fetch_add(1);
    } catch (const std::exception& e) {
      failures.fetch_add(1, std::memory_order_relaxed);
      std::lock_guard<std::mutex> g(note_mutex);
      r.notes.push_back(std::string("note failure ") + e.what());
    }
  };

  if (mode == search_mode::exhaustive) {
    avoidance_spec gon_free;
    gon_free.cap_bound = 4;
    gon_free.cup_bound = n;
    gon_free.gon = gon_bound{3, n - 1, false};
    search_report part_a =
        enumerate_free(size, gon_free, budget, threads, nullptr, 0, 2);
    r.count = part_a.count;  // fully free configurations: expected zero
    r.exhausted = part_a.exhausted;
    r.witnesses = std::move(part_a.witnesses);
    if (part_a.count > 0)
      r.notes.push_back("note unexpected-free-configurations " +
                        std::to_string(part_a.count));

    avoidance_spec capcup_free;
    capcup_free.cap_bound = 4;
    capcup_free.cup_bound = n;
    search_budget remaining = budget;
    if (std::isfinite(budget.seconds))
      remaining.seconds = std::max(0.0, budget.seconds - rc.seconds());
    // the canonical stream plus mirrors covers every free configuration
    search_report part_b = enumerate_free(
        size, capcup_free, remaining, threads,
        [&](const configuration& s) {
          run_one(s);
          const configuration mir = mirror(s);
          if (!(mir == s)) run_one(mir);
        },
        0, 0, true);
    r.exhausted = r.exhausted && part_b.exhausted;
    r.notes.push_back("note capcup-free-configurations " +
                      std::to_string(part_b.count));
  } else {
    r.exhausted = true;
    shared_deadline dl(budget);
    for (int t = 0; t < trials; ++t) {
      if (dl.check()) {
        r.exhausted = false;
        break;
      }
      const point_set ps = random_point_set(size, splitmix64(seed + t));
      run_one(configuration_from_points(ps));
    }
  }
  r.tested = tested.load();
  r.verified = verified.load();
  r.counterexamples = failures.load() + r.count;
  r.notes.push_back(kind_count_note("cap", kinds[0].load()));
  r.notes.push_back(kind_count_note("cup", kinds[1].load()));
  r.notes.push_back(kind_count_note("gon", kinds[2].load()));
  std::sort(r.notes.begin(), r.notes.end());
  r.elapsed_seconds = rc.seconds();
  return r;
}

namespace {

// visit every cup of exactly `size` vertices; stop early when fn returns
// false
void for_each_cup(const configuration& s, const chain_tables& t, int size,
                  const std::function<bool(const std::vector<int>&)>& fn) {
  if (size < 1) throw domain_error("bad-bound: cup size must be >= 1");
  std::vector<int> acc;
  if (size == 1) {
    for (int v = 0; v < s.size(); ++v) {
      acc = {v};
      if (!fn(acc)) return;
    }
    return;
  }
  bool stop = false;
  // extend while a completion of the required size remains achievable
  auto dfs = [&](auto&& self, int need) -> void {
    if (stop) return;
    if (need == 0) {
      if (!fn(acc)) stop = true;
      return;
    }
    const int v = acc.back();
    const int u = acc.size() >= 2 ? acc[acc.size() - 2] : -1;
    for (int w = v + 1; w < s.size() && !stop; ++w) {
      if (u >= 0 && s.triple(u, v, w) != orient::cup) continue;
      if (need > 1 && t.start_with(orient::cup, v, w) < need + 1) continue;
      acc.push_back(w);
      self(self, need - 1);
      acc.pop_back();
    }
  };
  for (int v = 0; v + 1 < s.size() && !stop; ++v) {
    acc = {v};
    dfs(dfs, size - 1);
  }
}

}  // namespace

std::vector<chain> enumerate_cups(const configuration& s, int size) {
  std::vector<chain> out;
  const chain_tables t(s);
  for_each_cup(s, t, size, [&](const std::vector<int>& vs) {
    out.push_back(chain{orient::cup, vs});
    return true;
  });
  return out;
}

namespace {

std::optional<std::pair<chain, chain>> lacing_from_tables(
    const configuration& s, const chain_tables& t, const chain& cup, int n) {
  const int lp = t.end_at(orient::cup, cup.front());
  const int rq = t.start_at(orient::cup, cup.back());
  if (lp + rq < n - 1) return std::nullopt;
  const int lsize = std::min(lp, n - 2);
  const int rsize = n - 1 - lsize;
  return std::make_pair(t.extract_ending_at(s, orient::cup, cup.front(), lsize),
                        t.extract_starting_at(s, orient::cup, cup.back(), rsize));
}

}  // namespace

std::optional<std::vector<laced_cup>> find_k_family(const configuration& s,
                                                    int n, int k) {
  if (n < 3) throw domain_error("bad-bound: need n >= 3");
  if (k < 1 || k > n - 1)
    throw domain_error("bad-bound: need 1 <= k <= n-1");
  const chain_tables t(s);
  std::vector<laced_cup> laced;
  for_each_cup(s, t, n - 1, [&](const std::vector<int>& vs) {
    // a cheap lacing test before materializing anything
    if (t.end_at(orient::cup, vs.front()) +
            t.start_at(orient::cup, vs.back()) <
        n - 1)
      return true;
    chain c{orient::cup, vs};
    auto lw = lacing_from_tables(s, t, c, n);
    laced.push_back(
        laced_cup{std::move(c), std::move(lw->first), std::move(lw->second)});
    return k > 1;  // a single laced cup settles k == 1
  });
  const int nc = static_cast<int>(laced.size());
  if (nc < k) return std::nullopt;
  if (k == 1) return std::vector<laced_cup>{laced.front()};
  std::sort(laced.begin(), laced.end(), [](const laced_cup& a, const laced_cup& b) {
    if (a.cup.front() != b.cup.front()) return a.cup.front() < b.cup.front();
    if (a.cup.back() != b.cup.back()) return a.cup.back() < b.cup.back();
    return a.cup.vs < b.cup.vs;
  });

  const int words = (nc + 63) / 64;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(nc) * words, 0);
  auto link = [&](int i, int j) {
    adj[static_cast<std::size_t>(i) * words + j / 64] |= std::uint64_t(1) << (j % 64);
  };
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j) {
      const chain& a = laced[i].cup;
      const chain& b = laced[j].cup;
      const bool ok = is_interweaved(a, b) || is_interweaved(b, a);
      if (ok) {
        link(i, j);
        link(j, i);
      }
    }

  std::vector<int> current;
  std::vector<std::uint64_t> cand(words), tmp;
  std::optional<std::vector<int>> best;
  auto popcount_all = [&](const std::vector<std::uint64_t>& bs) {
    int c = 0;
    for (auto w : bs) c += __builtin_popcountll(w);
    return c;
  };
  auto rec = [&](auto&& self, std::vector<std::uint64_t> cset) -> bool {
    if (static_cast<int>(current.size()) == k) {
      best = current;
      return true;
    }
    if (static_cast<int>(current.size()) + popcount_all(cset) < k) return false;
    for (int i = 0; i < nc; ++i) {
      if (!(cset[i / 64] >> (i % 64) & 1)) continue;
      cset[i / 64] &= ~(std::uint64_t(1) << (i % 64));
      std::vector<std::uint64_t> nxt(words);
      for (int w = 0; w < words; ++w)
        nxt[w] = cset[w] & adj[static_cast<std::size_t>(i) * words + w];
      current.push_back(i);
      if (self(self, std::move(nxt))) return true;
      current.pop_back();
    }
    return false;
  };
  for (int w = 0; w < words; ++w) cand[w] = ~std::uint64_t(0);
  if (nc % 64) cand[words - 1] = (std::uint64_t(1) << (nc % 64)) - 1;
  if (!rec(rec, cand)) return std::nullopt;

  std::vector<laced_cup> out;
  for (int i : *best) out.push_back(laced[i]);
  return out;
}

search_report check_conjecture_k(int n, int k, search_mode mode, int trials,
                                 std::uint64_t seed,
                                 const search_budget& budget, int threads) {
  if (n < 3) throw domain_error("bad-bound: need n >= 3");
  if (k < 1 || k > n - 1)
    throw domain_error("bad-bound: need 1 <= k <= n-1 (k = n excluded)");
  run_clock rc;
  const int size = static_cast<int>(binom(n - 1, 2) + k);
  search_report r;
  r.command = "check-conjecture";
  r.params = {{"n", std::to_string(n)},
              {"k", std::to_string(k)},
              {"mode", mode == search_mode::exhaustive ? "exhaustive" : "random"},
              {"trials", std::to_string(mode == search_mode::random ? trials : 0)},
              {"seed", std::to_string(mode == search_mode::random ? seed : 0)},
              {"budget", format_budget(budget)},
              {"threads", std::to_string(threads)}};

  std::atomic<std::int64_t> tested{0}, verified{0}, counterexamples{0};
  std::mutex note_mutex;
  auto probe = [&](const configuration& s) {
    tested.fetch_add(1, std::memory_order_relaxed);
    const auto family = find_k_family(s, n, k);
    if (!family) {
      counterexamples.fetch_add(1, std::memory_order_relaxed);
      std::ostringstream block;
      block << "counterexample\n";
      write_configuration(block, s);
      block << "end-counterexample";
      std::lock_guard<std::mutex> g(note_mutex);
      r.notes.push_back(block.str());
      return;
    }
    certificate cert;
    cert.kind = certificate_kind::k_family;
    cert.n = n;
    cert.a = 4;
    cert.b = n;
    cert.family = *family;
    const verify_result vr = verify_certificate(s, cert);
    check_internal(vr.ok, "k-family failed verification: " + vr.reason);
    verified.fetch_add(1, std::memory_order_relaxed);
  };

  if (mode == search_mode::exhaustive) {
    avoidance_spec free_spec;
    free_spec.cap_bound = 4;
    free_spec.cup_bound = n;
    search_report en = enumerate_free(
        size, free_spec, budget, threads,
        [&](const configuration& s) {
          probe(s);
          const configuration mir = mirror(s);
          if (!(mir == s)) probe(mir);
        },
        0, 0, true);
    r.count = en.count;
    r.exhausted = en.exhausted;
  } else {
    // random subsets of the extremal realizable construction stay free
    const point_set base = capcup_extremal_points(4, n);
    const configuration base_cfg = configuration_from_points(base);
    if (base_cfg.size() < size)
      throw domain_error("bad-bound: extremal base smaller than target size");
    shared_deadline dl(budget);
    r.exhausted = true;
    for (int t = 0; t < trials; ++t) {
      if (dl.check()) {
        r.exhausted = false;
        break;
      }
      std::mt19937_64 rng(splitmix64(seed + t));
      std::vector<int> all(base_cfg.size());
      std::iota(all.begin(), all.end(), 0);
      for (int i = base_cfg.size() - 1; i > 0; --i)
        std::swap(all[i], all[uniform_below(rng, i + 1)]);
      std::vector<int> keep(all.begin(), all.begin() + size);
      std::sort(keep.begin(), keep.end());
      probe(restrict_to(base_cfg, keep).sub);
    }
  }
  r.tested = tested.load();
  r.verified = verified.load();
  r.counterexamples = counterexamples.load();
  std::sort(r.notes.begin(), r.notes.end());
  r.elapsed_seconds = rc.seconds();
  return r;
}

namespace {

rational max_abs_slope(const std::vector<point>& pts) {
  rational best(0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].x == pts[j].x) continue;
      rational s = abs((pts[i].y - pts[j].y) / (pts[i].x - pts[j].x));
      if (s > best) best = s;
    }
  return best;
}

void shift(std::vector<point>& pts, const rational& dx, const rational& dy) {
  for (point& p : pts) {
    p.x += dx;
    p.y += dy;
  }
}

rational min_x(const std::vector<point>& pts) {
  rational v = pts.front().x;
  for (const point& p : pts) v = std::min(v, p.x);
  return v;
}
rational max_x(const std::vector<point>& pts) {
  rational v = pts.front().x;
  for (const point& p : pts) v = std::max(v, p.x);
  return v;
}
rational min_y(const std::vector<point>& pts) {
  rational v = pts.front().y;
  for (const point& p : pts) v = std::min(v, p.y);
  return v;
}
rational max_y(const std::vector<point>& pts) {
  rational v = pts.front().y;
  for (const point& p : pts) v = std::max(v, p.y);
  return v;
}

// left copy avoids (a-1)-caps, right copy avoids (b-1)-cups; the right copy
// sits far enough below that every cross slope is smaller than every slope
// inside either copy, forcing cross triples to lean on the left copy for
// caps and on the right copy for cups
std::vector<point> build_extremal(int a, int b) {
  if (a == 2 || b == 2) return {point{rational(0), rational(0)}};
  std::vector<point> left = build_extremal(a - 1, b);
  std::vector<point> right = build_extremal(a, b - 1);
  shift(left, -min_x(left), rational(0));
  const rational wl = max_x(left);
  shift(right, wl + 1 - min_x(right), rational(0));
  const rational width = max_x(right);
  const rational m = std::max(max_abs_slope(left), max_abs_slope(right));
  // cross numerators stay below -(m+1)*width, so cross slopes < -m
  const rational dy = max_y(right) - min_y(left) + (m + 1) * width;
  shift(right, rational(0), -dy);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

point_set capcup_extremal_points(int a, int b) {
  if (a < 2 || b < 2) throw domain_error("bad-bound: need a, b >= 2");
  std::vector<point> pts = build_extremal(a, b);
  // clear denominators; positive scaling preserves every orientation
  bigint lcm_all(1);
  for (const point& p : pts) {
    lcm_all = boost::multiprecision::lcm(lcm_all, denominator(p.x));
    lcm_all = boost::multiprecision::lcm(lcm_all, denominator(p.y));
  }
  for (point& p : pts) {
    p.x *= lcm_all;
    p.y *= lcm_all;
  }
  std::sort(pts.begin(), pts.end(),
            [](const point& p, const point& q) { return p.x < q.x; });
  return point_set(std::move(pts));
}

point_set random_point_set(int m, std::uint64_t seed,
                           std::int64_t coordinate_bound) {
  if (m < 1) throw domain_error("bad-size: m must be >= 1");
  if (coordinate_bound < 0 || coordinate_bound + 1 < m)
    throw domain_error("coordinate-bound-too-small: need at least " +
                       std::to_string(m) + " distinct x values");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  std::int64_t attempts = 0;
  const std::int64_t attempt_cap =
      1000000 + static_cast<std::int64_t>(m) * m * 1000;
  auto collinear = [&](const std::pair<std::int64_t, std::int64_t>& p,
                       const std::pair<std::int64_t, std::int64_t>& q,
                       const std::pair<std::int64_t, std::int64_t>& r) {
    const __int128 cross =
        static_cast<__int128>(q.first - p.first) * (r.second - q.second) -
        static_cast<__int128>(q.second - p.second) * (r.first - q.first);
    return cross == 0;
  };
  while (static_cast<int>(pts.size()) < m) {
    if (++attempts > attempt_cap)
      throw domain_error("sampling-failed: could not reach general position");
    const std::int64_t x = static_cast<std::int64_t>(
        uniform_below(rng, static_cast<std::uint64_t>(coordinate_bound) + 1));
    const std::int64_t y = static_cast<std::int64_t>(
        uniform_below(rng, static_cast<std::uint64_t>(coordinate_bound) + 1));
    bool ok = true;
    for (const auto& p : pts)
      if (p.first == x) {
        ok = false;
        break;
      }
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
        if (collinear(pts[i], pts[j], {x, y})) ok = false;
    if (ok) pts.emplace_back(x, y);
  }
  std::vector<point> out;
  out.reserve(pts.size());
  for (const auto& [x, y] : pts)
    out.push_back(point{rational(x), rational(y)});
  return point_set(std::move(out));
}

}  // namespace capcup
