#include "capcup/configuration.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "capcup/errors.hpp"

namespace capcup {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

configuration::configuration(int m, std::vector<bool> cup_bits)
    : m_(m), cups_(std::move(cup_bits)) {
  if (m < 1) throw domain_error("bad-configuration: m must be >= 1");
  if (static_cast<std::int64_t>(cups_.size()) != binom(m, 3))
    throw domain_error("bad-configuration: expected " +
                       std::to_string(binom(m, 3)) + " triples, got " +
                       std::to_string(cups_.size()));
}

std::int64_t configuration::triple_index(int i, int j, int k) const {
  if (!(0 <= i && i < j && j < k && k < m_))
    throw domain_error("bad-triple: (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(k) +
                       ") not ascending in [0," + std::to_string(m_) + ")");
  const std::int64_t m = m_, mi = m - i, mj = m - j;
  return m * (m - 1) * (m - 2) / 6 - mi * (mi - 1) * (mi - 2) / 6 +
         (mi - 1) * (mi - 2) / 2 - mj * (mj - 1) / 2 + (k - j - 1);
}

orient configuration::triple(int i, int j, int k) const {
  return cups_[triple_index(i, j, k)] ? orient::cup : orient::cap;
}

void configuration::set_triple(int i, int j, int k, orient o) {
  cups_[triple_index(i, j, k)] = (o == orient::cup);
}

std::string configuration::triple_string() const {
  std::string s;
  s.reserve(cups_.size());
  for (bool b : cups_) s.push_back(b ? 'U' : 'A');
  return s;
}

configuration configuration::from_triple_string(int m, const std::string& aus) {
  std::vector<bool> bits;
  bits.reserve(aus.size());
  for (char c : aus) {
    if (c == 'A')
      bits.push_back(false);
    else if (c == 'U')
      bits.push_back(true);
    else
      throw domain_error(std::string("bad-triple-string: character '") + c +
                         "'");
  }
  return configuration(m, std::move(bits));
}

configuration configuration_from_points(const point_set& ps) {
  const int m = ps.size();
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ps.points[a].x < ps.points[b].x;
  });
  std::vector<bool> bits(binom(m, 3));
  configuration s(m, std::move(bits));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const turn t = orient_points(ps.points[order[i]], ps.points[order[j]],
                                     ps.points[order[k]]);
        // point_set validation already rejected collinear triples
        s.set_triple(i, j, k, t == turn::cap ? orient::cap : orient::cup);
      }
  return s;
}

configuration mirror(const configuration& s) {
  const int m = s.size();
  configuration r(m, std::vector<bool>(binom(m, 3)));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        r.set_triple(i, j, k, s.triple(m - 1 - k, m - 1 - j, m - 1 - i));
  return r;
}

restriction restrict_to(const configuration& s, const std::vector<int>& keep) {
  if (keep.empty()) throw domain_error("bad-subset: empty vertex subset");
  for (std::size_t t = 0; t < keep.size(); ++t) {
    if (keep[t] < 0 || keep[t] >= s.size())
      throw domain_error("bad-subset: vertex " + std::to_string(keep[t]) +
                         " out of range");
    if (t > 0 && keep[t - 1] >= keep[t])
      throw domain_error("bad-subset: vertices not strictly ascending");
  }
  const int m = static_cast<int>(keep.size());
  configuration sub(m, std::vector<bool>(binom(m, 3)));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        sub.set_triple(i, j, k, s.triple(keep[i], keep[j], keep[k]));
  return restriction{std::move(sub), keep};
}

configuration read_configuration(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw domain_error("bad-configuration-file: missing header");
  std::istringstream hs(header);
  std::string word;
  int m = 0;
  if (!(hs >> word >> m) || word != "configuration" || m < 1)
    throw domain_error("bad-configuration-file: expected 'configuration <m>'");
  std::string body;
  if (binom(m, 3) > 0 && !std::getline(in, body))
    throw domain_error("bad-configuration-file: missing triple string");
  if (static_cast<std::int64_t>(body.size()) != binom(m, 3))
    throw domain_error("bad-configuration-file: expected " +
                       std::to_string(binom(m, 3)) + " triple characters");
  return configuration::from_triple_string(m, body);
}

void write_configuration(std::ostream& out, const configuration& s) {
  out << "configuration " << s.size() << "\n" << s.triple_string() << "\n";
}

}  // namespace capcup
