#include "capcup/geometry.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "capcup/errors.hpp"

namespace capcup {

bool operator==(const point& a, const point& b) { return a.x == b.x && a.y == b.y; }

turn orient_points(const point& p, const point& q, const point& r) {
  if (!(p.x < q.x && q.x < r.x))
    throw domain_error("points-not-x-sorted: expected p.x < q.x < r.x");
  const rational cross = (q.x - p.x) * (r.y - q.y) - (q.y - p.y) * (r.x - q.x);
  if (cross < 0) return turn::cap;
  if (cross > 0) return turn::cup;
  return turn::collinear;
}

namespace {

// Validation errors name points by their position in the input sequence.
void validate_general_position(const std::vector<point>& pts) {
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i].x == pts[j].x)
        throw domain_error("duplicate-x: points " + std::to_string(i) + " " +
                           std::to_string(j));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pts[a].x < pts[b].x; });
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient_points(pts[order[i]], pts[order[j]], pts[order[k]]) ==
            turn::collinear)
          throw domain_error("collinear-points: " + std::to_string(order[i]) +
                             " " + std::to_string(order[j]) + " " +
                             std::to_string(order[k]));
}

}  // namespace

point_set::point_set(std::vector<point> pts) : points(std::move(pts)) {
  validate_general_position(points);
}

point_set rotate_to_general_position(const std::vector<point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j])
        throw domain_error("duplicate-point: points " + std::to_string(i) +
                           " " + std::to_string(j));
  // t must stay below min|dx|/max|dy| over pairs with dx != 0.
  rational t(1);
  rational max_dy(0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      rational dy = abs(pts[i].y - pts[j].y);
      if (dy > max_dy) max_dy = dy;
    }
  if (max_dy > 0) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        rational dx = abs(pts[i].x - pts[j].x);
        if (dx != 0 && dx / max_dy < t) t = dx / max_dy;
      }
  }
  t /= 2;
  std::vector<point> out;
  out.reserve(pts.size());
  for (const point& p : pts) out.push_back(point{p.x - t * p.y, p.y});
  return point_set(std::move(out));
}

rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  try {
    if (slash == std::string::npos) return rational(bigint(token));
    const bigint num(token.substr(0, slash));
    const bigint den(token.substr(slash + 1));
    if (den == 0) throw domain_error("bad-coordinate: zero denominator");
    return rational(num, den);
  } catch (const std::runtime_error& e) {
    throw domain_error("bad-coordinate: '" + token + "'");
  }
}

std::string format_rational(const rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::vector<point> read_points(std::istream& in) {
  std::vector<point> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs)) continue;  // blank or comment-only line
    if (!(ls >> ys) || (ls >> extra))
      throw domain_error("bad-point-line: line " + std::to_string(lineno));
    pts.push_back(point{parse_rational(xs), parse_rational(ys)});
  }
  return pts;
}

void write_points(std::ostream& out, const std::vector<point>& pts) {
  for (const point& p : pts)
    out << format_rational(p.x) << " " << format_rational(p.y) << "\n";
}

}  // namespace capcup
