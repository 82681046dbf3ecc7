#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <vector>

namespace capcup {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

struct point {
  rational x;
  rational y;
};

bool operator==(const point& a, const point& b);

enum class turn { cap, cup, collinear };

// Sign of the exact cross product (q-p) x (r-q) for p.x < q.x < r.x:
// negative -> cap, positive -> cup, zero -> collinear.
turn orient_points(const point& p, const point& q, const point& r);

// A planar point set in general position: pairwise distinct x-coordinates,
// no three points collinear. Construction validates both.
struct point_set {
  std::vector<point> points;

  explicit point_set(std::vector<point> pts);
  int size() const { return static_cast<int>(points.size()); }
};

// Shear (x,y) -> (x - t*y, y) with t > 0 rational, small enough to keep every
// strict x-order and break every x-tie by y. Orientations and collinearity are
// untouched (the map has positive determinant), but coordinates change, so the
// result is not the input point set. Duplicate points still fail validation.
point_set rotate_to_general_position(const std::vector<point>& pts);

// Text format: one point per line "x y", coordinates either decimal integers
// or rationals "p/q"; '#' starts a comment.
std::vector<point> read_points(std::istream& in);
void write_points(std::ostream& out, const std::vector<point>& pts);
std::string format_rational(const rational& r);
rational parse_rational(const std::string& token);

}  // namespace capcup
