#include "capcup/render.hpp"

#include <sstream>

namespace capcup {

std::string render_plane_ascii(const alpha_beta_plane& plane) {
  const int n = plane.n;
  int width = 1;
  for (int v = plane.stat.tuples.size(); v >= 10; v /= 10) ++width;
  const int cell = width + 2;
  std::ostringstream out;
  for (int beta = n - 1; beta >= 1; --beta) {
    out << beta << " |";
    for (int alpha = 1; alpha <= beta; ++alpha) {
      const int v = plane.vertex_at(alpha, beta);
      std::string txt = v >= 0 ? "●" + std::to_string(v) : "○";
      const int pad = cell - 1 - (v >= 0 ? static_cast<int>(std::to_string(v).size()) : 0);
      out << " " << txt << std::string(std::max(0, pad - 1), ' ');
    }
    out << "\n";
  }
  out << "  +" << std::string((n - 1) * (cell + 1), '-') << "\n";
  out << "   ";
  for (int alpha = 1; alpha <= n - 1; ++alpha) {
    std::string lab = std::to_string(alpha);
    out << " " << lab << std::string(cell - lab.size(), ' ');
  }
  out << "\n";
  return out.str();
}

std::string render_plane_svg(const alpha_beta_plane& plane) {
  const int n = plane.n;
  const int step = 40, margin = 40, radius = 12;
  const int w = margin * 2 + (n - 1) * step;
  const int h = margin * 2 + (n - 1) * step;
  auto cx = [&](int alpha) { return margin + (alpha - 1) * step; };
  auto cy = [&](int beta) { return h - margin - (beta - 1) * step; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
  // grid lines of the triangular region
  for (int beta = 1; beta <= n - 1; ++beta)
    out << "  <line x1=\"" << cx(1) << "\" y1=\"" << cy(beta) << "\" x2=\""
        << cx(beta) << "\" y2=\"" << cy(beta)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  for (int alpha = 1; alpha <= n - 1; ++alpha)
    out << "  <line x1=\"" << cx(alpha) << "\" y1=\"" << cy(alpha)
        << "\" x2=\"" << cx(alpha) << "\" y2=\"" << cy(n - 1)
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  for (int beta = 1; beta <= n - 1; ++beta)
    for (int alpha = 1; alpha <= beta; ++alpha) {
      const int v = plane.vertex_at(alpha, beta);
      if (v >= 0) {
        out << "  <circle cx=\"" << cx(alpha) << "\" cy=\"" << cy(beta)
            << "\" r=\"" << radius << "\" fill=\"black\"/>\n";
        out << "  <text x=\"" << cx(alpha) << "\" y=\"" << cy(beta) + 4
            << "\" fill=\"white\" font-size=\"11\" text-anchor=\"middle\">"
            << v << "</text>\n";
      } else {
        out << "  <circle cx=\"" << cx(alpha) << "\" cy=\"" << cy(beta)
            << "\" r=\"" << radius
            << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
      }
    }
  for (int alpha = 1; alpha <= n - 1; ++alpha)
    out << "  <text x=\"" << cx(alpha) << "\" y=\"" << h - margin / 2
        << "\" font-size=\"12\" text-anchor=\"middle\">" << alpha
        << "</text>\n";
  for (int beta = 1; beta <= n - 1; ++beta)
    out << "  <text x=\"" << margin / 2 << "\" y=\"" << cy(beta) + 4
        << "\" font-size=\"12\" text-anchor=\"middle\">" << beta
        << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace capcup
