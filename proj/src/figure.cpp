#include "lcroots/figure.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "lcroots/errors.hpp"
#include "lcroots/literal.hpp"

namespace lcroots {

namespace {

std::string px(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string short_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

PlaneViewport fit_viewport(const std::vector<Complex>& points, const Circle& circle, int width) {
  double xmin = circle.center.real() - circle.radius, xmax = circle.center.real() + circle.radius;
  double ymin = circle.center.imag() - circle.radius, ymax = circle.center.imag() + circle.radius;
  for (Complex p : points) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  const double pad_x = 0.1 * (xmax - xmin);
  const double pad_y = 0.1 * (ymax - ymin);
  PlaneViewport vp;
  vp.xmin = xmin - pad_x;
  vp.xmax = xmax + pad_x;
  vp.ymin = ymin - pad_y;
  vp.ymax = ymax + pad_y;
  vp.width = width;
  vp.scale = width / (vp.xmax - vp.xmin);
  vp.height = (vp.ymax - vp.ymin) * vp.scale;
  return vp;
}

}  // namespace

Figure render_figure(const QuadraticCoefficients& coeffs, int width, const SolveOptions& options) {
  if (width <= 0) throw LcError(ErrorCode::InvalidArgument, "figure width must be positive");
  RootReport roots = solve(coeffs, options);
  if (!roots.construction) {
    throw LcError(ErrorCode::CollinearPoints, "no line/circle construction available to draw");
  }
  const LcConstruction& lc = *roots.construction;

  struct Marker {
    const char* id;
    const char* label;
    Complex at;
    const char* color;
  };
  const std::vector<Marker> markers = {
      {"origin", "0", Complex{}, "#000000"},
      {"p1", "p1", lc.p1, "#1f77b4"},
      {"w1", "c2/p1", lc.w1, "#9467bd"},
      {"r1", "r1", roots.r1, "#d62728"},
      {"r2", "r2", roots.r2, "#d62728"},
      {"center", "c", lc.circle.center, "#2ca02c"},
  };
  std::vector<Complex> points;
  for (const Marker& m : markers) points.push_back(m.at);
  const PlaneViewport vp = fit_viewport(points, lc.circle, width);

  const double t_lo = roots.line_parameters[0];
  const double t_hi = roots.line_parameters[1];
  const double margin = 2.0 * (t_hi - t_lo);
  const Complex a = vp.to_pixel(lc.line.at(t_lo - margin));
  const Complex b = vp.to_pixel(lc.line.at(t_hi + margin));
  const Complex c = vp.to_pixel(lc.circle.center);
  const Complex x0 = vp.to_pixel({vp.xmin, 0.0}), x1 = vp.to_pixel({vp.xmax, 0.0});
  const Complex y0 = vp.to_pixel({0.0, vp.ymin}), y1 = vp.to_pixel({0.0, vp.ymax});

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(vp.width)
    << "\" height=\"" << px(vp.height) << "\" viewBox=\"0 0 " << px(vp.width) << ' '
    << px(vp.height) << "\">\n";
  s << "  <metadata>\n"
    << "    <lc:plane xmlns:lc=\"urn:lcroots:figure\" xmin=\"" << format_double(vp.xmin)
    << "\" xmax=\"" << format_double(vp.xmax) << "\" ymin=\"" << format_double(vp.ymin)
    << "\" ymax=\"" << format_double(vp.ymax) << "\" scale=\"" << format_double(vp.scale)
    << "\"/>\n"
    << "  </metadata>\n";
  s << "  <rect x=\"0\" y=\"0\" width=\"" << px(vp.width) << "\" height=\"" << px(vp.height)
    << "\" fill=\"#ffffff\"/>\n";
  s << "  <g id=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n"
    << "    <line id=\"axis-re\" x1=\"" << px(x0.real()) << "\" y1=\"" << px(x0.imag()) << "\" x2=\""
    << px(x1.real()) << "\" y2=\"" << px(x1.imag()) << "\"/>\n"
    << "    <line id=\"axis-im\" x1=\"" << px(y0.real()) << "\" y1=\"" << px(y0.imag()) << "\" x2=\""
    << px(y1.real()) << "\" y2=\"" << px(y1.imag()) << "\"/>\n"
    << "  </g>\n";
  s << "  <circle id=\"circle-C\" cx=\"" << px(c.real()) << "\" cy=\"" << px(c.imag()) << "\" r=\""
    << px(lc.circle.radius * vp.scale) << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\"/>\n";
  s << "  <line id=\"line-L1\" x1=\"" << px(a.real()) << "\" y1=\"" << px(a.imag()) << "\" x2=\""
    << px(b.real()) << "\" y2=\"" << px(b.imag())
    << "\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
  s << "  <g id=\"markers\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const Marker& m : markers) {
    const Complex p = vp.to_pixel(m.at);
    s << "    <circle id=\"marker-" << m.id << "\" class=\"marker\" cx=\"" << px(p.real())
      << "\" cy=\"" << px(p.imag()) << "\" r=\"3.5\" fill=\"" << m.color << "\"/>\n";
    s << "    <text x=\"" << px(p.real() + 6.0) << "\" y=\"" << px(p.imag() - 6.0) << "\">"
      << xml_escape(std::string(m.label) + " = " + short_complex(m.at)) << "</text>\n";
  }
  s << "  </g>\n";
  s << "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n"
    << "    <text x=\"10\" y=\"20\">"
    << xml_escape("x^2 + (" + format_complex(coeffs.c1) + ")x + (" + format_complex(coeffs.c2) +
                  ") = 0")
    << "</text>\n"
    << "    <text x=\"10\" y=\"38\" fill=\"#1f77b4\">L1: p1 + t e^(i theta*)</text>\n"
    << "    <text x=\"10\" y=\"56\" fill=\"#2ca02c\">C: c2 / L1</text>\n"
    << "  </g>\n";
  s << "</svg>\n";

  return {s.str(), vp, std::move(roots)};
}

}  // namespace lcroots
