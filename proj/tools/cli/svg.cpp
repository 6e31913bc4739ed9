#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

#include "clarr/error.hpp"

namespace clarr::cli {

Window parse_window(std::string_view text) {
  std::vector<Rational> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    values.push_back(parse_rational(text.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == text.size()) {
      break;
    }
  }
  if (values.size() != 4) {
    throw std::invalid_argument("window needs four values: xmin,xmax,ymin,ymax");
  }
  return {values[0], values[1], values[2], values[3]};
}

namespace {

std::string num(double v) {
  if (std::abs(v) < 5e-4) {
    v = 0.0;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class Canvas {
 public:
  Canvas(const Window& w, double scale)
      : xmin_(w.xmin.get_d()), ymax_(w.ymax.get_d()), scale_(scale) {}

  double x(double ax) const { return (ax - xmin_) * scale_; }
  double y(double ay) const { return (ymax_ - ay) * scale_; }
  double scale() const { return scale_; }

 private:
  double xmin_;
  double ymax_;
  double scale_;
};

using QPoint = std::pair<Rational, Rational>;

// Exact clipping of a x + b y + c = 0 against the window.
std::optional<std::pair<QPoint, QPoint>> clip_line(const LineForm& line, const Window& w) {
  const Rational a(line.coefficients()[0]);
  const Rational b(line.coefficients()[1]);
  const Rational c(line.coefficients()[2]);
  std::vector<QPoint> hits;
  auto inside = [&](const QPoint& p) {
    return p.first >= w.xmin && p.first <= w.xmax && p.second >= w.ymin && p.second <= w.ymax;
  };
  if (b != 0) {
    for (const Rational& xv : {w.xmin, w.xmax}) {
      hits.emplace_back(xv, -(a * xv + c) / b);
    }
  }
  if (a != 0) {
    for (const Rational& yv : {w.ymin, w.ymax}) {
      hits.emplace_back(-(b * yv + c) / a, yv);
    }
  }
  std::vector<QPoint> kept;
  for (const auto& p : hits) {
    if (inside(p) && std::find(kept.begin(), kept.end(), p) == kept.end()) {
      kept.push_back(p);
    }
  }
  if (kept.size() < 2) {
    return std::nullopt;
  }
  std::sort(kept.begin(), kept.end());
  return std::make_pair(kept.front(), kept.back());
}

struct AffineConic {
  double a, b, c, d, e, f;  // a x^2 + b xy + c y^2 + d x + e y + f

  double value(double x, double y) const {
    return a * x * x + b * x * y + c * y * y + d * x + e * y + f;
  }
};

std::string ellipse_element(const AffineConic& q, const Canvas& canvas) {
  const double det = 4 * q.a * q.c - q.b * q.b;
  const double cx = (q.b * q.e - 2 * q.c * q.d) / det;
  const double cy = (q.b * q.d - 2 * q.a * q.e) / det;
  const double fc = q.value(cx, cy);
  const double theta = 0.5 * std::atan2(q.b, q.a - q.c);
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  const double a1 = q.a * cs * cs + q.b * cs * sn + q.c * sn * sn;
  const double c1 = q.a * sn * sn - q.b * cs * sn + q.c * cs * cs;
  if (-fc / a1 <= 0 || -fc / c1 <= 0) {
    return {};  // no real points
  }
  const double rx = std::sqrt(-fc / a1) * canvas.scale();
  const double ry = std::sqrt(-fc / c1) * canvas.scale();
  const double px = canvas.x(cx);
  const double py = canvas.y(cy);
  std::string out = "<ellipse cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" rx=\"" + num(rx) +
                    "\" ry=\"" + num(ry) + "\"";
  const double degrees = -theta * 180.0 / std::acos(-1.0);
  if (std::abs(degrees) >= 5e-4) {
    out += " transform=\"rotate(" + num(degrees) + " " + num(px) + " " + num(py) + ")\"";
  }
  return out + "/>";
}

// Hyperbolas and parabolas: polyline samples of the real branches.
std::string sampled_path(const AffineConic& q, const Window& w, const Canvas& canvas) {
  const bool swap = std::abs(q.c) < 1e-12 && std::abs(q.a) >= 1e-12;
  // Solve for the dependent variable v given the sampled one s.
  const double lo = swap ? w.ymin.get_d() : w.xmin.get_d();
  const double hi = swap ? w.ymax.get_d() : w.xmax.get_d();
  const int steps = 600;
  std::vector<std::vector<std::pair<double, double>>> runs(2);
  std::string d;
  auto flush = [&](std::vector<std::pair<double, double>>& run) {
    if (run.size() >= 2) {
      for (std::size_t i = 0; i < run.size(); ++i) {
        d += (i == 0 ? "M" : " L") + num(canvas.x(run[i].first)) + " " +
             num(canvas.y(run[i].second));
      }
      d += " ";
    }
    run.clear();
  };
  for (int i = 0; i <= steps; ++i) {
    const double s = lo + (hi - lo) * i / steps;
    // v^2 * qa + v * qb + qc = 0
    double qa, qb, qc;
    if (swap) {
      qa = q.a;
      qb = q.b * s + q.d;
      qc = q.c * s * s + q.e * s + q.f;
    } else {
      qa = q.c;
      qb = q.b * s + q.e;
      qc = q.a * s * s + q.d * s + q.f;
    }
    std::vector<double> roots;
    if (std::abs(qa) < 1e-12) {
      if (std::abs(qb) > 1e-12) {
        roots.push_back(-qc / qb);
      }
    } else {
      const double disc = qb * qb - 4 * qa * qc;
      if (disc >= 0) {
        const double r = std::sqrt(disc);
        roots.push_back((-qb - r) / (2 * qa));
        roots.push_back((-qb + r) / (2 * qa));
      }
    }
    for (std::size_t k = 0; k < 2; ++k) {
      if (k < roots.size() && std::isfinite(roots[k])) {
        runs[k].emplace_back(swap ? roots[k] : s, swap ? s : roots[k]);
      } else {
        flush(runs[k]);
      }
    }
  }
  flush(runs[0]);
  flush(runs[1]);
  if (d.empty()) {
    return {};
  }
  d.pop_back();
  return "<path d=\"" + d + "\"/>";
}

}  // namespace

std::string render_svg(const Arrangement& arrangement, const Window& window,
                       double pixels_per_unit) {
  if (window.xmin >= window.xmax || window.ymin >= window.ymax) {
    throw Error(ErrorCode::kDegenerateWindow, "window must satisfy xmin < xmax and ymin < ymax");
  }
  const Canvas canvas(window, pixels_per_unit);
  const double width = Rational(window.xmax - window.xmin).get_d() * pixels_per_unit;
  const double height = Rational(window.ymax - window.ymin).get_d() * pixels_per_unit;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
      << num(height) << "\">\n"
      << "  <title>" << arrangement.label() << "</title>\n"
      << "  <defs><clipPath id=\"window\"><rect x=\"0\" y=\"0\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\"/></clipPath></defs>\n"
      << "  <g clip-path=\"url(#window)\" fill=\"none\" stroke=\"black\" "
         "stroke-width=\"1\">\n";
  const auto& comps = arrangement.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::string element;
    if (const auto* line = std::get_if<LineForm>(&comps[i])) {
      if (auto seg = clip_line(*line, window)) {
        element = "<line x1=\"" + num(canvas.x(seg->first.first.get_d())) + "\" y1=\"" +
                  num(canvas.y(seg->first.second.get_d())) + "\" x2=\"" +
                  num(canvas.x(seg->second.first.get_d())) + "\" y2=\"" +
                  num(canvas.y(seg->second.second.get_d())) + "\"/>";
      }
    } else {
      const auto& c = std::get<ConicForm>(comps[i]).coefficients();
      const AffineConic q{c[0].get_d(), c[3].get_d(), c[1].get_d(),
                          c[4].get_d(), c[5].get_d(), c[2].get_d()};
      element = q.b * q.b - 4 * q.a * q.c < 0 ? ellipse_element(q, canvas)
                                              : sampled_path(q, window, canvas);
    }
    if (!element.empty()) {
      out << "    <!-- " << i << ": " << component_record(comps[i]) << " -->\n"
          << "    " << element << "\n";
    }
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace clarr::cli
