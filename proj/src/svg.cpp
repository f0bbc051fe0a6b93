#include "cp1graft/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cp1graft/errors.hpp"
#include "cp1graft/tolerance.hpp"

namespace cp1graft {

namespace {

constexpr double kLineA = 1e-9;  // |A| below this: the circle passes through infinity
constexpr int kSamples = 256;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string stroke_attrs(const SvgStyle& s) {
  std::string out = " fill=\"none\" stroke=\"" + s.stroke + "\" stroke-width=\"" + fmt(s.width) + "\"";
  if (s.dashed) out += " stroke-dasharray=\"6 4\"";
  if (!s.css_class.empty()) out += " class=\"" + s.css_class + "\"";
  return out;
}

}  // namespace

std::optional<std::pair<cplx, cplx>> clip_segment(cplx p, cplx d, double t0, double t1, double half) {
  const double pv[4] = {-d.real(), d.real(), -d.imag(), d.imag()};
  const double qv[4] = {p.real() + half, half - p.real(), p.imag() + half, half - p.imag()};
  for (int i = 0; i < 4; ++i) {
    if (pv[i] == 0.0) {
      if (qv[i] < 0.0) return std::nullopt;
      continue;
    }
    double r = qv[i] / pv[i];
    if (pv[i] < 0.0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
  }
  if (t0 > t1) return std::nullopt;
  return std::make_pair(p + t0 * d, p + t1 * d);
}

SvgScene::SvgScene(Chart chart, double half_width) : chart_(chart), half_(half_width) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) fail(ErrorCode::Internal, "viewport must be positive");
  if (chart_ == Chart::Stereo) {
    SvgStyle s{"#999999", 1.0, false, "infinity"};
    items_.push_back({SvgPrimitive::Kind::Circle, {0.0}, 2.0, "", s});
  }
}

cplx SvgScene::chart_point(const RiemannPoint& p) const {
  const cplx z = p.affine();
  if (chart_ == Chart::Plane) return z;
  return 2.0 * z / std::sqrt(1.0 + std::norm(z));
}

void SvgScene::add_circle(const Circle& c, const SvgStyle& style) {
  if (chart_ == Chart::Plane) {
    if (std::abs(c.A()) < kLineA) {
      // 2 Re(B conj z) + C = 0: normal B, direction iB.
      const cplx b = c.B();
      const cplx p0 = -c.C() / (2.0 * std::norm(b)) * b;
      const cplx d = cplx(0.0, 1.0) * b / std::abs(b);
      const double reach = std::abs(p0) + 4.0 * half_;
      if (auto seg = clip_segment(p0, d, -reach, reach, half_)) {
        items_.push_back({SvgPrimitive::Kind::Line, {seg->first, seg->second}, 0.0, "", style});
      }
      return;
    }
    items_.push_back({SvgPrimitive::Kind::Circle, {-c.B() / c.A()}, 1.0 / std::abs(c.A()), "", style});
    return;
  }
  // Stereo: sampled polylines, split where a sample hits infinity. The
  // parameter is periodic, so a run that wraps past the last sample is
  // joined to the first one.
  std::vector<std::vector<cplx>> runs(1);
  bool split = false;
  for (int k = 0; k < kSamples; ++k) {
    RiemannPoint p = point_on(c, 2.0 * kPi * k / kSamples);
    if (p.is_infinity(1e-12)) {
      split = true;
      if (!runs.back().empty()) runs.emplace_back();
      continue;
    }
    runs.back().push_back(chart_point(p));
  }
  if (!split) {
    runs.front().push_back(runs.front().front());
  } else if (runs.size() > 1 && !runs.back().empty() && !runs.front().empty()) {
    runs.back().insert(runs.back().end(), runs.front().begin(), runs.front().end());
    runs.erase(runs.begin());
  }
  for (auto& run : runs) {
    if (run.size() > 1) items_.push_back({SvgPrimitive::Kind::Polyline, std::move(run), 0.0, "", style});
  }
}

void SvgScene::add_point(const RiemannPoint& p, const std::string& name, const SvgStyle& style) {
  if (p.is_infinity(1e-12) || (chart_ == Chart::Plane && std::abs(p.affine()) > 1e6)) {
    at_infinity_.push_back(name);
    return;
  }
  items_.push_back({SvgPrimitive::Kind::Point, {chart_point(p)}, 0.0, name, style});
}

void SvgScene::add_label(cplx at, const std::string& text) {
  items_.push_back({SvgPrimitive::Kind::Label, {at}, 0.0, text, SvgStyle{}});
}

std::string SvgScene::to_svg(int pixels) const {
  const double scale = pixels / (2.0 * half_);
  auto px = [&](cplx w) { return fmt((w.real() + half_) * scale) + "," + fmt((half_ - w.imag()) * scale); };
  auto pxx = [&](cplx w) { return fmt((w.real() + half_) * scale); };
  auto pxy = [&](cplx w) { return fmt((half_ - w.imag()) * scale); };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\"" << pixels
     << "\" viewBox=\"0 0 " << pixels << " " << pixels << "\">\n";
  os << "<rect width=\"" << pixels << "\" height=\"" << pixels << "\" fill=\"white\"/>\n";
  for (const auto& it : items_) {
    switch (it.kind) {
      case SvgPrimitive::Kind::Circle:
        os << "<circle cx=\"" << pxx(it.points[0]) << "\" cy=\"" << pxy(it.points[0]) << "\" r=\""
           << fmt(it.radius * scale) << "\"" << stroke_attrs(it.style) << "/>\n";
        break;
      case SvgPrimitive::Kind::Line:
        os << "<line x1=\"" << pxx(it.points[0]) << "\" y1=\"" << pxy(it.points[0]) << "\" x2=\""
           << pxx(it.points[1]) << "\" y2=\"" << pxy(it.points[1]) << "\"" << stroke_attrs(it.style) << "/>\n";
        break;
      case SvgPrimitive::Kind::Polyline: {
        os << "<polyline points=\"";
        for (std::size_t i = 0; i < it.points.size(); ++i) os << (i ? " " : "") << px(it.points[i]);
        os << "\"" << stroke_attrs(it.style) << "/>\n";
        break;
      }
      case SvgPrimitive::Kind::Point:
        os << "<circle class=\"point\" cx=\"" << pxx(it.points[0]) << "\" cy=\"" << pxy(it.points[0])
           << "\" r=\"4\" fill=\"" << it.style.stroke << "\"/>\n";
        os << "<text class=\"point-label\" x=\"" << fmt((it.points[0].real() + half_) * scale + 6) << "\" y=\""
           << fmt((half_ - it.points[0].imag()) * scale - 6) << "\" font-size=\"12\">" << escape(it.text)
           << "</text>\n";
        break;
      case SvgPrimitive::Kind::Label:
        os << "<text x=\"" << pxx(it.points[0]) << "\" y=\"" << pxy(it.points[0]) << "\" font-size=\"12\">"
           << escape(it.text) << "</text>\n";
        break;
    }
  }
  for (std::size_t i = 0; i < at_infinity_.size(); ++i) {
    os << "<text class=\"point-label infinity\" x=\"8\" y=\"" << 16 + 14 * i << "\" font-size=\"12\">"
       << escape(at_infinity_[i]) << " = inf</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

SvgScene configuration_scene(const CircleConfiguration& cfg, Chart chart,
                             const std::optional<std::array<RiemannPoint, 3>>& vertices) {
  struct Named {
    RiemannPoint p;
    std::string name;
  };
  static const char* kPairNames[3] = {"12", "23", "13"};
  std::vector<Named> points;
  auto add_unique = [&](const RiemannPoint& p, const std::string& name) {
    for (const auto& n : points) {
      if (same_point(n.p, p, geom_tol())) return;
    }
    points.push_back({p, name});
  };
  for (int s = 0; s < 3; ++s) {
    const PairIntersection& pr = cfg.pair(static_cast<PairSlot>(s));
    add_unique(pr.x, std::string("P") + kPairNames[s] + "x");
    add_unique(pr.y, std::string("P") + kPairNames[s] + "y");
  }
  double half = 2.2;
  if (chart == Chart::Plane) {
    double extent = 1.0;
    for (const auto& n : points) {
      if (n.p.is_infinity(1e-12)) continue;
      cplx z = n.p.affine();
      if (std::abs(z) > 1e6) continue;
      extent = std::max({extent, std::abs(z.real()), std::abs(z.imag())});
    }
    half = 1.4 * extent;
  }
  SvgScene scene(chart, half);
  static const char* kColors[3] = {"#1f77b4", "#d62728", "#2ca02c"};
  static const char* kCircleNames[3] = {"C12", "C23", "C13"};
  for (int i = 0; i < 3; ++i) scene.add_circle(cfg.circle(i), SvgStyle{kColors[i], 1.5, false, kCircleNames[i]});
  if (cfg.kind() == ConfigKind::Hyperbolic) {
    scene.add_circle(dual_circle(cfg), SvgStyle{"#555555", 1.0, true, "dual"});
  }
  for (const auto& n : points) scene.add_point(n.p, n.name, SvgStyle{"black", 1.0, false, ""});
  if (vertices) {
    for (int j = 0; j < 3; ++j) {
      scene.add_point((*vertices)[j], "v" + std::to_string(j + 1), SvgStyle{"#ff7f0e", 1.0, false, ""});
    }
  }
  return scene;
}

}  // namespace cp1graft
