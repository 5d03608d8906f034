#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "replroot/geometry.hpp"

namespace replroot {

namespace {

using Vec = std::complex<double>;

constexpr const char* kSegmentColors[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e"};
constexpr const char* kSegmentNames[] = {"AB = n(0)", "BC = n(1)", "CD = n(2)", "DE = n(3)"};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

std::string kebab(StepKind kind) {
  std::string name = to_string(kind);
  std::transform(name.begin(), name.end(), name.begin(), [](char c) {
    return c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  });
  return name;
}

// World (y up) to viewport (y down), uniform scale.
class Viewport {
 public:
  Viewport(const TraceGeometry& geo, const SvgOptions& opt) : size_(opt.size) {
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    for (const auto& [label, p] : geo.points) {
      if (first) {
        lo_x = hi_x = p.x;
        lo_y = hi_y = p.y;
        first = false;
      }
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    scale_ = (opt.size - 2.0 * opt.margin) / span;
    // Center the drawing in both directions.
    off_x_ = opt.size / 2.0 - scale_ * (lo_x + hi_x) / 2.0;
    off_y_ = opt.size / 2.0 + scale_ * (lo_y + hi_y) / 2.0;
    reach_ = 2.0 * std::hypot(hi_x - lo_x, hi_y - lo_y) + 1.0;
  }

  double x(Vec p) const { return off_x_ + scale_ * p.real(); }
  double y(Vec p) const { return off_y_ - scale_ * p.imag(); }
  std::string xy(Vec p) const { return num(x(p)) + " " + num(y(p)); }
  double scale() const { return scale_; }
  double reach() const { return reach_; }
  int size() const { return size_; }

 private:
  int size_;
  double scale_ = 1.0;
  double off_x_ = 0.0;
  double off_y_ = 0.0;
  double reach_ = 1.0;
};

class SvgWriter {
 public:
  SvgWriter(const ConstructionTrace& t, const TraceGeometry& geo, const SvgOptions& opt)
      : trace_(t), geo_(geo), opt_(opt), view_(geo, opt) {}

  std::string render() {
    const int n = view_.size();
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << n << "\" height=\"" << n
         << "\" viewBox=\"0 0 " << n << " " << n << "\">\n";
    out_ << "<title>" << escape(opt_.title.empty() ? "Ruler-and-compass complex division" : opt_.title)
         << "</title>\n";
    out_ << "<rect x=\"0\" y=\"0\" width=\"" << n << "\" height=\"" << n << "\" fill=\"white\"/>\n";
    out_ << "<g id=\"axes\">\n";
    infinite_line(Line{0.0, 0.0, 1.0, 0.0}, "#999999");
    out_ << "</g>\n";
    for (std::size_t k = 0; k < trace_.steps.size(); ++k) step_layer(k, trace_.steps[k]);
    legend();
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Vec at(const std::string& label) const {
    const Point& p = geo_.points.at(label);
    return {p.x, p.y};
  }

  void line(Vec a, Vec b, const std::string& stroke, double width, bool dashed = false) {
    out_ << "  <line x1=\"" << num(view_.x(a)) << "\" y1=\"" << num(view_.y(a)) << "\" x2=\"" << num(view_.x(b))
         << "\" y2=\"" << num(view_.y(b)) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << "\""
         << (dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
  }

  void infinite_line(const Line& l, const std::string& stroke) {
    const Vec p{l.px, l.py};
    Vec d{l.dx, l.dy};
    d /= std::abs(d);
    line(p - view_.reach() * d, p + view_.reach() * d, stroke, 1.0, true);
  }

  // Compass arc about center from a to b (same radius).
  void arc(Vec center, Vec a, Vec b) {
    const double radius = std::abs(a - center) * view_.scale();
    if (radius < 0.5 || std::abs(a - b) == 0.0) return;
    const double angle = std::arg((b - center) / (a - center));
    const int large = std::abs(angle) > std::numbers::pi ? 1 : 0;
    const int sweep = angle < 0 ? 1 : 0;  // clockwise in the world is clockwise on screen
    out_ << "  <path d=\"M " << view_.xy(a) << " A " << num(radius) << " " << num(radius) << " 0 " << large << " "
         << sweep << " " << view_.xy(b) << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1.00\""
         << " stroke-dasharray=\"3 3\"/>\n";
  }

  void circle(Vec center, double radius_world) {
    const double radius = radius_world * view_.scale();
    if (radius < 0.5) return;
    out_ << "  <circle cx=\"" << num(view_.x(center)) << "\" cy=\"" << num(view_.y(center)) << "\" r=\""
         << num(radius) << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.75\" stroke-dasharray=\"2 4\"/>\n";
  }

  void point_marker(const std::string& label) {
    if (!geo_.points.count(label)) return;
    const Vec p = at(label);
    const bool result = label == trace_.result_label;
    out_ << "  <circle cx=\"" << num(view_.x(p)) << "\" cy=\"" << num(view_.y(p)) << "\" r=\""
         << (result ? "7.00" : "3.50") << "\" fill=\"" << (result ? "#e00000" : "black") << "\""
         << (result ? " stroke=\"black\" stroke-width=\"1.50\"" : "") << "/>\n";
    out_ << "  <text x=\"" << num(view_.x(p) + 8) << "\" y=\"" << num(view_.y(p) - 8)
         << "\" font-family=\"serif\" font-size=\"" << (result ? "22" : "16") << "\""
         << (result ? " font-weight=\"bold\"" : "") << ">" << escape(label) << "</text>\n";
  }

  std::string stroke_for(const ConstructionStep& s) const {
    return s.color ? kSegmentColors[*s.color - 1] : "black";
  }

  void step_layer(std::size_t index, const ConstructionStep& s) {
    char id[32];
    std::snprintf(id, sizeof id, "step-%02zu", index);
    out_ << "<g id=\"" << id << "\" class=\"" << kebab(s.kind) << "\" data-output=\"" << escape(s.output) << "\">\n";
    std::string inputs;
    for (const auto& in : s.inputs) inputs += (inputs.empty() ? "" : ", ") + in;
    out_ << "  <desc>" << escape(to_string(s.kind) + "(" + inputs + ") -> " + s.output) << "</desc>\n";

    switch (s.kind) {
      case StepKind::kPlacePoint:
        break;
      case StepKind::kMarkUnit:
        line(at(s.inputs[0]), at(s.output), "black", 4.0);
        break;
      case StepKind::kDrawSegment:
        if (s.inputs.size() == 1) {
          line(at(s.inputs[0]), at(s.output), stroke_for(s), 5.0);
        } else {
          line(at(s.inputs[0]), at(s.inputs[1]), "black", 1.5);
        }
        break;
      case StepKind::kTransferDistance:
        circle(at(s.inputs[2]), std::abs(at(s.inputs[1]) - at(s.inputs[0])));
        line(at(s.inputs[2]), at(s.output), stroke_for(s), 3.0);
        break;
      case StepKind::kErectPerpendicular:
      case StepKind::kParallelThroughPoint:
        if (auto it = geo_.lines.find(s.output); it != geo_.lines.end()) infinite_line(it->second, "#555555");
        break;
      case StepKind::kRotateSegmentClockwise90:
      case StepKind::kRotateSegmentToRay:
        arc(at(s.inputs[0]), at(s.inputs[1]), at(s.output));
        line(at(s.inputs[0]), at(s.output), stroke_for(s), s.color ? 3.0 : 1.5);
        break;
      case StepKind::kMarkIntersection:
        break;
    }
    point_marker(s.output);
    out_ << "</g>\n";
  }

  void legend() {
    out_ << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"14\">\n";
    out_ << "  <rect x=\"10\" y=\"10\" width=\"250\" height=\"150\" fill=\"white\" fill-opacity=\"0.85\""
         << " stroke=\"#444444\"/>\n";
    for (int c = 0; c < 4; ++c) {
      const int y = 32 + 22 * c;
      out_ << "  <line x1=\"20\" y1=\"" << y - 5 << "\" x2=\"50\" y2=\"" << y - 5 << "\" stroke=\"" << kSegmentColors[c]
           << "\" stroke-width=\"5\"/>\n";
      out_ << "  <text x=\"58\" y=\"" << y << "\">c" << c + 1 << ": " << kSegmentNames[c] << "</text>\n";
    }
    out_ << "  <text x=\"20\" y=\"" << 32 + 22 * 4 << "\">unit AU = " << num(view_.scale()) << " px</text>\n";
    if (auto it = geo_.points.find(trace_.result_label); it != geo_.points.end()) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "R = %.6f %s %.6fi", it->second.x, it->second.y < 0 ? "-" : "+",
                    std::abs(it->second.y));
      out_ << "  <text x=\"20\" y=\"" << 32 + 22 * 5 << "\" fill=\"#e00000\">" << buf << "</text>\n";
    }
    out_ << "</g>\n";
  }

  const ConstructionTrace& trace_;
  const TraceGeometry& geo_;
  const SvgOptions& opt_;
  Viewport view_;
  std::ostringstream out_;
};

}  // namespace

std::string render_svg(const ConstructionTrace& t, const SvgOptions& options) {
  const TraceGeometry geo = evaluate_geometry(t);
  return SvgWriter(t, geo, options).render();
}

}  // namespace replroot
