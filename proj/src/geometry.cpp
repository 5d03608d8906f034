#include "replroot/geometry.hpp"

#include <cmath>

namespace replroot {

namespace {

using Vec = std::complex<double>;

constexpr double kParallelTolerance = 1e-12;

struct KindName {
  StepKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {StepKind::kPlacePoint, "PLACE_POINT"},
    {StepKind::kDrawSegment, "DRAW_SEGMENT"},
    {StepKind::kTransferDistance, "TRANSFER_DISTANCE"},
    {StepKind::kErectPerpendicular, "ERECT_PERPENDICULAR"},
    {StepKind::kRotateSegmentClockwise90, "ROTATE_SEGMENT_CLOCKWISE_90"},
    {StepKind::kRotateSegmentToRay, "ROTATE_SEGMENT_TO_RAY"},
    {StepKind::kParallelThroughPoint, "PARALLEL_THROUGH_POINT"},
    {StepKind::kMarkIntersection, "MARK_INTERSECTION"},
    {StepKind::kMarkUnit, "MARK_UNIT"},
};

Vec rotate_clockwise_90(Vec v) { return {v.imag(), -v.real()}; }

class Evaluator {
 public:
  TraceGeometry run(const ConstructionTrace& t) {
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
      index_ = k;
      apply(t.steps[k]);
    }
    const bool closed = !t.steps.empty() && t.steps.back().kind == StepKind::kMarkIntersection &&
                        t.steps.back().output == t.result_label;
    if (!closed) fail("result '" + t.result_label + "' must come from the final MARK_INTERSECTION");
    return std::move(geo_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw MalformedTrace("step " + std::to_string(index_) + ": " + message);
  }

  Vec point(const std::string& label) const {
    auto it = geo_.points.find(label);
    if (it == geo_.points.end()) fail("unknown point '" + label + "'");
    return {it->second.x, it->second.y};
  }

  const Line& line(const std::string& label) const {
    auto it = geo_.lines.find(label);
    if (it == geo_.lines.end()) fail("unknown or degenerate line '" + label + "'");
    return it->second;
  }

  void arity(const ConstructionStep& s, std::size_t lo, std::size_t hi) const {
    if (s.inputs.size() < lo || s.inputs.size() > hi) fail(to_string(s.kind) + ": wrong number of inputs");
  }

  void define_point(const std::string& label, Vec at) {
    if (!std::isfinite(at.real()) || !std::isfinite(at.imag())) fail("non-finite coordinates for '" + label + "'");
    if (geo_.points.count(label) || geo_.lines.count(label)) fail("label '" + label + "' redefined");
    geo_.points[label] = Point{at.real(), at.imag(), label};
  }

  void define_line(const std::string& label, Vec through, Vec direction) {
    if (geo_.points.count(label) || geo_.lines.count(label)) fail("label '" + label + "' redefined");
    if (std::abs(direction) == 0.0) return;  // coincident points: a segment of length 0, no line
    geo_.lines[label] = Line{through.real(), through.imag(), direction.real(), direction.imag()};
  }

  Vec axis() const {
    if (!axis_) fail("no unit marked yet");
    return *axis_;
  }

  void apply(const ConstructionStep& s) {
    switch (s.kind) {
      case StepKind::kPlacePoint:
        arity(s, 0, 0);
        define_point(s.output, {0.0, 0.0});
        break;
      case StepKind::kMarkUnit: {
        arity(s, 1, 1);
        axis_ = Vec{1.0, 0.0};
        define_point(s.output, point(s.inputs[0]) + *axis_);
        break;
      }
      case StepKind::kDrawSegment:
        arity(s, 1, 2);
        if (s.inputs.size() == 1) {
          if (!s.amount) fail("lay without an amount");
          define_point(s.output, point(s.inputs[0]) + *s.amount * axis());
        } else {
          const Vec p = point(s.inputs[0]);
          define_line(s.output, p, point(s.inputs[1]) - p);
        }
        break;
      case StepKind::kTransferDistance:
        arity(s, 3, 3);
        define_point(s.output, point(s.inputs[2]) + (point(s.inputs[1]) - point(s.inputs[0])));
        break;
      case StepKind::kErectPerpendicular: {
        arity(s, 2, 2);
        const Line& ref = line(s.inputs[1]);
        define_line(s.output, point(s.inputs[0]), rotate_clockwise_90({ref.dx, ref.dy}));
        break;
      }
      case StepKind::kParallelThroughPoint: {
        arity(s, 2, 2);
        const Line& ref = line(s.inputs[1]);
        define_line(s.output, point(s.inputs[0]), {ref.dx, ref.dy});
        break;
      }
      case StepKind::kRotateSegmentClockwise90: {
        arity(s, 2, 2);
        const Vec pivot = point(s.inputs[0]);
        define_point(s.output, pivot + rotate_clockwise_90(point(s.inputs[1]) - pivot));
        break;
      }
      case StepKind::kRotateSegmentToRay: {
        arity(s, 3, 4);
        const Vec center = point(s.inputs[0]);
        const Vec arm = point(s.inputs[1]) - center;
        if (s.inputs.size() == 3) {
          const Vec ray = point(s.inputs[2]) - center;
          if (std::abs(ray) == 0.0) fail("ray direction is undefined");
          define_point(s.output, center + std::abs(arm) * ray / std::abs(ray));
        } else {
          const Vec from = point(s.inputs[2]) - center;
          const Vec to = point(s.inputs[3]) - center;
          if (std::abs(from) == 0.0 || std::abs(to) == 0.0) fail("rotation angle is undefined");
          Vec turn = to * std::conj(from);
          turn /= std::abs(turn);
          define_point(s.output, center + arm * turn);
        }
        break;
      }
      case StepKind::kMarkIntersection: {
        arity(s, 2, 2);
        const Line& a = line(s.inputs[0]);
        const Line& b = line(s.inputs[1]);
        const double cross = a.dx * b.dy - a.dy * b.dx;
        const double scale = std::hypot(a.dx, a.dy) * std::hypot(b.dx, b.dy);
        if (std::abs(cross) <= kParallelTolerance * scale) fail("lines are parallel");
        // a.p + t·a.d = b.p + u·b.d
        const double t = ((b.px - a.px) * b.dy - (b.py - a.py) * b.dx) / cross;
        define_point(s.output, {a.px + t * a.dx, a.py + t * a.dy});
        break;
      }
    }
    if (s.color && (*s.color < 1 || *s.color > 4)) fail("color index out of range");
  }

  TraceGeometry geo_;
  std::optional<Vec> axis_;
  std::size_t index_ = 0;
};

}  // namespace

std::string to_string(StepKind kind) {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "?";
}

StepKind parse_step_kind(const std::string& text) {
  for (const auto& entry : kKindNames) {
    if (text == entry.name) return entry.kind;
  }
  throw MalformedTrace("unknown step kind '" + text + "'");
}

ConstructionTrace plan_quotient_construction(const BigInt& u1, const BigInt& v1, const BigInt& u2,
                                             const BigInt& v2) {
  if (u2.is_zero() && v2.is_zero()) throw ZeroDenominator();
  ConstructionTrace t;
  auto add = [&t](StepKind kind, std::vector<std::string> inputs, std::string output,
                  std::optional<int> color = std::nullopt, std::optional<double> amount = std::nullopt) {
    t.steps.push_back({kind, std::move(inputs), std::move(output), color, amount});
  };
  auto units = [](const BigInt& v) { return v.convert_to<double>(); };

  add(StepKind::kPlacePoint, {}, "A");
  add(StepKind::kMarkUnit, {"A"}, "U");
  add(StepKind::kDrawSegment, {"A", "U"}, "AU");
  add(StepKind::kDrawSegment, {"A"}, "B", 1, units(u1));
  add(StepKind::kDrawSegment, {"B"}, "C", 2, units(v1));
  add(StepKind::kDrawSegment, {"C"}, "D", 3, units(u2));
  add(StepKind::kDrawSegment, {"D"}, "E", 4, units(v2));
  add(StepKind::kRotateSegmentClockwise90, {"B", "C"}, "C′", 2);
  add(StepKind::kDrawSegment, {"A", "C′"}, "AC′");
  add(StepKind::kTransferDistance, {"C", "D", "A"}, "D′", 3);
  add(StepKind::kTransferDistance, {"D", "E", "D′"}, "F", 4);
  add(StepKind::kRotateSegmentClockwise90, {"D′", "F"}, "E′", 4);
  add(StepKind::kDrawSegment, {"A", "E′"}, "AE′");
  add(StepKind::kRotateSegmentToRay, {"A", "E′", "U"}, "E″");
  add(StepKind::kRotateSegmentToRay, {"A", "C′", "E′", "E″"}, "C″");

  // Im(z1·conj(z2)) == 0 exactly when the quotient is real.
  if (u1 * v2 != v1 * u2) {
    add(StepKind::kDrawSegment, {"A", "C″"}, "AC″");
    add(StepKind::kDrawSegment, {"E″", "C″"}, "E″C″");
    add(StepKind::kParallelThroughPoint, {"U", "E″C″"}, "UR");
    add(StepKind::kMarkIntersection, {"UR", "AC″"}, "R");
  } else {
    add(StepKind::kRotateSegmentClockwise90, {"A", "E″"}, "E‴");
    add(StepKind::kRotateSegmentClockwise90, {"A", "U"}, "U′");
    add(StepKind::kDrawSegment, {"E‴", "C″"}, "E‴C″");
    add(StepKind::kParallelThroughPoint, {"U′", "E‴C″"}, "U′R");
    add(StepKind::kMarkIntersection, {"U′R", "AU"}, "R");
  }
  t.result_label = "R";
  return t;
}

TraceGeometry evaluate_geometry(const ConstructionTrace& t) { return Evaluator().run(t); }

Point evaluate_trace(const ConstructionTrace& t) {
  TraceGeometry geo = evaluate_geometry(t);
  return geo.points.at(t.result_label);
}

}  // namespace replroot
