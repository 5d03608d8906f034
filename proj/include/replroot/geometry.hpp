#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "replroot/numeric.hpp"

namespace replroot {

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("denominator (u2, v2) is (0, 0)") {}
};

class MalformedTrace : public Error {
 public:
  using Error::Error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  std::string label;
};

// Step semantics, with inputs listed in order:
//   PLACE_POINT            ()                 output at the origin
//   MARK_UNIT              (A)                output = A + unit along OX; fixes the axis
//   DRAW_SEGMENT           (P) + amount       lays |amount| unit segments along OX from P
//                                             (backwards when negative); output is the end
//                          (P, Q)             joins P and Q; output names the line
//   TRANSFER_DISTANCE      (P, Q, S)          output = S + (Q - P), compass transfer along OX
//   ERECT_PERPENDICULAR    (P, line)          line through P perpendicular to line
//   ROTATE_SEGMENT_CLOCKWISE_90 (O, P)        output = P turned a right angle clockwise about O
//   ROTATE_SEGMENT_TO_RAY  (O, P, T)          output on ray OT with |O out| = |OP|
//                          (O, P, F, T)       P turned about O by the angle from ray OF to ray OT
//   PARALLEL_THROUGH_POINT (P, line)          line through P parallel to line
//   MARK_INTERSECTION      (line, line)       output = the crossing point
// Every lay, join and rotation also names the segment input+output (e.g. "AB").
enum class StepKind {
  kPlacePoint,
  kDrawSegment,
  kTransferDistance,
  kErectPerpendicular,
  kRotateSegmentClockwise90,
  kRotateSegmentToRay,
  kParallelThroughPoint,
  kMarkIntersection,
  kMarkUnit,
};

std::string to_string(StepKind kind);
StepKind parse_step_kind(const std::string& text);

struct ConstructionStep {
  StepKind kind = StepKind::kPlacePoint;
  std::vector<std::string> inputs;
  std::string output;
  std::optional<int> color;     // 1..4
  std::optional<double> amount;  // signed unit count for lays

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

struct ConstructionTrace {
  std::vector<ConstructionStep> steps;
  std::string result_label;

  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

/// Ruler-and-compass construction of (u1 - i·v1) / (u2 - i·v2).
///
/// The four counts are laid end to end on the real axis as AB, BC, CD, DE.
/// Rotating BC and a copy of DE by a right angle gives z1 = AC′ and
/// z2 = AE′. AE′ is swung onto the axis (E″, at distance |z2|) and AC′ is
/// turned through the same angle to AC″, so AC″ = z1·|z2|/z2. The parallel to
/// E″C″ through the unit point U then cuts AC″ at R = z1/z2 by similar
/// triangles. When the quotient is real, C″ lies on the axis and that
/// triangle collapses; E″ and U are then turned onto the perpendicular and
/// the same intercept is taken against the axis instead.
ConstructionTrace plan_quotient_construction(const BigInt& u1, const BigInt& v1, const BigInt& u2,
                                             const BigInt& v2);

struct Line {
  double px = 0.0, py = 0.0;  // a point on the line
  double dx = 0.0, dy = 0.0;  // direction, nonzero
};

/// Coordinates of every point and line a trace defines.
struct TraceGeometry {
  std::map<std::string, Point> points;
  std::map<std::string, Line> lines;
};

TraceGeometry evaluate_geometry(const ConstructionTrace& t);

/// Coordinates of the result point.
Point evaluate_trace(const ConstructionTrace& t);

struct SvgOptions {
  int size = 1000;
  double margin = 70.0;
  std::string title;
};

/// Standalone SVG 1.1 document; one <g> layer per step.
std::string render_svg(const ConstructionTrace& t, const SvgOptions& options = {});

}  // namespace replroot
