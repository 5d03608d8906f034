#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <expat.h>

#include <cmath>
#include <random>
#include <set>

#include "replroot/geometry.hpp"

using namespace replroot;

namespace {

ConstructionTrace plan(long long u1, long long v1, long long u2, long long v2) {
  return plan_quotient_construction(BigInt(u1), BigInt(v1), BigInt(u2), BigInt(v2));
}

Complex quotient(long long u1, long long v1, long long u2, long long v2) {
  return Complex(static_cast<double>(u1), -static_cast<double>(v1)) /
         Complex(static_cast<double>(u2), -static_cast<double>(v2));
}

double dist(const Point& p, Complex z) { return std::abs(Complex(p.x, p.y) - z); }

struct XmlSummary {
  bool well_formed = false;
  std::string root;
  std::map<std::string, std::string> root_attrs;
  std::multiset<std::string> texts;
  int layers = 0;
};

struct XmlState {
  XmlSummary* out;
  int depth = 0;
  bool in_text = false;
  std::string text;
};

XmlSummary inspect_xml(const std::string& doc) {
  XmlSummary summary;
  XmlState state{&summary};
  XML_Parser parser = XML_ParserCreate("UTF-8");
  XML_SetUserData(parser, &state);
  XML_SetElementHandler(
      parser,
      [](void* data, const XML_Char* name, const XML_Char** attrs) {
        auto* s = static_cast<XmlState*>(data);
        const std::string tag = name;
        if (s->depth++ == 0) {
          s->out->root = tag;
          for (int k = 0; attrs[k]; k += 2) s->out->root_attrs[attrs[k]] = attrs[k + 1];
        }
        if (tag == "g") {
          for (int k = 0; attrs[k]; k += 2) {
            if (std::string(attrs[k]) == "id" && std::string(attrs[k + 1]).rfind("step-", 0) == 0) ++s->out->layers;
          }
        }
        if (tag == "text") {
          s->in_text = true;
          s->text.clear();
        }
      },
      [](void* data, const XML_Char* name) {
        auto* s = static_cast<XmlState*>(data);
        --s->depth;
        if (std::string(name) == "text") {
          s->in_text = false;
          s->out->texts.insert(s->text);
        }
      });
  XML_SetCharacterDataHandler(parser, [](void* data, const XML_Char* chars, int len) {
    auto* s = static_cast<XmlState*>(data);
    if (s->in_text) s->text.append(chars, static_cast<std::size_t>(len));
  });
  summary.well_formed = XML_Parse(parser, doc.data(), static_cast<int>(doc.size()), 1) == XML_STATUS_OK;
  XML_ParserFree(parser);
  return summary;
}

ConstructionStep step(StepKind kind, std::vector<std::string> inputs, std::string output,
                      std::optional<double> amount = std::nullopt) {
  return {kind, std::move(inputs), std::move(output), std::nullopt, amount};
}

// R = (1, -1): the foot of the perpendicular from A onto BC, B = (2, 0), C = (0, -2).
ConstructionTrace foot_of_perpendicular() {
  ConstructionTrace t;
  t.steps = {
      step(StepKind::kPlacePoint, {}, "A"),
      step(StepKind::kMarkUnit, {"A"}, "U"),
      step(StepKind::kDrawSegment, {"A"}, "B", 2.0),
      step(StepKind::kRotateSegmentClockwise90, {"A", "B"}, "C"),
      step(StepKind::kDrawSegment, {"B", "C"}, "BC"),
      step(StepKind::kErectPerpendicular, {"A", "BC"}, "AR"),
      step(StepKind::kMarkIntersection, {"AR", "BC"}, "R"),
  };
  t.result_label = "R";
  return t;
}

}  // namespace

TEST_CASE("named quotients") {
  CHECK(dist(evaluate_trace(plan(0, -1, 1, 0)), {0, 1}) < 1e-9);
  CHECK(dist(evaluate_trace(plan(8, 0, 0, 8)), {0, 1}) < 1e-9);
  CHECK(dist(evaluate_trace(plan(1, 0, 1, 0)), {1, 0}) < 1e-9);
  CHECK(dist(evaluate_trace(plan(-1, -1, 0, -2)), {0.5, 0.5}) < 1e-9);
  CHECK(dist(evaluate_trace(plan(0, 0, 3, 4)), {0, 0}) < 1e-9);
  CHECK(dist(evaluate_trace(plan(-1352, -560, -560, -1352)), quotient(-1352, -560, -560, -1352)) < 1e-9);
}

TEST_CASE("zero denominator") {
  CHECK_THROWS_AS(plan(1, 2, 0, 0), ZeroDenominator);
}

TEST_CASE("plan shape") {
  const ConstructionTrace t = plan(0, -1, 1, 0);
  CHECK(t.result_label == "R");
  CHECK(t.steps.front().kind == StepKind::kPlacePoint);
  CHECK(t.steps.back().kind == StepKind::kMarkIntersection);
  CHECK(t.steps.back().output == "R");
  std::set<int> colors;
  std::set<std::string> defined;
  for (const auto& s : t.steps) {
    if (s.color) colors.insert(*s.color);
    for (const auto& in : s.inputs) CHECK(defined.count(in) == 1);
    defined.insert(s.output);
  }
  CHECK(colors == std::set<int>{1, 2, 3, 4});
  for (const char* label : {"A", "B", "C", "D", "E", "C′", "D′", "E′", "E″", "C″", "U", "R"}) {
    CHECK(defined.count(label) == 1);
  }
}

TEST_CASE("step kind names round-trip") {
  for (StepKind k : {StepKind::kPlacePoint, StepKind::kDrawSegment, StepKind::kTransferDistance,
                     StepKind::kErectPerpendicular, StepKind::kRotateSegmentClockwise90,
                     StepKind::kRotateSegmentToRay, StepKind::kParallelThroughPoint, StepKind::kMarkIntersection,
                     StepKind::kMarkUnit}) {
    CHECK(parse_step_kind(to_string(k)) == k);
  }
  CHECK(to_string(StepKind::kRotateSegmentClockwise90) == "ROTATE_SEGMENT_CLOCKWISE_90");
  CHECK_THROWS_AS(parse_step_kind("FOLD"), Error);
}

TEST_CASE("perpendicular step") {
  const Point r = evaluate_trace(foot_of_perpendicular());
  CHECK(r.x == doctest::Approx(1.0));
  CHECK(r.y == doctest::Approx(-1.0));
}

TEST_CASE("malformed traces") {
  SUBCASE("dangling label") {
    ConstructionTrace t = foot_of_perpendicular();
    t.steps[4].inputs = {"B", "Z"};
    CHECK_THROWS_AS(evaluate_trace(t), MalformedTrace);
  }
  SUBCASE("parallel lines") {
    ConstructionTrace t = foot_of_perpendicular();
    t.steps[5].kind = StepKind::kParallelThroughPoint;
    CHECK_THROWS_AS(evaluate_trace(t), MalformedTrace);
  }
  SUBCASE("label defined twice") {
    ConstructionTrace t = foot_of_perpendicular();
    t.steps[3].output = "B";
    CHECK_THROWS_AS(evaluate_trace(t), MalformedTrace);
  }
  SUBCASE("result not produced by the last intersection") {
    ConstructionTrace t = foot_of_perpendicular();
    t.result_label = "C";
    CHECK_THROWS_AS(evaluate_trace(t), MalformedTrace);
    t = foot_of_perpendicular();
    t.steps.pop_back();
    t.result_label = "BC";
    CHECK_THROWS_AS(evaluate_trace(t), MalformedTrace);
  }
  SUBCASE("wrong arity") {
    ConstructionTrace t = foot_of_perpendicular();
    t.steps[3].inputs = {"A"};
    CHECK_THROWS_AS(evaluate_trace(t), MalformedTrace);
  }
}

TEST_CASE("property: construction agrees with the exact quotient") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long long> d(-2000, 2000);
  for (int n = 0; n < 500; ++n) {
    const long long u1 = d(rng), v1 = d(rng), u2 = d(rng), v2 = n % 7 == 0 ? 0 : d(rng);
    if (u2 == 0 && v2 == 0) continue;
    const Complex q = quotient(u1, v1, u2, v2);
    CAPTURE(u1);
    CAPTURE(v1);
    CAPTURE(u2);
    CAPTURE(v2);
    REQUIRE(dist(evaluate_trace(plan(u1, v1, u2, v2)), q) <= 1e-9 * std::max(1.0, std::abs(q)));
  }
}

TEST_CASE("property: real quotients take the fallback and still agree") {
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<long long> d(-300, 300);
  for (int n = 0; n < 200; ++n) {
    const long long u2 = d(rng), v2 = d(rng);
    if (u2 == 0 && v2 == 0) continue;
    const long long k = d(rng);
    const Complex q = quotient(k * u2, k * v2, u2, v2);
    REQUIRE(dist(evaluate_trace(plan(k * u2, k * v2, u2, v2)), q) <= 1e-9 * std::max(1.0, std::abs(q)));
  }
}

TEST_CASE("property: rotations keep length, parallels keep direction") {
  std::mt19937_64 rng(63);
  std::uniform_int_distribution<long long> d(-500, 500);
  for (int n = 0; n < 200; ++n) {
    const long long u2 = d(rng), v2 = d(rng);
    if (u2 == 0 && v2 == 0) continue;
    const ConstructionTrace t = plan(d(rng), d(rng), u2, v2);
    const TraceGeometry g = evaluate_geometry(t);
    for (const auto& s : t.steps) {
      if (s.kind == StepKind::kRotateSegmentClockwise90) {
        const Point& o = g.points.at(s.inputs[0]);
        const Point& p = g.points.at(s.inputs[1]);
        const Point& q = g.points.at(s.output);
        const double before = std::hypot(p.x - o.x, p.y - o.y);
        const double after = std::hypot(q.x - o.x, q.y - o.y);
        REQUIRE(std::abs(after - before) <= 1e-12 * std::max(1.0, before));
        REQUIRE(std::abs((p.x - o.x) * (q.x - o.x) + (p.y - o.y) * (q.y - o.y)) <= 1e-12 * std::max(1.0, before * before));
      }
      if (s.kind == StepKind::kParallelThroughPoint) {
        const Line& ref = g.lines.at(s.inputs[1]);
        const Line& par = g.lines.at(s.output);
        const double cross = ref.dx * par.dy - ref.dy * par.dx;
        REQUIRE(std::abs(cross) <= 1e-12 * std::hypot(ref.dx, ref.dy) * std::hypot(par.dx, par.dy));
        const Point& through = g.points.at(s.inputs[0]);
        REQUIRE(std::abs(through.x - par.px) + std::abs(through.y - par.py) <= 1e-12 * std::max(1.0, std::abs(through.x) + std::abs(through.y)));
      }
    }
  }
}

TEST_CASE("property: scaling all four counts leaves the result") {
  std::mt19937_64 rng(64);
  std::uniform_int_distribution<long long> d(-200, 200);
  std::uniform_int_distribution<long long> scale(2, 50);
  for (int n = 0; n < 200; ++n) {
    const long long u1 = d(rng), v1 = d(rng), u2 = d(rng), v2 = d(rng);
    if (u2 == 0 && v2 == 0) continue;
    const long long k = scale(rng);
    const Point a = evaluate_trace(plan(u1, v1, u2, v2));
    const Point b = evaluate_trace(plan(k * u1, k * v1, k * u2, k * v2));
    REQUIRE(dist(b, {a.x, a.y}) <= 1e-9 * std::max(1.0, std::hypot(a.x, a.y)));
  }
}

TEST_CASE("svg output") {
  const ConstructionTrace t = plan(0, -1, 1, 0);
  const std::string doc = render_svg(t);
  const XmlSummary x = inspect_xml(doc);
  REQUIRE(x.well_formed);
  CHECK(x.root == "svg");
  CHECK(x.root_attrs.at("version") == "1.1");
  CHECK(x.layers == static_cast<int>(t.steps.size()));
  for (const char* label : {"A", "B", "C′", "E″", "U", "R"}) {
    CAPTURE(label);
    CHECK(x.texts.count(label) >= 1);
  }
  CHECK(render_svg(t) == doc);
}

TEST_CASE("svg output is well formed for other traces") {
  std::mt19937_64 rng(65);
  std::uniform_int_distribution<long long> d(-40, 40);
  for (int n = 0; n < 30; ++n) {
    const long long u2 = d(rng), v2 = d(rng);
    if (u2 == 0 && v2 == 0) continue;
    const long long u1 = n % 3 == 0 ? 2 * u2 : d(rng);
    const long long v1 = n % 3 == 0 ? 2 * v2 : d(rng);
    REQUIRE(inspect_xml(render_svg(plan(u1, v1, u2, v2), {.title = "a < b & c"})).well_formed);
  }
  REQUIRE(inspect_xml(render_svg(foot_of_perpendicular())).well_formed);
}
