#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "replroot/cli.hpp"
#include "replroot/report.hpp"

using namespace replroot;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("replroot-test-" + name);
}

}  // namespace

TEST_CASE("text table matches the checked-in golden file") {
  // Row k=2 reads (-1, -1, 0, -2). A hand copy of this table with +2 in the
  // last column would not reproduce the ratio (1+i)/2 shown on the same row.
  const Run r = run({"solve", "x^2 - i", "--alpha", "i", "--iters", "13", "--format", "text"});
  CHECK(r.out == slurp(std::filesystem::path(REPLROOT_GOLDEN_DIR) / "solve_x2_minus_i.txt"));
  CHECK(r.out.find("13  -1352   -560   -560  -1352  0.7071 + 0.7071i") != std::string::npos);
  // Thirteen steps do not meet the default stopping rule.
  CHECK(r.code == kExitNoResult);
}

TEST_CASE("four-step table of x^2 + 1") {
  const Run r = run({"solve", "x^2 + 1", "--alpha", "i", "--iters", "4"});
  CHECK(r.code == kExitOk);
  for (const std::string row : {" 0     1     0     0     0  inf", " 1     0    -1     1     0  0.0000 + 1.0000i",
                                 " 2    -2     0     0    -2  0.0000 + 1.0000i", " 3     0     4    -4     0  0.0000 + 1.0000i",
                                 " 4     8     0     0     8  0.0000 + 1.0000i"}) {
    CAPTURE(row);
    CHECK(r.out.find(row) != std::string::npos);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"solve", "x - 7"}).code == kExitOk);
  CHECK(run({"solve", "x - 7"}).out.find("exact: 7\n") != std::string::npos);
  CHECK(run({"solve", "x^2 + 1", "--alpha", "-i"}).code == kExitOk);
  CHECK(run({"solve", "x^2 - 2"}).code == kExitNoResult);
  CHECK(run({"solve", "x^2 - x - 1", "--max-iter", "5"}).code == kExitNoResult);
  CHECK(run({"solve", "x^^2"}).code == kExitUsage);
  CHECK(run({"solve", "7"}).code == kExitUsage);
  CHECK(run({"solve", "x^2 + 1", "--beta", "0"}).code == kExitUsage);
  CHECK(run({"solve", "x^2 + 1", "--alpha", "q"}).code == kExitUsage);
  CHECK(run({"solve", "x^2 + 1", "--bogus"}).code == kExitUsage);
  CHECK(run({"solve", "x^2 + 1", "--engine", "abacus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  const Run bad = run({"solve", "x^2 + $"});
  CHECK(bad.err.find("error:") == 0);
  CHECK(bad.out.empty());
}

TEST_CASE("json report round-trips byte for byte") {
  const Run r = run({"solve", "x^2 - i", "--alpha", "i", "--iters", "13", "--format", "json"});
  const Json parsed = Json::parse(r.out);
  CHECK(parsed["iterations"][13]["counts"][0] == "-1352");
  CHECK(parsed["iterations"][0]["estimate"].is_null());
  CHECK(parsed["result"]["status"] == "MAX_ITER");
  const RunReport report = report_from_json(parsed);
  CHECK(to_json(report).dump(2) + "\n" == r.out);
  CHECK(to_json(report_from_json(to_json(report))) == to_json(report));
}

TEST_CASE("json keeps counts beyond 64 bits") {
  const Run r = run({"solve", "x^2 - 3x + 2", "--alpha", "5", "--iters", "60", "--format", "json"});
  const Json parsed = Json::parse(r.out);
  const std::string big = parsed["iterations"][60]["counts"][0];
  CHECK(big.size() > 20);
  CHECK(to_json(report_from_json(parsed)).dump(2) + "\n" == r.out);
}

TEST_CASE("csv output") {
  const Run r = run({"solve", "x^2 + 1", "--alpha", "i", "--iters", "1", "--format", "csv"});
  CHECK(r.out == "k,n0,n1,n2,n3,num_re,num_im,den,re,im\n0,1,0,0,0,,,,,\n1,0,-1,1,0,0,1,1,0,1\n");
}

TEST_CASE("word listings") {
  const Run first = run({"trace", "x^2 + 1", "--alpha", "i", "-k", "4"});
  CHECK(first.code == kExitOk);
  CHECK(first.out.find("words:\n0\n1~2\n0~3~0~3~\n12~12~12~12~\n0303030303030303\n") != std::string::npos);
  CHECK(first.out.find("rules:\n0 -> 1~2\n") == 0);

  const Run second = run({"trace", "x^2 - i", "--alpha", "i", "-k", "2"});
  CHECK(second.out.find("words:\n0\n1~2\n0~3~1~3~\n") != std::string::npos);

  const Run none = run({"trace", "x^2 + 1", "--alpha", "i", "-k", "0"});
  CHECK(none.out.substr(none.out.find("words:\n")) == "words:\n0\n");

  const Run capped = run({"trace", "x^2 + 1", "--alpha", "i", "-k", "30", "--cap", "100"});
  CHECK(capped.code == kExitNoResult);
  CHECK(capped.err.find("length cap") != std::string::npos);
  CHECK(capped.out.find("12~12~12~12~") != std::string::npos);
}

TEST_CASE("construct from counts") {
  const Run r = run({"construct", "--counts", "0,-1,1,0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("construction: R = (0.0000000000, 1.0000000000)") != std::string::npos);
  CHECK(run({"construct", "--counts", "1,0,1,0"}).out.find("R = (1.0000000000, 0.0000000000)") != std::string::npos);

  const Run zero = run({"construct", "--counts", "3,4,0,0"});
  CHECK(zero.code == kExitNoResult);
  CHECK(zero.err.find("error:") == 0);
  CHECK(run({"construct", "--counts", "1,2,3"}).code == kExitUsage);
  CHECK(run({"construct"}).code == kExitUsage);
}

TEST_CASE("construct writes the drawing for a solve") {
  const auto path = temp_file("x2-minus-i.svg");
  std::filesystem::remove(path);
  const Run r = run({"construct", "x^2 - i", "--alpha", "i", "--iters", "13", "-o", path.string()});
  CHECK(r.code == kExitOk);
  double x = 0, y = 0;
  const auto at = r.out.find("construction: R = (");
  REQUIRE(at != std::string::npos);
  REQUIRE(std::sscanf(r.out.c_str() + at, "construction: R = (%lf, %lf)", &x, &y) == 2);
  CHECK(std::abs(x - 0.7071) < 1e-4);
  CHECK(std::abs(y - 0.7071) < 1e-4);
  const std::string svg = slurp(path);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("construct documents on standard output stay clean") {
  const Run svg = run({"construct", "--counts", "0,-1,1,0", "--format", "svg"});
  CHECK(svg.out.rfind("<?xml", 0) == 0);
  CHECK(svg.err.find("construction: R") != std::string::npos);

  const Run json = run({"construct", "--counts", "-1,-1,0,-2", "--format", "json"});
  const Json parsed = Json::parse(json.out);
  const ConstructionTrace trace = trace_from_json(parsed);
  CHECK(trace.result_label == "R");
  const Point r = evaluate_trace(trace);
  CHECK(std::abs(r.x - 0.5) < 1e-9);
  CHECK(std::abs(r.y - 0.5) < 1e-9);
  CHECK(to_json(trace).dump(2) + "\n" == json.out);
}

TEST_CASE("scan lists both roots") {
  const Run r = run({"scan", "x^2 + 1", "--radius", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("distinct roots: 2") != std::string::npos);
  CHECK(r.out.find("0.0000000000 + 1.0000000000i") != std::string::npos);
  CHECK(r.out.find("0.0000000000 - 1.0000000000i") != std::string::npos);

  const Run real = run({"scan", "x^2 - 3x + 2", "--radius", "2", "--format", "json"});
  const Json parsed = Json::parse(real.out);
  REQUIRE(parsed["roots"].size() == 2);
  std::vector<double> found{parsed["roots"][0]["float"]["re"], parsed["roots"][1]["float"]["re"]};
  std::sort(found.begin(), found.end());
  CHECK(std::abs(found[0] - 1.0) < 1e-9);
  CHECK(std::abs(found[1] - 2.0) < 1e-9);

  CHECK(run({"scan", "x^2 - 2", "--radius", "0"}).code == kExitNoResult);
}

TEST_CASE("bench compares the engines") {
  const Run r = run({"bench", "x^2 - i", "--alpha", "i", "-k", "13", "--engines", "words,counts"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("engines agree: yes") != std::string::npos);
  const std::string final_counts = "counts at k=13: (-1352, -560, -560, -1352)";
  const auto first = r.out.find(final_counts);
  REQUIRE(first != std::string::npos);
  CHECK(r.out.find(final_counts, first + 1) != std::string::npos);

  CHECK(run({"bench", "x^2 - i", "--alpha", "i", "-k", "13", "--cap", "50"}).code == kExitNoResult);
}

TEST_CASE("report formatting helpers") {
  CHECK(format_complex(Complex(M_SQRT1_2, M_SQRT1_2)) == "0.7071 + 0.7071i");
  CHECK(format_complex(Complex(-0.0, -1.0)) == "0.0000 - 1.0000i");
  CHECK(format_complex(Complex(-1e-9, 2.0)) == "0.0000 + 2.0000i");
  CHECK(format_complex(Complex(1.5, 0.0), 2) == "1.50 + 0.00i");
}
