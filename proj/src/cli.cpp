#include "replroot/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "replroot/geometry.hpp"
#include "replroot/iterate.hpp"
#include "replroot/polynomial.hpp"
#include "replroot/report.hpp"
#include "replroot/rewrite.hpp"

namespace replroot {

namespace {

/// Flags shared by the commands that run an iteration.
struct IterationFlags {
  std::string alpha = "0";
  std::string beta = "1";
  std::optional<std::size_t> iters;
  double tol = SolveOptions{}.tol;
  std::size_t stable_steps = SolveOptions{}.stable_steps;
  double residual_tol = SolveOptions{}.residual_tol;
  std::size_t max_iter = SolveOptions{}.max_iter;
  double dedupe_tol = SolveOptions{}.dedupe_tol;
  std::string engine = "counts";
  std::size_t cap = kDefaultLengthCap;
  std::string initial;

  void attach(CLI::App& cmd) {
    cmd.add_option("--alpha", alpha, "shift alpha (Gaussian integer, e.g. i, -1+2i)");
    cmd.add_option("--beta", beta, "shift beta (nonzero Gaussian integer)");
    cmd.add_option("--iters", iters, "run exactly this many steps");
    cmd.add_option("--tol", tol, "relative tolerance between successive estimates");
    cmd.add_option("--stable-steps", stable_steps, "consecutive steps within tol");
    cmd.add_option("--residual-tol", residual_tol, "largest accepted |p(root)|");
    cmd.add_option("--max-iter", max_iter, "iteration limit");
    cmd.add_option("--dedupe-tol", dedupe_tol, "distance below which scan roots coincide");
    cmd.add_option("--engine", engine, "counts or words")->check(CLI::IsMember({"counts", "words"}));
    cmd.add_option("--cap", cap, "word length cap for the words engine");
    cmd.add_option("--initial", initial, "start count vector, comma separated");
  }

  ShiftParams shift() const { return {parse_gauss(alpha), parse_gauss(beta)}; }

  SolveOptions options() const {
    SolveOptions o;
    o.tol = tol;
    o.stable_steps = stable_steps;
    o.residual_tol = residual_tol;
    o.max_iter = max_iter;
    o.dedupe_tol = dedupe_tol;
    o.engine = parse_engine(engine);
    o.fixed_iters = iters;
    o.length_cap = cap;
    if (!initial.empty()) o.initial = parse_count_list(initial);
    return o;
  }

  static CountVector parse_count_list(const std::string& text) {
    CountVector v;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
      v.push_back(parse_decimal(item));
    }
    return v;
  }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

int cmd_solve(const std::string& poly_text, const IterationFlags& flags, const std::string& format,
              const std::string& path, std::ostream& out) {
  const Polynomial p = parse_polynomial(poly_text);
  const SolveOptions opts = flags.options();
  const ShiftParams s = flags.shift();
  const RunReport report = make_report(poly_text, s, opts, solve(p, s, opts));
  if (format == "json") {
    emit(to_json(report).dump(2) + "\n", path, out);
  } else if (format == "csv") {
    emit(format_csv(report), path, out);
  } else {
    emit(format_table(report), path, out);
  }
  return report.result.status == Status::kConverged ? kExitOk : kExitNoResult;
}

int cmd_trace(const std::string& poly_text, const IterationFlags& flags, std::size_t k, const std::string& start,
              const std::string& path, std::ostream& out, std::ostream& err) {
  const Polynomial p = parse_polynomial(poly_text);
  const RuleTable rules = derive_rules(iteration_matrix(p, flags.shift()));
  const WordSequence seq = iterate_words(rules, parse_word(start, rules.base_size()), k, flags.cap);
  std::string text = "rules:\n" + format_rules(rules) + "words:\n";
  for (const Word& w : seq.words) text += format_word(w, rules.base_size()) + "\n";
  emit(text, path, out);
  if (seq.cap_exceeded) {
    err << "error: word " << seq.words.size() << " would exceed the length cap of " << flags.cap
        << " symbols; printed the completed prefix\n";
    return kExitNoResult;
  }
  return kExitOk;
}

int cmd_construct(const std::string& poly_text, const IterationFlags& flags, const std::string& counts_text,
                  const std::string& format, const std::string& path, std::ostream& out, std::ostream& err) {
  CountVector counts;
  if (!counts_text.empty()) {
    counts = IterationFlags::parse_count_list(counts_text);
    if (counts.size() != 4) throw Error("--counts needs exactly four integers u1,v1,u2,v2");
  } else if (!poly_text.empty()) {
    const Polynomial p = parse_polynomial(poly_text);
    if (p.degree() < 2) throw Error("construct needs a polynomial of degree >= 2");
    const SolveResult solved = solve(p, flags.shift(), flags.options());
    counts = solved.records.back().counts;
  } else {
    throw Error("construct needs a polynomial or --counts");
  }

  ConstructionTrace trace;
  try {
    trace = plan_quotient_construction(counts[0], counts[1], counts[2], counts[3]);
  } catch (const ZeroDenominator& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoResult;
  }
  const Point r = evaluate_trace(trace);
  const GaussRational q = gauss_divide({counts[0], -counts[1]}, {counts[2], -counts[3]});

  // A document written to standard output keeps it clean; the summary moves to stderr.
  const bool document = format != "text" || !path.empty();
  std::ostream& summary = document && path.empty() ? err : out;
  char line[160];
  std::snprintf(line, sizeof line, "construction: R = (%.10f, %.10f)\n", r.x, r.y);
  summary << "counts: " << to_decimal(counts[0]) << "," << to_decimal(counts[1]) << "," << to_decimal(counts[2])
          << "," << to_decimal(counts[3]) << "\n";
  summary << line;
  const Complex qf = q.to_complex();
  std::snprintf(line, sizeof line, "quotient:     (%.10f, %.10f)  exact %s\n", qf.real(), qf.imag(),
                q.to_string().c_str());
  summary << line;

  if (format == "json") {
    emit(to_json(trace).dump(2) + "\n", path, out);
  } else if (document) {
    SvgOptions svg;
    svg.title = "Ruler-and-compass division for counts " + to_decimal(counts[0]) + ", " + to_decimal(counts[1]) +
                ", " + to_decimal(counts[2]) + ", " + to_decimal(counts[3]);
    emit(render_svg(trace, svg), path, out);
  }
  if (!path.empty()) out << "wrote " << path << "\n";
  return kExitOk;
}

int cmd_scan(const std::string& poly_text, const IterationFlags& flags, long radius, const std::string& format,
             std::ostream& out) {
  const Polynomial p = parse_polynomial(poly_text);
  const ScanResult scan = scan_shifts(p, radius, flags.options());
  if (format == "json") {
    Json roots = Json::array();
    for (const auto& hit : scan.roots) {
      roots.push_back(Json{{"alpha", hit.shift.alpha.to_string()},
                           {"beta", hit.shift.beta.to_string()},
                           {"status", to_string(hit.root.status)},
                           {"float", {{"re", hit.root.float_value.real()}, {"im", hit.root.float_value.imag()}}},
                           {"residual", hit.root.residual},
                           {"iterations", hit.root.iterations}});
    }
    out << Json{{"polynomial", poly_text}, {"radius", radius}, {"roots", roots}}.dump(2) << "\n";
  } else {
    out << "polynomial: " << poly_text << "\n";
    out << "shifts tried: " << scan.attempts.size() << "\n";
    out << "distinct roots: " << scan.roots.size() << "\n";
    for (const auto& hit : scan.roots) {
      char residual[32];
      std::snprintf(residual, sizeof residual, "%.3e", hit.root.residual);
      out << "  " << format_complex(hit.root.float_value, 10) << "  residual " << residual << "  alpha "
          << hit.shift.alpha.to_string() << "  iterations " << hit.root.iterations << "\n";
    }
  }
  return scan.roots.empty() ? kExitNoResult : kExitOk;
}

int cmd_bench(const std::string& poly_text, const IterationFlags& flags, std::size_t k, const std::string& engines,
              std::ostream& out) {
  const Polynomial p = parse_polynomial(poly_text);
  const RealBlockMatrix m = iteration_matrix(p, flags.shift());
  CountVector start(m.dim());
  start[0] = 1;
  if (!flags.initial.empty()) start = IterationFlags::parse_count_list(flags.initial);

  std::vector<std::string> names;
  std::stringstream list(engines);
  for (std::string name; std::getline(list, name, ',');) names.push_back(name);

  bool complete = true;
  std::vector<std::vector<CountVector>> trajectories;
  for (const std::string& name : names) {
    CountIterator it(m, start, parse_engine(name), flags.cap);
    std::vector<CountVector> trajectory{it.counts()};
    const auto begin = std::chrono::steady_clock::now();
    while (it.step() < k && it.advance()) trajectory.push_back(it.counts());
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    std::size_t digits = 0;
    for (const auto& c : it.counts()) digits = std::max(digits, to_decimal(abs(c)).size());

    char line[200];
    std::snprintf(line, sizeof line, "%-7s steps %zu  total %.6f s  per-step %.3e s  peak word %zu  max digits %zu\n",
                  name.c_str(), it.step(), seconds, it.step() ? seconds / static_cast<double>(it.step()) : 0.0,
                  it.peak_word_length(), digits);
    out << line;
    std::string final_counts;
    for (const auto& c : it.counts()) final_counts += (final_counts.empty() ? "" : ", ") + to_decimal(c);
    out << "        counts at k=" << it.step() << ": (" << final_counts << ")\n";
    if (it.step() < k) {
      out << "        stopped early: word length cap " << flags.cap << " reached\n";
      complete = false;
    }
    trajectories.push_back(std::move(trajectory));
  }
  bool agree = true;
  for (const auto& t : trajectories) {
    const std::size_t common = std::min(t.size(), trajectories.front().size());
    agree = agree && std::equal(t.begin(), t.begin() + static_cast<long>(common), trajectories.front().begin());
  }
  out << "engines agree: " << (agree ? "yes" : "NO") << "\n";
  return agree && complete ? kExitOk : kExitNoResult;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial roots by sequence replacement and symbol counting"};
  app.require_subcommand(1);

  IterationFlags flags;
  std::string poly;
  std::string format = "text";
  std::string path;
  std::string counts;
  std::string start = "0";
  std::string engines = "words,counts";
  std::size_t k = 4;
  long radius = 2;

  auto* solve_cmd = app.add_subcommand("solve", "iterate count vectors and estimate the dominant root");
  solve_cmd->add_option("polynomial", poly, "e.g. \"x^2 - i\" or \"[1, 0, -i]\"")->required();
  flags.attach(*solve_cmd);
  solve_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  solve_cmd->add_option("-o", path, "output file");

  auto* trace_cmd = app.add_subcommand("trace", "print replacement rules and the word sequence");
  trace_cmd->add_option("polynomial", poly)->required();
  flags.attach(*trace_cmd);
  trace_cmd->add_option("-k", k, "number of replacement steps");
  trace_cmd->add_option("--word", start, "initial word");
  trace_cmd->add_option("-o", path, "output file");

  auto* construct_cmd = app.add_subcommand("construct", "ruler-and-compass division of the final estimate");
  construct_cmd->add_option("polynomial", poly);
  flags.attach(*construct_cmd);
  construct_cmd->add_option("--counts", counts, "u1,v1,u2,v2");
  construct_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "svg", "json"}));
  construct_cmd->add_option("-o", path, "SVG (or JSON trace) output file");

  auto* scan_cmd = app.add_subcommand("scan", "solve over a box of shifts and list distinct roots");
  scan_cmd->add_option("polynomial", poly)->required();
  flags.attach(*scan_cmd);
  scan_cmd->add_option("--radius", radius, "shift box half-width")->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* bench_cmd = app.add_subcommand("bench", "time the words and counts engines");
  bench_cmd->add_option("polynomial", poly)->required();
  flags.attach(*bench_cmd);
  bench_cmd->add_option("-k", k, "target step");
  bench_cmd->add_option("--engines", engines, "comma separated: words,counts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(poly, flags, format, path, out);
    if (trace_cmd->parsed()) return cmd_trace(poly, flags, k, start, path, out, err);
    if (construct_cmd->parsed()) return cmd_construct(poly, flags, counts, format, path, out, err);
    if (scan_cmd->parsed()) return cmd_scan(poly, flags, radius, format, out);
    if (bench_cmd->parsed()) return cmd_bench(poly, flags, k, engines, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace replroot
