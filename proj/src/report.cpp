#include "replroot/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace replroot {

namespace {

Json exact_json(const GaussRational& q) {
  return Json{{"num_re", to_decimal(q.num().re)}, {"num_im", to_decimal(q.num().im)}, {"den", to_decimal(q.den())}};
}

GaussRational exact_from_json(const Json& j) {
  return GaussRational(GaussInt(parse_decimal(j.at("num_re").get<std::string>()),
                                parse_decimal(j.at("num_im").get<std::string>())),
                       parse_decimal(j.at("den").get<std::string>()));
}

Json float_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex float_from_json(const Json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s = buf;
  // No "-0.0000" in tables.
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string ratio_cell(const IterationRecord& rec) {
  if (rec.estimate) return format_complex(rec.estimate->to_complex());
  const bool numerator_zero = rec.counts.size() < 2 || (rec.counts[0].is_zero() && rec.counts[1].is_zero());
  return numerator_zero ? "undefined" : "inf";
}

}  // namespace

RunReport make_report(const std::string& polynomial_text, const ShiftParams& shift, const SolveOptions& options,
                      const SolveResult& solved) {
  return RunReport{polynomial_text, shift, options, solved.records, solved.root};
}

Json to_json(const RunReport& r) {
  Json options{{"tol", r.options.tol},
               {"stable_steps", r.options.stable_steps},
               {"residual_tol", r.options.residual_tol},
               {"max_iter", r.options.max_iter},
               {"fixed_iters", r.options.fixed_iters ? Json(*r.options.fixed_iters) : Json(nullptr)}};
  Json iterations = Json::array();
  for (const auto& rec : r.iterations) {
    Json counts = Json::array();
    for (const auto& c : rec.counts) counts.push_back(to_decimal(c));
    iterations.push_back(Json{{"k", rec.k},
                              {"counts", std::move(counts)},
                              {"estimate", rec.estimate ? exact_json(*rec.estimate) : Json(nullptr)},
                              {"float", rec.estimate ? float_json(rec.estimate->to_complex()) : Json(nullptr)}});
  }
  return Json{{"polynomial", r.polynomial},
              {"alpha", r.shift.alpha.to_string()},
              {"beta", r.shift.beta.to_string()},
              {"engine", to_string(r.options.engine)},
              {"options", std::move(options)},
              {"iterations", std::move(iterations)},
              {"result",
               {{"status", to_string(r.result.status)},
                {"value", exact_json(r.result.value)},
                {"float", float_json(r.result.float_value)},
                {"residual", r.result.residual},
                {"iterations", r.result.iterations}}}};
}

RunReport report_from_json(const Json& j) {
  RunReport r;
  r.polynomial = j.at("polynomial").get<std::string>();
  r.shift.alpha = parse_gauss(j.at("alpha").get<std::string>());
  r.shift.beta = parse_gauss(j.at("beta").get<std::string>());
  r.options.engine = parse_engine(j.at("engine").get<std::string>());
  if (j.contains("options")) {
    const Json& o = j.at("options");
    r.options.tol = o.at("tol").get<double>();
    r.options.stable_steps = o.at("stable_steps").get<std::size_t>();
    r.options.residual_tol = o.at("residual_tol").get<double>();
    r.options.max_iter = o.at("max_iter").get<std::size_t>();
    if (!o.at("fixed_iters").is_null()) r.options.fixed_iters = o.at("fixed_iters").get<std::size_t>();
  }
  for (const Json& row : j.at("iterations")) {
    IterationRecord rec;
    rec.k = row.at("k").get<std::size_t>();
    for (const Json& c : row.at("counts")) rec.counts.push_back(parse_decimal(c.get<std::string>()));
    if (!row.at("estimate").is_null()) rec.estimate = exact_from_json(row.at("estimate"));
    r.iterations.push_back(std::move(rec));
  }
  const Json& res = j.at("result");
  r.result.status = parse_status(res.at("status").get<std::string>());
  r.result.value = exact_from_json(res.at("value"));
  r.result.float_value = float_from_json(res.at("float"));
  r.result.residual = res.at("residual").get<double>();
  r.result.iterations = res.at("iterations").get<std::size_t>();
  return r;
}

Json to_json(const ConstructionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back(Json{{"kind", to_string(s.kind)},
                         {"inputs", s.inputs},
                         {"output", s.output},
                         {"color", s.color ? Json(*s.color) : Json(nullptr)},
                         {"amount", s.amount ? Json(*s.amount) : Json(nullptr)}});
  }
  return Json{{"result_label", trace.result_label}, {"steps", std::move(steps)}};
}

ConstructionTrace trace_from_json(const Json& j) {
  ConstructionTrace t;
  t.result_label = j.at("result_label").get<std::string>();
  for (const Json& s : j.at("steps")) {
    ConstructionStep step;
    step.kind = parse_step_kind(s.at("kind").get<std::string>());
    step.inputs = s.at("inputs").get<std::vector<std::string>>();
    step.output = s.at("output").get<std::string>();
    if (!s.at("color").is_null()) step.color = s.at("color").get<int>();
    if (!s.at("amount").is_null()) step.amount = s.at("amount").get<double>();
    t.steps.push_back(std::move(step));
  }
  return t;
}

std::string format_complex(Complex z, int decimals) {
  const std::string im = fixed(std::abs(z.imag()), decimals);
  const bool negative_im = z.imag() < 0 && im.find_first_not_of("0.") != std::string::npos;
  return fixed(z.real(), decimals) + (negative_im ? " - " : " + ") + im + "i";
}

std::string format_table(const RunReport& r) {
  std::string out;
  out += "polynomial: " + r.polynomial + "\n";
  out += "shift: alpha = " + r.shift.alpha.to_string() + ", beta = " + r.shift.beta.to_string() + "\n";
  out += "engine: " + to_string(r.options.engine) + "\n";

  if (r.iterations.empty()) {
    out += "direct solution, no iterations\n";
  } else {
    const std::size_t columns = r.iterations.front().counts.size();
    std::size_t width = 4;
    for (const auto& rec : r.iterations) {
      for (const auto& c : rec.counts) width = std::max(width, to_decimal(c).size());
    }
    const std::size_t k_width = std::max<std::size_t>(2, std::to_string(r.iterations.back().k).size());
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };

    out += pad("k", k_width);
    for (std::size_t c = 0; c < columns; ++c) out += "  " + pad("n(" + std::to_string(c) + ")", width);
    out += "  ratio\n";
    for (const auto& rec : r.iterations) {
      out += pad(std::to_string(rec.k), k_width);
      for (const auto& c : rec.counts) out += "  " + pad(to_decimal(c), width);
      out += "  " + ratio_cell(rec) + "\n";
    }
  }

  char residual[32];
  std::snprintf(residual, sizeof residual, "%.3e", r.result.residual);
  out += "status: " + to_string(r.result.status) + "\n";
  out += "iterations: " + std::to_string(r.result.iterations) + "\n";
  out += "root: " + format_complex(r.result.float_value) + "\n";
  out += "exact: " + r.result.value.to_string() + "\n";
  out += std::string("residual: ") + residual + "\n";
  return out;
}

std::string format_csv(const RunReport& r) {
  std::string out = "k";
  const std::size_t columns = r.iterations.empty() ? 0 : r.iterations.front().counts.size();
  for (std::size_t c = 0; c < columns; ++c) out += ",n" + std::to_string(c);
  out += ",num_re,num_im,den,re,im\n";
  for (const auto& rec : r.iterations) {
    out += std::to_string(rec.k);
    for (const auto& c : rec.counts) out += "," + to_decimal(c);
    if (rec.estimate) {
      const Complex z = rec.estimate->to_complex();
      char buf[96];
      std::snprintf(buf, sizeof buf, ",%.17g,%.17g", z.real(), z.imag());
      out += "," + to_decimal(rec.estimate->num().re) + "," + to_decimal(rec.estimate->num().im) + "," +
             to_decimal(rec.estimate->den()) + buf;
    } else {
      out += ",,,,,";
    }
    out += "\n";
  }
  return out;
}

}  // namespace replroot
