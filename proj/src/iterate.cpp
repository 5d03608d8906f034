#include "replroot/iterate.hpp"

#include <algorithm>
#include <future>

namespace replroot {

namespace {

bool all_zero(const CountVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x.is_zero(); });
}

double relative_scale(Complex z) { return std::max(1.0, std::abs(z)); }

// Tracks the defined estimates of a run and evaluates the stopping rule.
class ConvergenceTracker {
 public:
  ConvergenceTracker(const Polynomial& p, const SolveOptions& opts) : p_(p), opts_(opts) {}

  void add(const GaussRational& estimate) {
    const Complex z = estimate.to_complex();
    if (!history_.empty()) {
      const double delta = std::abs(z - history_.back());
      stable_ = delta <= opts_.tol * relative_scale(z) ? stable_ + 1 : 0;
    }
    history_.push_back(z);
    last_ = estimate;
    residual_ = evaluate_residual(p_, z);
  }

  bool has_estimate() const { return last_.has_value(); }
  const GaussRational& last() const { return *last_; }
  double residual() const { return residual_; }

  bool converged() const {
    return has_estimate() && stable_ >= opts_.stable_steps && residual_ <= opts_.residual_tol;
  }

  // Either the last few estimates keep moving by far more than tol (tied
  // dominant moduli), or they have settled on a point that is not a root.
  bool stalled() const {
    constexpr std::size_t kWindow = 8;
    if (history_.size() < kWindow) return false;
    const auto first = history_.end() - kWindow;
    double spread = 0.0;
    for (auto a = first; a != history_.end(); ++a) {
      for (auto b = a + 1; b != history_.end(); ++b) spread = std::max(spread, std::abs(*a - *b));
    }
    if (spread > 100.0 * opts_.tol * relative_scale(history_.back())) return true;
    return residual_ > opts_.residual_tol;
  }

 private:
  const Polynomial& p_;
  const SolveOptions& opts_;
  std::vector<Complex> history_;
  std::optional<GaussRational> last_;
  double residual_ = 0.0;
  std::size_t stable_ = 0;
};

}  // namespace

std::string to_string(Engine e) { return e == Engine::kCounts ? "counts" : "words"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::kConverged:
      return "CONVERGED";
    case Status::kMaxIter:
      return "MAX_ITER";
    case Status::kNonConvergent:
      return "NON_CONVERGENT";
    case Status::kDegenerate:
      return "DEGENERATE";
  }
  return "?";
}

Engine parse_engine(const std::string& text) {
  if (text == "counts") return Engine::kCounts;
  if (text == "words") return Engine::kWords;
  throw Error("unknown engine '" + text + "' (expected counts or words)");
}

Status parse_status(const std::string& text) {
  for (Status s : {Status::kConverged, Status::kMaxIter, Status::kNonConvergent, Status::kDegenerate}) {
    if (to_string(s) == text) return s;
  }
  throw Error("unknown status '" + text + "'");
}

CountVector step_counts(const RealBlockMatrix& m, const CountVector& v) {
  if (v.size() != m.dim()) {
    throw DimensionMismatch("count vector has " + std::to_string(v.size()) + " entries, matrix is " +
                            std::to_string(m.dim()) + "x" + std::to_string(m.dim()));
  }
  CountVector out(v.size());
  for (std::size_t row = 0; row < m.dim(); ++row) {
    BigInt acc = 0;
    for (std::size_t col = 0; col < m.dim(); ++col) {
      if (!v[col].is_zero()) acc += m(row, col) * v[col];
    }
    out[row] = std::move(acc);
  }
  return out;
}

GaussRational estimate_root(const CountVector& v, std::size_t j) {
  if (v.size() % 2 != 0 || v.size() < 4) throw DimensionMismatch("estimate needs 2m entries with m >= 2");
  const std::size_t m = v.size() / 2;
  if (j < 1 || j > m - 1) throw DimensionMismatch("pair index out of range");
  const GaussInt numerator{v[2 * j - 2], -v[2 * j - 1]};
  const GaussInt denominator{v[2 * j], -v[2 * j + 1]};
  if (denominator.is_zero()) throw DegenerateDenominator();
  return gauss_divide(numerator, denominator);
}

CountIterator::CountIterator(const RealBlockMatrix& m, CountVector start, Engine engine, std::size_t length_cap)
    : matrix_(m), engine_(engine), length_cap_(length_cap), counts_(std::move(start)) {
  if (counts_.size() != matrix_.dim()) throw DimensionMismatch("start vector does not match matrix");
  if (engine_ == Engine::kWords) {
    rules_ = derive_rules(matrix_);
    word_ = word_from_counts(counts_);
    peak_length_ = word_.size();
  }
}

bool CountIterator::advance() {
  if (engine_ == Engine::kCounts) {
    counts_ = step_counts(matrix_, counts_);
  } else {
    auto next = rewrite_word_capped(*rules_, word_, length_cap_);
    if (!next) return false;
    peak_length_ = std::max(peak_length_, next->size());
    word_ = cancel_conjugates(*next, rules_->base_size());
    counts_ = count(word_, rules_->base_size());
  }
  ++step_;
  return true;
}

RealBlockMatrix iteration_matrix(const Polynomial& p, const ShiftParams& s) {
  return complexify(shift(companion(p), s.alpha, s.beta));
}

SolveResult solve(const Polynomial& p, const ShiftParams& s, const SolveOptions& opts) {
  if (s.beta.is_zero()) throw ZeroBeta();
  SolveResult out;
  const std::size_t m = p.degree();
  if (m == 1) {
    // The root of a0 x + a1 needs no iteration.
    const GaussRational root = gauss_divide(-p[1], p[0]);
    out.root = {root, root.to_complex(), evaluate_residual(p, root.to_complex()), 0, Status::kConverged};
    return out;
  }

  CountVector start(2 * m);
  start[0] = 1;
  if (opts.initial) start = *opts.initial;
  CountIterator it(iteration_matrix(p, s), std::move(start), opts.engine, opts.length_cap);
  ConvergenceTracker tracker(p, opts);

  auto record = [&] {
    IterationRecord rec{it.step(), it.counts(), std::nullopt};
    if (!all_zero(rec.counts)) {
      try {
        rec.estimate = estimate_root(rec.counts, 1);
        tracker.add(*rec.estimate);
      } catch (const DegenerateDenominator&) {
      }
    }
    out.records.push_back(std::move(rec));
  };

  record();
  const std::size_t limit = opts.fixed_iters.value_or(opts.max_iter);
  Status status = Status::kMaxIter;
  while (true) {
    if (all_zero(it.counts())) {
      status = Status::kDegenerate;
      break;
    }
    if (!opts.fixed_iters && tracker.converged()) {
      status = Status::kConverged;
      break;
    }
    if (!opts.fixed_iters && it.step() >= opts.max_iter / 2 && tracker.stalled()) {
      status = Status::kNonConvergent;
      break;
    }
    if (it.step() >= limit) {
      status = tracker.converged() ? Status::kConverged : Status::kMaxIter;
      break;
    }
    if (!it.advance()) {
      out.cap_exceeded = true;
      status = Status::kMaxIter;
      break;
    }
    record();
  }
  if (!tracker.has_estimate()) status = Status::kDegenerate;

  out.peak_word_length = it.peak_word_length();
  out.root.iterations = it.step();
  out.root.status = status;
  if (tracker.has_estimate()) {
    out.root.value = tracker.last();
    out.root.float_value = tracker.last().to_complex();
    out.root.residual = tracker.residual();
  } else {
    out.root.float_value = {0.0, 0.0};
    out.root.residual = evaluate_residual(p, out.root.float_value);
  }
  return out;
}

ScanResult scan_shifts(const Polynomial& p, long radius, const SolveOptions& opts) {
  if (radius < 0) throw Error("scan radius must be non-negative");
  std::vector<ShiftParams> shifts;
  for (long re = -radius; re <= radius; ++re) {
    for (long im = -radius; im <= radius; ++im) shifts.push_back({GaussInt(re, im), GaussInt(1)});
  }

  std::vector<std::future<RootEstimate>> pending;
  pending.reserve(shifts.size());
  for (const ShiftParams& s : shifts) {
    pending.push_back(std::async(std::launch::async, [&p, s, &opts] { return solve(p, s, opts).root; }));
  }

  ScanResult result;
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    result.attempts.push_back({shifts[k], pending[k].get()});
    const ScanAttempt& attempt = result.attempts.back();
    if (attempt.root.status != Status::kConverged || attempt.root.residual > opts.residual_tol) continue;
    const auto seen = std::find_if(result.roots.begin(), result.roots.end(), [&](const ScanAttempt& known) {
      return std::abs(known.root.float_value - attempt.root.float_value) <= opts.dedupe_tol;
    });
    if (seen == result.roots.end()) {
      result.roots.push_back(attempt);
    } else if (attempt.root.residual < seen->root.residual) {
      *seen = attempt;
    }
  }
  return result;
}

}  // namespace replroot
