#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "replroot/matrix.hpp"
#include "replroot/numeric.hpp"
#include "replroot/polynomial.hpp"
#include "replroot/rewrite.hpp"

namespace replroot {

class DegenerateDenominator : public Error {
 public:
  DegenerateDenominator() : Error("denominator pair of the count vector is zero") {}
};

enum class Engine { kCounts, kWords };
enum class Status { kConverged, kMaxIter, kNonConvergent, kDegenerate };

std::string to_string(Engine e);
std::string to_string(Status s);
Engine parse_engine(const std::string& text);
Status parse_status(const std::string& text);

/// R' = alpha·I + beta·R.
struct ShiftParams {
  GaussInt alpha{0};
  GaussInt beta{1};
};

struct SolveOptions {
  double tol = 1e-12;  // relative distance between successive estimates
  std::size_t stable_steps = 3;
  double residual_tol = 1e-8;
  std::size_t max_iter = 200;
  double dedupe_tol = 1e-6;
  Engine engine = Engine::kCounts;
  /// Run exactly this many steps (table reproduction); the status then
  /// reports whether the stopping rule holds at the last step.
  std::optional<std::size_t> fixed_iters;
  /// Start vector; defaults to (1, 0, ..., 0), the single-letter word "0".
  std::optional<CountVector> initial;
  std::size_t length_cap = kDefaultLengthCap;
};

struct IterationRecord {
  std::size_t k = 0;
  CountVector counts;
  std::optional<GaussRational> estimate;  // absent when the denominator pair is zero
};

struct RootEstimate {
  GaussRational value;
  Complex float_value;
  double residual = 0.0;
  std::size_t iterations = 0;
  Status status = Status::kMaxIter;
};

struct SolveResult {
  RootEstimate root;
  std::vector<IterationRecord> records;
  bool cap_exceeded = false;         // words engine stopped at length_cap
  std::size_t peak_word_length = 0;  // words engine only
};

/// Exact M·v.
CountVector step_counts(const RealBlockMatrix& m, const CountVector& v);

/// (u_j - i v_j) / (u_{j+1} - i v_{j+1}) for the 1-based pair index j.
/// Requires a vector of 2m entries with m >= 2 and 1 <= j <= m-1.
GaussRational estimate_root(const CountVector& v, std::size_t j);

/// Produces n(W_0), n(W_1), ... either by matrix products or by literally
/// rewriting and cancelling a word.
class CountIterator {
 public:
  CountIterator(const RealBlockMatrix& m, CountVector start, Engine engine,
                std::size_t length_cap = kDefaultLengthCap);

  const CountVector& counts() const { return counts_; }
  std::size_t step() const { return step_; }
  /// False (and no state change) when the words engine would exceed the cap.
  bool advance();
  std::size_t word_length() const { return word_.size(); }
  std::size_t peak_word_length() const { return peak_length_; }

 private:
  RealBlockMatrix matrix_;
  Engine engine_;
  std::size_t length_cap_;
  std::optional<RuleTable> rules_;
  Word word_;
  CountVector counts_;
  std::size_t step_ = 0;
  std::size_t peak_length_ = 0;
};

/// The complexified, shifted replacement matrix the solver iterates.
RealBlockMatrix iteration_matrix(const Polynomial& p, const ShiftParams& s);

SolveResult solve(const Polynomial& p, const ShiftParams& s, const SolveOptions& opts = {});

struct ScanAttempt {
  ShiftParams shift;
  RootEstimate root;
};

struct ScanResult {
  std::vector<ScanAttempt> attempts;  // every shift, in enumeration order
  std::vector<ScanAttempt> roots;     // distinct converged roots; among duplicates the smallest residual wins
};

/// Solves for every alpha with |re|, |im| <= radius (beta = 1), real part
/// major, and keeps distinct converged roots.
ScanResult scan_shifts(const Polynomial& p, long radius, const SolveOptions& opts = {});

}  // namespace replroot
