#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "replroot/numeric.hpp"
#include "replroot/polynomial.hpp"

namespace replroot {

class ZeroBeta : public Error {
 public:
  ZeroBeta() : Error("shift parameter beta must be nonzero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Square row-major matrix over T.
template <class T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    check_same(a, b);
    SquareMatrix out(a.dim_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    check_same(a, b);
    SquareMatrix out(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const T& lhs = a(r, k);
        for (std::size_t c = 0; c < a.dim_; ++c) out(r, c) += lhs * b(k, c);
      }
    }
    return out;
  }

 private:
  static void check_same(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("matrix dimensions differ");
  }

  std::size_t dim_;
  std::vector<T> entries_;
};

/// m×m Gaussian-integer matrix: the companion-style replacement matrix of a
/// polynomial, or a spectral shift of it.
using ReplacementMatrix = SquareMatrix<GaussInt>;

/// 2m×2m integer matrix in which every complex entry a+ib of a
/// ReplacementMatrix occupies the block [[a, b], [-b, a]].
using RealBlockMatrix = SquareMatrix<BigInt>;

/// Row 0 holds -a1 .. -am, the subdiagonal holds a0, everything else is 0.
/// Eigenvalues are a0·r for the roots r of p, with eigenvectors
/// (r^(m-1), ..., r, 1).
ReplacementMatrix companion(const Polynomial& p);

/// alpha·I + beta·R. Eigenvalues move to alpha + beta·a0·r.
ReplacementMatrix shift(const ReplacementMatrix& r, const GaussInt& alpha, const GaussInt& beta);

ReplacementMatrix identity_matrix(std::size_t dim);

RealBlockMatrix complexify(const ReplacementMatrix& r);

/// True when every 2×2 block has the [[a, b], [-b, a]] shape.
bool has_block_structure(const RealBlockMatrix& m);

std::string to_string(const RealBlockMatrix& m);
std::string to_string(const ReplacementMatrix& m);

}  // namespace replroot
