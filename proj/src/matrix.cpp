#include "replroot/matrix.hpp"

namespace replroot {

ReplacementMatrix companion(const Polynomial& p) {
  const std::size_t m = p.degree();
  ReplacementMatrix r(m);
  for (std::size_t col = 0; col < m; ++col) r(0, col) = -p[col + 1];
  for (std::size_t row = 1; row < m; ++row) r(row, row - 1) = p.leading();
  return r;
}

ReplacementMatrix identity_matrix(std::size_t dim) {
  ReplacementMatrix out(dim);
  for (std::size_t k = 0; k < dim; ++k) out(k, k) = 1;
  return out;
}

ReplacementMatrix shift(const ReplacementMatrix& r, const GaussInt& alpha, const GaussInt& beta) {
  if (beta.is_zero()) throw ZeroBeta();
  ReplacementMatrix out(r.dim());
  for (std::size_t row = 0; row < r.dim(); ++row) {
    for (std::size_t col = 0; col < r.dim(); ++col) {
      out(row, col) = beta * r(row, col);
      if (row == col) out(row, col) += alpha;
    }
  }
  return out;
}

RealBlockMatrix complexify(const ReplacementMatrix& r) {
  RealBlockMatrix out(2 * r.dim());
  for (std::size_t row = 0; row < r.dim(); ++row) {
    for (std::size_t col = 0; col < r.dim(); ++col) {
      const GaussInt& z = r(row, col);
      out(2 * row, 2 * col) = z.re;
      out(2 * row, 2 * col + 1) = z.im;
      out(2 * row + 1, 2 * col) = -z.im;
      out(2 * row + 1, 2 * col + 1) = z.re;
    }
  }
  return out;
}

bool has_block_structure(const RealBlockMatrix& m) {
  if (m.dim() % 2 != 0) return false;
  for (std::size_t row = 0; row < m.dim(); row += 2) {
    for (std::size_t col = 0; col < m.dim(); col += 2) {
      if (m(row, col) != m(row + 1, col + 1)) return false;
      if (m(row, col + 1) != -m(row + 1, col)) return false;
    }
  }
  return true;
}

namespace {

template <class T, class F>
std::string render_rows(const SquareMatrix<T>& m, F&& cell) {
  std::string out = "[";
  for (std::size_t row = 0; row < m.dim(); ++row) {
    out += row ? ", [" : "[";
    for (std::size_t col = 0; col < m.dim(); ++col) {
      if (col) out += ", ";
      out += cell(m(row, col));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string to_string(const RealBlockMatrix& m) {
  return render_rows(m, [](const BigInt& v) { return to_decimal(v); });
}

std::string to_string(const ReplacementMatrix& m) {
  return render_rows(m, [](const GaussInt& v) { return v.to_string(); });
}

}  // namespace replroot
