#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "replroot/numeric.hpp"

namespace replroot {

/// Malformed polynomial or Gaussian-integer text. position is a 0-based
/// byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DegreeZero : public Error {
 public:
  DegreeZero() : Error("polynomial is constant (degree 0)") {}
};

class LeadingZero : public Error {
 public:
  LeadingZero() : Error("leading coefficient is zero") {}
};

/// p(x) = a0 x^m + a1 x^(m-1) + ... + am with Gaussian-integer coefficients.
class Polynomial {
 public:
  /// Coefficients in descending powers. Throws DegreeZero when fewer than two
  /// are given and LeadingZero when a0 == 0.
  explicit Polynomial(std::vector<GaussInt> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const GaussInt> coeffs() const { return coeffs_; }
  const GaussInt& leading() const { return coeffs_.front(); }
  const GaussInt& operator[](std::size_t k) const { return coeffs_[k]; }

  /// Expression form accepted back by parse_polynomial, e.g. "x^2 - i".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<GaussInt> coeffs_;
};

// Grammar (whitespace insignificant):
//   poly  := term (("+"|"-") term)*
//   term  := coeff? ("x" ("^" uint)?)?        -- at least one of coeff, "x"
//   coeff := uint | "i" | uint "i" | "(" gauss ")"
//   gauss := int (("+"|"-") uint? "i")?  |  "-"? uint? "i"
// or the list form "[" gauss ("," gauss)* "]" giving a0..am.
// A leading sign on the first term is accepted; repeated powers are summed.
Polynomial parse_polynomial(std::string_view text);

/// A single Gaussian-integer literal: "3", "-i", "2-5i", "-1+i".
GaussInt parse_gauss(std::string_view text);

/// |p(z)| by Horner's rule in double precision.
double evaluate_residual(const Polynomial& p, Complex z);

Complex to_complex(const GaussInt& z);

}  // namespace replroot
