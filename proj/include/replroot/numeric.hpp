#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace replroot {

/// Signed integer of unbounded magnitude. Symbol counts grow geometrically
/// with the iteration index, so nothing downstream uses fixed-width ints.
using BigInt = boost::multiprecision::cpp_int;

using Complex = std::complex<double>;

/// Base class for every error this library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero Gaussian integer") {}
};

/// Complex number with integer real and imaginary parts.
struct GaussInt {
  BigInt re;
  BigInt im;

  GaussInt() = default;
  GaussInt(BigInt r) : re(std::move(r)) {}  // NOLINT: implicit by design of the algebra
  GaussInt(long long r) : re(r) {}          // NOLINT
  GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

  static GaussInt i() { return {0, 1}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussInt conj() const { return {re, -im}; }
  /// re² + im²
  BigInt norm() const { return re * re + im * im; }

  GaussInt operator-() const { return {-re, -im}; }
  GaussInt& operator+=(const GaussInt& o);
  GaussInt& operator-=(const GaussInt& o);
  GaussInt& operator*=(const GaussInt& o);

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// "3", "-i", "2+5i", "-1-i"; parseable by parse_gauss().
  std::string to_string() const;
};

/// Exact quotient of Gaussian integers, kept in canonical form:
/// den > 0 and gcd(num.re, num.im, den) == 1.
class GaussRational {
 public:
  GaussRational() : den_(1) {}
  GaussRational(GaussInt num, BigInt den);  // reduces; throws DivisionByZero if den == 0

  const GaussInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Complex to_complex() const;
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend GaussRational operator*(const GaussRational& a, const GaussInt& z) {
    return {a.num_ * z, a.den_};
  }

  /// "i", "(1+i)/2", "-3/4"
  std::string to_string() const;

 private:
  GaussInt num_;
  BigInt den_;
};

/// z1 / z2 = z1·conj(z2) / |z2|², reduced. Throws DivisionByZero on z2 == 0.
GaussRational gauss_divide(const GaussInt& z1, const GaussInt& z2);

/// Nearest double to an arbitrarily large num/den. Components whose true value
/// exceeds the double range come back infinite; that scale is unsupported.
double ratio_to_double(const BigInt& num, const BigInt& den);

inline Complex to_float(const GaussRational& q) { return q.to_complex(); }

/// Decimal text of a BigInt (used in every serialized form).
std::string to_decimal(const BigInt& v);
BigInt parse_decimal(const std::string& text);  // throws Error on malformed input

}  // namespace replroot
