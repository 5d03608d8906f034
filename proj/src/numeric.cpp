#include "replroot/numeric.hpp"

#include <cctype>
#include <cmath>

namespace replroot {

namespace mp = boost::multiprecision;

GaussInt& GaussInt::operator+=(const GaussInt& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussInt& GaussInt::operator-=(const GaussInt& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussInt& GaussInt::operator*=(const GaussInt& o) {
  BigInt r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

std::string GaussInt::to_string() const {
  if (im.is_zero()) return to_decimal(re);
  std::string imag;
  if (im == 1) {
    imag = "i";
  } else if (im == -1) {
    imag = "-i";
  } else {
    imag = to_decimal(im) + "i";
  }
  if (re.is_zero()) return imag;
  return to_decimal(re) + (im > 0 ? "+" : "") + imag;
}

GaussRational::GaussRational(GaussInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  BigInt g = mp::gcd(mp::gcd(mp::abs(num_.re), mp::abs(num_.im)), den_);
  if (g > 1) {
    num_.re /= g;
    num_.im /= g;
    den_ /= g;
  }
}

Complex GaussRational::to_complex() const {
  return {ratio_to_double(num_.re, den_), ratio_to_double(num_.im, den_)};
}

std::string GaussRational::to_string() const {
  if (den_ == 1) return num_.to_string();
  const bool compound = !num_.re.is_zero() && !num_.im.is_zero();
  std::string top = num_.to_string();
  if (compound) top = "(" + top + ")";
  return top + "/" + to_decimal(den_);
}

GaussRational gauss_divide(const GaussInt& z1, const GaussInt& z2) {
  if (z2.is_zero()) throw DivisionByZero();
  return {z1 * z2.conj(), z2.norm()};
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return 0.0;
  const bool negative = (num < 0) != (den < 0);
  const BigInt a = mp::abs(num);
  const BigInt b = mp::abs(den);
  // Scale so the integer quotient carries ~64 significant bits.
  const long shift = 64 + static_cast<long>(mp::msb(b)) - static_cast<long>(mp::msb(a));
  BigInt q = shift >= 0 ? BigInt(a << shift) / b : a / BigInt(b << -shift);
  const double mag = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -mag : mag;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw Error("malformed integer: '" + text + "'");
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw Error("malformed integer: '" + text + "'");
    }
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace replroot
