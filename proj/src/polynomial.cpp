#include "replroot/polynomial.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace replroot {

namespace {

constexpr std::size_t kMaxDegree = 100000;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  BigInt read_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_ws();
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, message + ", found " + found);
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// gauss := "-"? (uint "i"? | "i") (("+"|"-") uint? "i")?
GaussInt parse_gauss_at(Cursor& in) {
  const bool negative = in.accept('-');
  GaussInt z;
  bool real_part = false;
  if (in.at_digit()) {
    BigInt n = in.read_uint();
    if (in.accept('i')) {
      z.im = n;
    } else {
      z.re = n;
      real_part = true;
    }
  } else if (in.accept('i')) {
    z.im = 1;
  } else {
    in.fail("expected Gaussian integer");
  }
  if (negative) z = -z;
  if (real_part && (in.peek() == '+' || in.peek() == '-')) {
    const bool minus = in.peek() == '-';
    in.accept(minus ? '-' : '+');
    BigInt n = in.at_digit() ? in.read_uint() : BigInt(1);
    in.expect('i', "'i'");
    z.im = minus ? BigInt(-n) : n;
  }
  return z;
}

std::size_t read_power(Cursor& in) {
  const std::size_t at = in.pos();
  BigInt n = in.read_uint();
  if (n > kMaxDegree) throw ParseError(at, "exponent too large");
  return n.convert_to<std::size_t>();
}

// One term after its sign has been consumed; adds into terms.
void parse_term(Cursor& in, bool negative, std::map<std::size_t, GaussInt>& terms) {
  std::optional<GaussInt> coeff;
  if (in.at_digit()) {
    BigInt n = in.read_uint();
    coeff = in.accept('i') ? GaussInt(0, n) : GaussInt(n);
  } else if (in.peek() == 'i') {
    in.accept('i');
    coeff = GaussInt::i();
  } else if (in.accept('(')) {
    coeff = parse_gauss_at(in);
    in.expect(')', "')'");
  }
  if (coeff) in.accept('*');

  std::size_t power = 0;
  if (in.accept('x')) {
    power = 1;
    if (in.accept('^')) power = read_power(in);
  } else if (!coeff) {
    in.fail("expected coefficient or 'x'");
  }
  GaussInt c = coeff.value_or(GaussInt(1));
  if (negative) c = -c;
  terms[power] += c;
}

Polynomial parse_expression(Cursor& in) {
  std::map<std::size_t, GaussInt> terms;
  bool negative = false;
  if (in.accept('-')) {
    negative = true;
  } else {
    in.accept('+');
  }
  parse_term(in, negative, terms);
  while (!in.at_end()) {
    if (in.accept('+')) {
      parse_term(in, false, terms);
    } else if (in.accept('-')) {
      parse_term(in, true, terms);
    } else {
      in.fail("expected '+', '-' or end of input");
    }
  }
  const std::size_t degree = terms.rbegin()->first;
  std::vector<GaussInt> coeffs(degree + 1);
  for (auto& [power, c] : terms) coeffs[degree - power] = std::move(c);
  return Polynomial(std::move(coeffs));
}

Polynomial parse_list(Cursor& in) {
  std::vector<GaussInt> coeffs;
  in.expect('[', "'['");
  coeffs.push_back(parse_gauss_at(in));
  while (in.accept(',')) coeffs.push_back(parse_gauss_at(in));
  in.expect(']', "']'");
  if (!in.at_end()) in.fail("trailing input after ']'");
  return Polynomial(std::move(coeffs));
}

// Coefficient text as it precedes "x" in a term; empty for unit coefficients.
std::string coeff_prefix(const GaussInt& c, bool has_x) {
  const bool compound = !c.re.is_zero() && !c.im.is_zero();
  if (!has_x) return compound ? "(" + c.to_string() + ")" : c.to_string();
  if (c == GaussInt(1)) return "";
  if (c.im.is_zero()) return to_decimal(c.re);
  if (c.re.is_zero()) return c.im == 1 ? "i" : to_decimal(c.im) + "i";
  return "(" + c.to_string() + ")";
}

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

Polynomial::Polynomial(std::vector<GaussInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw DegreeZero();
  if (coeffs_.front().is_zero()) throw LeadingZero();
}

std::string Polynomial::to_string() const {
  std::string out;
  const std::size_t m = degree();
  for (std::size_t k = 0; k <= m; ++k) {
    GaussInt c = coeffs_[k];
    if (c.is_zero()) continue;
    const std::size_t power = m - k;
    // Pull a sign out when the coefficient is purely real or purely imaginary.
    bool negative = false;
    if ((c.im.is_zero() && c.re < 0) || (c.re.is_zero() && c.im < 0)) {
      negative = true;
      c = -c;
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff_prefix(c, power > 0);
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  Cursor in(text);
  if (in.at_end()) throw ParseError(0, "empty polynomial");
  if (in.peek() == '[') return parse_list(in);
  return parse_expression(in);
}

GaussInt parse_gauss(std::string_view text) {
  Cursor in(text);
  GaussInt z = parse_gauss_at(in);
  if (!in.at_end()) in.fail("trailing input after Gaussian integer");
  return z;
}

Complex to_complex(const GaussInt& z) {
  return {z.re.convert_to<double>(), z.im.convert_to<double>()};
}

double evaluate_residual(const Polynomial& p, Complex z) {
  Complex acc{0.0, 0.0};
  for (const auto& c : p.coeffs()) acc = acc * z + to_complex(c);
  return std::abs(acc);
}

}  // namespace replroot
