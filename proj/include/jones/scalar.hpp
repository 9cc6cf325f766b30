#ifndef JONES_SCALAR_HPP
#define JONES_SCALAR_HPP

// Evaluation targets: exact rationals over arbitrary-precision integers, or
// finite complex doubles. Arithmetic between the two degrades to complex.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "jones/errors.hpp"

namespace jones {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Complex checked_finite(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("non-finite complex value");
  return z;
}

/// Exact square root of a nonnegative rational, if it is a rational square.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational q) : value_(std::move(q)) {}  // NOLINT(implicit)
  Scalar(Integer z) : value_(Rational(std::move(z))) {}  // NOLINT(implicit)
  Scalar(int z) : value_(Rational(z)) {}  // NOLINT(implicit)
  Scalar(Complex z) : value_(checked_finite(z)) {}  // NOLINT(implicit)

  static Scalar complex(double re, double im) { return Scalar(Complex(re, im)); }

  /// e^{2 pi i k / n}; exact for the real roots +1 and -1.
  static Scalar root_of_unity(long k, long n) {
    if (n <= 0) throw std::invalid_argument("root_of_unity: n must be positive");
    long r = ((k % n) + n) % n;
    if (r == 0) return Scalar(1);
    if (2 * r == n) return Scalar(-1);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(n);
    return Scalar(Complex(std::cos(angle), std::sin(angle)));
  }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }

  Complex to_complex() const {
    if (is_exact()) return {to_double(rational()), 0.0};
    return std::get<Complex>(value_);
  }

  bool is_zero() const {
    return is_exact() ? rational() == 0 : std::get<Complex>(value_) == Complex(0.0, 0.0);
  }

  /// True when the value equals q (exactly, or as a complex with that value).
  bool equals(const Rational& q) const {
    if (is_exact()) return rational() == q;
    return std::get<Complex>(value_) == Complex(to_double(q), 0.0);
  }

  bool is_real() const {
    return is_exact() || std::get<Complex>(value_).imag() == 0.0;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.rational() + b.rational()));
    return Scalar(a.to_complex() + b.to_complex());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.rational() - b.rational()));
    return Scalar(a.to_complex() - b.to_complex());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.rational() * b.rational()));
    return Scalar(a.to_complex() * b.to_complex());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.rational() / b.rational()));
    return Scalar(a.to_complex() / b.to_complex());
  }
  Scalar operator-() const {
    if (is_exact()) return Scalar(Rational(-rational()));
    return Scalar(-std::get<Complex>(value_));
  }

  /// Integer power; negative exponents invert (zero base is an error).
  Scalar pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("zero raised to a negative power");
      return (Scalar(1) / *this).pow(-e);
    }
    Scalar result(1);
    Scalar base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return a.rational() == b.rational();
    return a.to_complex() == b.to_complex();
  }

  std::string to_string() const {
    if (is_exact()) return rational().str();
    const Complex z = std::get<Complex>(value_);
    std::ostringstream os;
    os.precision(17);
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
  }

 private:
  std::variant<Rational, Complex> value_;
};

/// Principal square root; exact when the value is a rational square.
inline Scalar principal_sqrt(const Scalar& s) {
  if (s.is_exact()) {
    if (auto r = exact_sqrt(s.rational())) return Scalar(*r);
  }
  return Scalar(std::sqrt(s.to_complex()));
}

/// Parses "3", "-7/2", "0.25", "1e-3" (exact decimal), "root:n", "root:k/n",
/// and "complex:RE,IM".
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto fail = [&]() -> Scalar { throw ParseError("cannot parse scalar '" + s + "'"); };
  if (s.empty()) return fail();
  if (s.rfind("root:", 0) == 0) {
    const std::string body = s.substr(5);
    const auto slash = body.find('/');
    try {
      if (slash == std::string::npos) return Scalar::root_of_unity(1, std::stol(body));
      return Scalar::root_of_unity(std::stol(body.substr(0, slash)),
                                   std::stol(body.substr(slash + 1)));
    } catch (const std::logic_error&) {
      return fail();
    }
  }
  if (s.rfind("complex:", 0) == 0) {
    const std::string body = s.substr(8);
    const auto comma = body.find(',');
    if (comma == std::string::npos) return fail();
    try {
      std::size_t used = 0;
      const double re = std::stod(body.substr(0, comma), &used);
      if (used != comma) return fail();
      const std::string im_text = body.substr(comma + 1);
      const double im = std::stod(im_text, &used);
      if (used != im_text.size()) return fail();
      return Scalar::complex(re, im);
    } catch (const std::logic_error&) {
      return fail();
    }
  }
  if (s.find('/') != std::string::npos) {
    try {
      return Scalar(Rational(s));
    } catch (const std::exception&) {
      return fail();
    }
  }
  // Decimal with optional exponent, read exactly.
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  Integer mantissa = 0;
  long scale = 0;
  bool digits = false;
  bool dot = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (dot) --scale;
      digits = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) return fail();
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') return fail();
    try {
      std::size_t used = 0;
      const std::string tail = s.substr(pos + 1);
      scale += std::stol(tail, &used);
      if (used != tail.size()) return fail();
    } catch (const std::logic_error&) {
      return fail();
    }
  }
  if (std::labs(scale) > 400) return fail();
  Rational q(mantissa);
  const Integer ten_power = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(scale)));
  q = scale >= 0 ? Rational(q * ten_power) : Rational(q / ten_power);
  return Scalar(negative ? Rational(-q) : q);
}

}  // namespace jones

#endif  // JONES_SCALAR_HPP
