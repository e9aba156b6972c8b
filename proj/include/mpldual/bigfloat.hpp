#ifndef MPLDUAL_BIGFLOAT_HPP
#define MPLDUAL_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "mpldual/exact.hpp"

namespace mpldual {

using BigFloat = boost::multiprecision::mpfr_float;

/// Sets the working decimal precision for the current scope.  The default
/// precision is process-global in the underlying backend, so concurrent
/// numeric work must share one digit setting (all suite runners do).
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
  }
  ~ScopedPrecision() { BigFloat::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

/// Guard digits added on top of every requested target precision.
inline constexpr unsigned kGuardDigits = 15;

BigFloat to_bigfloat(const Rational& q);
BigFloat pow10(long e);  // 10^e at current precision

/// Complex number on arbitrary-precision floats.
struct BigComplex {
  BigFloat re{0};
  BigFloat im{0};

  BigComplex() = default;
  BigComplex(BigFloat r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const ExactComplex& z) : re(to_bigfloat(z.re)), im(to_bigfloat(z.im)) {}

  bool is_real() const { return im == 0; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
};

BigFloat abs(const BigComplex& z);

/// Decimal string with the given number of significant digits.
std::string to_decimal_string(const BigFloat& x, unsigned digits);
std::string to_decimal_string(const BigComplex& z, unsigned digits);

}  // namespace mpldual

#endif
