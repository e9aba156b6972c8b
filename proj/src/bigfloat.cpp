#include "mpldual/bigfloat.hpp"

namespace mpldual {

BigFloat to_bigfloat(const Rational& q) {
  return BigFloat(numerator(q).str()) / BigFloat(denominator(q).str());
}

BigFloat pow10(long e) {
  return boost::multiprecision::pow(BigFloat(10), static_cast<int>(e));
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat n = b.re * b.re + b.im * b.im;
  if (n == 0) throw domain_error("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

BigFloat abs(const BigComplex& z) {
  return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
}

std::string to_decimal_string(const BigFloat& x, unsigned digits) {
  return x.str(digits, std::ios_base::scientific);
}

std::string to_decimal_string(const BigComplex& z, unsigned digits) {
  if (z.is_real()) return to_decimal_string(z.re, digits);
  std::string out = to_decimal_string(z.re, digits);
  if (z.im >= 0) out += "+";
  out += to_decimal_string(z.im, digits) + "i";
  return out;
}

}  // namespace mpldual
