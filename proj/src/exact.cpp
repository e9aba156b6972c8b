#include "mpldual/exact.hpp"

#include <sstream>

namespace mpldual {

ExactComplex reciprocal(const ExactComplex& z) {
  if (z.is_zero()) throw domain_error("reciprocal of zero");
  Rational n = z.norm2();
  return {z.re / n, -z.im / n};
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw domain_error("empty rational literal");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw domain_error("malformed rational literal: '" + std::string(text) + "'");
  }
}

ExactComplex parse_exact_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw domain_error("empty complex literal");
  if (s.back() != 'i') return {parse_rational(s), Rational(0)};
  s.pop_back();
  if (s.empty()) return {Rational(0), Rational(1)};
  // Split at the last top-level '+'/'-' that separates real and imaginary parts.
  for (std::size_t pos = s.size(); pos-- > 1;) {
    if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != '/' && s[pos - 1] != '+' && s[pos - 1] != '-') {
      std::string real = s.substr(0, pos);
      std::string imag = s.substr(pos);
      if (imag == "+") imag = "1";
      if (imag == "-") imag = "-1";
      return {parse_rational(real), parse_rational(imag)};
    }
  }
  return {Rational(0), parse_rational(s)};
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string to_string(const ExactComplex& z) {
  if (z.is_real()) return to_string(z.re);
  std::string out = to_string(z.re);
  if (z.im > 0) out += "+";
  out += to_string(z.im) + " i";
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt num = 1, den = 1;
  for (unsigned long j = 1; j <= k; ++j) {
    num *= n - k + j;
    den *= j;
  }
  return num / den;
}

}  // namespace mpldual
