#ifndef MPLDUAL_EXACT_HPP
#define MPLDUAL_EXACT_HPP

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mpldual {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Errors raised when an operation is called outside its mathematical domain
/// (non-admissible index, divergent series, zero denominator, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Errors raised when a requested precision cannot be certified within the
/// configured work limits.
class precision_error : public std::runtime_error {
 public:
  explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact complex number with rational real and imaginary parts.
struct ExactComplex {
  Rational re{0};
  Rational im{0};

  ExactComplex() = default;
  ExactComplex(Rational r) : re(std::move(r)) {}          // NOLINT(google-explicit-constructor)
  ExactComplex(long r) : re(r) {}                          // NOLINT(google-explicit-constructor)
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im == 0; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  /// |z|^2 as an exact rational.
  Rational norm2() const { return re * re + im * im; }

  ExactComplex conj() const { return {re, -im}; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    Rational n = b.norm2();
    if (n == 0) throw domain_error("division by zero complex rational");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) = default;
  friend std::strong_ordering operator<=>(const ExactComplex& a, const ExactComplex& b) {
    if (a.re != b.re) return a.re < b.re ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.im != b.im) return a.im < b.im ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

ExactComplex reciprocal(const ExactComplex& z);

/// Parses "p/q" (or "p") into an exact rational.
Rational parse_rational(std::string_view text);

/// Parses "p/q", "p/q+r/s i", "p/q-r/s i" or "r/s i" into an exact complex rational.
ExactComplex parse_exact_complex(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const ExactComplex& z);

/// Exact binomial coefficient C(n, k), by incremental multiplication.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace mpldual

#endif
