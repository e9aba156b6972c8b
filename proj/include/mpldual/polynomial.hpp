#ifndef MPLDUAL_POLYNOMIAL_HPP
#define MPLDUAL_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "mpldual/exact.hpp"

namespace mpldual {

/// Sparse exponent vector, canonical by construction (no zero exponents).
using Monomial = std::map<std::string, unsigned>;

std::string to_string(const Monomial& m);

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
template <class C>
bool coeff_is_zero(const C& c) {
  return c.is_zero();
}
}  // namespace detail

/// Multivariate polynomial with coefficients in C, canonical term ordering.
/// Equality is exact canonical-form comparison, never sampling.
template <class C>
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(C constant) {
    if (!detail::coeff_is_zero(constant)) terms_.emplace(Monomial{}, std::move(constant));
  }
  static SparsePoly variable(const std::string& name, C one) {
    SparsePoly p;
    p.terms_.emplace(Monomial{{name, 1}}, std::move(one));
    return p;
  }

  const std::map<Monomial, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const C& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (const auto& [var, e] : mb) m[var] += e;
        r.add_term(m, ca * cb);
      }
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  SparsePoly& operator*=(const C& c) {
    if (detail::coeff_is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, q] : terms_) q = q * c;
    std::erase_if(terms_, [](const auto& kv) { return detail::coeff_is_zero(kv.second); });
    return *this;
  }

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Substitutes polynomials for variables (unmentioned variables stay).
  SparsePoly substitute(const std::map<std::string, SparsePoly>& repl) const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) {
      SparsePoly term(c);
      for (const auto& [var, e] : m) {
        auto it = repl.find(var);
        SparsePoly base = it != repl.end() ? it->second : variable(var, unit_like(c));
        for (unsigned j = 0; j < e; ++j) term *= base;
      }
      out += term;
    }
    return out;
  }

  /// Full evaluation; every variable present must be assigned.
  C evaluate(const std::map<std::string, C>& values) const {
    C acc{};  // zero
    bool first = true;
    for (const auto& [m, c] : terms_) {
      C term = c;
      for (const auto& [var, e] : m) {
        auto it = values.find(var);
        if (it == values.end()) throw domain_error("unassigned variable '" + var + "' in evaluation");
        for (unsigned j = 0; j < e; ++j) term = term * it->second;
      }
      acc = first ? term : acc + term;
      first = false;
    }
    return first ? C{} : acc;
  }

  std::vector<std::string> variables() const {
    std::map<std::string, unsigned> seen;
    for (const auto& [m, c] : terms_)
      for (const auto& [var, e] : m) seen[var] = 1;
    std::vector<std::string> out;
    for (const auto& [var, tag] : seen) out.push_back(var);
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += coeff_str(c);
      std::string ms = to_string(m);
      if (!ms.empty()) out += "*" + ms;
    }
    return out;
  }

 private:
  static Rational unit_like(const Rational&) { return Rational(1); }
  template <class D>
  static D unit_like(const D& d) {
    return d.one_like();
  }
  static std::string coeff_str(const Rational& c) { return to_string(c); }
  template <class D>
  static std::string coeff_str(const D& d) {
    return d.str();
  }

  std::map<Monomial, C> terms_;
};

using RationalPolynomial = SparsePoly<Rational>;

/// Evaluates a rational polynomial at exact complex arguments.
ExactComplex evaluate_complex(const RationalPolynomial& p,
                              const std::map<std::string, ExactComplex>& values);

/// Power series in one formal variable, truncated at a fixed order: the
/// coefficient list stores X^0 ... X^{order-1}.
template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order)) {
    if (order < 0) throw domain_error("series order must be >= 0");
  }

  int order() const { return static_cast<int>(coeffs_.size()); }
  const Coeff& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  Coeff& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    for (int j = 0; j < std::min(order(), o.order()); ++j) coeffs_[j] += o[j];
    return *this;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(a.order());
    for (int i = 0; i < a.order(); ++i)
      for (int j = 0; i + j < r.order() && j < b.order(); ++j) r[i + j] += a[i] * b[j];
    return r;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

}  // namespace mpldual

#endif
