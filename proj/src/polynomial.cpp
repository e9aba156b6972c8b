#include "mpldual/polynomial.hpp"

namespace mpldual {

std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& [var, e] : m) {
    if (!out.empty()) out += "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

ExactComplex evaluate_complex(const RationalPolynomial& p,
                              const std::map<std::string, ExactComplex>& values) {
  ExactComplex acc;
  for (const auto& [m, c] : p.terms()) {
    ExactComplex term{c};
    for (const auto& [var, e] : m) {
      auto it = values.find(var);
      if (it == values.end()) throw domain_error("unassigned variable '" + var + "'");
      for (unsigned j = 0; j < e; ++j) term = term * it->second;
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace mpldual
