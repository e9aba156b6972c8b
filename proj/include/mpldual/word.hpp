#ifndef MPLDUAL_WORD_HPP
#define MPLDUAL_WORD_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mpldual/index.hpp"

namespace mpldual {

/// Reserved point at infinity; any integral word containing e_infinity is zero.
struct InfinityLabel {
  friend bool operator==(const InfinityLabel&, const InfinityLabel&) { return true; }
};

/// A labeled point a of the symbol e_a: exact complex rational, named symbol,
/// or the reserved label at infinity.
class Letter {
 public:
  Letter() : value_(ExactComplex{}) {}
  Letter(ExactComplex z) : value_(std::move(z)) {}  // NOLINT(google-explicit-constructor)
  Letter(Rational q) : value_(ExactComplex(std::move(q))) {}  // NOLINT
  Letter(long n) : value_(ExactComplex(Rational(n))) {}       // NOLINT
  explicit Letter(std::string symbol) : value_(std::move(symbol)) {}
  static Letter infinity() { return Letter(InfinityLabel{}); }

  bool is_number() const { return std::holds_alternative<ExactComplex>(value_); }
  bool is_symbol() const { return std::holds_alternative<std::string>(value_); }
  bool is_infinity() const { return std::holds_alternative<InfinityLabel>(value_); }
  const ExactComplex& number() const;
  const std::string& symbol() const { return std::get<std::string>(value_); }

  bool is_zero() const { return is_number() && number().is_zero(); }
  bool is_one() const { return is_number() && number().is_one(); }

  std::string str() const;

  friend bool operator==(const Letter& a, const Letter& b);
  friend bool operator<(const Letter& a, const Letter& b);

 private:
  explicit Letter(InfinityLabel inf) : value_(inf) {}
  std::variant<ExactComplex, std::string, InfinityLabel> value_;
};

/// Finite sequence of letters; encodes the iterated integral
/// I(e_{a_1} ... e_{a_k}) over the unit-interval path.
using Word = std::vector<Letter>;

std::string to_string(const Word& w);

/// Formal Q-linear combination of words; zero coefficients are never stored.
class WordCombination {
 public:
  WordCombination() = default;
  explicit WordCombination(Word w, Rational c = Rational(1));

  void add(const Word& w, const Rational& c);
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  WordCombination& operator+=(const WordCombination& o);
  WordCombination& operator-=(const WordCombination& o);
  WordCombination& operator*=(const Rational& c);
  friend WordCombination operator*(const WordCombination& a, const Rational& c) {
    WordCombination r = a;
    r *= c;
    return r;
  }
  friend bool operator==(const WordCombination&, const WordCombination&) = default;

  std::string str() const;

 private:
  std::map<Word, Rational> terms_;
};

/// Word of Li(v): e_{1/z_1} e_0^{k_1-1} ... e_{1/z_r} e_0^{k_r-1}.
/// Numeric nonzero arguments required.  Li(v) = (-1)^r I(word).
Word index_to_word(const VarIndex& v);

/// Inverse of index_to_word: parses a word whose first letter is nonzero back
/// into the VarIndex with Li(v) = (-1)^r I(word).
VarIndex word_to_varindex(const Word& w);

/// Reverse the order and map every letter a -> 1-a (infinity stays infinity).
/// Word-level realization of the substitution t -> 1-t.
Word word_dual(const Word& w);

/// Letterwise substitution e_a -> e_{1/a} - e_0 (so e_0 -> -e_0, via e_{1/0} =
/// e_infinity = 0), expanded multilinearly; realizes t -> 1/t.
WordCombination word_invert(const Word& w);

/// Sum over all interleavings preserving the internal order of both factors.
WordCombination shuffle(const Word& a, const Word& b);
WordCombination shuffle(const WordCombination& a, const WordCombination& b);

/// Unique decomposition of a {0,1}-word as a shuffle polynomial
///   w = sum_{j1,j0} c_{j1,j0} sh [1]^{sh j1} sh [0]^{sh j0}
/// with every word in every c_{j1,j0} admissible (starts with 1, ends with 0)
/// or empty.  The formal symbol T stands for the regularized value of [1];
/// words with no leading zeros use only j0 = 0.  Evaluating at T = 0 keeps the
/// (0,0) coefficient: that is the shuffle-regularized value decomposition.
class ShuffleRegularization {
 public:
  /// terms keyed by (power of [1], power of [0]).
  const std::map<std::pair<int, int>, WordCombination>& terms() const { return terms_; }

  /// Coefficient of T^j (pure [1]-side; zero power of [0]).
  const WordCombination& coefficient_of_T(int j) const;
  const WordCombination& constant_term() const { return coefficient_of_T(0); }
  int t_degree() const;

  /// Expands sum c_{j1,j0} sh [1]^{sh j1} sh [0]^{sh j0}; equals the input word.
  WordCombination reconstruct() const;

  friend ShuffleRegularization shuffle_regularize(const Word& w);

 private:
  std::map<std::pair<int, int>, WordCombination> terms_;
};

/// Shuffle regularization of a word over the letters {0, 1}.
ShuffleRegularization shuffle_regularize(const Word& w);

}  // namespace mpldual

#endif
