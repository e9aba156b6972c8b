#include "mpldual/word.hpp"

#include <algorithm>

namespace mpldual {

const ExactComplex& Letter::number() const {
  if (!is_number()) throw domain_error("letter '" + str() + "' is not a number");
  return std::get<ExactComplex>(value_);
}

std::string Letter::str() const {
  if (is_infinity()) return "inf";
  if (is_symbol()) return symbol();
  return to_string(number());
}

bool operator==(const Letter& a, const Letter& b) { return a.value_ == b.value_; }

bool operator<(const Letter& a, const Letter& b) {
  auto rank = [](const Letter& l) { return l.value_.index(); };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (a.is_number()) return a.number() < b.number();
  if (a.is_symbol()) return a.symbol() < b.symbol();
  return false;  // both infinity
}

std::string to_string(const Word& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += w[i].str();
  }
  return out + "]";
}

WordCombination::WordCombination(Word w, Rational c) {
  if (c != 0) terms_.emplace(std::move(w), std::move(c));
}

void WordCombination::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WordCombination& WordCombination::operator+=(const WordCombination& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordCombination& WordCombination::operator-=(const WordCombination& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WordCombination& WordCombination::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, q] : terms_) q *= c;
  return *this;
}

std::string WordCombination::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + to_string(w);
  }
  return out;
}

Word index_to_word(const VarIndex& v) {
  Word w;
  const auto& parts = v.index.parts();
  for (int i = 0; i < v.depth(); ++i) {
    const ExactComplex& z = as_number(v.args[i]);
    if (z.is_zero()) throw domain_error("index_to_word: zero argument (1/z undefined)");
    w.push_back(Letter(reciprocal(z)));
    for (int j = 1; j < parts[i]; ++j) w.push_back(Letter(ExactComplex{}));
  }
  return w;
}

VarIndex word_to_varindex(const Word& w) {
  if (w.empty()) return VarIndex{};
  if (w.front().is_zero()) throw domain_error("word_to_varindex: leading zero letter");
  std::vector<int> parts;
  std::vector<ArgValue> args;
  for (const Letter& l : w) {
    if (l.is_infinity() || l.is_symbol())
      throw domain_error("word_to_varindex: non-numeric letter");
    if (l.is_zero()) {
      parts.back() += 1;
    } else {
      parts.push_back(1);
      args.emplace_back(reciprocal(l.number()));
    }
  }
  return VarIndex(Index(std::move(parts)), std::move(args));
}

Word word_dual(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->is_infinity()) {
      out.push_back(Letter::infinity());
    } else {
      out.push_back(Letter(ExactComplex(Rational(1)) - it->number()));
    }
  }
  return out;
}

WordCombination word_invert(const Word& w) {
  WordCombination acc(Word{});
  for (const Letter& l : w) {
    WordCombination next;
    for (const auto& [prefix, c] : acc.terms()) {
      // e_a(1/t) = (e_{1/a} - e_0)(t); 1/0 = infinity and e_infinity = 0.
      if (!l.is_zero()) {
        Word ext = prefix;
        if (l.is_infinity()) {
          ext.push_back(Letter(ExactComplex{}));  // 1/inf = 0
        } else if (l.is_symbol()) {
          throw domain_error("word_invert: symbolic letter");
        } else {
          ext.push_back(Letter(reciprocal(l.number())));
        }
        next.add(ext, c);
      }
      Word ext0 = prefix;
      ext0.push_back(Letter(ExactComplex{}));
      next.add(ext0, -c);
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

void shuffle_rec(const Word& a, std::size_t i, const Word& b, std::size_t j, Word& cur,
                 WordCombination& out) {
  if (i == a.size() && j == b.size()) {
    out.add(cur, Rational(1));
    return;
  }
  if (i < a.size()) {
    cur.push_back(a[i]);
    shuffle_rec(a, i + 1, b, j, cur, out);
    cur.pop_back();
  }
  if (j < b.size()) {
    cur.push_back(b[j]);
    shuffle_rec(a, i, b, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

WordCombination shuffle(const Word& a, const Word& b) {
  WordCombination out;
  Word cur;
  cur.reserve(a.size() + b.size());
  shuffle_rec(a, 0, b, 0, cur, out);
  return out;
}

WordCombination shuffle(const WordCombination& a, const WordCombination& b) {
  WordCombination out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      WordCombination s = shuffle(wa, wb);
      s *= ca * cb;
      out += s;
    }
  return out;
}

namespace {

const Letter kZero{ExactComplex{}};
const Letter kOne{ExactComplex(Rational(1))};

using RegTerms = std::map<std::pair<int, int>, WordCombination>;

void check_binary_word(const Word& w) {
  for (const Letter& l : w)
    if (!(l == kZero || l == kOne))
      throw domain_error("shuffle_regularize expects a word over the letters {0,1}");
}

// Decomposition w = sum_j c_j sh [1]^{sh j} with every word in c_j ending in 0
// (or empty).  Reduction on the trailing run of ones:
//   [1] sh (u e1^{m-1}) = m (u e1^m) + (insertions of e1 strictly inside u) e1^{m-1}.
std::map<int, WordCombination> reduce_trailing_ones(const Word& w,
                                                    std::map<Word, std::map<int, WordCombination>>& memo) {
  if (w.empty() || w.back() == kZero) return {{0, WordCombination(w)}};
  if (auto it = memo.find(w); it != memo.end()) return it->second;

  int m = 0;
  for (auto it = w.rbegin(); it != w.rend() && *it == kOne; ++it) ++m;
  const std::size_t q = w.size() - static_cast<std::size_t>(m);  // |u|

  Word shorter(w.begin(), w.end() - 1);  // u e1^{m-1}
  std::map<int, WordCombination> acc;
  for (auto& [j, comb] : reduce_trailing_ones(shorter, memo)) acc[j + 1] += comb;
  for (std::size_t pos = 0; pos < q; ++pos) {
    Word ins = shorter;
    ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(pos), kOne);
    for (auto& [j, comb] : reduce_trailing_ones(ins, memo)) acc[j] -= comb;
  }
  Rational inv_m = Rational(1) / m;
  std::map<int, WordCombination> out;
  for (auto& [j, comb] : acc) {
    comb *= inv_m;
    if (!comb.is_zero()) out.emplace(j, std::move(comb));
  }
  memo.emplace(w, out);
  return out;
}

// Mirror reduction on the leading run of zeros, producing powers of [0].
std::map<int, WordCombination> reduce_leading_zeros(const Word& w,
                                                    std::map<Word, std::map<int, WordCombination>>& memo) {
  if (w.empty() || w.front() == kOne) return {{0, WordCombination(w)}};
  if (auto it = memo.find(w); it != memo.end()) return it->second;

  int m = 0;
  for (auto it = w.begin(); it != w.end() && *it == kZero; ++it) ++m;

  Word shorter(w.begin() + 1, w.end());  // e0^{m-1} v
  std::map<int, WordCombination> acc;
  for (auto& [j, comb] : reduce_leading_zeros(shorter, memo)) acc[j + 1] += comb;
  for (std::size_t pos = static_cast<std::size_t>(m); pos <= shorter.size(); ++pos) {
    Word ins = shorter;
    ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(pos), kZero);
    for (auto& [j, comb] : reduce_leading_zeros(ins, memo)) acc[j] -= comb;
  }
  Rational inv_m = Rational(1) / m;
  std::map<int, WordCombination> out;
  for (auto& [j, comb] : acc) {
    comb *= inv_m;
    if (!comb.is_zero()) out.emplace(j, std::move(comb));
  }
  memo.emplace(w, out);
  return out;
}

}  // namespace

const WordCombination& ShuffleRegularization::coefficient_of_T(int j) const {
  static const WordCombination kEmpty;
  auto it = terms_.find({j, 0});
  return it == terms_.end() ? kEmpty : it->second;
}

int ShuffleRegularization::t_degree() const {
  int d = 0;
  for (const auto& [key, comb] : terms_) d = std::max(d, key.first);
  return d;
}

WordCombination ShuffleRegularization::reconstruct() const {
  WordCombination out;
  for (const auto& [key, comb] : terms_) {
    auto [j1, j0] = key;
    WordCombination acc = comb;
    for (int j = 0; j < j1; ++j) acc = shuffle(acc, WordCombination(Word{kOne}));
    for (int j = 0; j < j0; ++j) acc = shuffle(acc, WordCombination(Word{kZero}));
    out += acc;
  }
  return out;
}

ShuffleRegularization shuffle_regularize(const Word& w) {
  check_binary_word(w);
  ShuffleRegularization reg;
  std::map<Word, std::map<int, WordCombination>> memo1, memo0;
  for (auto& [j1, comb1] : reduce_trailing_ones(w, memo1)) {
    for (const auto& [u, c] : comb1.terms()) {
      for (auto& [j0, comb0] : reduce_leading_zeros(u, memo0)) {
        WordCombination scaled = comb0;
        scaled *= c;
        reg.terms_[{j1, j0}] += scaled;
      }
    }
  }
  std::erase_if(reg.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return reg;
}

}  // namespace mpldual
