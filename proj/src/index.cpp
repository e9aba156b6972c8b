#include "mpldual/index.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mpldual {

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw domain_error("index parts must be >= 1");
}

int Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Index::is_admissible() const { return parts_.empty() || parts_.back() >= 2; }

Index Index::reversed() const {
  std::vector<int> r(parts_.rbegin(), parts_.rend());
  return Index(std::move(r));
}

Index Index::concat(const Index& tail) const {
  std::vector<int> r = parts_;
  r.insert(r.end(), tail.parts_.begin(), tail.parts_.end());
  return Index(std::move(r));
}

std::string Index::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Index Index::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "-") return Index{};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw domain_error("malformed index literal: '" + std::string(text) + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Index(std::move(parts));
}

namespace {

// Block decomposition of an admissible index: pairs (a_i, b_i) with the block
// ({1}^{a_i-1}, b_i+1), a_i, b_i >= 1.
std::vector<std::pair<int, int>> block_decomposition(const Index& k) {
  std::vector<std::pair<int, int>> blocks;
  int ones = 0;
  for (int p : k.parts()) {
    if (p == 1) {
      ++ones;
    } else {
      blocks.emplace_back(ones + 1, p - 1);
      ones = 0;
    }
  }
  // Admissibility guarantees no trailing run of ones.
  return blocks;
}

}  // namespace

Index dagger(const Index& k) {
  if (!k.is_admissible()) throw domain_error("dagger requires an admissible index, got (" + k.str() + ")");
  if (k.empty()) return k;
  auto blocks = block_decomposition(k);
  std::vector<int> out;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    auto [a, b] = *it;
    out.insert(out.end(), b - 1, 1);
    out.push_back(a + 1);
  }
  return Index(std::move(out));
}

Index vee(const Index& k) {
  if (k.empty()) throw domain_error("vee requires a nonempty index");
  std::vector<int> m = k.parts();
  m.back() += 1;
  Index d = dagger(Index(std::move(m)));
  std::vector<int> rev(d.parts().rbegin(), d.parts().rend());
  rev.front() -= 1;  // last component of the dual is >= 2, so this stays >= 1
  return Index(std::move(rev));
}

std::vector<Index> indices_of_weight(int w) {
  std::vector<Index> out;
  if (w <= 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      self(self, rem - p);
      cur.pop_back();
    }
  };
  rec(rec, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> admissible_indices_of_weight(int w) {
  std::vector<Index> out;
  for (const Index& k : indices_of_weight(w))
    if (k.is_admissible()) out.push_back(k);
  return out;
}

std::vector<Index> star_contractions(const Index& k) {
  const int r = k.depth();
  std::vector<Index> out;
  if (r == 0) return out;
  const auto& parts = k.parts();
  // Subsets of the r-1 interior cut points {1,...,r-1}; bit j set = cut after
  // position j+1 is kept (i.e. j+1 is one of the i_c).
  for (unsigned long mask = 0; mask < (1ul << (r - 1)); ++mask) {
    std::vector<int> cuts{0};
    for (int j = 0; j < r - 1; ++j)
      if (mask & (1ul << j)) cuts.push_back(j + 1);
    cuts.push_back(r);
    std::vector<int> merged;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      int sum = 0;
      for (int i = cuts[c]; i < cuts[c + 1]; ++i) sum += parts[i];
      merged.push_back(sum);
    }
    out.emplace_back(std::move(merged));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_symbol(const ArgValue& a) { return std::holds_alternative<std::string>(a); }

const ExactComplex& as_number(const ArgValue& a) {
  if (is_symbol(a)) throw domain_error("symbolic argument where a number is required");
  return std::get<ExactComplex>(a);
}

std::string to_string(const ArgValue& a) {
  if (is_symbol(a)) return std::get<std::string>(a);
  return to_string(std::get<ExactComplex>(a));
}

ArgValue parse_arg(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw domain_error("empty argument literal");
  bool numeric = true;
  for (char c : s)
    if (std::isalpha(static_cast<unsigned char>(c)) && c != 'i') numeric = false;
  if (numeric) return parse_exact_complex(s);
  return s;
}

VarIndex::VarIndex(Index k, std::vector<ArgValue> a) : index(std::move(k)), args(std::move(a)) {
  if (static_cast<int>(args.size()) != index.depth())
    throw domain_error("VarIndex needs one argument per index component");
}

bool VarIndex::all_args_numeric() const {
  for (const auto& a : args)
    if (is_symbol(a)) return false;
  return true;
}

bool VarIndex::all_args_one() const {
  for (const auto& a : args)
    if (is_symbol(a) || !std::get<ExactComplex>(a).is_one()) return false;
  return true;
}

bool VarIndex::series_convergent() const {
  if (index.empty()) return true;
  if (!all_args_numeric()) throw domain_error("series_convergent needs numeric arguments");
  for (const auto& a : args)
    if (std::get<ExactComplex>(a).norm2() > 1) return false;
  if (index.parts().back() == 1 && std::get<ExactComplex>(args.back()).is_one()) return false;
  return true;
}

std::string VarIndex::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += to_string(args[i]);
  }
  out += ";" + index.str() + ")";
  return out;
}

VarIndex all_ones(const Index& k) {
  std::vector<ArgValue> args(k.depth(), ArgValue(ExactComplex(Rational(1))));
  return VarIndex(k, std::move(args));
}

std::vector<VarIndex> star_expansion(const VarIndex& v) {
  const int r = v.depth();
  if (r < 1) throw domain_error("star_expansion requires depth >= 1");
  const auto& parts = v.index.parts();
  std::vector<VarIndex> out;
  for (unsigned long mask = 0; mask < (1ul << (r - 1)); ++mask) {
    std::vector<int> cuts{0};
    for (int j = 0; j < r - 1; ++j)
      if (mask & (1ul << j)) cuts.push_back(j + 1);
    cuts.push_back(r);
    std::vector<int> merged;
    std::vector<ArgValue> args;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      int sum = 0;
      for (int i = cuts[c]; i < cuts[c + 1]; ++i) sum += parts[i];
      merged.push_back(sum);
      args.push_back(v.args[cuts[c]]);  // argument of the first merged slot
    }
    out.emplace_back(Index(std::move(merged)), std::move(args));
  }
  return out;
}

}  // namespace mpldual
