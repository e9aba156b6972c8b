#ifndef MPLDUAL_INDEX_HPP
#define MPLDUAL_INDEX_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mpldual/exact.hpp"

namespace mpldual {

/// Tuple of positive integers (k_1,...,k_r).  The empty tuple is allowed.
///
/// Convention used throughout: summation runs over increasing n_1 < ... < n_r
/// and admissibility is a condition on the LAST component (k_r >= 2).  A large
/// part of the literature uses the mirror convention; use reversed() to
/// translate.
class Index {
 public:
  Index() = default;
  explicit Index(std::vector<int> parts);
  Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const;

  /// True iff empty or the last component exceeds 1.
  bool is_admissible() const;

  Index reversed() const;

  /// Concatenation (k_1,...,k_r,l_1,...,l_s).
  Index concat(const Index& tail) const;

  /// Text form "k1,k2,..."; the empty index is spelled "-".
  std::string str() const;
  static Index parse(std::string_view text);

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index& a, const Index& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

inline int weight(const Index& k) { return k.weight(); }
inline int depth(const Index& k) { return k.depth(); }
inline bool is_admissible(const Index& k) { return k.is_admissible(); }

/// Dual index from the block decomposition
/// ({1}^{a1-1}, b1+1, ..., {1}^{ah-1}, bh+1) -> ({1}^{bh-1}, ah+1, ..., {1}^{b1-1}, a1+1).
/// Requires an admissible index.
Index dagger(const Index& k);

/// Hoffman-type conjugation: the unique (l_1,...,l_s) with
/// (l_s,...,l_2,l_1+1) = (k_1,...,k_r+1)^dagger.  Weight-preserving; requires k nonempty.
Index vee(const Index& k);

/// All admissible indices of the given weight (2^{w-2} of them for w >= 2),
/// in deterministic lexicographic order.
std::vector<Index> admissible_indices_of_weight(int weight);

/// All indices of the given weight (2^{w-1} compositions), lexicographic.
std::vector<Index> indices_of_weight(int weight);

/// Star-expansion contractions of an index: for every chain
/// 0 = i_0 < i_1 < ... < i_{d+1} = r the contracted index with parts
/// k_{i_c+1} + ... + k_{i_{c+1}}.  2^{r-1} results.
std::vector<Index> star_contractions(const Index& k);

/// An argument value: exact complex rational or a named symbol.
using ArgValue = std::variant<ExactComplex, std::string>;

bool is_symbol(const ArgValue& a);
const ExactComplex& as_number(const ArgValue& a);
std::string to_string(const ArgValue& a);
ArgValue parse_arg(std::string_view text);

/// Index paired with one argument per component.
struct VarIndex {
  Index index;
  std::vector<ArgValue> args;

  VarIndex() = default;
  VarIndex(Index k, std::vector<ArgValue> a);

  int depth() const { return index.depth(); }
  int weight() const { return index.weight(); }
  bool all_args_numeric() const;
  bool all_args_one() const;

  /// True iff all |z_i| <= 1 and (k_r, z_r) != (1, 1).  Numeric args only.
  bool series_convergent() const;

  std::string str() const;

  friend bool operator==(const VarIndex&, const VarIndex&) = default;
};

/// VarIndex with every argument equal to 1 (the MZV specialization).
VarIndex all_ones(const Index& k);

/// Star-expansion terms of eq. star_nonstar: each chain keeps the argument of
/// the first index it merges, z_{i_c+1}.  2^{r-1} terms.
std::vector<VarIndex> star_expansion(const VarIndex& v);

}  // namespace mpldual

#endif
