#ifndef MPLDUAL_LI_ENGINE_HPP
#define MPLDUAL_LI_ENGINE_HPP

#include <functional>
#include <vector>

#include "mpldual/exact.hpp"

namespace mpldual::detail {

/// Slice DP for truncated multiple polylogarithms with polynomial arguments.
///
/// Returns S with S[n] = sum over chains 0 < n_1 ... n_r = n (strict "<"
/// everywhere; "<=" between inner components when star) of
/// prod args[i]^{n_i - n_{i-1}} * inv_pow(n_i, k_i), for 0 <= n < N.  The
/// truncated value Li_{<N} is the sum of all slices.
///
/// One prefix accumulator per level:
///   strict: C_i(n) = z_i * (C_i(n-1) + B_{i-1}(n-1))
///   star:   C_i(n) = z_i * C_i(n-1) + B_{i-1}(n)
/// and B_i(n) = C_i(n) * inv_pow(n, k_i).  The first step n_1 >= 1 is always
/// strict.
template <class Poly, class Coeff>
std::vector<Poly> li_slices(int N, const std::vector<int>& parts, const std::vector<Poly>& args,
                            bool star, const Coeff& one,
                            const std::function<Coeff(long, int)>& inv_pow) {
  if (N < 1) throw domain_error("truncation bound N must be >= 1");
  const int r = static_cast<int>(parts.size());
  std::vector<Poly> prev(static_cast<std::size_t>(N));
  if (r == 0) return prev;  // no slices; callers handle Li_{<N}(empty) = 1
  for (int i = 1; i <= r; ++i) {
    std::vector<Poly> cur(static_cast<std::size_t>(N));
    Poly acc;  // the C_i(n) accumulator
    const Poly& z = args[static_cast<std::size_t>(i - 1)];
    const bool strict = (i == 1) || !star;
    for (int n = 1; n < N; ++n) {
      if (strict) {
        Poly inner = acc;
        if (i == 1) {
          if (n == 1) inner += Poly(one);  // B_0 is the delta at n = 0
        } else {
          inner += prev[static_cast<std::size_t>(n - 1)];
        }
        acc = z * inner;
      } else {
        acc = z * acc + prev[static_cast<std::size_t>(n)];
      }
      Poly b = acc;
      b *= inv_pow(n, parts[static_cast<std::size_t>(i - 1)]);
      cur[static_cast<std::size_t>(n)] = std::move(b);
    }
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace mpldual::detail

#endif
