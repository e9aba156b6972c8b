#ifndef MPLDUAL_EXACT_SERIES_HPP
#define MPLDUAL_EXACT_SERIES_HPP

#include <vector>

#include "mpldual/index.hpp"
#include "mpldual/polynomial.hpp"
#include "mpldual/report.hpp"

namespace mpldual {

/// Argument polynomials of a VarIndex: symbols become variables, real rational
/// numbers become constants.  Complex arguments are rejected (exact series
/// work in Q[z_1,...,z_r]).
std::vector<RationalPolynomial> arg_polynomials(const VarIndex& v);

/// Exact truncated MPL: sum over 0 = n_0 < n_1 < ... < n_r < N of
/// prod z_i^{n_i - n_{i-1}} / n_i^{k_i}.  Returns 1 for the empty index.
RationalPolynomial li_truncated(int N, const VarIndex& v);

/// Star variant: "<=" between the inner summation variables.
RationalPolynomial li_star_truncated(int N, const VarIndex& v);

/// Slice S[n] = lattice terms with n_r = n exactly, for n < N (depth >= 1).
std::vector<RationalPolynomial> li_truncated_slices(int N, const VarIndex& v, bool star);

/// Engine entry with explicit argument polynomials (one per index component).
RationalPolynomial li_truncated_polys(int N, const Index& k,
                                      const std::vector<RationalPolynomial>& args, bool star);

/// Left-hand side of eq. ss: the star-truncated sum weighted by
/// (-1)^{n_r} C(N-1, n_r).
RationalPolynomial ss_weighted_sum(int N, const Index& k,
                                   const std::vector<RationalPolynomial>& args);

/// Exact check of eq. star_nonstar at truncation N.
VerificationReport check_star_nonstar(int N, const VarIndex& v);

/// Exact check of the generating-function identity (Remark 1.2) to X-order M,
/// both star and non-star.  The right-hand side's X-coefficients are extracted
/// by independent lattice enumeration.
VerificationReport check_generating_function(const VarIndex& v, int M);

/// Exact check of the Sakugawa-Seki identity (eq. ss) in Q[z_1,...,z_r].
VerificationReport check_ss_identity(const Index& k, int N);

/// Independent brute-force enumerations (quadratic/recursive, no DP); used as
/// oracles by the generating-function check and the test suites.
RationalPolynomial enumerate_li_truncated(int N, const Index& k,
                                          const std::vector<RationalPolynomial>& args, bool star);
RationalPolynomial enumerate_li_slice(int n_last, const Index& k,
                                      const std::vector<RationalPolynomial>& args, bool star);

}  // namespace mpldual

#endif
