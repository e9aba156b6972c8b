#ifndef MPLDUAL_FINITE_MPL_HPP
#define MPLDUAL_FINITE_MPL_HPP

#include "mpldual/index.hpp"
#include "mpldual/mod_arith.hpp"
#include "mpldual/report.hpp"

namespace mpldual {

/// Argument polynomials over Z/p^M: symbols become variables, rational numbers
/// (denominator coprime to p) become residues.
std::vector<ModPolynomial> mod_arg_polynomials(const VarIndex& v, const ModContext& ctx);

/// Truncated FMPL Li_{<p}^{(star)}(v) over Z/p^M; every 1/n^k is a modular
/// inverse (all n < p are units).
ModPolynomial li_truncated_mod(const ModContext& ctx, const VarIndex& v, bool star);
ModPolynomial li_truncated_mod_polys(const ModContext& ctx, const Index& k,
                                     const std::vector<ModPolynomial>& args, bool star);

/// The combination of Theorem 1.3:
///   sum_{n < M} [ Li*_{<p}(z,{1}^n; k,{1}^n) - 1/2 Li*_{<p}(1,z_2..,{1}^n; k,{1}^n) ] p^n
/// computed mod p^M.  p = 2 is rejected (the coefficient 1/2).
ModPolynomial curly_L_A_truncated(const ModContext& ctx, const VarIndex& v);

/// Theorem 1.3 congruence for block data: LHS args (z_1,{1}^{dep k_1 - 1},...)
/// versus RHS at (1-z_i) and vee-duals; PASS = congruent mod p^M.
VerificationReport check_fmpl_duality(std::uint64_t p, unsigned M, const std::vector<Index>& ks,
                                      const std::vector<ArgValue>& zs);

/// eq. fmzv_duality: sum_{n<M} zeta*_{A,<p}(k,{1}^n) p^n = - (same at k-vee) mod p^M.
VerificationReport check_fmzv_duality(std::uint64_t p, unsigned M, const Index& k);

/// Block-pattern VarIndex (z_1, {1}^{dep k_1 - 1}, ..., z_d, {1}^{dep k_d - 1})
/// over the concatenated index; used by both finite and symmetric dualities.
VarIndex block_pattern(const std::vector<Index>& ks, const std::vector<ArgValue>& zs);

}  // namespace mpldual

#endif
