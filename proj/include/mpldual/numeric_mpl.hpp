#ifndef MPLDUAL_NUMERIC_MPL_HPP
#define MPLDUAL_NUMERIC_MPL_HPP

#include <vector>

#include "mpldual/bigfloat.hpp"
#include "mpldual/index.hpp"
#include "mpldual/report.hpp"
#include "mpldual/word.hpp"

namespace mpldual {

/// Direct series evaluation of a convergent MPL with absolute error below
/// 10^{-digits} (certified geometric tail).  Arguments with |z| = 1 are routed
/// through the Hölder convolution internally.
BigComplex li_series(const VarIndex& v, unsigned digits);

/// Iterated integral I_dch(w) over the straight path from 0 to 1, by splitting
/// the path at 1/2 and converting both halves to geometric-rate series.
/// Requires a convergent word: first letter != 0, last letter != 1, no letters
/// on the real interval (0,1).  Words containing e_infinity evaluate to 0.
BigComplex holder(const Word& w, unsigned digits);

/// zeta(k) for an admissible index (1 for the empty index).
BigFloat mzv(const Index& k, unsigned digits);

/// Shuffle-regularized zeta at T = 0 (any index; trailing ones allowed).
BigFloat mzv_sh(const Index& k, unsigned digits);

/// Independent evaluation of I_dch(w) integrating the triangular ODE system
/// F_0 = 1, dF_i = F_{i-1} dt/(t - a_i) with adaptive Taylor stepping.
/// Cross-check oracle for holder().
BigComplex chen_ode(const Word& w, unsigned digits);

/// Data of one Theorem 1.1 instance.
struct MplDualityInstance {
  std::vector<Index> l;          // d admissible indices
  std::vector<int> a;            // d-1 integers >= 1
  std::vector<int> b;            // d-1 integers >= 1
  std::vector<ExactComplex> w;   // d-1 complex parameters

  int d() const { return static_cast<int>(l.size()); }
  /// Throws domain_error naming the failed hypothesis.
  void validate() const;

  nlohmann::ordered_json to_json() const;
  static MplDualityInstance from_json(const nlohmann::ordered_json& j);
};

/// Assembles the pair ((z;k), (z;k)^dagger) of Theorem 1.1 and the sign
/// (-1)^{d-1}.
struct DualityPair {
  VarIndex lhs;
  VarIndex rhs;
  int sign = 1;
};
DualityPair build_duality_pair(const MplDualityInstance& inst);

/// Numerically verifies Li(lhs) = sign * Li(rhs); PASS iff the residual stays
/// below 10^{-digits+10}.
VerificationReport check_mpl_duality(const MplDualityInstance& inst, unsigned digits);

}  // namespace mpldual

#endif
