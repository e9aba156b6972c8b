#ifndef MPLDUAL_MOD_ARITH_HPP
#define MPLDUAL_MOD_ARITH_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "mpldual/polynomial.hpp"

namespace mpldual {

/// Arithmetic context for Z/p^M.  Residues are stored in uint64; the modulus
/// must satisfy p^M < 2^62 so products fit in unsigned 128-bit intermediates.
class ModContext {
 public:
  ModContext(std::uint64_t p, unsigned exponent);

  std::uint64_t prime() const { return p_; }
  unsigned exponent() const { return exp_; }
  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t reduce_int(long long v) const;
  std::uint64_t reduce(const BigInt& v) const;
  /// p/q mod p^M; q must be coprime to p.
  std::uint64_t reduce(const Rational& q) const;

  /// Modular inverse; inverting a multiple of p is a domain_error, never a
  /// silent wrap.
  std::uint64_t inverse(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t base, unsigned long long e) const;

 private:
  std::uint64_t p_;
  unsigned exp_;
  std::uint64_t modulus_;
};

/// Residue in [0, p^M) tied to its context.
struct ModInt {
  std::uint64_t v = 0;
  const ModContext* ctx = nullptr;

  ModInt() = default;
  ModInt(std::uint64_t value, const ModContext* context) : v(value % context->modulus()), ctx(context) {}

  bool is_zero() const { return v == 0; }
  ModInt one_like() const { return ModInt(1, ctx); }
  std::string str() const { return std::to_string(v); }

  friend ModInt operator+(const ModInt& a, const ModInt& b) {
    return ModInt(a.require(b)->add(a.v, b.v), a.ctx);
  }
  friend ModInt operator-(const ModInt& a, const ModInt& b) {
    return ModInt(a.require(b)->sub(a.v, b.v), a.ctx);
  }
  friend ModInt operator-(const ModInt& a) { return ModInt(a.ctx->sub(0, a.v), a.ctx); }
  friend ModInt operator*(const ModInt& a, const ModInt& b) {
    return ModInt(a.require(b)->mul(a.v, b.v), a.ctx);
  }
  ModInt inverse() const { return ModInt(ctx->inverse(v), ctx); }
  friend bool operator==(const ModInt& a, const ModInt& b) { return a.v == b.v; }

 private:
  const ModContext* require(const ModInt& o) const {
    if (ctx == nullptr || (o.ctx != nullptr && o.ctx != ctx))
      throw domain_error("mixed or missing modular contexts");
    return ctx;
  }
};

using ModPolynomial = SparsePoly<ModInt>;

/// Reduces an exact rational polynomial mod p^M (denominators must be coprime
/// to p).
ModPolynomial reduce_mod(const RationalPolynomial& poly, const ModContext& ctx);

/// Odd primes in [lo, hi].
std::vector<std::uint64_t> odd_primes_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace mpldual

#endif
