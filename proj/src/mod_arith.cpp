#include "mpldual/mod_arith.hpp"

namespace mpldual {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

ModContext::ModContext(std::uint64_t p, unsigned exponent) : p_(p), exp_(exponent) {
  if (!is_prime(p)) throw domain_error("modulus base " + std::to_string(p) + " is not prime");
  if (exponent < 1) throw domain_error("modulus exponent must be >= 1");
  modulus_ = 1;
  for (unsigned j = 0; j < exponent; ++j) {
    if (modulus_ > (std::uint64_t(1) << 62) / p) throw domain_error("p^M exceeds the 2^62 residue cap");
    modulus_ *= p;
  }
}

std::uint64_t ModContext::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t s = a + b;
  if (s >= modulus_) s -= modulus_;
  return s;
}

std::uint64_t ModContext::sub(std::uint64_t a, std::uint64_t b) const {
  return a >= b ? a - b : a + modulus_ - b;
}

std::uint64_t ModContext::mul(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % modulus_);
}

std::uint64_t ModContext::reduce_int(long long v) const {
  long long m = static_cast<long long>(modulus_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ModContext::reduce(const BigInt& v) const {
  BigInt r = v % BigInt(modulus_);
  if (r < 0) r += modulus_;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t ModContext::reduce(const Rational& q) const {
  std::uint64_t num = reduce(numerator(q));
  std::uint64_t den = reduce(denominator(q));
  return mul(num, inverse(den));
}

std::uint64_t ModContext::inverse(std::uint64_t a) const {
  a %= modulus_;
  if (a % p_ == 0)
    throw domain_error("residue " + std::to_string(a) + " is not invertible mod " + std::to_string(p_) +
                       "^" + std::to_string(exp_));
  // Extended Euclid on (a, p^M).
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(modulus_), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (t < 0) t += static_cast<long long>(modulus_);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t ModContext::pow(std::uint64_t base, unsigned long long e) const {
  std::uint64_t acc = 1 % modulus_;
  base %= modulus_;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

ModPolynomial reduce_mod(const RationalPolynomial& poly, const ModContext& ctx) {
  ModPolynomial out;
  for (const auto& [m, c] : poly.terms()) out.add_term(m, ModInt(ctx.reduce(c), &ctx));
  return out;
}

std::vector<std::uint64_t> odd_primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n)
    if (n % 2 == 1 && is_prime(n)) out.push_back(n);
  return out;
}

}  // namespace mpldual
