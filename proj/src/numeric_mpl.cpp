#include "mpldual/numeric_mpl.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <chrono>
#include <map>
#include <mutex>

namespace mpldual {

using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

namespace {

constexpr long kMaxTerms = 2'000'000;

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
      .count();
}

/// Direct slice DP at current working precision; requires max_i |z_i| < 1.
/// Tail certified by |B_r(n)| <= rho^n (1 + ln n)^{r-1}.
BigComplex li_direct(const VarIndex& v, const BigFloat& eps) {
  const int r = v.depth();
  if (r == 0) return BigComplex(BigFloat(1));
  for (const auto& a : v.args)
    if (as_number(a).is_zero()) return BigComplex();

  BigFloat rho = 0;
  std::vector<BigComplex> z;
  for (const auto& a : v.args) {
    BigComplex zb{as_number(a)};
    rho = std::max(rho, abs(zb), [](const BigFloat& x, const BigFloat& y) { return x < y; });
    z.push_back(zb);
  }
  if (rho >= 1) throw domain_error("li_direct requires max |z_i| < 1, got " + v.str());

  // cur[i] = C_i(n) accumulators, b_prev[i] = B_i(n-1), b_cur[i] = B_i(n)
  std::vector<BigComplex> c(static_cast<std::size_t>(r) + 1),
      b_prev(static_cast<std::size_t>(r) + 1), b_cur(static_cast<std::size_t>(r) + 1);
  BigComplex total;
  const auto& parts = v.index.parts();
  for (long n = 1;; ++n) {
    b_prev = b_cur;
    for (int i = 1; i <= r; ++i) {
      if (i == 1) {
        c[1] = z[0] * (c[1] + BigComplex(BigFloat(n == 1 ? 1 : 0)));
      } else {
        c[i] = z[i - 1] * (c[i] + b_prev[i - 1]);
      }
      BigComplex b = c[static_cast<std::size_t>(i)];
      BigFloat scale = pow(BigFloat(n), parts[static_cast<std::size_t>(i - 1)]);
      b.re /= scale;
      b.im /= scale;
      b_cur[static_cast<std::size_t>(i)] = b;
    }
    total += b_cur[static_cast<std::size_t>(r)];

    if (n >= 16) {
      BigFloat logs = pow(1 + log(BigFloat(n + 1)), r - 1);
      BigFloat q = rho * pow((1 + log(BigFloat(n + 2))) / (1 + log(BigFloat(n + 1))), r - 1);
      if (q < 1) {
        BigFloat tail = pow(rho, static_cast<int>(n + 1)) * logs / (1 - q);
        if (tail < eps) break;
      }
    }
    if (n > kMaxTerms)
      throw precision_error("series term cap reached before the tail bound certified (rho = " +
                            rho.str(6, std::ios_base::fixed) + ")");
  }
  return total;
}

/// I over the first half-path [0, 1/2]: letters scaled by 2.
BigComplex eval_first_half(const Word& prefix, const BigFloat& eps) {
  if (prefix.empty()) return BigComplex(BigFloat(1));
  Word scaled;
  scaled.reserve(prefix.size());
  for (const Letter& l : prefix) scaled.push_back(Letter(l.number() * ExactComplex(Rational(2))));
  VarIndex v = word_to_varindex(scaled);
  BigComplex value = li_direct(v, eps);
  return (v.depth() % 2 == 0) ? value : -value;
}

/// I over the second half-path [1/2, 1]: reversal plus t -> 1 - t.
BigComplex eval_second_half(const Word& suffix, const BigFloat& eps) {
  if (suffix.empty()) return BigComplex(BigFloat(1));
  Word scaled;
  scaled.reserve(suffix.size());
  for (auto it = suffix.rbegin(); it != suffix.rend(); ++it)
    scaled.push_back(Letter((ExactComplex(Rational(1)) - it->number()) * ExactComplex(Rational(2))));
  VarIndex v = word_to_varindex(scaled);
  BigComplex value = li_direct(v, eps);
  int sign_flips = static_cast<int>(suffix.size()) + v.depth();
  return (sign_flips % 2 == 0) ? value : -value;
}

void validate_convergent_word(const Word& w) {
  for (const Letter& l : w) {
    if (l.is_symbol()) throw domain_error("numeric evaluation of a symbolic letter");
    if (l.is_infinity()) continue;
    const ExactComplex& a = l.number();
    if (a.is_real() && a.re > 0 && a.re < 1)
      throw domain_error("letter " + l.str() + " lies inside (0,1)");
  }
  if (!w.empty()) {
    if (w.front().is_zero()) throw domain_error("divergent word: first letter is 0");
    if (w.back().is_one()) throw domain_error("divergent word: last letter is 1");
  }
}

BigComplex holder_impl(const Word& w, const BigFloat& eps) {
  validate_convergent_word(w);
  for (const Letter& l : w)
    if (l.is_infinity()) return BigComplex();  // e_infinity annihilates
  if (w.empty()) return BigComplex(BigFloat(1));
  const std::size_t k = w.size();
  BigFloat split_eps = eps / static_cast<int>(4 * (k + 1));
  BigComplex total;
  for (std::size_t i = 0; i <= k; ++i) {
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    total += eval_first_half(prefix, split_eps) * eval_second_half(suffix, split_eps);
  }
  return total;
}

struct WordCacheKey {
  Word w;
  unsigned digits;
  friend bool operator<(const WordCacheKey& a, const WordCacheKey& b) {
    if (a.digits != b.digits) return a.digits < b.digits;
    return a.w < b.w;
  }
};

std::map<WordCacheKey, BigComplex>& word_cache() {
  static std::map<WordCacheKey, BigComplex> cache;
  return cache;
}
std::mutex& word_cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

BigComplex holder(const Word& w, unsigned digits) {
  {
    std::lock_guard<std::mutex> lock(word_cache_mutex());
    auto it = word_cache().find({w, digits});
    if (it != word_cache().end()) return it->second;
  }
  ScopedPrecision prec(digits + kGuardDigits);
  BigComplex value = holder_impl(w, pow10(-static_cast<long>(digits) - 5));
  {
    std::lock_guard<std::mutex> lock(word_cache_mutex());
    word_cache().emplace(WordCacheKey{w, digits}, value);
  }
  return value;
}

BigComplex li_series(const VarIndex& v, unsigned digits) {
  ScopedPrecision prec(digits + kGuardDigits);
  if (v.depth() == 0) return BigComplex(BigFloat(1));
  if (!v.all_args_numeric()) throw domain_error("li_series needs numeric arguments");
  for (const auto& a : v.args)
    if (as_number(a).is_zero()) return BigComplex();
  if (!v.series_convergent()) throw domain_error("Li series diverges at " + v.str());

  bool boundary = false;
  for (const auto& a : v.args)
    if (as_number(a).norm2() == 1) boundary = true;
  if (!boundary) return li_direct(v, pow10(-static_cast<long>(digits) - 5));

  // |z| = 1 cannot be certified by a geometric tail; go through the word.
  BigComplex value = holder_impl(index_to_word(v), pow10(-static_cast<long>(digits) - 5));
  return (v.depth() % 2 == 0) ? value : -value;
}

BigFloat mzv(const Index& k, unsigned digits) {
  if (!k.is_admissible())
    throw domain_error("mzv needs an admissible index; use mzv_sh for (" + k.str() + ")");
  if (k.empty()) return BigFloat(1);
  BigComplex value = holder(index_to_word(all_ones(k)), digits);
  return (k.depth() % 2 == 0) ? value.re : -value.re;
}

BigFloat mzv_sh(const Index& k, unsigned digits) {
  if (k.empty()) return BigFloat(1);
  ShuffleRegularization reg = shuffle_regularize(index_to_word(all_ones(k)));
  ScopedPrecision prec(digits + kGuardDigits);
  BigFloat total = 0;
  for (const auto& [word, coeff] : reg.constant_term().terms())
    total += to_bigfloat(coeff) * holder(word, digits).re;
  return (k.depth() % 2 == 0) ? total : -total;
}

namespace {

BigFloat dist_to_segment(const ExactComplex& a, const Rational& lo, const Rational& hi) {
  // distance from a to the real segment [lo, hi]
  BigFloat are = to_bigfloat(a.re), aim = to_bigfloat(a.im);
  if (a.re >= lo && a.re <= hi) return boost::multiprecision::abs(aim);
  BigFloat dlo = sqrt((are - to_bigfloat(lo)) * (are - to_bigfloat(lo)) + aim * aim);
  BigFloat dhi = sqrt((are - to_bigfloat(hi)) * (are - to_bigfloat(hi)) + aim * aim);
  return dlo < dhi ? dlo : dhi;
}

}  // namespace

BigComplex chen_ode(const Word& w, unsigned digits) {
  ScopedPrecision prec(digits + kGuardDigits);
  validate_convergent_word(w);
  for (const Letter& l : w)
    if (l.is_infinity()) return BigComplex();
  const int k = static_cast<int>(w.size());
  if (k == 0) return BigComplex(BigFloat(1));

  const BigFloat eps = pow10(-static_cast<long>(digits) - 8);
  std::vector<ExactComplex> letters;
  for (const Letter& l : w) letters.push_back(l.number());
  bool one_is_singular = false;
  for (const auto& a : letters)
    if (a == ExactComplex(Rational(1))) one_is_singular = true;

  std::vector<BigComplex> f(static_cast<std::size_t>(k) + 1);
  f[0] = BigComplex(BigFloat(1));
  Rational t(0);

  const BigFloat d_end = dist_to_segment(letters.back(), Rational(1, 2), Rational(1));
  int max_order_cap = static_cast<int>(8 * (digits + kGuardDigits) + 64);

  while (t < 1) {
    // radius of analyticity: distance to the nearest letter away from t
    BigFloat radius = -1;
    BigFloat tb = to_bigfloat(t);
    for (const auto& a : letters) {
      if (a == ExactComplex(t)) continue;  // removable at the expansion point
      BigComplex d{to_bigfloat(a.re) - tb, to_bigfloat(a.im)};
      BigFloat ad = abs(d);
      if (radius < 0 || ad < radius) radius = ad;
    }

    Rational h;
    BigFloat ratio;
    Rational remaining = Rational(1) - t;
    if (radius < 0) {  // no singularities at all
      h = remaining;
      ratio = BigFloat("0.25");
    } else if (!one_is_singular && to_bigfloat(remaining) <= radius * BigFloat("0.75")) {
      h = remaining;  // land exactly on 1
      ratio = to_bigfloat(remaining) / radius;
    } else {
      // dyadic step of about radius/2, never past 1
      Rational step(1);
      while (to_bigfloat(step) > radius / 2) step /= 2;
      h = step < remaining ? step : remaining;
      ratio = to_bigfloat(h) / radius;
      if (one_is_singular && h == remaining) {
        // cannot land on a singular endpoint; halve toward it instead
        h = remaining / 2;
        ratio = to_bigfloat(h) / radius;
      }
    }

    // Taylor order from the contraction ratio (coefficients decay ~ radius^-m).
    if (ratio > BigFloat("0.8")) ratio = BigFloat("0.8");
    long order = 32 + static_cast<long>((digits + kGuardDigits + 8) /
                                        -static_cast<double>(log(ratio) / log(BigFloat(10))));
    if (order > max_order_cap) order = max_order_cap;

    // c[i][m] Taylor coefficients at t
    std::vector<std::vector<BigComplex>> c(static_cast<std::size_t>(k) + 1);
    c[0].assign(static_cast<std::size_t>(order) + 1, BigComplex());
    c[0][0] = BigComplex(BigFloat(1));
    for (int i = 1; i <= k; ++i) {
      c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(order) + 1, BigComplex());
      const ExactComplex& ai = letters[static_cast<std::size_t>(i - 1)];
      c[static_cast<std::size_t>(i)][0] = f[static_cast<std::size_t>(i)];
      if (ai == ExactComplex(t)) {
        for (long m = 1; m <= order; ++m)
          c[i][static_cast<std::size_t>(m)] =
              c[i - 1][static_cast<std::size_t>(m - 1)] / BigComplex(BigFloat(m));
      } else {
        BigComplex d = BigComplex(to_bigfloat(t)) - BigComplex(ExactComplex(ai));
        for (long m = 0; m < order; ++m)
          c[i][static_cast<std::size_t>(m + 1)] =
              (c[i - 1][static_cast<std::size_t>(m)] - BigComplex(BigFloat(m)) * c[i][static_cast<std::size_t>(m)]) /
              (d * BigComplex(BigFloat(m + 1)));
      }
    }
    // advance by Horner
    BigFloat hb = to_bigfloat(h);
    for (int i = 1; i <= k; ++i) {
      BigComplex acc;
      for (long m = order; m >= 0; --m) acc = acc * BigComplex(hb) + c[i][static_cast<std::size_t>(m)];
      f[static_cast<std::size_t>(i)] = acc;
    }
    t += h;

    if (one_is_singular && t < 1) {
      // stop once the remaining integral tail is provably below eps
      BigFloat rem = to_bigfloat(Rational(1) - t);
      if (rem < BigFloat("0.25")) {
        BigFloat lt = -log(rem);
        BigFloat grow = pow(1 + lt, k);
        BigFloat tail = (abs(f[static_cast<std::size_t>(k - 1)]) + 1) * rem * 8 * grow / d_end;
        if (tail < eps) break;
      }
      if (to_bigfloat(Rational(1) - t) < pow10(-static_cast<long>(4 * (digits + kGuardDigits))))
        throw precision_error("chen_ode: step size underflow near the singular endpoint");
    }
  }
  return f[static_cast<std::size_t>(k)];
}

void MplDualityInstance::validate() const {
  const int dd = d();
  if (dd < 1) throw domain_error("instance needs d >= 1");
  if (static_cast<int>(a.size()) != dd - 1 || static_cast<int>(b.size()) != dd - 1 ||
      static_cast<int>(w.size()) != dd - 1)
    throw domain_error("instance needs d-1 entries in a, b, w");
  for (const Index& li : l)
    if (!li.is_admissible()) throw domain_error("instance indices must be admissible");
  for (int i = 0; i < dd - 1; ++i) {
    if (a[i] < 1 || b[i] < 1) throw domain_error("instance a_i, b_i must be >= 1");
    if (w[i].norm2() > 1)
      throw domain_error("hypothesis |w_i| <= 1 fails at i = " + std::to_string(i + 1));
    if (w[i].re > Rational(1, 2))
      throw domain_error("hypothesis Re(w_i) <= 1/2 fails at i = " + std::to_string(i + 1));
  }
  if (dd > 1 && l.front().empty() && a.front() == 1 && w.front().re == Rational(1, 2))
    throw domain_error("hypothesis Re(w_1) != 1/2 (l_1 empty, a_1 = 1) fails");
  if (dd > 1 && l.back().empty() && b.back() == 1 && w.back().norm2() == 1)
    throw domain_error("hypothesis |w_{d-1}| != 1 (l_d empty, b_{d-1} = 1) fails");
}

nlohmann::ordered_json MplDualityInstance::to_json() const {
  nlohmann::ordered_json j;
  j["l"] = nlohmann::ordered_json::array();
  for (const Index& li : l) j["l"].push_back(li.str());
  j["a"] = a;
  j["b"] = b;
  j["w"] = nlohmann::ordered_json::array();
  for (const ExactComplex& wi : w) j["w"].push_back(to_string(wi));
  return j;
}

MplDualityInstance MplDualityInstance::from_json(const nlohmann::ordered_json& j) {
  MplDualityInstance inst;
  for (const auto& s : j.at("l")) inst.l.push_back(Index::parse(s.get<std::string>()));
  inst.a = j.at("a").get<std::vector<int>>();
  inst.b = j.at("b").get<std::vector<int>>();
  for (const auto& s : j.at("w")) inst.w.push_back(parse_exact_complex(s.get<std::string>()));
  inst.validate();
  return inst;
}

DualityPair build_duality_pair(const MplDualityInstance& inst) {
  inst.validate();
  const int d = inst.d();
  const ExactComplex one{Rational(1)};

  std::vector<int> parts;
  std::vector<ArgValue> args;
  for (int i = 0; i < d - 1; ++i) {
    const Index& li = inst.l[static_cast<std::size_t>(i)];
    for (int j = 0; j < li.depth() + inst.a[static_cast<std::size_t>(i)] - 1; ++j) args.emplace_back(one);
    args.emplace_back(inst.w[static_cast<std::size_t>(i)]);
    for (int p : li.parts()) parts.push_back(p);
    for (int j = 0; j < inst.a[static_cast<std::size_t>(i)] - 1; ++j) parts.push_back(1);
    parts.push_back(inst.b[static_cast<std::size_t>(i)]);
  }
  {
    const Index& ld = inst.l.back();
    for (int j = 0; j < ld.depth(); ++j) args.emplace_back(one);
    for (int p : ld.parts()) parts.push_back(p);
  }
  VarIndex lhs{Index(parts), args};

  std::vector<int> dparts;
  std::vector<ArgValue> dargs;
  std::vector<Index> ldual;
  for (const Index& li : inst.l) ldual.push_back(dagger(li));
  for (int i = d - 2; i >= 0; --i) {
    const Index& next_dual = ldual[static_cast<std::size_t>(i + 1)];
    for (int j = 0; j < next_dual.depth() + inst.b[static_cast<std::size_t>(i)] - 1; ++j)
      dargs.emplace_back(one);
    dargs.emplace_back(inst.w[static_cast<std::size_t>(i)] /
                       (inst.w[static_cast<std::size_t>(i)] - one));
    for (int p : next_dual.parts()) dparts.push_back(p);
    for (int j = 0; j < inst.b[static_cast<std::size_t>(i)] - 1; ++j) dparts.push_back(1);
    dparts.push_back(inst.a[static_cast<std::size_t>(i)]);
  }
  {
    const Index& first_dual = ldual.front();
    for (int j = 0; j < first_dual.depth(); ++j) dargs.emplace_back(one);
    for (int p : first_dual.parts()) dparts.push_back(p);
  }
  VarIndex rhs{Index(dparts), dargs};

  return DualityPair{std::move(lhs), std::move(rhs), (d - 1) % 2 == 0 ? 1 : -1};
}

VerificationReport check_mpl_duality(const MplDualityInstance& inst, unsigned digits) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check = "mpl-duality";
  rep.params["instance"] = inst.to_json();
  rep.params["digits"] = digits;

  DualityPair pair = build_duality_pair(inst);
  rep.params["lhs"] = pair.lhs.str();
  rep.params["rhs"] = pair.rhs.str();
  rep.params["sign"] = pair.sign;

  BigComplex lv = li_series(pair.lhs, digits);
  BigComplex rv = li_series(pair.rhs, digits);
  ScopedPrecision prec(digits + kGuardDigits);
  BigComplex diff = pair.sign > 0 ? lv - rv : lv + rv;
  BigFloat residual = abs(diff);
  rep.residual = to_decimal_string(residual, 3);
  if (residual < pow10(-static_cast<long>(digits) + 10)) {
    rep.status = Status::Pass;
  } else {
    rep.status = Status::Fail;
    rep.witness = nlohmann::ordered_json{{"lhs_value", to_decimal_string(lv, digits)},
                                         {"rhs_value", to_decimal_string(rv, digits)}};
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

}  // namespace mpldual
