#include "mpldual/exact_series.hpp"

#include <chrono>

#include "mpldual/li_engine.hpp"

namespace mpldual {

namespace {

Rational rational_inv_pow(long n, int k) {
  BigInt p = 1;
  for (int j = 0; j < k; ++j) p *= n;
  return Rational(BigInt(1), p);
}

const std::function<Rational(long, int)> kInvPow = rational_inv_pow;

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

std::vector<RationalPolynomial> arg_polynomials(const VarIndex& v) {
  std::vector<RationalPolynomial> out;
  out.reserve(v.args.size());
  for (const auto& a : v.args) {
    if (is_symbol(a)) {
      out.push_back(RationalPolynomial::variable(std::get<std::string>(a), Rational(1)));
    } else {
      const ExactComplex& z = std::get<ExactComplex>(a);
      if (!z.is_real()) throw domain_error("exact series require real rational or symbolic arguments");
      out.push_back(RationalPolynomial(z.re));
    }
  }
  return out;
}

RationalPolynomial li_truncated_polys(int N, const Index& k,
                                      const std::vector<RationalPolynomial>& args, bool star) {
  if (k.empty()) return RationalPolynomial(Rational(1));
  auto slices = detail::li_slices<RationalPolynomial, Rational>(N, k.parts(), args, star, Rational(1), kInvPow);
  RationalPolynomial sum;
  for (const auto& s : slices) sum += s;
  return sum;
}

RationalPolynomial li_truncated(int N, const VarIndex& v) {
  return li_truncated_polys(N, v.index, arg_polynomials(v), /*star=*/false);
}

RationalPolynomial li_star_truncated(int N, const VarIndex& v) {
  return li_truncated_polys(N, v.index, arg_polynomials(v), /*star=*/true);
}

std::vector<RationalPolynomial> li_truncated_slices(int N, const VarIndex& v, bool star) {
  if (v.depth() < 1) throw domain_error("slices need depth >= 1");
  return detail::li_slices<RationalPolynomial, Rational>(N, v.index.parts(), arg_polynomials(v), star,
                                                         Rational(1), kInvPow);
}

RationalPolynomial ss_weighted_sum(int N, const Index& k,
                                   const std::vector<RationalPolynomial>& args) {
  auto slices = detail::li_slices<RationalPolynomial, Rational>(N, k.parts(), args, /*star=*/true,
                                                                Rational(1), kInvPow);
  RationalPolynomial sum;
  Rational binom = 1;  // C(N-1, 0)
  for (int n = 1; n < N; ++n) {
    binom = binom * (N - n) / n;  // C(N-1, n)
    Rational w = (n % 2 == 0) ? binom : -binom;
    RationalPolynomial term = slices[static_cast<std::size_t>(n)];
    term *= w;
    sum += term;
  }
  return sum;
}

namespace {

void enumerate_rec(int level, int r, long prev, long bound_exclusive, bool star, const Index& k,
                   const std::vector<RationalPolynomial>& args, const RationalPolynomial& acc,
                   long pinned_last, RationalPolynomial& out) {
  if (level == r) {
    out += acc;
    return;
  }
  const long lo = (level == 0) ? 1 : (star ? prev : prev + 1);
  for (long n = lo; n < bound_exclusive; ++n) {
    if (pinned_last >= 0 && level == r - 1 && n != pinned_last) continue;
    RationalPolynomial factor(Rational(1));
    for (long j = 0; j < n - prev; ++j) factor *= args[static_cast<std::size_t>(level)];
    factor *= rational_inv_pow(n, k.parts()[static_cast<std::size_t>(level)]);
    enumerate_rec(level + 1, r, n, bound_exclusive, star, k, args, acc * factor, pinned_last, out);
  }
}

}  // namespace

RationalPolynomial enumerate_li_truncated(int N, const Index& k,
                                          const std::vector<RationalPolynomial>& args, bool star) {
  if (k.empty()) return RationalPolynomial(Rational(1));
  RationalPolynomial out;
  enumerate_rec(0, k.depth(), 0, N, star, k, args, RationalPolynomial(Rational(1)), -1, out);
  return out;
}

RationalPolynomial enumerate_li_slice(int n_last, const Index& k,
                                      const std::vector<RationalPolynomial>& args, bool star) {
  if (k.empty()) throw domain_error("slice enumeration needs depth >= 1");
  RationalPolynomial out;
  enumerate_rec(0, k.depth(), 0, static_cast<long>(n_last) + 1, star, k, args,
                RationalPolynomial(Rational(1)), n_last, out);
  return out;
}

VerificationReport check_star_nonstar(int N, const VarIndex& v) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check = "star-expansion";
  rep.params["index"] = v.index.str();
  rep.params["args"] = [&] {
    std::vector<std::string> a;
    for (const auto& x : v.args) a.push_back(to_string(x));
    return a;
  }();
  rep.params["N"] = N;
  if (v.depth() < 1) throw domain_error("check_star_nonstar needs depth >= 1");

  RationalPolynomial lhs = li_star_truncated(N, v);
  RationalPolynomial rhs;
  for (const VarIndex& term : star_expansion(v)) rhs += li_truncated(N, term);
  RationalPolynomial diff = lhs - rhs;
  if (diff.is_zero()) {
    rep.status = Status::Pass;
    rep.residual = "0";
  } else {
    rep.status = Status::Fail;
    rep.witness = nlohmann::ordered_json{{"difference", diff.str()}};
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

VerificationReport check_generating_function(const VarIndex& v, int M) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check = "genfun";
  rep.params["index"] = v.index.str();
  rep.params["args"] = [&] {
    std::vector<std::string> a;
    for (const auto& x : v.args) a.push_back(to_string(x));
    return a;
  }();
  rep.params["order"] = M;

  auto args = arg_polynomials(v);
  for (int star = 0; star <= 1; ++star) {
    // LHS: sum_{N=1..M} Li_{<N} X^N via the slice DP.
    TruncatedSeries<RationalPolynomial> lhs(M + 1);
    for (int N = 1; N <= M; ++N) {
      RationalPolynomial value = v.index.empty() ? RationalPolynomial(Rational(1))
                                                 : li_truncated_polys(N, v.index, args, star != 0);
      if (N < lhs.order()) lhs[N] = value;
    }
    // RHS: X/(1-X) * Li((Xz); k) with X-coefficients from independent slice
    // enumeration (coefficient of X^j = lattice points with n_r = j).
    TruncatedSeries<RationalPolynomial> geom(M + 1), a_series(M + 1);
    for (int j = 1; j <= M; ++j) geom[j] = RationalPolynomial(Rational(1));
    if (v.index.empty()) {
      a_series[0] = RationalPolynomial(Rational(1));
    } else {
      for (int j = 0; j <= M - 1; ++j)
        a_series[j] = enumerate_li_slice(j, v.index, args, star != 0);
    }
    TruncatedSeries<RationalPolynomial> rhs = geom * a_series;
    for (int j = 0; j <= M; ++j) {
      if (!(lhs[j] == rhs[j])) {
        rep.status = Status::Fail;
        rep.witness = nlohmann::ordered_json{{"star", star != 0},
                                             {"x_power", j},
                                             {"lhs", lhs[j].str()},
                                             {"rhs", rhs[j].str()}};
        rep.wall_ms = elapsed_ms(t0);
        return rep;
      }
    }
  }
  rep.status = Status::Pass;
  rep.residual = "0";
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

VerificationReport check_ss_identity(const Index& k, int N) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check = "ss";
  rep.params["index"] = k.str();
  rep.params["N"] = N;
  if (k.empty()) throw domain_error("check_ss_identity needs depth >= 1");

  const int r = k.depth();
  std::vector<RationalPolynomial> zvars;
  for (int i = 1; i <= r; ++i)
    zvars.push_back(RationalPolynomial::variable("z" + std::to_string(i), Rational(1)));

  RationalPolynomial lhs = ss_weighted_sum(N, k, zvars);

  const RationalPolynomial one(Rational(1));
  auto star_args = [&](bool replace_first_block) {
    std::vector<RationalPolynomial> args;
    for (int i = 0; i < r; ++i) {
      if (i == 0 && replace_first_block) {
        for (int j = 0; j < k.parts()[0]; ++j) args.push_back(one);
      } else {
        args.push_back(one - zvars[static_cast<std::size_t>(i)]);
        for (int j = 1; j < k.parts()[static_cast<std::size_t>(i)]; ++j) args.push_back(one);
      }
    }
    return args;
  };
  Index ones_index(std::vector<int>(static_cast<std::size_t>(k.weight()), 1));
  RationalPolynomial rhs = li_truncated_polys(N, ones_index, star_args(false), /*star=*/true) -
                           li_truncated_polys(N, ones_index, star_args(true), /*star=*/true);

  RationalPolynomial diff = lhs - rhs;
  if (diff.is_zero()) {
    rep.status = Status::Pass;
    rep.residual = "0";
  } else {
    rep.status = Status::Fail;
    rep.witness = nlohmann::ordered_json{{"difference", diff.str()}};
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

}  // namespace mpldual
