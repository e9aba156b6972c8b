#include "mpldual/finite_mpl.hpp"

#include <chrono>

#include "mpldual/li_engine.hpp"

namespace mpldual {

namespace {

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
      .count();
}

VarIndex append_ones(const VarIndex& v, int n) {
  std::vector<int> parts = v.index.parts();
  std::vector<ArgValue> args = v.args;
  for (int j = 0; j < n; ++j) {
    parts.push_back(1);
    args.emplace_back(ExactComplex(Rational(1)));
  }
  return VarIndex(Index(std::move(parts)), std::move(args));
}

VarIndex replace_first_arg_with_one(const VarIndex& v) {
  std::vector<ArgValue> args = v.args;
  if (!args.empty()) args.front() = ExactComplex(Rational(1));
  return VarIndex(v.index, std::move(args));
}

nlohmann::ordered_json first_diff_witness(const ModPolynomial& lhs, const ModPolynomial& rhs) {
  ModPolynomial diff = lhs - rhs;
  const auto& [mono, coeff] = *diff.terms().begin();
  return nlohmann::ordered_json{{"monomial", to_string(mono).empty() ? "1" : to_string(mono)},
                                {"lhs_minus_rhs", coeff.v}};
}

}  // namespace

std::vector<ModPolynomial> mod_arg_polynomials(const VarIndex& v, const ModContext& ctx) {
  std::vector<ModPolynomial> out;
  out.reserve(v.args.size());
  for (const auto& a : v.args) {
    if (is_symbol(a)) {
      out.push_back(ModPolynomial::variable(std::get<std::string>(a), ModInt(1, &ctx)));
    } else {
      const ExactComplex& z = std::get<ExactComplex>(a);
      if (!z.is_real()) throw domain_error("finite MPLs take rational or symbolic arguments");
      out.push_back(ModPolynomial(ModInt(ctx.reduce(z.re), &ctx)));
    }
  }
  return out;
}

ModPolynomial li_truncated_mod_polys(const ModContext& ctx, const Index& k,
                                     const std::vector<ModPolynomial>& args, bool star) {
  if (k.empty()) return ModPolynomial(ModInt(1, &ctx));
  std::function<ModInt(long, int)> inv_pow = [&ctx](long n, int kk) {
    return ModInt(ctx.inverse(ctx.pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(kk))), &ctx);
  };
  auto slices = detail::li_slices<ModPolynomial, ModInt>(static_cast<int>(ctx.prime()), k.parts(), args,
                                                         star, ModInt(1, &ctx), inv_pow);
  ModPolynomial sum;
  for (const auto& s : slices) sum += s;
  return sum;
}

ModPolynomial li_truncated_mod(const ModContext& ctx, const VarIndex& v, bool star) {
  return li_truncated_mod_polys(ctx, v.index, mod_arg_polynomials(v, ctx), star);
}

ModPolynomial curly_L_A_truncated(const ModContext& ctx, const VarIndex& v) {
  if (ctx.prime() == 2) throw domain_error("curly_L_A requires an odd prime (1/2 coefficient)");
  if (v.depth() < 1) throw domain_error("curly_L_A needs a nonempty index");
  const ModInt half = ModInt(ctx.inverse(2), &ctx);
  ModPolynomial acc;
  std::uint64_t pn = 1;  // p^n
  for (unsigned n = 0; n < ctx.exponent(); ++n) {
    VarIndex ext = append_ones(v, static_cast<int>(n));
    ModPolynomial a = li_truncated_mod(ctx, ext, /*star=*/true);
    ModPolynomial b = li_truncated_mod(ctx, replace_first_arg_with_one(ext), /*star=*/true);
    b *= half;
    a -= b;
    a *= ModInt(pn, &ctx);
    acc += a;
    pn *= ctx.prime();
  }
  return acc;
}

VarIndex block_pattern(const std::vector<Index>& ks, const std::vector<ArgValue>& zs) {
  if (ks.size() != zs.size() || ks.empty()) throw domain_error("need one argument per index block");
  Index concat;
  std::vector<ArgValue> args;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i].empty()) throw domain_error("index blocks must be nonempty");
    concat = concat.concat(ks[i]);
    args.push_back(zs[i]);
    for (int j = 1; j < ks[i].depth(); ++j) args.emplace_back(ExactComplex(Rational(1)));
  }
  return VarIndex(std::move(concat), std::move(args));
}

namespace {

// RHS of Theorem 1.3: arguments 1 - z_i (as polynomials when symbolic) over the
// vee-dual blocks.
std::vector<ModPolynomial> dual_args(const std::vector<Index>& ks, const std::vector<ArgValue>& zs,
                                     const ModContext& ctx) {
  std::vector<ModPolynomial> args;
  const ModPolynomial one{ModInt(1, &ctx)};
  for (std::size_t i = 0; i < ks.size(); ++i) {
    ModPolynomial zi;
    if (is_symbol(zs[i])) {
      zi = ModPolynomial::variable(std::get<std::string>(zs[i]), ModInt(1, &ctx));
    } else {
      zi = ModPolynomial(ModInt(ctx.reduce(std::get<ExactComplex>(zs[i]).re), &ctx));
    }
    args.push_back(one - zi);
    for (int j = 1; j < vee(ks[i]).depth(); ++j) args.push_back(one);
  }
  return args;
}

ModPolynomial curly_L_A_polys(const ModContext& ctx, const Index& k,
                              const std::vector<ModPolynomial>& args) {
  const ModInt half = ModInt(ctx.inverse(2), &ctx);
  const ModPolynomial one{ModInt(1, &ctx)};
  ModPolynomial acc;
  std::uint64_t pn = 1;
  for (unsigned n = 0; n < ctx.exponent(); ++n) {
    std::vector<int> parts = k.parts();
    std::vector<ModPolynomial> ext = args;
    for (unsigned j = 0; j < n; ++j) {
      parts.push_back(1);
      ext.push_back(one);
    }
    Index kn(parts);
    ModPolynomial a = li_truncated_mod_polys(ctx, kn, ext, /*star=*/true);
    std::vector<ModPolynomial> ext1 = ext;
    ext1.front() = one;
    ModPolynomial b = li_truncated_mod_polys(ctx, kn, ext1, /*star=*/true);
    b *= half;
    a -= b;
    a *= ModInt(pn, &ctx);
    acc += a;
    pn *= ctx.prime();
  }
  return acc;
}

}  // namespace

VerificationReport check_fmpl_duality(std::uint64_t p, unsigned M, const std::vector<Index>& ks,
                                      const std::vector<ArgValue>& zs) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check = "finite-duality";
  rep.params["p"] = p;
  rep.params["mod_exp"] = M;
  {
    std::vector<std::string> kstr, zstr;
    for (const auto& k : ks) kstr.push_back(k.str());
    for (const auto& z : zs) zstr.push_back(to_string(z));
    rep.params["indices"] = kstr;
    rep.params["args"] = zstr;
  }
  ModContext ctx(p, M);

  VarIndex lhs_v = block_pattern(ks, zs);
  ModPolynomial lhs = curly_L_A_polys(ctx, lhs_v.index, mod_arg_polynomials(lhs_v, ctx));

  std::vector<Index> vees;
  for (const auto& k : ks) vees.push_back(vee(k));
  Index rhs_index;
  for (const auto& k : vees) rhs_index = rhs_index.concat(k);
  ModPolynomial rhs = curly_L_A_polys(ctx, rhs_index, dual_args(ks, zs, ctx));

  if (lhs == rhs) {
    rep.status = Status::Pass;
  } else {
    rep.status = Status::Fail;
    rep.witness = first_diff_witness(lhs, rhs);
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

VerificationReport check_fmzv_duality(std::uint64_t p, unsigned M, const Index& k) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.check = "fmzv-duality";
  rep.params["p"] = p;
  rep.params["mod_exp"] = M;
  rep.params["index"] = k.str();
  ModContext ctx(p, M);
  if (p == 2) throw domain_error("fmzv duality sweep uses odd primes");

  auto side = [&](const Index& kk) {
    std::uint64_t acc = 0, pn = 1;
    for (unsigned n = 0; n < M; ++n) {
      VarIndex ext;
      {
        std::vector<int> parts = kk.parts();
        parts.insert(parts.end(), n, 1);
        ext = all_ones(Index(parts));
      }
      ModPolynomial val = li_truncated_mod(ctx, ext, /*star=*/true);
      std::uint64_t scalar = val.is_zero() ? 0 : val.terms().begin()->second.v;
      acc = ctx.add(acc, ctx.mul(pn, scalar));
      pn *= p;
    }
    return acc;
  };

  std::uint64_t l = side(k);
  std::uint64_t r = side(vee(k));
  std::uint64_t sum = ctx.add(l, r);  // duality says l = -r
  if (sum == 0) {
    rep.status = Status::Pass;
  } else {
    rep.status = Status::Fail;
    rep.witness = nlohmann::ordered_json{{"lhs", l}, {"rhs", r}, {"lhs_plus_rhs", sum}};
  }
  rep.wall_ms = elapsed_ms(t0);
  return rep;
}

}  // namespace mpldual
