#include "wzcheck/wz_pair.hpp"

namespace wzcheck {

namespace {

void check_args(long n, long k) {
  if (n < 0 || k < 0) throw DomainError("WZ pair members need n, k >= 0");
}

long parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Rat eval_F(WZPairId pair, long n, long k) {
  check_args(n, k);
  if (pair == WZPairId::Pair256) {
    Rat core = make_rat(binomial(2 * n, n) * binomial(2 * n + 2 * k, n + k) *
                            binomial(2 * n - 2 * k, n - k) * binomial(n + k, n),
                        binomial(2 * k, k));
    return Rat(6 * n - 2 * k + 1) * pow2(-(8 * n - 2 * k)) * core;
  }
  Rat core = make_rat(binomial(2 * n, n) * binomial(4 * n + 2 * k, 2 * n + k) *
                          binomial(2 * n - k, n) * binomial(2 * n + k, 2 * k),
                      binomial(2 * k, k));
  return Rat(parity_sign(n + k) * (20 * n - 2 * k + 3)) *
         pow2(-(10 * n - 2 * k)) * core;
}

Rat eval_G(WZPairId pair, long n, long k) {
  check_args(n, k);
  if (pair == WZPairId::Pair256) {
    Rat core = make_rat(binomial(2 * n, n) * binomial(2 * n + 2 * k, n + k) *
                            binomial(2 * n - 2 * k, n - k) * binomial(n + k, n),
                        binomial(2 * k, k) * Int(2 * n + 2 * k - 1));
    return Rat(n * n) * pow2(-(8 * n - 2 * k - 4)) * core;
  }
  Rat core = make_rat(binomial(2 * n - 1, n - 1) *
                          binomial(4 * n + 2 * k - 2, 2 * n + k - 1) *
                          binomial(2 * n - k - 1, n - 1) *
                          binomial(2 * n + k - 1, 2 * k),
                      binomial(2 * k, k));
  return Rat(parity_sign(n + k) * n) * pow2(-(10 * n - 2 * k - 8)) * core;
}

bool check_telescoping(WZPairId pair, long n, long k) {
  if (n < 0 || k < 1) throw DomainError("check_telescoping: need n >= 0, k >= 1");
  Rat lhs = eval_F(pair, n, k - 1) - eval_F(pair, n, k);
  Rat rhs = eval_G(pair, n + 1, k) - eval_G(pair, n, k);
  return lhs == rhs;
}

BoundaryCheck boundary_identity(WZPairId pair, long p) {
  if (p < 1) throw DomainError("boundary_identity: need p >= 1");
  Rat lhs(0);
  for (long n = 0; n < p; ++n) lhs += eval_F(pair, n, 0);
  Rat rhs = eval_F(pair, p - 1, p - 1);
  for (long k = 1; k < p; ++k) rhs += eval_G(pair, p, k);
  return BoundaryCheck{lhs == rhs, std::move(lhs), std::move(rhs)};
}

FactoredResidue eval_F_fast(WZPairId pair, long n, long k, PrimePowerContext& ctx) {
  check_args(n, k);
  if (pair == WZPairId::Pair256) {
    FactoredResidue core = ctx.binomial(2 * n, n) *
                           ctx.binomial(2 * n + 2 * k, n + k) *
                           ctx.binomial(2 * n - 2 * k, n - k) *
                           ctx.binomial(n + k, n) / ctx.binomial(2 * k, k);
    return ctx.from_long(6 * n - 2 * k + 1) * ctx.pow2(-(8 * n - 2 * k)) * core;
  }
  FactoredResidue core = ctx.binomial(2 * n, n) *
                         ctx.binomial(4 * n + 2 * k, 2 * n + k) *
                         ctx.binomial(2 * n - k, n) *
                         ctx.binomial(2 * n + k, 2 * k) / ctx.binomial(2 * k, k);
  return ctx.from_long(parity_sign(n + k) * (20 * n - 2 * k + 3)) *
         ctx.pow2(-(10 * n - 2 * k)) * core;
}

FactoredResidue eval_G_fast(WZPairId pair, long n, long k, PrimePowerContext& ctx) {
  check_args(n, k);
  if (pair == WZPairId::Pair256) {
    FactoredResidue core = ctx.binomial(2 * n, n) *
                           ctx.binomial(2 * n + 2 * k, n + k) *
                           ctx.binomial(2 * n - 2 * k, n - k) *
                           ctx.binomial(n + k, n) /
                           (ctx.binomial(2 * k, k) * ctx.from_long(2 * n + 2 * k - 1));
    return ctx.from_long(n * n) * ctx.pow2(-(8 * n - 2 * k - 4)) * core;
  }
  FactoredResidue core = ctx.binomial(2 * n - 1, n - 1) *
                         ctx.binomial(4 * n + 2 * k - 2, 2 * n + k - 1) *
                         ctx.binomial(2 * n - k - 1, n - 1) *
                         ctx.binomial(2 * n + k - 1, 2 * k) / ctx.binomial(2 * k, k);
  return ctx.from_long(parity_sign(n + k) * n) *
         ctx.pow2(-(10 * n - 2 * k - 8)) * core;
}

}  // namespace wzcheck
