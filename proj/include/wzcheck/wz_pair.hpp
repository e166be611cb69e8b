#pragma once

#include "wzcheck/sequences.hpp"

namespace wzcheck {

/// The two certified pairs, named for the power of two in their
/// normalizing factor: 2^8 = 256 and 4^5 = 1024.
enum class WZPairId { Pair256, Pair1024 };

/// Exact pair members; n, k >= 0.  Both vanish whenever n < k, and
/// G(0, k) = 0, as a consequence of the binomial conventions.
Rat eval_F(WZPairId pair, long n, long k);
Rat eval_G(WZPairId pair, long n, long k);

/// F(n, k-1) - F(n, k) == G(n+1, k) - G(n, k), exactly; n >= 0, k >= 1.
bool check_telescoping(WZPairId pair, long n, long k);

struct BoundaryCheck {
  bool holds;  // lhs == rhs exactly
  Rat lhs;     // sum_{n=0}^{p-1} F(n, 0)
  Rat rhs;     // F(p-1, p-1) + sum_{k=1}^{p-1} G(p, k)
};

/// Both sides of the summed telescoping identity; p >= 1, any integer.
BoundaryCheck boundary_identity(WZPairId pair, long p);

/// Factored-form pair members over a shared per-prime cache.
FactoredResidue eval_F_fast(WZPairId pair, long n, long k, PrimePowerContext& ctx);
FactoredResidue eval_G_fast(WZPairId pair, long n, long k, PrimePowerContext& ctx);

}  // namespace wzcheck
