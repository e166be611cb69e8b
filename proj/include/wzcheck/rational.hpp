#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "wzcheck/errors.hpp"

namespace wzcheck {

using Int = mpz_class;
using Rat = mpq_class;

/// p-adic valuation: either a finite integer or +infinity (the valuation
/// of zero).  Infinity compares greater than every finite value and is
/// absorbing under addition.
class Valuation {
 public:
  constexpr Valuation() : inf_(false), v_(0) {}
  constexpr explicit Valuation(long v) : inf_(false), v_(v) {}

  static constexpr Valuation infinity() {
    Valuation r;
    r.inf_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return inf_; }

  /// Finite value; must not be called on infinity.
  long finite() const {
    if (inf_) throw Error("Valuation::finite called on infinity");
    return v_;
  }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr bool operator!=(Valuation a, Valuation b) { return !(a == b); }
  friend constexpr bool operator<(Valuation a, Valuation b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator>(Valuation a, Valuation b) { return b < a; }
  friend constexpr bool operator<=(Valuation a, Valuation b) { return !(b < a); }
  friend constexpr bool operator>=(Valuation a, Valuation b) { return !(a < b); }

  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.inf_ || b.inf_) return infinity();
    return Valuation(a.v_ + b.v_);
  }

  friend constexpr Valuation min(Valuation a, Valuation b) { return a < b ? a : b; }

  /// "v >= k" for a plain integer threshold, valid for infinite v.
  constexpr bool at_least(long k) const { return inf_ || v_ >= k; }

  /// Render as decimal digits, or "inf".
  std::string str() const;

 private:
  bool inf_;
  long v_;
};

std::ostream& operator<<(std::ostream& os, Valuation v);

/// Canonical rational num/den in lowest terms with positive denominator.
/// Throws DomainError when den == 0.
Rat make_rat(Int num, Int den);

/// p^k for k >= 0.
Int prime_power(long p, long k);

/// Representative of a mod m in [0, m); m > 0.
Int mod_floor(const Int& a, const Int& m);

/// Inverse of a mod m; throws DomainError when gcd(a, m) != 1.
Int inverse_mod(const Int& a, const Int& m);

/// Exact p-adic valuation; infinity for x == 0.  Requires p >= 2.
Valuation valuation(const Int& x, long p);
Valuation valuation(const Rat& x, long p);

/// Residue of x modulo p^k in [0, p^k), defined whenever the denominator
/// of x is invertible mod p.  Throws NegativeValuationError when
/// valuation(x, p) < 0.  k >= 1.
Int reduce_mod(const Rat& x, long p, long k);

/// True iff valuation(a - b, p) >= k.
bool congruent(const Rat& a, const Rat& b, long p, long k);

/// 2^e as an exact rational, for any sign of e.
Rat pow2(long e);

/// Deterministic trial-division primality test for small n.
bool is_prime(long n);

}  // namespace wzcheck
