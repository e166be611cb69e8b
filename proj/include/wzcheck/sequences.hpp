#pragma once

#include <vector>

#include "wzcheck/factored_residue.hpp"
#include "wzcheck/rational.hpp"

namespace wzcheck {

/// Euler numbers E_0..E_n_max (integer convention: E_0 = 1, E_2 = -1,
/// E_4 = 5, E_6 = -61, odd indices zero), by the recurrence
/// E_n = -sum_{k=1}^{floor(n/2)} C(n, 2k) E_{n-2k}.
std::vector<Int> euler_numbers(long n_max);

/// E_n mod p in [0, p), by the same recurrence carried out mod p.
/// Adequate for n, p up to a few tens of thousands.
long euler_mod(long n, long p);

struct HarmonicPair {
  Rat h1;  // sum_{i=1}^{n} 1/i
  Rat h2;  // sum_{i=1}^{n} 1/i^2
};

/// Partial harmonic sums; n >= 0 (empty sum is zero).
HarmonicPair harmonic(long n);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); n >= 0.
Rat pochhammer(const Rat& a, long n);

/// Binomial coefficient with integer arguments of any sign:
/// zero when k < 0 or (n >= 0 and k > n); for n < 0 the reflection
/// C(n, k) = (-1)^k C(k - n - 1, k).
Int binomial(long n, long k);

/// (4n)! / n!^4; n >= 0.
Int multinomial4(long n);

/// Fermat quotient (2^(p-1) - 1) / p; p an odd prime.
Int fermat_quotient(long p);

/// Per-prime cache of factored factorials n! = p^v * u with the unit held
/// modulo p^unit_prec.  The table grows on demand and is not thread-safe;
/// use one context per worker.
class PrimePowerContext {
 public:
  PrimePowerContext(long p, int unit_prec);

  long prime() const { return p_; }
  int unit_prec() const { return prec_; }
  const Int& modulus() const { return pk_; }

  /// n! in factored form; n >= 0.
  FactoredResidue factorial(long n);

  /// Binomial with the same sign conventions as wzcheck::binomial.
  FactoredResidue binomial(long n, long k);

  /// 2^e in factored form, e of any sign.
  FactoredResidue pow2(long e);

  FactoredResidue from_long(long x);
  FactoredResidue from_integer(const Int& x);
  FactoredResidue from_rational(const Rat& x);

 private:
  void grow(long n);

  long p_;
  int prec_;
  Int pk_;
  std::vector<long> fact_v_;
  std::vector<Int> fact_u_;
};

/// One-shot conveniences over a throwaway context.
FactoredResidue factored_factorial(long n, long p, int unit_prec);
FactoredResidue factored_binomial(long n, long k, long p, int unit_prec);

}  // namespace wzcheck
