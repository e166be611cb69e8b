#include "wzcheck/sequences.hpp"

namespace wzcheck {

std::vector<Int> euler_numbers(long n_max) {
  if (n_max < 0) throw DomainError("euler_numbers: need n_max >= 0");
  std::vector<Int> e(static_cast<size_t>(n_max) + 1);
  e[0] = 1;
  for (long n = 1; n <= n_max; ++n) {
    Int acc = 0;
    Int binom = 1;  // C(n, 2k), advanced incrementally over k
    for (long k = 1; 2 * k <= n; ++k) {
      binom *= (n - 2 * k + 2) * (n - 2 * k + 1);
      binom /= (2 * k - 1) * (2 * k);
      acc += binom * e[static_cast<size_t>(n - 2 * k)];
    }
    e[static_cast<size_t>(n)] = -acc;
  }
  return e;
}

long euler_mod(long n, long p) {
  if (n < 0 || p < 2) throw DomainError("euler_mod: need n >= 0, p >= 2");
  std::vector<long> e(static_cast<size_t>(n) + 1, 0);
  std::vector<long> row(static_cast<size_t>(n) + 1, 0);  // C(m, j) mod p
  e[0] = 1;
  row[0] = 1;
  for (long m = 1; m <= n; ++m) {
    row[static_cast<size_t>(m)] = 1;
    for (long j = m - 1; j >= 1; --j)
      row[static_cast<size_t>(j)] = (row[static_cast<size_t>(j)] + row[static_cast<size_t>(j - 1)]) % p;
    long acc = 0;
    for (long k = 1; 2 * k <= m; ++k)
      acc = (acc + row[static_cast<size_t>(2 * k)] * e[static_cast<size_t>(m - 2 * k)]) % p;
    e[static_cast<size_t>(m)] = (p - acc) % p;
  }
  return e[static_cast<size_t>(n)];
}

HarmonicPair harmonic(long n) {
  if (n < 0) throw DomainError("harmonic: need n >= 0");
  HarmonicPair h{Rat(0), Rat(0)};
  for (long i = 1; i <= n; ++i) {
    h.h1 += make_rat(Int(1), Int(i));
    h.h2 += make_rat(Int(1), Int(i) * Int(i));
  }
  return h;
}

Rat pochhammer(const Rat& a, long n) {
  if (n < 0) throw DomainError("pochhammer: need n >= 0");
  Rat r(1);
  Rat t(a);
  for (long i = 0; i < n; ++i) {
    r *= t;
    t += 1;
  }
  return r;
}

Int binomial(long n, long k) {
  if (k < 0) return Int(0);
  if (n >= 0) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // n < 0: C(n, k) = (-1)^k C(k - n - 1, k), and k - n - 1 >= k >= 0.
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : Int(-r);
}

Int multinomial4(long n) {
  if (n < 0) throw DomainError("multinomial4: need n >= 0");
  Int num, den;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(4 * n));
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(n));
  Int d4 = den * den;
  d4 *= d4;
  Int r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), d4.get_mpz_t());
  return r;
}

Int fermat_quotient(long p) {
  if (p < 3 || !is_prime(p))
    throw DomainError("fermat_quotient: need an odd prime");
  Int t;
  mpz_ui_pow_ui(t.get_mpz_t(), 2, static_cast<unsigned long>(p - 1));
  t -= 1;
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), Int(p).get_mpz_t());
  if (r != 0) throw DomainError("fermat_quotient: p does not divide 2^(p-1) - 1");
  return q;
}

PrimePowerContext::PrimePowerContext(long p, int unit_prec)
    : p_(p), prec_(unit_prec), pk_(prime_power(p, unit_prec)) {
  if (p < 2) throw DomainError("PrimePowerContext: need p >= 2");
  if (unit_prec < 1) throw DomainError("PrimePowerContext: need unit_prec >= 1");
  fact_v_.push_back(0);
  fact_u_.push_back(Int(1));
}

void PrimePowerContext::grow(long n) {
  while (static_cast<long>(fact_v_.size()) <= n) {
    long i = static_cast<long>(fact_v_.size());
    long e = 0;
    long rest = i;
    while (rest % p_ == 0) {
      rest /= p_;
      ++e;
    }
    fact_v_.push_back(fact_v_.back() + e);
    fact_u_.push_back(mod_floor(fact_u_.back() * rest, pk_));
  }
}

FactoredResidue PrimePowerContext::factorial(long n) {
  if (n < 0) throw DomainError("PrimePowerContext::factorial: need n >= 0");
  grow(n);
  return FactoredResidue::from_parts(p_, fact_v_[static_cast<size_t>(n)],
                                     fact_u_[static_cast<size_t>(n)], prec_);
}

FactoredResidue PrimePowerContext::binomial(long n, long k) {
  if (k < 0) return FactoredResidue::zero(p_);
  if (n >= 0) {
    if (k > n) return FactoredResidue::zero(p_);
    return factorial(n) / (factorial(k) * factorial(n - k));
  }
  FactoredResidue b = binomial(k - n - 1, k);
  return (k % 2 == 0) ? b : -b;
}

FactoredResidue PrimePowerContext::pow2(long e) {
  if (p_ == 2) {
    return e == 0 ? from_long(1)
                  : FactoredResidue::from_parts(2, e, Int(1), prec_);
  }
  Int u;
  Int ez(e);
  mpz_powm(u.get_mpz_t(), Int(2).get_mpz_t(), ez.get_mpz_t(), pk_.get_mpz_t());
  return FactoredResidue::from_parts(p_, 0, std::move(u), prec_);
}

FactoredResidue PrimePowerContext::from_long(long x) {
  return FactoredResidue::from_integer(Int(x), p_, prec_);
}

FactoredResidue PrimePowerContext::from_integer(const Int& x) {
  return FactoredResidue::from_integer(x, p_, prec_);
}

FactoredResidue PrimePowerContext::from_rational(const Rat& x) {
  return FactoredResidue::from_rational(x, p_, prec_);
}

FactoredResidue factored_factorial(long n, long p, int unit_prec) {
  PrimePowerContext ctx(p, unit_prec);
  return ctx.factorial(n);
}

FactoredResidue factored_binomial(long n, long k, long p, int unit_prec) {
  PrimePowerContext ctx(p, unit_prec);
  return ctx.binomial(n, k);
}

}  // namespace wzcheck
