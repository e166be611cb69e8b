#include "wzcheck/rational.hpp"

#include <ostream>

namespace wzcheck {

std::string Valuation::str() const {
  if (inf_) return "inf";
  return std::to_string(v_);
}

std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.str(); }

Rat make_rat(Int num, Int den) {
  if (den == 0) throw DomainError("make_rat: zero denominator");
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

Int prime_power(long p, long k) {
  if (p < 2 || k < 0) throw DomainError("prime_power: need p >= 2, k >= 0");
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  return r;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m <= 0) throw DomainError("mod_floor: modulus must be positive");
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int inverse_mod(const Int& a, const Int& m) {
  if (m <= 0) throw DomainError("inverse_mod: modulus must be positive");
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("inverse_mod: argument not invertible");
  return r;
}

Valuation valuation(const Int& x, long p) {
  if (p < 2) throw DomainError("valuation: need p >= 2");
  if (x == 0) return Valuation::infinity();
  Int pz(p), stripped;
  auto count = mpz_remove(stripped.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return Valuation(static_cast<long>(count));
}

Valuation valuation(const Rat& x, long p) {
  if (x == 0) return Valuation::infinity();
  Valuation vn = valuation(x.get_num(), p);
  Valuation vd = valuation(x.get_den(), p);
  return Valuation(vn.finite() - vd.finite());
}

Int reduce_mod(const Rat& x, long p, long k) {
  if (k < 1) throw DomainError("reduce_mod: need k >= 1");
  if (!valuation(x, p).at_least(0))
    throw NegativeValuationError("reduce_mod: negative valuation at p=" +
                                 std::to_string(p));
  Int pk = prime_power(p, k);
  Int num = mod_floor(x.get_num(), pk);
  Int den = mod_floor(x.get_den(), pk);
  return mod_floor(num * inverse_mod(den, pk), pk);
}

bool congruent(const Rat& a, const Rat& b, long p, long k) {
  return valuation(Rat(a - b), p).at_least(k);
}

Rat pow2(long e) {
  Rat r;
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), Rat(1).get_mpq_t(), static_cast<unsigned long>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), Rat(1).get_mpq_t(), static_cast<unsigned long>(-e));
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace wzcheck
