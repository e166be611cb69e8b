#include "wzcheck/factored_residue.hpp"

namespace wzcheck {

namespace {

void check_prec(int unit_prec) {
  if (unit_prec < 1) throw DomainError("FactoredResidue: unit_prec must be >= 1");
}

}  // namespace

FactoredResidue FactoredResidue::zero(long p) {
  if (p < 2) throw DomainError("FactoredResidue: need p >= 2");
  return FactoredResidue(p, true, 0, Int(0), 0);
}

FactoredResidue FactoredResidue::from_integer(const Int& x, long p, int unit_prec) {
  check_prec(unit_prec);
  if (x == 0) return zero(p);
  Int pz(p), stripped;
  auto v = mpz_remove(stripped.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  Int u = mod_floor(stripped, prime_power(p, unit_prec));
  return FactoredResidue(p, false, static_cast<long>(v), std::move(u), unit_prec);
}

FactoredResidue FactoredResidue::from_rational(const Rat& x, long p, int unit_prec) {
  check_prec(unit_prec);
  if (x == 0) return zero(p);
  FactoredResidue num = from_integer(x.get_num(), p, unit_prec);
  FactoredResidue den = from_integer(x.get_den(), p, unit_prec);
  return num / den;
}

FactoredResidue FactoredResidue::from_parts(long p, long v, Int unit, int unit_prec) {
  check_prec(unit_prec);
  if (p < 2) throw DomainError("FactoredResidue: need p >= 2");
  Int pk = prime_power(p, unit_prec);
  if (unit < 0 || unit >= pk || mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(p)))
    throw DomainError("FactoredResidue::from_parts: unit out of range or not a unit");
  return FactoredResidue(p, false, v, std::move(unit), unit_prec);
}

Valuation FactoredResidue::val() const {
  if (zero_) return Valuation::infinity();
  return Valuation(v_);
}

long FactoredResidue::finite_val() const {
  if (zero_) throw DomainError("FactoredResidue: valuation of exact zero is infinite");
  return v_;
}

const Int& FactoredResidue::unit() const {
  if (zero_) throw DomainError("FactoredResidue: exact zero has no unit");
  return u_;
}

int FactoredResidue::unit_precision() const {
  if (zero_) throw DomainError("FactoredResidue: exact zero has no unit digits");
  return k_;
}

Valuation FactoredResidue::abs_precision() const {
  if (zero_) return Valuation::infinity();
  return Valuation(v_ + k_);
}

Int FactoredResidue::residue(long m) const {
  if (m < 1) throw DomainError("FactoredResidue::residue: need m >= 1");
  if (zero_) return Int(0);
  if (v_ < 0)
    throw NegativeValuationError("FactoredResidue::residue: negative valuation");
  if (v_ >= m) return Int(0);
  if (v_ + k_ < m)
    throw PrecisionExhaustedError("FactoredResidue::residue: known modulo p^" +
                                  std::to_string(v_ + k_) + ", requested p^" +
                                  std::to_string(m));
  Int part = mod_floor(u_, prime_power(p_, m - v_));
  return part * prime_power(p_, v_);
}

void FactoredResidue::check_compatible(const FactoredResidue& a, const FactoredResidue& b) {
  if (a.p_ != b.p_)
    throw DomainError("FactoredResidue: mixed primes in one operation");
}

FactoredResidue FactoredResidue::operator-() const {
  if (zero_) return *this;
  Int pk = prime_power(p_, k_);
  return FactoredResidue(p_, false, v_, mod_floor(pk - u_, pk), k_);
}

FactoredResidue operator*(const FactoredResidue& a, const FactoredResidue& b) {
  FactoredResidue::check_compatible(a, b);
  if (a.zero_ || b.zero_) return FactoredResidue::zero(a.p_);
  int k = std::min(a.k_, b.k_);
  Int u = mod_floor(a.u_ * b.u_, prime_power(a.p_, k));
  return FactoredResidue(a.p_, false, a.v_ + b.v_, std::move(u), k);
}

FactoredResidue operator/(const FactoredResidue& a, const FactoredResidue& b) {
  FactoredResidue::check_compatible(a, b);
  if (b.zero_) throw DomainError("FactoredResidue: division by exact zero");
  if (a.zero_) return FactoredResidue::zero(a.p_);
  int k = std::min(a.k_, b.k_);
  Int pk = prime_power(a.p_, k);
  Int u = mod_floor(a.u_ * inverse_mod(b.u_, pk), pk);
  return FactoredResidue(a.p_, false, a.v_ - b.v_, std::move(u), k);
}

FactoredResidue operator+(const FactoredResidue& a, const FactoredResidue& b) {
  FactoredResidue::check_compatible(a, b);
  if (a.zero_) return b;
  if (b.zero_) return a;
  long v = std::min(a.v_, b.v_);
  long abs = std::min(a.v_ + a.k_, b.v_ + b.k_);
  long avail = abs - v;  // digits of the sum known past p^v; >= 1 always
  Int pa = prime_power(a.p_, avail);
  Int s = a.u_ * prime_power(a.p_, a.v_ - v) + b.u_ * prime_power(a.p_, b.v_ - v);
  s = mod_floor(s, pa);
  if (s == 0)
    throw PrecisionExhaustedError(
        "FactoredResidue: addition cancelled all " + std::to_string(avail) +
        " tracked digits at p=" + std::to_string(a.p_));
  Int pz(a.p_), stripped;
  auto t = static_cast<long>(mpz_remove(stripped.get_mpz_t(), s.get_mpz_t(), pz.get_mpz_t()));
  // s != 0 mod p^avail, so t < avail and at least one unit digit survives.
  Int u = mod_floor(stripped, prime_power(a.p_, avail - t));
  return FactoredResidue(a.p_, false, v + t, std::move(u), static_cast<int>(avail - t));
}

FactoredResidue operator-(const FactoredResidue& a, const FactoredResidue& b) {
  return a + (-b);
}

FactoredResidue FactoredResidue::pow(long e) const {
  if (zero_) {
    if (e <= 0) throw DomainError("FactoredResidue::pow: zero to a non-positive power");
    return *this;
  }
  Int pk = prime_power(p_, k_);
  Int u;
  Int ez(e);
  mpz_powm(u.get_mpz_t(), u_.get_mpz_t(), ez.get_mpz_t(), pk.get_mpz_t());
  return FactoredResidue(p_, false, v_ * e, std::move(u), k_);
}

}  // namespace wzcheck
