#pragma once

#include "wzcheck/rational.hpp"

namespace wzcheck {

/// Unit digits carried by default: enough for checks modulo p^4 with two
/// digits of slack against cancellation in additions.
inline constexpr int kDefaultUnitPrecision = 6;

/// A p-adic approximation in factored form p^v * u, where u is a unit
/// known modulo p^k (k >= 1 "unit digits").  The valuation v is exact;
/// the absolute precision v + k is the exponent a such that the value is
/// known modulo p^a.  Exact zero is a distinguished state with infinite
/// absolute precision.
///
/// Multiplication and division are lossless on valuation and keep
/// min(k1, k2) unit digits.  Addition aligns both operands to the smaller
/// valuation, adds modulo the surviving power of p, and renormalizes; the
/// digits lost to cancellation are gone, and when none survive the
/// operation throws PrecisionExhaustedError.
class FactoredResidue {
 public:
  static FactoredResidue zero(long p);

  /// Decompose an integer or rational as p^v * u.  unit_prec >= 1.
  static FactoredResidue from_integer(const Int& x, long p, int unit_prec);
  static FactoredResidue from_rational(const Rat& x, long p, int unit_prec);

  /// Assemble from parts; unit must satisfy 0 <= unit < p^unit_prec and
  /// gcd(unit, p) == 1.
  static FactoredResidue from_parts(long p, long v, Int unit, int unit_prec);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }

  /// Exact valuation; infinity for the zero state.
  Valuation val() const;

  /// Valuation as a plain integer; must not be zero.
  long finite_val() const;

  /// Unit residue in [0, p^unit_precision); must not be zero.
  const Int& unit() const;

  /// Count of tracked unit digits; must not be zero.
  int unit_precision() const;

  /// v + k, infinite for zero.
  Valuation abs_precision() const;

  /// Value modulo p^m in [0, p^m), for m >= 1.  Requires valuation >= 0
  /// (NegativeValuationError) and abs_precision >= m
  /// (PrecisionExhaustedError).
  Int residue(long m) const;

  FactoredResidue operator-() const;
  friend FactoredResidue operator*(const FactoredResidue& a, const FactoredResidue& b);
  friend FactoredResidue operator/(const FactoredResidue& a, const FactoredResidue& b);
  friend FactoredResidue operator+(const FactoredResidue& a, const FactoredResidue& b);
  friend FactoredResidue operator-(const FactoredResidue& a, const FactoredResidue& b);

  /// Integer power; pow(0) is the unit 1 with this value's precision.
  FactoredResidue pow(long e) const;

 private:
  FactoredResidue(long p, bool zero, long v, Int u, int k)
      : p_(p), zero_(zero), v_(v), u_(std::move(u)), k_(k) {}

  static void check_compatible(const FactoredResidue& a, const FactoredResidue& b);

  long p_;
  bool zero_;
  long v_;  // meaningful only when !zero_
  Int u_;   // meaningful only when !zero_
  int k_;   // meaningful only when !zero_
};

}  // namespace wzcheck
