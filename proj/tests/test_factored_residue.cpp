#include <doctest.h>

#include "wzcheck/factored_residue.hpp"

using namespace wzcheck;

TEST_CASE("from_integer splits off the prime part") {
  FactoredResidue x = FactoredResidue::from_integer(Int(250), 5, 4);
  CHECK(x.finite_val() == 3);
  CHECK(x.unit() == 2);
  CHECK(x.unit_precision() == 4);
  CHECK(x.abs_precision() == Valuation(7));
  CHECK(x.residue(4) == 250);

  FactoredResidue z = FactoredResidue::from_integer(Int(0), 5, 4);
  CHECK(z.is_zero());
  CHECK(z.val().is_infinite());
  CHECK(z.abs_precision().is_infinite());
  CHECK(z.residue(3) == 0);
}

TEST_CASE("from_rational inverts the denominator unit") {
  FactoredResidue x = FactoredResidue::from_rational(Rat(22, 9), 5, 4);
  CHECK(x.finite_val() == 0);
  CHECK(x.unit() == 558);
  CHECK(x.residue(4) == 558);
  CHECK(x.residue(2) == 8);

  FactoredResidue neg = FactoredResidue::from_rational(Rat(7, 32), 2, 6);
  CHECK(neg.finite_val() == -5);
  CHECK_THROWS_AS(neg.residue(1), NegativeValuationError);
}

TEST_CASE("from_parts validates the unit") {
  FactoredResidue x = FactoredResidue::from_parts(5, 2, Int(3), 4);
  CHECK(x.finite_val() == 2);
  CHECK(x.unit() == 3);
  CHECK_THROWS_AS(FactoredResidue::from_parts(5, 0, Int(10), 4), DomainError);
  CHECK_THROWS_AS(FactoredResidue::from_parts(5, 0, Int(-1), 4), DomainError);
  CHECK_THROWS_AS(FactoredResidue::from_parts(5, 0, Int(625), 4), DomainError);
}

TEST_CASE("residue respects precision bounds") {
  FactoredResidue x = FactoredResidue::from_parts(5, 1, Int(3), 4);
  CHECK(x.residue(5) == 5 * 3);
  CHECK_THROWS_AS(x.residue(6), PrecisionExhaustedError);
  CHECK(x.residue(1) == 0);
}

TEST_CASE("multiplication and division are lossless on valuation") {
  FactoredResidue a = FactoredResidue::from_rational(Rat(22, 9), 5, 4);
  FactoredResidue b = FactoredResidue::from_rational(Rat(9, 22), 5, 4);
  FactoredResidue one = a * b;
  CHECK(one.finite_val() == 0);
  CHECK(one.unit() == 1);

  FactoredResidue q = FactoredResidue::from_integer(Int(250), 5, 4) /
                      FactoredResidue::from_integer(Int(10), 5, 4);
  CHECK(q.finite_val() == 2);
  CHECK(q.residue(3) == 25);
  CHECK_THROWS_AS(a / FactoredResidue::zero(5), DomainError);
  CHECK((FactoredResidue::zero(5) / a).is_zero());
}

TEST_CASE("addition renormalizes after cancellation") {
  FactoredResidue a = FactoredResidue::from_parts(5, 1, Int(3), 4);
  FactoredResidue b = FactoredResidue::from_parts(5, 1, Int(122), 4);
  FactoredResidue s = a + b;  // 5*(3+122) = 5^4
  CHECK(s.finite_val() == 4);
  CHECK(s.unit() == 1);
  CHECK(s.unit_precision() == 1);

  FactoredResidue c = FactoredResidue::from_parts(5, 1, Int(622), 4);
  CHECK_THROWS_AS(a + c, PrecisionExhaustedError);  // 3+622 = 5^4, nothing survives
  CHECK_THROWS_AS(a - a, PrecisionExhaustedError);

  CHECK((a + FactoredResidue::zero(5)).unit() == 3);
  CHECK((FactoredResidue::zero(5) + a).unit() == 3);
}

TEST_CASE("negation and subtraction") {
  FactoredResidue a = FactoredResidue::from_integer(Int(7), 5, 4);
  FactoredResidue d = FactoredResidue::from_integer(Int(10), 5, 4) - a;
  CHECK(d.finite_val() == 0);
  CHECK(d.residue(4) == 3);
  CHECK((-a).residue(4) == 625 - 7);
  CHECK((-FactoredResidue::zero(5)).is_zero());
}

TEST_CASE("pow") {
  FactoredResidue a = FactoredResidue::from_parts(5, 1, Int(2), 4);
  FactoredResidue cube = a.pow(3);
  CHECK(cube.finite_val() == 3);
  CHECK(cube.unit() == 8);
  CHECK(a.pow(0).unit() == 1);
  CHECK(a.pow(0).finite_val() == 0);
  FactoredResidue inv = a.pow(-1);
  CHECK(inv.finite_val() == -1);
  CHECK((inv * a).unit() == 1);
  CHECK_THROWS_AS(FactoredResidue::zero(5).pow(0), DomainError);
  CHECK(FactoredResidue::zero(5).pow(2).is_zero());
}

TEST_CASE("mixed primes are rejected") {
  FactoredResidue a = FactoredResidue::from_integer(Int(3), 5, 4);
  FactoredResidue b = FactoredResidue::from_integer(Int(3), 7, 4);
  CHECK_THROWS_AS(a * b, DomainError);
  CHECK_THROWS_AS(a + b, DomainError);
}
