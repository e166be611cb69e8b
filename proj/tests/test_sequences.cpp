#include <doctest.h>

#include "wzcheck/sequences.hpp"

using namespace wzcheck;

TEST_CASE("euler numbers, exact and mod p") {
  std::vector<Int> e = euler_numbers(10);
  std::vector<long> want = {1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521};
  REQUIRE(e.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) CHECK(e[i] == want[i]);

  CHECK(euler_mod(2, 5) == 4);
  for (long n : {0L, 2L, 4L, 6L, 8L, 10L})
    for (long p : {5L, 7L, 13L}) CHECK(Int(euler_mod(n, p)) == mod_floor(e[n], Int(p)));
  CHECK(euler_mod(3, 7) == 0);
}

TEST_CASE("harmonic sums") {
  CHECK(harmonic(0).h1 == Rat(0));
  CHECK(harmonic(0).h2 == Rat(0));
  CHECK(harmonic(4).h1 == Rat(25, 12));
  CHECK(harmonic(2).h2 == Rat(5, 4));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rat(1, 2), 0) == Rat(1));
  CHECK(pochhammer(Rat(1, 2), 2) == Rat(3, 4));
  CHECK(pochhammer(Rat(-3), 5) == Rat(0));
}

TEST_CASE("binomial covers negative upper index") {
  CHECK(binomial(-5, 2) == 15);
  CHECK(binomial(-1, 1) == -1);
  CHECK(binomial(-3, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(6, 3) == 20);
}

TEST_CASE("Pascal rule holds for all integer arguments") {
  for (long n = -8; n <= 8; ++n)
    for (long k = -8; k <= 8; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("central binomial bridge to the half-integer pochhammer") {
  // (1/2)_k / k! == C(2k, k) / 4^k
  Rat fact(1);
  for (long k = 0; k <= 12; ++k) {
    if (k > 0) fact *= k;
    CHECK(pochhammer(Rat(1, 2), k) / fact == Rat(binomial(2 * k, k)) / pow2(2 * k));
  }
}

TEST_CASE("multinomial4") {
  CHECK(multinomial4(0) == 1);
  CHECK(multinomial4(1) == 24);
  CHECK(multinomial4(2) == 2520);
}

TEST_CASE("fermat_quotient") {
  CHECK(fermat_quotient(3) == 1);
  CHECK(fermat_quotient(5) == 3);
  CHECK(fermat_quotient(7) == 9);
}

TEST_CASE("factored factorials match plain factorials") {
  FactoredResidue f10 = factored_factorial(10, 5, 4);
  CHECK(f10.finite_val() == 2);
  CHECK(f10.unit() == 152);
  FactoredResidue f5 = factored_factorial(5, 5, 4);
  CHECK(f5.finite_val() == 1);
  CHECK(f5.unit() == 24);

  Int plain(1);
  PrimePowerContext ctx(7, 5);
  for (long n = 0; n <= 30; ++n) {
    if (n > 0) plain *= n;
    FactoredResidue f = ctx.factorial(n);
    CHECK(valuation(plain, 7) == f.val());
    CHECK(f.residue(5) == mod_floor(plain, prime_power(7, 5)));
  }
}

TEST_CASE("context binomial and pow2 agree with the exact versions") {
  PrimePowerContext ctx(5, 6);
  for (long n = 0; n <= 12; ++n)
    for (long k = -2; k <= n + 2; ++k) {
      Int exact = binomial(n, k);
      FactoredResidue fast = ctx.binomial(n, k);
      if (exact == 0) {
        CHECK(fast.is_zero());
      } else {
        CHECK(fast.val() == valuation(exact, 5));
        CHECK(fast.residue(6) == mod_floor(exact, prime_power(5, 6)));
      }
    }
  CHECK((ctx.pow2(-3) * ctx.pow2(3)).unit() == 1);
  CHECK(ctx.pow2(-3).finite_val() == 0);
  CHECK(ctx.from_rational(Rat(22, 9)).unit() ==
        FactoredResidue::from_rational(Rat(22, 9), 5, 6).unit());
}

TEST_CASE("context binomial reflects negative upper index") {
  PrimePowerContext ctx(7, 6);
  for (long n = -6; n < 0; ++n)
    for (long k = 0; k <= 6; ++k) {
      Int exact = binomial(n, k);
      FactoredResidue fast = ctx.binomial(n, k);
      if (exact == 0) {
        CHECK(fast.is_zero());
      } else {
        CHECK(fast.val() == valuation(exact, 7));
        CHECK(fast.residue(6) == mod_floor(exact, prime_power(7, 6)));
      }
    }
}
