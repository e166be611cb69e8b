#include <doctest.h>

#include "wzcheck/wz_pair.hpp"

using namespace wzcheck;

TEST_CASE("pair 256 small values") {
  CHECK(eval_F(WZPairId::Pair256, 0, 0) == Rat(1));
  CHECK(eval_F(WZPairId::Pair256, 1, 0) == Rat(7, 32));
  CHECK(eval_F(WZPairId::Pair256, 1, 1) == Rat(15, 16));
  CHECK(eval_G(WZPairId::Pair256, 1, 1) == Rat(1));
  CHECK(eval_G(WZPairId::Pair256, 2, 1) == Rat(9, 32));
  CHECK(eval_G(WZPairId::Pair256, 0, 1) == Rat(0));
  CHECK(eval_F(WZPairId::Pair256, 2, 3) == Rat(0));
}

TEST_CASE("pair 1024 small values") {
  CHECK(eval_F(WZPairId::Pair1024, 0, 0) == Rat(3));
  CHECK(eval_F(WZPairId::Pair1024, 1, 0) == Rat(-69, 128));
  CHECK(eval_F(WZPairId::Pair1024, 1, 1) == Rat(315, 64));
  CHECK(eval_G(WZPairId::Pair1024, 2, 1) == Rat(-315, 128));
  CHECK(eval_G(WZPairId::Pair1024, 0, 2) == Rat(0));
}

TEST_CASE("telescoping identity by direct difference") {
  CHECK(eval_F(WZPairId::Pair256, 1, 0) - eval_F(WZPairId::Pair256, 1, 1) == Rat(-23, 32));
  CHECK(eval_G(WZPairId::Pair256, 2, 1) - eval_G(WZPairId::Pair256, 1, 1) == Rat(-23, 32));
  for (long n = 0; n <= 12; ++n)
    for (long k = 1; k <= 12; ++k) {
      CHECK(check_telescoping(WZPairId::Pair256, n, k));
      CHECK(check_telescoping(WZPairId::Pair1024, n, k));
    }
}

TEST_CASE("boundary identity holds for every integer p, prime or not") {
  BoundaryCheck b256 = boundary_identity(WZPairId::Pair256, 2);
  CHECK(b256.holds);
  CHECK(b256.lhs == Rat(39, 32));
  BoundaryCheck b1024 = boundary_identity(WZPairId::Pair1024, 2);
  CHECK(b1024.holds);
  CHECK(b1024.lhs == Rat(315, 128));
  for (long p = 1; p <= 12; ++p) {
    CHECK(boundary_identity(WZPairId::Pair256, p).holds);
    CHECK(boundary_identity(WZPairId::Pair1024, p).holds);
  }
}

namespace {

// The factored form matches the exact rational: same valuation, same unit.
void check_factored_matches(const Rat& exact, const FactoredResidue& fast, long p) {
  if (exact == 0) {
    CHECK(fast.is_zero());
    return;
  }
  REQUIRE(fast.val() == valuation(exact, p));
  long v = fast.finite_val();
  Rat unit_part = v >= 0 ? Rat(exact / Rat(prime_power(p, v)))
                         : Rat(exact * Rat(prime_power(p, -v)));
  CHECK(fast.unit() == reduce_mod(unit_part, p, fast.unit_precision()));
}

}  // namespace

TEST_CASE("fast pair members agree with the exact ones") {
  PrimePowerContext ctx(7, 6);
  for (WZPairId pair : {WZPairId::Pair256, WZPairId::Pair1024})
    for (long n = 0; n <= 6; ++n)
      for (long k = 0; k <= 6; ++k) {
        check_factored_matches(eval_F(pair, n, k), eval_F_fast(pair, n, k, ctx), 7);
        if (k >= 1) check_factored_matches(eval_G(pair, n, k), eval_G_fast(pair, n, k, ctx), 7);
      }
}
