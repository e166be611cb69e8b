#include "wzcheck/claims.hpp"

#include <algorithm>
#include <optional>

namespace wzcheck {

namespace {

enum class Kind {
  Thm1, Thm2, VanHamme, WolstH1, WolstH2, Binom2p1p, Cxh3k1, Sun4k1, GuoLiu,
  Zudilin, SunIjm, Long6n1, L21, Jacobsthal, L22, L23, SunKBinom, L24,
  ZhSunH, ZhSunH2, L25a, L25b, L26a, L26b, L27, L28, H2kHk, L31, L32, L33, L34,
};

struct Row {
  Kind kind;
  Claim claim;
};

const std::vector<Row>& rows() {
  static const std::vector<Row> r = [] {
    auto gt3 = PrimeDomain::PrimeGreaterThan3;
    auto odd = PrimeDomain::OddPrime;
    auto alln = PrimeDomain::AllN;
    std::vector<Row> v;
    auto add = [&v](Kind k, std::string id, PrimeDomain d, int m, bool multi,
                    std::string stmt, std::string src) {
      v.push_back(Row{k, Claim{std::move(id), d, m, multi, std::move(stmt), std::move(src)}});
    };
    add(Kind::Thm1, "thm1", gt3, 4, false,
        "sum_{n=0}^{p-1} (6n+1) C(2n,n)^3 / 256^n == p(-1)^((p-1)/2) - p^3 E_{p-3} (mod p^4)",
        "conjecture of Z.-W. Sun");
    add(Kind::Thm2, "thm2", odd, 4, false,
        "sum_{n=0}^{p-1} (20n+3) (4n)!/n!^4 / (-1024)^n == 3p(-1)^((p-1)/2) + 3p^3 E_{p-3} (mod p^4)",
        "conjecture of Z.-W. Sun");
    add(Kind::VanHamme, "vanhamme-4k1", odd, 3, false,
        "sum_{k=0}^{(p-1)/2} (4k+1)(-1)^k ((1/2)_k / k!)^3 == p(-1)^((p-1)/2) (mod p^3)",
        "van Hamme; proved by Zudilin");
    add(Kind::WolstH1, "wolstenholme-h1", gt3, 2, false,
        "H_{p-1} == 0 (mod p^2)", "Wolstenholme (1862)");
    add(Kind::WolstH2, "wolstenholme-h2", gt3, 1, false,
        "H2_{p-1} == 0 (mod p)", "Wolstenholme (1862)");
    add(Kind::Binom2p1p, "binom-2p1p", gt3, 3, false,
        "C(2p-1, p-1) == 1 (mod p^3)", "Wolstenholme (1862)");
    add(Kind::Cxh3k1, "cxh-3k1", gt3, 4, false,
        "sum_{k=0}^{p-1} (3k+1) C(2k,k)^3 / (-8)^k == p(-1)^((p-1)/2) + p^3 E_{p-3} (mod p^4)",
        "Chen, Xie and He");
    add(Kind::Sun4k1, "sun-4k1", gt3, 4, false,
        "sum_{k=0}^{p-1} (4k+1) C(2k,k)^3 / (-64)^k == p(-1)^((p-1)/2) + p^3 E_{p-3} (mod p^4)",
        "Z.-W. Sun");
    add(Kind::GuoLiu, "guoliu", gt3, 4, false,
        "sum_{k=0}^{(p+1)/2} (-1)^k (4k-1) (-1/2)_k^3 / (1)_k^3 == p(-1)^((p+1)/2) + p^3 (2 - E_{p-3}) (mod p^4)",
        "Guo and Liu");
    add(Kind::Zudilin, "zudilin-20n3", odd, 3, false,
        "sum_{n=0}^{p-1} (20n+3) (1/2)_n (1/2)_{2n} / (n!^3 (-16)^n) == 3p(-1)^((p-1)/2) (mod p^3)",
        "Zudilin (2009)");
    add(Kind::SunIjm, "sun-ijm-20k3", gt3, 4, false,
        "sum_{k=0}^{(p-1)/2} (20k+3) (4k)!/k!^4 / (-1024)^k == p(-1)^((p-1)/2) (2^(p-1) + 2 - (2^(p-1) - 1)^2) (mod p^4)",
        "Z.-W. Sun");
    add(Kind::Long6n1, "long-6n1", gt3, 4, false,
        "sum_{n=0}^{(p-1)/2} (6n+1) C(2n,n)^3 / 256^n == p(-1)^((p-1)/2) (mod p^4)",
        "van Hamme; proved by Long");
    add(Kind::L21, "lemma21-Fdiag", gt3, 4, false,
        "F256(p-1, p-1) == -3p^2 - 12p^3 + 18p^3 q_p(2) (mod p^4)",
        "diagonal value of the 256-pair");
    add(Kind::Jacobsthal, "jacobsthal", gt3, 4, true,
        "C(a p^r, b p^s) / C(a p^(r-1), b p^(s-1)) == 1 (mod p^(r+s+min(r,s))), grid 1 <= b < a <= 6, r,s in {1,2}",
        "Jacobsthal");
    add(Kind::L22, "lemma22-sunimp", gt3, 1, false,
        "sum_{k=1}^{(p-1)/2} 4^k / (k (2k-1) C(2k,k)) == 2 E_{p-3} (mod p)",
        "Z.-W. Sun");
    add(Kind::L23, "lemma23-Ghalf", gt3, 4, false,
        "sum_{k=1}^{(p-1)/2} G256(p,k) == -p^3 E_{p-3} (mod p^4)",
        "lower half-sum of G for the 256-pair");
    add(Kind::SunKBinom, "sun-kbinom", odd, 2, true,
        "k C(2k,k) C(2(p-k), p-k) == (-1)^(floor(2k/p)-1) 2p (mod p^2), 1 <= k <= p-1",
        "Z.-W. Sun");
    add(Kind::L24, "lemma24-Gmid", gt3, 4, false,
        "G256(p, (p+1)/2) == p(-1)^((p-1)/2) (1 - 3p q_p(2) + 6p^2 q_p(2)^2) (mod p^4)",
        "middle term of G for the 256-pair");
    add(Kind::ZhSunH, "zhsun-h", gt3, 2, false,
        "H_{(p-1)/2} == -2 q_p(2) + p q_p(2)^2 (mod p^2)", "Z.-H. Sun");
    add(Kind::ZhSunH2, "zhsun-h2", gt3, 1, false,
        "H2_{(p-1)/2} == 0 (mod p)", "Z.-H. Sun");
    add(Kind::L25a, "lemma25a", gt3, 2, false,
        "sum_{k=0}^{(p-3)/2} C(2k,k) / ((2k+1) 4^k) == -(-1)^((p-1)/2) q_p(2) (mod p^2)",
        "Z.-W. Sun");
    add(Kind::L25b, "lemma25b", gt3, 1, false,
        "sum_{k=0}^{(p-3)/2} C(2k,k) / ((2k+1)^2 4^k) == -(-1)^((p-1)/2) q_p(2)^2 / 2 (mod p)",
        "Z.-W. Sun");
    add(Kind::L26a, "lemma26a", alln, 0, false,
        "sum_{k=1}^{n} (-1)^k C(n,k) H_k / (2k+1) == -(4^n / ((2n+1) C(2n,n))) sum_{k=1}^{n} C(2k,k) / (k 4^k)",
        "binomial-transform identity");
    add(Kind::L26b, "lemma26b", alln, 0, false,
        "sum_{k=1}^{n} (-1)^k C(n,k) H_{2k} / (2k+1) == -(4^n / ((2n+1) C(2n,n))) (H_n / 2 + (1/2) sum_{k=1}^{n} C(2k,k) / (k 4^k))",
        "binomial-transform identity");
    add(Kind::L27, "lemma27-morley", gt3, 3, false,
        "C(p-1, (p-1)/2) == (-1)^((p-1)/2) 4^(p-1) (mod p^3)", "Morley (1895)");
    add(Kind::L28, "lemma28-Gupper", gt3, 4, false,
        "sum_{k=(p+3)/2}^{p-1} G256(p,k) == 3p^2 (1 + 4p - 6p q_p(2)) + (-1)^((p-1)/2) 3p^2 q_p(2) (1 - 2p q_p(2)) (mod p^4)",
        "upper tail of G for the 256-pair");
    add(Kind::H2kHk, "h2khk", gt3, 1, false,
        "sum_{k=1}^{(p-3)/2} (-1)^k C((p-1)/2, k) (2 H_{2k} - H_k) / (2k+1) == -2 (-1)^((p-1)/2) q_p(2)^2 (mod p)",
        "harmonic binomial-transform congruence");
    add(Kind::L31, "lemma31-Fdiag", gt3, 4, false,
        "F1024(p-1, p-1) == 15p^2 (-1 - 6p + 8p q_p(2)) (mod p^4)",
        "diagonal value of the 1024-pair");
    add(Kind::L32, "lemma32-Ghalf", gt3, 4, false,
        "sum_{k=1}^{(p-1)/2} G1024(p,k) == 3 p^3 E_{p-3} (mod p^4)",
        "lower half-sum of G for the 1024-pair");
    add(Kind::L33, "lemma33-Gmid", gt3, 4, false,
        "G1024(p, (p+1)/2) == 3p(-1)^((p-1)/2) (1 - 5p q_p(2) + 15p^2 q_p(2)^2) (mod p^4)",
        "middle term of G for the 1024-pair");
    add(Kind::L34, "lemma34-Gupper", gt3, 4, false,
        "sum_{k=(p+3)/2}^{p-1} G1024(p,k) == 15p^2 (1 + 6p - 8p q_p(2)) + (-1)^((p-1)/2) 15p^2 (q_p(2) - 3p q_p(2)^2) (mod p^4)",
        "upper tail of G for the 1024-pair");
    return v;
  }();
  return r;
}

long sign_s(long p) { return ((p - 1) / 2) % 2 == 0 ? 1 : -1; }

Rat cube(const Rat& x) { return x * x * x; }

FactoredResidue fcube(const FactoredResidue& x) { return x * x * x; }

Rat fact_rat(long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

// One checkable instance of a claim at a fixed prime (or index n).
struct Instance {
  int m;    // modulus exponent; 0 for exact identities
  Rat rhs;  // exact closed-form right side
  std::function<Rat()> lhs_exact;
  std::function<FactoredResidue(PrimePowerContext&)> lhs_fast;  // empty for identities
};

// ---- exact left sides ----

Rat series_6n1_256(long upper) {
  Rat acc(0);
  for (long n = 0; n <= upper; ++n)
    acc += Rat(6 * n + 1) * cube(Rat(binomial(2 * n, n))) * pow2(-8 * n);
  return acc;
}

Rat series_20n3_1024(long upper) {
  Rat acc(0);
  for (long n = 0; n <= upper; ++n) {
    Rat t = Rat(20 * n + 3) * Rat(multinomial4(n)) * pow2(-10 * n);
    acc += (n % 2 == 0) ? t : Rat(-t);
  }
  return acc;
}

Rat lhs_vanhamme(long p) {
  Rat half = make_rat(Int(1), Int(2));
  Rat acc(0);
  for (long k = 0; k <= (p - 1) / 2; ++k) {
    Rat t = Rat(4 * k + 1) * cube(pochhammer(half, k) / fact_rat(k));
    acc += (k % 2 == 0) ? t : Rat(-t);
  }
  return acc;
}

Rat lhs_guoliu(long p) {
  Rat mhalf = make_rat(Int(-1), Int(2));
  Rat acc(0);
  for (long k = 0; k <= (p + 1) / 2; ++k) {
    Rat t = Rat(4 * k - 1) * cube(pochhammer(mhalf, k) / fact_rat(k));
    acc += (k % 2 == 0) ? t : Rat(-t);
  }
  return acc;
}

Rat lhs_zudilin(long p) {
  Rat half = make_rat(Int(1), Int(2));
  Rat acc(0);
  for (long n = 0; n <= p - 1; ++n) {
    Rat t = Rat(20 * n + 3) * pochhammer(half, n) * pochhammer(half, 2 * n) /
            cube(fact_rat(n)) * pow2(-4 * n);
    acc += (n % 2 == 0) ? t : Rat(-t);
  }
  return acc;
}

Rat lhs_g_sum(WZPairId pair, long p, long k_lo, long k_hi) {
  Rat acc(0);
  for (long k = k_lo; k <= k_hi; ++k) acc += eval_G(pair, p, k);
  return acc;
}

// ---- fast left sides ----

FactoredResidue fast_6n1_256(long upper, PrimePowerContext& ctx) {
  FactoredResidue acc = FactoredResidue::zero(ctx.prime());
  for (long n = 0; n <= upper; ++n)
    acc = acc + ctx.from_long(6 * n + 1) * fcube(ctx.binomial(2 * n, n)) * ctx.pow2(-8 * n);
  return acc;
}

FactoredResidue fast_20n3_1024(long upper, PrimePowerContext& ctx) {
  FactoredResidue acc = FactoredResidue::zero(ctx.prime());
  for (long n = 0; n <= upper; ++n) {
    FactoredResidue m4 = ctx.factorial(4 * n) / ctx.factorial(n).pow(4);
    acc = acc + ctx.from_long((n % 2 == 0) ? 20 * n + 3 : -(20 * n + 3)) * m4 * ctx.pow2(-10 * n);
  }
  return acc;
}

FactoredResidue fast_vanhamme(long p, PrimePowerContext& ctx) {
  FactoredResidue acc = FactoredResidue::zero(ctx.prime());
  FactoredResidue poch = ctx.from_long(1);  // (1/2)_k, advanced per k
  for (long k = 0; k <= (p - 1) / 2; ++k) {
    if (k > 0) poch = poch * ctx.from_rational(make_rat(Int(2 * k - 1), Int(2)));
    acc = acc + ctx.from_long((k % 2 == 0) ? 4 * k + 1 : -(4 * k + 1)) *
                    fcube(poch / ctx.factorial(k));
  }
  return acc;
}

FactoredResidue fast_guoliu(long p, PrimePowerContext& ctx) {
  FactoredResidue acc = FactoredResidue::zero(ctx.prime());
  FactoredResidue poch = ctx.from_long(1);  // (-1/2)_k
  for (long k = 0; k <= (p + 1) / 2; ++k) {
    if (k > 0) poch = poch * ctx.from_rational(make_rat(Int(2 * k - 3), Int(2)));
    acc = acc + ctx.from_long((k % 2 == 0) ? 4 * k - 1 : -(4 * k - 1)) *
                    fcube(poch / ctx.factorial(k));
  }
  return acc;
}

FactoredResidue fast_zudilin(long p, PrimePowerContext& ctx) {
  FactoredResidue acc = FactoredResidue::zero(ctx.prime());
  FactoredResidue pa = ctx.from_long(1);  // (1/2)_n
  FactoredResidue pb = ctx.from_long(1);  // (1/2)_{2n}
  for (long n = 0; n <= p - 1; ++n) {
    if (n > 0) {
      pa = pa * ctx.from_rational(make_rat(Int(2 * n - 1), Int(2)));
      pb = pb * ctx.from_rational(make_rat(Int(4 * n - 3), Int(2))) *
           ctx.from_rational(make_rat(Int(4 * n - 1), Int(2)));
    }
    acc = acc + ctx.from_long((n % 2 == 0) ? 20 * n + 3 : -(20 * n + 3)) * pa * pb /
                    fcube(ctx.factorial(n)) * ctx.pow2(-4 * n);
  }
  return acc;
}

FactoredResidue fast_g_sum(WZPairId pair, long p, long k_lo, long k_hi, PrimePowerContext& ctx) {
  FactoredResidue acc = FactoredResidue::zero(ctx.prime());
  for (long k = k_lo; k <= k_hi; ++k) acc = acc + eval_G_fast(pair, p, k, ctx);
  return acc;
}

FactoredResidue fast_harmonic(long upper, int power, PrimePowerContext& ctx) {
  FactoredResidue acc = FactoredResidue::zero(ctx.prime());
  for (long i = 1; i <= upper; ++i)
    acc = acc + ctx.from_long(1) / ctx.from_long(power == 1 ? i : i * i);
  return acc;
}

// ---- right sides ----

Rat rhs_for(Kind kind, long p, const ClaimTables& t) {
  Int P(p);
  Int P2 = P * P;
  Int P3 = P2 * P;
  long s = sign_s(p);
  switch (kind) {
    case Kind::Thm1: {
      Int w = s * P;
      return Rat(w) - Rat(P3) * t.euler_p3(p);
    }
    case Kind::Thm2: {
      Int w = 3 * s * P;
      Int w3 = 3 * P3;
      return Rat(w) + Rat(w3) * t.euler_p3(p);
    }
    case Kind::VanHamme:
    case Kind::Long6n1: {
      Int w = s * P;
      return Rat(w);
    }
    case Kind::WolstH1:
    case Kind::WolstH2:
    case Kind::ZhSunH2:
      return Rat(0);
    case Kind::Binom2p1p:
    case Kind::Jacobsthal:
      return Rat(1);
    case Kind::Cxh3k1:
    case Kind::Sun4k1: {
      Int w = s * P;
      return Rat(w) + Rat(P3) * t.euler_p3(p);
    }
    case Kind::GuoLiu: {
      Int w = -s * P;
      return Rat(w) + Rat(P3) * (Rat(2) - t.euler_p3(p));
    }
    case Kind::Zudilin: {
      Int w = 3 * s * P;
      return Rat(w);
    }
    case Kind::SunIjm: {
      Int T;
      mpz_ui_pow_ui(T.get_mpz_t(), 2, static_cast<unsigned long>(p - 1));
      Int w = s * P * (T + 2 - (T - 1) * (T - 1));
      return Rat(w);
    }
    case Kind::L21: {
      Int q = fermat_quotient(p);
      Int w = -3 * P2 - 12 * P3 + 18 * P3 * q;
      return Rat(w);
    }
    case Kind::L22:
      return Rat(2) * t.euler_p3(p);
    case Kind::L23: {
      Int w = -P3;
      return Rat(w) * t.euler_p3(p);
    }
    case Kind::L24: {
      Int q = fermat_quotient(p);
      Int w = s * (P - 3 * P2 * q + 6 * P3 * q * q);
      return Rat(w);
    }
    case Kind::ZhSunH: {
      Int q = fermat_quotient(p);
      Int w = -2 * q + P * q * q;
      return Rat(w);
    }
    case Kind::L25a: {
      Int q = fermat_quotient(p);
      Int w = -s * q;
      return Rat(w);
    }
    case Kind::L25b: {
      Int q = fermat_quotient(p);
      Int w = -s * q * q;
      return make_rat(w, Int(2));
    }
    case Kind::L27:
      return Rat(s) * pow2(2 * (p - 1));
    case Kind::L28: {
      Int q = fermat_quotient(p);
      Int w = 3 * P2 * (1 + 4 * P - 6 * P * q) + s * 3 * P2 * q * (1 - 2 * P * q);
      return Rat(w);
    }
    case Kind::H2kHk: {
      Int q = fermat_quotient(p);
      Int w = -2 * s * q * q;
      return Rat(w);
    }
    case Kind::L31: {
      Int q = fermat_quotient(p);
      Int w = 15 * P2 * (-1 - 6 * P + 8 * P * q);
      return Rat(w);
    }
    case Kind::L32: {
      Int w = 3 * P3;
      return Rat(w) * t.euler_p3(p);
    }
    case Kind::L33: {
      Int q = fermat_quotient(p);
      Int w = s * (3 * P - 15 * P2 * q + 45 * P3 * q * q);
      return Rat(w);
    }
    case Kind::L34: {
      Int q = fermat_quotient(p);
      Int w = 15 * P2 * (1 + 6 * P - 8 * P * q) + s * 15 * P2 * (q - 3 * P * q * q);
      return Rat(w);
    }
    case Kind::SunKBinom:
      throw DomainError("sun-kbinom: right side varies per instance k");
    case Kind::L26a:
    case Kind::L26b:
      throw DomainError("identity claims have per-n right sides");
  }
  throw Error("rhs_for: unreachable");
}

// ---- instance enumeration ----

std::vector<Instance> instances_for(Kind kind, long p, const ClaimTables& t) {
  std::vector<Instance> out;
  long h = (p - 1) / 2;
  switch (kind) {
    case Kind::Thm1:
      out.push_back({4, rhs_for(kind, p, t),
                     [p] { return series_6n1_256(p - 1); },
                     [p](PrimePowerContext& c) { return fast_6n1_256(p - 1, c); }});
      break;
    case Kind::Thm2:
      out.push_back({4, rhs_for(kind, p, t),
                     [p] { return series_20n3_1024(p - 1); },
                     [p](PrimePowerContext& c) { return fast_20n3_1024(p - 1, c); }});
      break;
    case Kind::VanHamme:
      out.push_back({3, rhs_for(kind, p, t),
                     [p] { return lhs_vanhamme(p); },
                     [p](PrimePowerContext& c) { return fast_vanhamme(p, c); }});
      break;
    case Kind::WolstH1:
      out.push_back({2, Rat(0),
                     [p] { return harmonic(p - 1).h1; },
                     [p](PrimePowerContext& c) { return fast_harmonic(p - 1, 1, c); }});
      break;
    case Kind::WolstH2:
      out.push_back({1, Rat(0),
                     [p] { return harmonic(p - 1).h2; },
                     [p](PrimePowerContext& c) { return fast_harmonic(p - 1, 2, c); }});
      break;
    case Kind::Binom2p1p:
      out.push_back({3, Rat(1),
                     [p] { return Rat(binomial(2 * p - 1, p - 1)); },
                     [p](PrimePowerContext& c) { return c.binomial(2 * p - 1, p - 1); }});
      break;
    case Kind::Cxh3k1:
      out.push_back({4, rhs_for(kind, p, t),
                     [p] {
                       Rat acc(0);
                       for (long k = 0; k <= p - 1; ++k) {
                         Rat v = Rat(3 * k + 1) * cube(Rat(binomial(2 * k, k))) * pow2(-3 * k);
                         acc += (k % 2 == 0) ? v : Rat(-v);
                       }
                       return acc;
                     },
                     [p](PrimePowerContext& c) {
                       FactoredResidue acc = FactoredResidue::zero(c.prime());
                       for (long k = 0; k <= p - 1; ++k)
                         acc = acc + c.from_long((k % 2 == 0) ? 3 * k + 1 : -(3 * k + 1)) *
                                         fcube(c.binomial(2 * k, k)) * c.pow2(-3 * k);
                       return acc;
                     }});
      break;
    case Kind::Sun4k1:
      out.push_back({4, rhs_for(kind, p, t),
                     [p] {
                       Rat acc(0);
                       for (long k = 0; k <= p - 1; ++k) {
                         Rat v = Rat(4 * k + 1) * cube(Rat(binomial(2 * k, k))) * pow2(-6 * k);
                         acc += (k % 2 == 0) ? v : Rat(-v);
                       }
                       return acc;
                     },
                     [p](PrimePowerContext& c) {
                       FactoredResidue acc = FactoredResidue::zero(c.prime());
                       for (long k = 0; k <= p - 1; ++k)
                         acc = acc + c.from_long((k % 2 == 0) ? 4 * k + 1 : -(4 * k + 1)) *
                                         fcube(c.binomial(2 * k, k)) * c.pow2(-6 * k);
                       return acc;
                     }});
      break;
    case Kind::GuoLiu:
      out.push_back({4, rhs_for(kind, p, t),
                     [p] { return lhs_guoliu(p); },
                     [p](PrimePowerContext& c) { return fast_guoliu(p, c); }});
      break;
    case Kind::Zudilin:
      out.push_back({3, rhs_for(kind, p, t),
                     [p] { return lhs_zudilin(p); },
                     [p](PrimePowerContext& c) { return fast_zudilin(p, c); }});
      break;
    case Kind::SunIjm:
      out.push_back({4, rhs_for(kind, p, t),
                     [h] { return series_20n3_1024(h); },
                     [h](PrimePowerContext& c) { return fast_20n3_1024(h, c); }});
      break;
    case Kind::Long6n1:
      out.push_back({4, rhs_for(kind, p, t),
                     [h] { return series_6n1_256(h); },
                     [h](PrimePowerContext& c) { return fast_6n1_256(h, c); }});
      break;
    case Kind::L21:
      out.push_back({4, rhs_for(kind, p, t),
                     [p] { return eval_F(WZPairId::Pair256, p - 1, p - 1); },
                     [p](PrimePowerContext& c) {
                       return eval_F_fast(WZPairId::Pair256, p - 1, p - 1, c);
                     }});
      break;
    case Kind::Jacobsthal:
      for (long a = 2; a <= 6; ++a)
        for (long b = 1; b < a; ++b)
          for (int r = 1; r <= 2; ++r)
            for (int s = 1; s <= 2; ++s) {
              long pr = (r == 2) ? p * p : p;
              long ps = (s == 2) ? p * p : p;
              if (b * ps > a * pr) continue;  // both binomials vanish; instance is vacuous
              long n1 = a * pr, k1 = b * ps;
              long n0 = n1 / p, k0 = k1 / p;
              int m = r + s + std::min(r, s);
              out.push_back({m, Rat(1),
                             [n1, k1, n0, k0] {
                               return make_rat(binomial(n1, k1), binomial(n0, k0));
                             },
                             [n1, k1, n0, k0](PrimePowerContext& c) {
                               return c.binomial(n1, k1) / c.binomial(n0, k0);
                             }});
            }
      break;
    case Kind::L22:
      out.push_back({1, rhs_for(kind, p, t),
                     [h] {
                       Rat acc(0);
                       for (long k = 1; k <= h; ++k)
                         acc += pow2(2 * k) *
                                make_rat(Int(1), Int(k) * Int(2 * k - 1) * binomial(2 * k, k));
                       return acc;
                     },
                     [h](PrimePowerContext& c) {
                       FactoredResidue acc = FactoredResidue::zero(c.prime());
                       for (long k = 1; k <= h; ++k)
                         acc = acc + c.pow2(2 * k) /
                                         (c.from_long(k * (2 * k - 1)) * c.binomial(2 * k, k));
                       return acc;
                     }});
      break;
    case Kind::L23:
      out.push_back({4, rhs_for(kind, p, t),
                     [p, h] { return lhs_g_sum(WZPairId::Pair256, p, 1, h); },
                     [p, h](PrimePowerContext& c) {
                       return fast_g_sum(WZPairId::Pair256, p, 1, h, c);
                     }});
      break;
    case Kind::SunKBinom:
      for (long k = 1; k <= p - 1; ++k) {
        long sg = (2 * k < p) ? -1 : 1;  // (-1)^(floor(2k/p) - 1)
        out.push_back({2, Rat(sg * 2 * p),
                       [p, k] {
                         Int w = Int(k) * binomial(2 * k, k) * binomial(2 * (p - k), p - k);
                         return Rat(w);
                       },
                       [p, k](PrimePowerContext& c) {
                         return c.from_long(k) * c.binomial(2 * k, k) *
                                c.binomial(2 * (p - k), p - k);
                       }});
      }
      break;
    case Kind::L24:
      out.push_back({4, rhs_for(kind, p, t),
                     [p, h] { return eval_G(WZPairId::Pair256, p, h + 1); },
                     [p, h](PrimePowerContext& c) {
                       return eval_G_fast(WZPairId::Pair256, p, h + 1, c);
                     }});
      break;
    case Kind::ZhSunH:
      out.push_back({2, rhs_for(kind, p, t),
                     [h] { return harmonic(h).h1; },
                     [h](PrimePowerContext& c) { return fast_harmonic(h, 1, c); }});
      break;
    case Kind::ZhSunH2:
      out.push_back({1, Rat(0),
                     [h] { return harmonic(h).h2; },
                     [h](PrimePowerContext& c) { return fast_harmonic(h, 2, c); }});
      break;
    case Kind::L25a:
      out.push_back({2, rhs_for(kind, p, t),
                     [p] {
                       Rat acc(0);
                       for (long k = 0; k <= (p - 3) / 2; ++k)
                         acc += make_rat(binomial(2 * k, k), Int(2 * k + 1)) * pow2(-2 * k);
                       return acc;
                     },
                     [p](PrimePowerContext& c) {
                       FactoredResidue acc = FactoredResidue::zero(c.prime());
                       for (long k = 0; k <= (p - 3) / 2; ++k)
                         acc = acc + c.binomial(2 * k, k) /
                                         (c.from_long(2 * k + 1) * c.pow2(2 * k));
                       return acc;
                     }});
      break;
    case Kind::L25b:
      out.push_back({1, rhs_for(kind, p, t),
                     [p] {
                       Rat acc(0);
                       for (long k = 0; k <= (p - 3) / 2; ++k)
                         acc += make_rat(binomial(2 * k, k),
                                         Int(2 * k + 1) * Int(2 * k + 1)) *
                                pow2(-2 * k);
                       return acc;
                     },
                     [p](PrimePowerContext& c) {
                       FactoredResidue acc = FactoredResidue::zero(c.prime());
                       for (long k = 0; k <= (p - 3) / 2; ++k)
                         acc = acc + c.binomial(2 * k, k) /
                                         (c.from_long((2 * k + 1) * (2 * k + 1)) * c.pow2(2 * k));
                       return acc;
                     }});
      break;
    case Kind::L26a:
    case Kind::L26b: {
      long n = p;  // quantified over n, passed in the prime slot
      bool with_h2k = (kind == Kind::L26b);
      Rat s_inner(0), hn(0);
      for (long k = 1; k <= n; ++k) {
        s_inner += make_rat(binomial(2 * k, k), Int(k)) * pow2(-2 * k);
        hn += make_rat(Int(1), Int(k));
      }
      Rat scale = Rat(-1) * pow2(2 * n) *
                  make_rat(Int(1), Int(2 * n + 1) * binomial(2 * n, n));
      Rat rhs = with_h2k ? Rat(scale * (hn / 2 + s_inner / 2)) : Rat(scale * s_inner);
      out.push_back({0, rhs,
                     [n, with_h2k] {
                       Rat lhs(0), hk(0), h2k(0);
                       for (long k = 1; k <= n; ++k) {
                         hk += make_rat(Int(1), Int(k));
                         h2k += make_rat(Int(1), Int(2 * k - 1));
                         h2k += make_rat(Int(1), Int(2 * k));
                         Rat v = Rat(binomial(n, k)) * (with_h2k ? h2k : hk) *
                                 make_rat(Int(1), Int(2 * k + 1));
                         lhs += (k % 2 == 0) ? v : Rat(-v);
                       }
                       return lhs;
                     },
                     nullptr});
      break;
    }
    case Kind::L27:
      out.push_back({3, rhs_for(kind, p, t),
                     [p, h] { return Rat(binomial(p - 1, h)); },
                     [p, h](PrimePowerContext& c) { return c.binomial(p - 1, h); }});
      break;
    case Kind::L28:
      out.push_back({4, rhs_for(kind, p, t),
                     [p, h] { return lhs_g_sum(WZPairId::Pair256, p, h + 2, p - 1); },
                     [p, h](PrimePowerContext& c) {
                       return fast_g_sum(WZPairId::Pair256, p, h + 2, p - 1, c);
                     }});
      break;
    case Kind::H2kHk:
      out.push_back({1, rhs_for(kind, p, t),
                     [p, h] {
                       Rat acc(0), d(0);  // d = 2 H_{2k} - H_k = sum_{j<=k} 2/(2j-1)
                       for (long k = 1; k <= (p - 3) / 2; ++k) {
                         d += make_rat(Int(2), Int(2 * k - 1));
                         Rat v = Rat(binomial(h, k)) * d * make_rat(Int(1), Int(2 * k + 1));
                         acc += (k % 2 == 0) ? v : Rat(-v);
                       }
                       return acc;
                     },
                     [p, h](PrimePowerContext& c) {
                       FactoredResidue acc = FactoredResidue::zero(c.prime());
                       FactoredResidue d = FactoredResidue::zero(c.prime());
                       for (long k = 1; k <= (p - 3) / 2; ++k) {
                         d = d + c.from_rational(make_rat(Int(2), Int(2 * k - 1)));
                         FactoredResidue v = c.binomial(h, k) * d / c.from_long(2 * k + 1);
                         acc = acc + ((k % 2 == 0) ? v : -v);
                       }
                       return acc;
                     }});
      break;
    case Kind::L31:
      out.push_back({4, rhs_for(kind, p, t),
                     [p] { return eval_F(WZPairId::Pair1024, p - 1, p - 1); },
                     [p](PrimePowerContext& c) {
                       return eval_F_fast(WZPairId::Pair1024, p - 1, p - 1, c);
                     }});
      break;
    case Kind::L32:
      out.push_back({4, rhs_for(kind, p, t),
                     [p, h] { return lhs_g_sum(WZPairId::Pair1024, p, 1, h); },
                     [p, h](PrimePowerContext& c) {
                       return fast_g_sum(WZPairId::Pair1024, p, 1, h, c);
                     }});
      break;
    case Kind::L33:
      out.push_back({4, rhs_for(kind, p, t),
                     [p, h] { return eval_G(WZPairId::Pair1024, p, h + 1); },
                     [p, h](PrimePowerContext& c) {
                       return eval_G_fast(WZPairId::Pair1024, p, h + 1, c);
                     }});
      break;
    case Kind::L34:
      out.push_back({4, rhs_for(kind, p, t),
                     [p, h] { return lhs_g_sum(WZPairId::Pair1024, p, h + 2, p - 1); },
                     [p, h](PrimePowerContext& c) {
                       return fast_g_sum(WZPairId::Pair1024, p, h + 2, p - 1, c);
                     }});
      break;
  }
  return out;
}

Kind kind_of(const Claim& c) {
  for (const Row& r : rows())
    if (r.claim.id == c.id) return r.kind;
  throw ConfigError("unknown claim id: " + c.id);
}

std::string modulus_str(long p, int m) {
  return std::to_string(p) + "^" + std::to_string(m);
}

VerificationOutcome eval_exact_instance(const Claim& c, long p, const Instance& inst) {
  VerificationOutcome o;
  o.claim = c.id;
  o.p = p;
  o.path = "exact";
  Rat L = inst.lhs_exact();
  if (inst.m == 0) {
    o.lhs = L.get_str();
    o.rhs = inst.rhs.get_str();
    o.modulus = "exact";
    o.holds = (L == inst.rhs);
    o.diff_valuation = o.holds ? Valuation::infinity() : Valuation(0);
    return o;
  }
  o.lhs = reduce_mod(L, p, inst.m).get_str();
  o.rhs = reduce_mod(inst.rhs, p, inst.m).get_str();
  o.modulus = modulus_str(p, inst.m);
  Valuation v = valuation(Rat(L - inst.rhs), p);
  o.holds = v.at_least(inst.m);
  o.diff_valuation =
      v.is_infinite() ? v : Valuation(std::min(v.finite(), static_cast<long>(inst.m) + 4));
  return o;
}

VerificationOutcome eval_fast_instance(const Claim& c, long p, const Instance& inst,
                                       PrimePowerContext& ctx) {
  VerificationOutcome o;
  o.claim = c.id;
  o.p = p;
  o.path = "fast";
  FactoredResidue fl = inst.lhs_fast(ctx);
  o.lhs = fl.residue(inst.m).get_str();
  o.rhs = reduce_mod(inst.rhs, p, inst.m).get_str();
  o.modulus = modulus_str(p, inst.m);
  long cap = inst.m + 4;
  if (!fl.abs_precision().is_infinite()) cap = std::min(cap, fl.abs_precision().finite());
  Int d = mod_floor(fl.residue(cap) - reduce_mod(inst.rhs, p, cap), prime_power(p, cap));
  Valuation dv = (d == 0) ? Valuation(cap) : valuation(d, p);
  o.holds = dv.at_least(inst.m);
  o.diff_valuation = Valuation(std::min(dv.finite(), static_cast<long>(inst.m) + 4));
  return o;
}

}  // namespace

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> v;
    for (const Row& r : rows()) v.push_back(r.claim);
    return v;
  }();
  return claims;
}

const Claim* find_claim(std::string_view id) {
  for (const Claim& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

bool in_domain(const Claim& c, long p) {
  switch (c.domain) {
    case PrimeDomain::AllN:
      return p >= 1;
    case PrimeDomain::OddPrime:
      return p >= 3 && is_prime(p);
    case PrimeDomain::PrimeGreaterThan3:
      return p > 3 && is_prime(p);
  }
  return false;
}

int claim_unit_prec(const Claim& c) {
  int max_m = c.modulus_exponent;
  if (c.id == "jacobsthal") max_m = 6;  // instance moduli reach p^(2+2+2)
  return std::max(kDefaultUnitPrecision, max_m + 2);
}

ClaimTables::ClaimTables(long p_max) {
  long n_max = std::min(p_max, 613L) - 3;
  euler_ = euler_numbers(std::max(n_max, 0L));
}

Rat ClaimTables::euler_p3(long p) const {
  if (p < 3) throw DomainError("euler_p3: need p >= 3");
  size_t idx = static_cast<size_t>(p - 3);
  if (idx < euler_.size()) return Rat(euler_[idx]);
  return Rat(Int(euler_mod(p - 3, p)));
}

Rat rhs_value(const Claim& c, long p, const ClaimTables& tables) {
  if (c.modulus_exponent == 0)
    throw DomainError(c.id + ": identity claims have per-n right sides");
  if (!(p >= 3 && is_prime(p)))
    throw DomainError(c.id + ": right side needs an odd prime, got " + std::to_string(p));
  return rhs_for(kind_of(c), p, tables);
}

std::vector<VerificationOutcome> evaluate_claim(const Claim& c, long p, EvalPath path,
                                                const ClaimTables& tables,
                                                PrimePowerContext* ctx) {
  if (!in_domain(c, p))
    throw DomainError(c.id + ": p=" + std::to_string(p) + " outside domain");
  std::vector<Instance> instances = instances_for(kind_of(c), p, tables);
  bool identity = (c.modulus_exponent == 0);

  std::optional<PrimePowerContext> local;
  PrimePowerContext* use = ctx;
  if (!use && !identity && path != EvalPath::Exact) {
    local.emplace(p, claim_unit_prec(c));
    use = &*local;
  }

  std::vector<VerificationOutcome> out;
  out.reserve(instances.size());
  for (const Instance& inst : instances) {
    if (identity || path == EvalPath::Exact) {
      out.push_back(eval_exact_instance(c, p, inst));
    } else if (path == EvalPath::Fast) {
      out.push_back(eval_fast_instance(c, p, inst, *use));
    } else {
      VerificationOutcome ex = eval_exact_instance(c, p, inst);
      VerificationOutcome fa = eval_fast_instance(c, p, inst, *use);
      if (ex.lhs != fa.lhs || ex.rhs != fa.rhs || ex.holds != fa.holds)
        throw InternalMismatchError("paths disagree for " + c.id + " at p=" +
                                    std::to_string(p) + ": exact lhs=" + ex.lhs +
                                    " fast lhs=" + fa.lhs + ", exact rhs=" + ex.rhs +
                                    " fast rhs=" + fa.rhs);
      ex.path = "both";
      out.push_back(std::move(ex));
    }
  }
  return out;
}

std::vector<VerificationOutcome> evaluate_claim(std::string_view id, long p, EvalPath path) {
  const Claim* c = find_claim(id);
  if (!c) throw ConfigError("unknown claim id: " + std::string(id));
  ClaimTables tables(c->modulus_exponent == 0 ? 5 : p);
  return evaluate_claim(*c, p, path, tables);
}

DecompositionCheck check_decomposition(WZPairId pair, long p, const ClaimTables& tables) {
  if (!(p > 3 && is_prime(p)))
    throw DomainError("check_decomposition: need a prime p > 3");
  long h = (p - 1) / 2;
  bool is256 = (pair == WZPairId::Pair256);
  Rat theorem_lhs = is256 ? series_6n1_256(p - 1) : series_20n3_1024(p - 1);
  Rat parts = eval_F(pair, p - 1, p - 1) + lhs_g_sum(pair, p, 1, h) +
              eval_G(pair, p, h + 1) + lhs_g_sum(pair, p, h + 2, p - 1);
  Rat rhs_parts = is256 ? Rat(rhs_for(Kind::L21, p, tables) + rhs_for(Kind::L23, p, tables) +
                              rhs_for(Kind::L24, p, tables) + rhs_for(Kind::L28, p, tables))
                        : Rat(rhs_for(Kind::L31, p, tables) + rhs_for(Kind::L32, p, tables) +
                              rhs_for(Kind::L33, p, tables) + rhs_for(Kind::L34, p, tables));
  Rat rhs_theorem = rhs_for(is256 ? Kind::Thm1 : Kind::Thm2, p, tables);
  return DecompositionCheck{theorem_lhs == parts, congruent(rhs_parts, rhs_theorem, p, 4)};
}

}  // namespace wzcheck
