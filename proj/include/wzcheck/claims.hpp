#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wzcheck/wz_pair.hpp"

namespace wzcheck {

enum class PrimeDomain {
  PrimeGreaterThan3,  // odd primes p > 3
  OddPrime,           // odd primes, including 3
  AllN,               // exact identities quantified over n >= 1
};

enum class EvalPath { Exact, Fast, Both };

struct Claim {
  std::string id;
  PrimeDomain domain;
  int modulus_exponent;  // the m in mod p^m; 0 for exact identities
  bool multi_instance;   // expands to several checked instances per prime
  std::string statement;
  std::string source;
};

struct VerificationOutcome {
  std::string claim;
  long p;  // prime, or n for exact identities
  bool holds;
  std::string lhs;      // residue in [0, p^m), or exact value for identities
  std::string rhs;
  std::string modulus;  // "p^m", or "exact"
  Valuation diff_valuation;  // capped at modulus_exponent + 4; inf when diff == 0
  std::string path;     // "exact" | "fast" | "both" | "error"
};

/// The fixed claim registry, deterministically ordered.
const std::vector<Claim>& registry();

/// Lookup by id; nullptr when absent.
const Claim* find_claim(std::string_view id);

/// Whether p (or n for identities) lies in the claim's stated domain.
bool in_domain(const Claim& c, long p);

/// Unit digits the fast path needs for this claim: largest instance
/// modulus exponent plus two digits of slack, floor kDefaultUnitPrecision.
int claim_unit_prec(const Claim& c);

/// Shared read-only tables for a run over primes up to p_max: Euler
/// numbers are exact up to index 610 and mod-p lifts beyond.
class ClaimTables {
 public:
  explicit ClaimTables(long p_max);

  /// E_{p-3} as used on claim right sides: the exact integer for
  /// p <= 613, else the mod-p representative in [0, p).
  Rat euler_p3(long p) const;

 private:
  std::vector<Int> euler_;
};

/// Exact value of the claim's closed-form right side.  Throws DomainError
/// for claims whose right side varies per instance (sun-kbinom).
Rat rhs_value(const Claim& c, long p, const ClaimTables& tables);

/// Evaluate one claim at one prime (or n): one outcome per instance.
/// path Both runs the fast evaluation against the exact oracle and throws
/// InternalMismatchError on any residue disagreement.  The fast paths may
/// throw PrecisionExhaustedError; callers retry on the exact path.  ctx,
/// when given, must belong to p with unit_prec >= claim_unit_prec(c).
std::vector<VerificationOutcome> evaluate_claim(const Claim& c, long p, EvalPath path,
                                                const ClaimTables& tables,
                                                PrimePowerContext* ctx = nullptr);

/// Convenience: lookup by id and build tables for this single p.
std::vector<VerificationOutcome> evaluate_claim(std::string_view id, long p,
                                                EvalPath path = EvalPath::Both);

struct DecompositionCheck {
  bool lhs_exact_equal;  // theorem LHS == diagonal + the three G ranges, exactly
  bool rhs_congruent;    // the four lemma RHS values sum to the theorem RHS mod p^4
};

/// The proof-architecture consistency check: the boundary identity split
/// at k = (p-1)/2, (p+1)/2, (p+3)/2 recombines to the theorem statement.
DecompositionCheck check_decomposition(WZPairId pair, long p, const ClaimTables& tables);

}  // namespace wzcheck
