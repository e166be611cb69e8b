"""Exact and fast modular verification of WZ-pair supercongruence claims.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.  Rationals cross the boundary as fractions.Fraction,
integers as plain int, both exactly.
"""

from ._core import (
    DEFAULT_UNIT_PRECISION,
    BoundaryCheck,
    Claim,
    ClaimStats,
    ClaimTables,
    ConfigError,
    DecompositionCheck,
    DomainError,
    Error,
    EvalPath,
    FactoredResidue,
    HarmonicPair,
    InternalMismatchError,
    NegativeValuationError,
    PrecisionExhaustedError,
    PrimeDomain,
    PrimePowerContext,
    Report,
    RunConfig,
    Valuation,
    VerificationOutcome,
    WZPairId,
    binomial,
    boundary_identity,
    check_decomposition,
    check_telescoping,
    claim_unit_prec,
    congruent,
    euler_mod,
    euler_numbers,
    eval_F,
    eval_F_fast,
    eval_G,
    eval_G_fast,
    evaluate_claim,
    factored_binomial,
    factored_factorial,
    fermat_quotient,
    find_claim,
    harmonic,
    in_domain,
    is_prime,
    multinomial4,
    pochhammer,
    prime_power,
    primes_in,
    reduce_mod,
    registry,
    rhs_value,
    run_suite,
    to_csv,
    to_json,
    to_text,
    valuation,
)

__all__ = [
    "DEFAULT_UNIT_PRECISION",
    "BoundaryCheck",
    "Claim",
    "ClaimStats",
    "ClaimTables",
    "ConfigError",
    "DecompositionCheck",
    "DomainError",
    "Error",
    "EvalPath",
    "FactoredResidue",
    "HarmonicPair",
    "InternalMismatchError",
    "NegativeValuationError",
    "PrecisionExhaustedError",
    "PrimeDomain",
    "PrimePowerContext",
    "Report",
    "RunConfig",
    "Valuation",
    "VerificationOutcome",
    "WZPairId",
    "binomial",
    "boundary_identity",
    "check_decomposition",
    "check_telescoping",
    "claim_unit_prec",
    "congruent",
    "euler_mod",
    "euler_numbers",
    "eval_F",
    "eval_F_fast",
    "eval_G",
    "eval_G_fast",
    "evaluate_claim",
    "factored_binomial",
    "factored_factorial",
    "fermat_quotient",
    "find_claim",
    "harmonic",
    "in_domain",
    "is_prime",
    "multinomial4",
    "pochhammer",
    "prime_power",
    "primes_in",
    "reduce_mod",
    "registry",
    "rhs_value",
    "run_suite",
    "to_csv",
    "to_json",
    "to_text",
    "valuation",
]
