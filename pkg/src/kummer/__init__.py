"""Exact arithmetic for congruences of torsion modules over local rings,
Bernoulli valuations and integrality facts, and Selmer group orders for
cyclotomic twists."""

from .bernoulli import (
    BernoulliCache,
    IntegralityVerdict,
    ZetaRatioVerdict,
    bernoulli,
    bernoulli_by_recurrence,
    bk_over_k,
    check_adams,
    check_carlitz,
    denominator_formula,
    ell_part,
    format_rational,
    parse_rational,
    vp,
    zeta_ratio_check,
)
from .errors import DomainError, HypothesisViolation, ResourceLimitExceeded
from .local_modules import (
    CongruenceVerdict,
    Hypothesis,
    LocalRing,
    TorsionModule,
    alg_congruent,
    car_congruent,
    cardinality,
    format_partition,
    make_module,
    num_congruent,
    parse_partition,
    torsion,
    torsion_count_oracle,
)
from .selmer import (
    HeckePair,
    IrregularPair,
    TateTwist,
    chi_power_congruent,
    exponent_modulus,
    h0_global_order,
    h0_local_order,
    hecke_pair_congruent,
    kummer_check,
    rational_mod,
    scan_irregular,
    selmer_order_at,
    selmer_order_odd_part,
    theorem2_check,
)
from .sweeps import SweepConfig, SweepReport, run_suites

__all__ = [
    "BernoulliCache",
    "CongruenceVerdict",
    "DomainError",
    "HeckePair",
    "Hypothesis",
    "HypothesisViolation",
    "IntegralityVerdict",
    "IrregularPair",
    "LocalRing",
    "ResourceLimitExceeded",
    "SweepConfig",
    "SweepReport",
    "TateTwist",
    "TorsionModule",
    "ZetaRatioVerdict",
    "alg_congruent",
    "bernoulli",
    "bernoulli_by_recurrence",
    "bk_over_k",
    "car_congruent",
    "cardinality",
    "check_adams",
    "check_carlitz",
    "chi_power_congruent",
    "denominator_formula",
    "ell_part",
    "exponent_modulus",
    "format_partition",
    "format_rational",
    "h0_global_order",
    "h0_local_order",
    "hecke_pair_congruent",
    "kummer_check",
    "make_module",
    "num_congruent",
    "parse_partition",
    "parse_rational",
    "rational_mod",
    "run_suites",
    "scan_irregular",
    "selmer_order_at",
    "selmer_order_odd_part",
    "theorem2_check",
    "torsion",
    "torsion_count_oracle",
    "vp",
    "zeta_ratio_check",
]
