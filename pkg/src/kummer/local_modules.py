"""Finite torsion modules over a local ring, as partitions of cyclic exponents.

A finite module over the valuation ring of a local field decomposes as a
direct sum of cyclic pieces O/lambda^c.  The multiset of exponents c, kept
in descending order, is a complete isomorphism invariant, so every
operation here works on that partition directly.

Three congruence relations between two such modules M1, M2 at level n:

  algebraic:  M1[lambda^n] and M2[lambda^n] are isomorphic,
  numerical:  |M1[lambda^n]| = |M2[lambda^n]|,
  cardinal:   |M1| = |M2| (mod lambda^n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .arith import int_valuation, is_prime
from .errors import DomainError, ResourceLimitExceeded

ORACLE_BOUND = 10**6


@dataclass(frozen=True)
class LocalRing:
    """Parameters (ell, e, f) of a local ring: residue characteristic,
    ramification index, residue degree.  Residue field has q = ell^f
    elements."""

    ell: int
    ram_e: int = 1
    res_f: int = 1

    def __post_init__(self):
        if not is_prime(self.ell):
            raise DomainError(f"residue characteristic {self.ell} is not prime")
        if self.ram_e < 1 or self.res_f < 1:
            raise DomainError("ramification index and residue degree must be >= 1")

    @property
    def residue_size(self) -> int:
        return self.ell**self.res_f

    def lambda_valuation(self, m: int) -> int:
        """Valuation of a nonzero rational integer at the maximal ideal:
        e times its ell-adic valuation."""
        return self.ram_e * int_valuation(m, self.ell)


@dataclass(frozen=True)
class TorsionModule:
    """A finite module in normal form: exponents descending, none zero.
    The empty partition is the zero module."""

    ring: LocalRing
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(c < 1 for c in self.exponents):
            raise DomainError("exponents must be positive in normal form")
        if list(self.exponents) != sorted(self.exponents, reverse=True):
            raise DomainError("exponents must be sorted descending")

    @property
    def is_zero(self) -> bool:
        return not self.exponents


@dataclass(frozen=True)
class Hypothesis:
    name: str
    ok: bool


@dataclass(frozen=True)
class CongruenceVerdict:
    """Outcome of a congruence check, with enough evidence to re-derive it."""

    kind: str
    modulus_exponent: int
    holds: bool
    hypotheses: tuple[Hypothesis, ...]
    lhs: str
    rhs: str
    modulus: str
    evidence: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "holds": self.holds,
            "hypotheses": [{"name": h.name, "ok": h.ok} for h in self.hypotheses],
            "lhs": self.lhs,
            "rhs": self.rhs,
            "modulus": self.modulus,
        }


def make_module(ring: LocalRing, exponents: Iterable[int]) -> TorsionModule:
    """Normal-form constructor: drops zeros, sorts descending.

    Negative entries are rejected.
    """
    exps = list(exponents)
    if any(c < 0 for c in exps):
        raise DomainError(f"negative cyclic exponent in {exps}")
    return TorsionModule(ring, tuple(sorted((c for c in exps if c > 0), reverse=True)))


def torsion(module: TorsionModule, r: int) -> TorsionModule:
    """Submodule killed by lambda^r: every exponent truncates to min(c, r)."""
    if r < 0:
        raise DomainError("torsion level must be >= 0")
    return make_module(module.ring, (min(c, r) for c in module.exponents))


def cardinality(module: TorsionModule) -> int:
    """q^(sum of exponents); 1 for the zero module."""
    return module.ring.residue_size ** sum(module.exponents)


def torsion_count_oracle(module: TorsionModule, r: int, bound: int = ORACLE_BOUND) -> int:
    """Brute-force count of elements killed by lambda^r.

    Enumerates the direct sum of Z/q^c componentwise, with lambda acting as
    multiplication by q, and counts tuples annihilated in every component.
    Deliberately avoids the closed-form cardinality; only usable while the
    module has at most `bound` elements.
    """
    if r < 0:
        raise DomainError("torsion level must be >= 0")
    card = cardinality(module)
    if card > bound:
        raise ResourceLimitExceeded(f"module has {card} > {bound} elements")
    q = module.ring.residue_size
    qr = q**r
    killed_flags = []
    for c in module.exponents:
        qc = q**c
        killed_flags.append([x * qr % qc == 0 for x in range(qc)])
    return sum(1 for combo in product(*killed_flags) if all(combo))


def _require_pair(m1: TorsionModule, m2: TorsionModule, n: int) -> tuple[Hypothesis, ...]:
    if m1.ring != m2.ring:
        raise DomainError(f"modules live over different rings: {m1.ring} vs {m2.ring}")
    if n < 1:
        raise DomainError("congruence level must be >= 1")
    return (Hypothesis("same local ring", True), Hypothesis("level >= 1", True))


def alg_congruent(m1: TorsionModule, m2: TorsionModule, n: int) -> CongruenceVerdict:
    """Are the lambda^n-torsion submodules isomorphic?

    Equivalent to equality of the truncated partitions.
    """
    hyps = _require_pair(m1, m2, n)
    t1, t2 = torsion(m1, n), torsion(m2, n)
    return CongruenceVerdict(
        kind="algebraic",
        modulus_exponent=n,
        holds=t1.exponents == t2.exponents,
        hypotheses=hyps,
        lhs=format_partition(t1.exponents),
        rhs=format_partition(t2.exponents),
        modulus=f"lambda^{n}",
        evidence={"truncated": (t1.exponents, t2.exponents)},
    )


def num_congruent(m1: TorsionModule, m2: TorsionModule, n: int) -> CongruenceVerdict:
    """Do the lambda^n-torsion submodules have equal cardinality?"""
    hyps = _require_pair(m1, m2, n)
    c1, c2 = cardinality(torsion(m1, n)), cardinality(torsion(m2, n))
    return CongruenceVerdict(
        kind="numerical",
        modulus_exponent=n,
        holds=c1 == c2,
        hypotheses=hyps,
        lhs=str(c1),
        rhs=str(c2),
        modulus=f"lambda^{n}",
        evidence={"torsion_cardinalities": (c1, c2)},
    )


def car_congruent(m1: TorsionModule, m2: TorsionModule, n: int) -> CongruenceVerdict:
    """Are the full cardinalities congruent modulo lambda^n?

    Cardinalities are rational integers, so the lambda-valuation of their
    difference is e * v_ell; a difference of 0 is congruent to every power.
    """
    hyps = _require_pair(m1, m2, n)
    c1, c2 = cardinality(m1), cardinality(m2)
    diff = c1 - c2
    valuation: int | None = None if diff == 0 else m1.ring.lambda_valuation(diff)
    return CongruenceVerdict(
        kind="cardinal",
        modulus_exponent=n,
        holds=diff == 0 or valuation >= n,
        hypotheses=hyps,
        lhs=str(c1),
        rhs=str(c2),
        modulus=f"lambda^{n}",
        evidence={"difference_valuation": "infinite" if diff == 0 else valuation},
    )


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse "4+2+1" or "4,2,1" into exponents; "0" or "" is the zero module."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    sep = "+" if "+" in text else ","
    try:
        parts = [int(piece) for piece in text.split(sep)]
    except ValueError:
        raise DomainError(f"cannot parse partition {text!r}") from None
    if any(c < 0 for c in parts):
        raise DomainError(f"negative cyclic exponent in {text!r}")
    return tuple(sorted((c for c in parts if c > 0), reverse=True))


def format_partition(exponents: tuple[int, ...]) -> str:
    if not exponents:
        return "0"
    return "+".join(str(c) for c in exponents)
