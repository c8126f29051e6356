"""Orders of cohomology groups attached to cyclotomic Tate twists, and the
congruence predicates and checkers built on them.

For an even twist exponent k >= 2, the fixed-part order at a prime p is
p^(v_p(k)+1) when p-1 | k (else 1), their product over all p recovers the
reduced denominator of B_k/k, and the odd part of the numerator of B_k/k is
the canonical representative of the Selmer order (only well defined up to a
power of 2, so everything here rejects ell = 2).

Negative twist exponents carry no finite order formula and are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import int_valuation, is_prime, odd_part, odd_primes_upto
from .bernoulli import BernoulliCache, bernoulli, bk_over_k
from .errors import DomainError, HypothesisViolation
from .local_modules import CongruenceVerdict, Hypothesis


@dataclass(frozen=True)
class TateTwist:
    """The twist exponent k at an odd prime ell."""

    ell: int
    k: int

    def __post_init__(self):
        if self.ell == 2 or not is_prime(self.ell):
            raise DomainError(f"twist prime must be an odd prime, got {self.ell}")

    def congruent_to(self, other: "TateTwist", n: int) -> bool:
        if self.ell != other.ell:
            raise DomainError("twists live at different primes")
        return chi_power_congruent(self.ell, n, self.k, other.k)

    def selmer_order(self, cache: BernoulliCache | None = None) -> int:
        return selmer_order_at(self.k, self.ell, cache)


@dataclass(frozen=True)
class IrregularPair:
    """(ell, k) with ell dividing the numerator of B_k, 2 <= k <= ell-3."""

    ell: int
    k: int
    valuation: int


@dataclass(frozen=True)
class HeckePair:
    k: int
    j: int

    @property
    def admissible(self) -> bool:
        return self.k > -self.j > 0


def exponent_modulus(ell: int, n: int) -> int:
    """(ell-1) * ell^(n-1): the order of the mod-ell^n cyclotomic character."""
    if ell == 2 or not is_prime(ell):
        raise DomainError(f"need an odd prime, got {ell}")
    if n < 1:
        raise DomainError("level must be >= 1")
    return (ell - 1) * ell ** (n - 1)


def chi_power_congruent(ell: int, n: int, k: int, kp: int) -> bool:
    """Do the k-th and kp-th powers of the cyclotomic character agree mod
    ell^n?  Equivalent to k = kp mod (ell-1)*ell^(n-1)."""
    return (k - kp) % exponent_modulus(ell, n) == 0


def _require_even_positive(k: int, name: str = "k") -> None:
    if k < 2 or k % 2 != 0:
        raise DomainError(f"{name} must be a positive even integer, got {k}")


def h0_local_order(k: int, p: int) -> int:
    """Order of the fixed part at p: p^(v_p(k)+1) if p-1 | k, else 1."""
    _require_even_positive(k)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if k % (p - 1) != 0:
        return 1
    return p ** (int_valuation(k, p) + 1)


def h0_global_order(k: int) -> int:
    """Product of the local fixed-part orders; only primes with p-1 <= k
    contribute."""
    _require_even_positive(k)
    out = 1
    for p in [2] + odd_primes_upto(k + 1):
        out *= h0_local_order(k, p)
    return out


def selmer_order_odd_part(k: int, cache: BernoulliCache | None = None) -> int:
    """Odd part of |numerator(B_k/k)|: the Selmer order away from 2."""
    _require_even_positive(k)
    return odd_part(bk_over_k(k, cache).numerator)


def selmer_order_at(k: int, ell: int, cache: BernoulliCache | None = None) -> int:
    """ell-primary Selmer order ell^(v_ell(numerator(B_k/k))).

    Only asserted when ell-1 does not divide k (which forces the fixed part
    at ell to be trivial); otherwise the order formula is not available and
    the call is rejected.
    """
    _require_even_positive(k)
    if ell == 2 or not is_prime(ell):
        raise DomainError(f"need an odd prime, got {ell}")
    if k % (ell - 1) == 0:
        raise HypothesisViolation(f"ell-1 = {ell - 1} divides k = {k}")
    num = bk_over_k(k, cache).numerator
    return ell ** int_valuation(num, ell)


def rational_mod(x: Fraction, modulus: int) -> int:
    """Residue of a rational with modulus-coprime denominator."""
    if gcd(x.denominator, modulus) != 1:
        raise DomainError(f"denominator {x.denominator} not invertible mod {modulus}")
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def _kummer_hypotheses(ell: int, n: int, k: int, kp: int) -> tuple[Hypothesis, ...]:
    checks = [
        ("ell is an odd prime", ell != 2 and is_prime(ell)),
        ("n >= 1", n >= 1),
        ("k is even and >= 2", k >= 2 and k % 2 == 0),
        ("kp is even and >= 2", kp >= 2 and kp % 2 == 0),
    ]
    if all(ok for _, ok in checks):
        checks.append(("ell-1 does not divide k", k % (ell - 1) != 0))
        checks.append(
            ("k = kp mod (ell-1)*ell^(n-1)", (k - kp) % exponent_modulus(ell, n) == 0)
        )
    for name, ok in checks:
        if not ok:
            raise HypothesisViolation(name)
    return tuple(Hypothesis(name, ok) for name, ok in checks)


def kummer_check(
    ell: int, n: int, k: int, kp: int, cache: BernoulliCache | None = None
) -> CongruenceVerdict:
    """Classical Kummer congruence:
    (1 - ell^(k-1)) B_k/k = (1 - ell^(kp-1)) B_kp/kp  (mod ell^n),
    for ell-1 not dividing k and k = kp mod (ell-1)*ell^(n-1).

    Both sides are ell-integral, so they reduce mod ell^n by inverting the
    ell-coprime denominators.  Must hold whenever the hypotheses hold.
    """
    hyps = _kummer_hypotheses(ell, n, k, kp)
    modulus = ell**n
    sides = []
    for kk in (k, kp):
        euler_factor = (1 - pow(ell, kk - 1, modulus)) % modulus
        sides.append(euler_factor * rational_mod(bk_over_k(kk, cache), modulus) % modulus)
    lhs, rhs = sides
    return CongruenceVerdict(
        kind="kummer",
        modulus_exponent=n,
        holds=lhs == rhs,
        hypotheses=hyps,
        lhs=str(lhs),
        rhs=str(rhs),
        modulus=str(modulus),
        evidence={"ell": ell, "k": k, "kp": kp},
    )


def theorem2_check(
    ell: int, n: int, k: int, kp: int, cache: BernoulliCache | None = None
) -> CongruenceVerdict:
    """ell-part analogue of the Kummer congruence: under the same
    hypotheses, the two ell-power Selmer orders agree mod ell^n.

    With a = v_ell(numerator(B_k/k)) and b = v_ell(numerator(B_kp/kp)),
    ell^a = ell^b (mod ell^n) holds iff a = b or min(a, b) >= n.
    """
    hyps = _kummer_hypotheses(ell, n, k, kp)
    a = int_valuation(bk_over_k(k, cache).numerator, ell)
    b = int_valuation(bk_over_k(kp, cache).numerator, ell)
    return CongruenceVerdict(
        kind="theorem2",
        modulus_exponent=n,
        holds=a == b or min(a, b) >= n,
        hypotheses=hyps,
        lhs=str(ell**a),
        rhs=str(ell**b),
        modulus=str(ell**n),
        evidence={"ell": ell, "valuations": (a, b)},
    )


def hecke_pair_congruent(ell: int, n: int, pair1: HeckePair, pair2: HeckePair) -> bool:
    """Componentwise congruence of two admissible weight pairs modulo
    (ell-1)*ell^(n-1)."""
    for pair in (pair1, pair2):
        if not pair.admissible:
            raise DomainError(f"pair (k={pair.k}, j={pair.j}) violates k > -j > 0")
    modulus = exponent_modulus(ell, n)
    return (pair1.k - pair2.k) % modulus == 0 and (pair1.j - pair2.j) % modulus == 0


def scan_irregular(ell_max: int, cache: BernoulliCache | None = None) -> list[IrregularPair]:
    """All (ell, k) with ell an odd prime <= ell_max, k even in [2, ell-3],
    and ell dividing the numerator of B_k; sorted by (ell, k)."""
    if ell_max < 3:
        raise DomainError("scan bound must be >= 3")
    pairs = []
    for ell in odd_primes_upto(ell_max):
        for k in range(2, ell - 2, 2):
            num = bernoulli(k, cache).numerator
            if num % ell == 0:
                v = int_valuation(num, ell)
                # k < ell, so the numerator of B_k/k carries the same power
                assert v == int_valuation(bk_over_k(k, cache).numerator, ell)
                pairs.append(IrregularPair(ell, k, v))
    return pairs
