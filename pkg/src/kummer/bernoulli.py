"""Exact Bernoulli numbers, their prime valuations, and integrality facts.

Two independent algorithms are kept side by side:

  * the primary path builds tangent numbers with Seidel's integer-only
    triangle and converts B_2m = (-1)^(m-1) * 2m * T_m / (2^2m (2^2m - 1)),
  * `bernoulli_by_recurrence` evaluates the defining binomial recurrence
    sum_{j<=k} C(k+1, j) B_j = 0 directly.

The second one is slower and exists purely as a cross-check; a cache built
with cross_check=True verifies every primary value against it on insertion.

Convention: B_1 = -1/2.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, exp, fsum, lgamma, log, pi

from .arith import int_valuation, is_prime
from .errors import DomainError


def _tangent_numbers(m: int) -> list[int]:
    """Tangent numbers T_1..T_m via the Seidel triangle (integer arithmetic)."""
    if m < 1:
        return []
    t = [0] * (m + 1)
    t[1] = 1
    for k in range(2, m + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, m + 1):
        for j in range(k, m + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    return t[1:]


def _even_bernoullis(m: int) -> list[Fraction]:
    """B_2, B_4, ..., B_2m from tangent numbers."""
    out = []
    for i, tangent in enumerate(_tangent_numbers(m), start=1):
        two_i = 2 * i
        sign = 1 if i % 2 == 1 else -1
        out.append(Fraction(sign * two_i * tangent, (1 << two_i) * ((1 << two_i) - 1)))
    return out


class BernoulliCache:
    """Cache of even-index Bernoulli numbers with per-entry algorithm tags.

    Concurrent reads are safe; insertion is serialized by a lock.  With
    cross_check on, every inserted value is compared against the defining
    recurrence before being accepted.
    """

    def __init__(self, cross_check: bool = False):
        self.computed: dict[int, Fraction] = {}
        self.algorithm_tag: dict[int, str] = {}
        self.cross_check = cross_check
        self._lock = threading.Lock()

    def get(self, k: int) -> Fraction | None:
        return self.computed.get(k)

    def put(self, k: int, value: Fraction, tag: str) -> None:
        if self.cross_check and value != bernoulli_by_recurrence(k):
            raise AssertionError(f"algorithm {tag!r} disagrees with recurrence at k={k}")
        with self._lock:
            self.computed[k] = value
            self.algorithm_tag[k] = tag

    def fill_even_upto(self, kmax: int, tag: str = "tangent") -> None:
        for i, b in enumerate(_even_bernoullis(kmax // 2), start=1):
            if 2 * i not in self.computed:
                self.put(2 * i, b, tag)

    def as_json_map(self) -> dict[str, str]:
        return {str(k): format_rational(self.computed[k]) for k in sorted(self.computed)}


_default_cache = BernoulliCache()


def bernoulli(k: int, cache: BernoulliCache | None = None) -> Fraction:
    """Exact Bernoulli number B_k.  B_1 = -1/2; zero for odd k >= 3."""
    if k < 0:
        raise DomainError("Bernoulli index must be >= 0")
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(-1, 2)
    if k % 2 == 1:
        return Fraction(0)
    cache = cache if cache is not None else _default_cache
    value = cache.get(k)
    if value is None:
        # Seidel's triangle is a batch computation, so grow geometrically to
        # keep ascending query sequences amortized.
        top = max(cache.computed, default=0)
        cache.fill_even_upto(max(k, 2 * top))
        value = cache.get(k)
    return value


_recurrence_memo: list[Fraction] = [Fraction(1)]


def bernoulli_by_recurrence(k: int) -> Fraction:
    """B_k from the defining recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0.

    Independent of the tangent-number path; used as the oracle in tests and
    in cross-checking caches.
    """
    if k < 0:
        raise DomainError("Bernoulli index must be >= 0")
    while len(_recurrence_memo) <= k:
        m = len(_recurrence_memo)
        acc = sum(Fraction(comb(m + 1, j)) * _recurrence_memo[j] for j in range(m))
        _recurrence_memo.append(-acc / (m + 1))
    return _recurrence_memo[k]


def bk_over_k(k: int, cache: BernoulliCache | None = None) -> Fraction:
    """Reduced fraction B_k / k for even k >= 2."""
    _require_even(k)
    return bernoulli(k, cache) / k


def _require_even(k: int) -> None:
    if k < 2 or k % 2 != 0:
        raise DomainError(f"index must be a positive even integer, got {k}")


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def vp(x: Fraction, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    _require_prime(p)
    if x == 0:
        raise DomainError("valuation of 0 is infinite")
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def ell_part(x: Fraction, ell: int) -> Fraction:
    """ell^(v_ell(x)) for a nonzero rational x."""
    return Fraction(ell) ** vp(x, ell)


def denominator_formula(k: int) -> int:
    """Product over primes p with p-1 | k of p^(v_p(k)+1).

    Closed form for the reduced denominator of B_k/k, even k >= 2.
    """
    _require_even(k)
    out = 1
    for d in range(1, k + 1):
        if k % d == 0 and is_prime(d + 1):
            p = d + 1
            out *= p ** (int_valuation(k, p) + 1)
    return out


@dataclass(frozen=True)
class IntegralityVerdict:
    """Result of a p-integrality fact check; not applicable when the fact's
    divisibility regime does not cover (p, k)."""

    fact: str
    p: int
    k: int
    applicable: bool
    holds: bool | None
    valuation: int | None
    value: Fraction | None

    def to_json_dict(self) -> dict:
        return {
            "fact": self.fact,
            "p": self.p,
            "k": self.k,
            "applicable": self.applicable,
            "holds": self.holds,
            "valuation": self.valuation,
            "value": None if self.value is None else format_rational(self.value),
        }


def check_adams(p: int, k: int, cache: BernoulliCache | None = None) -> IntegralityVerdict:
    """B_k/k is a p-integer when p-1 does not divide k."""
    _require_prime(p)
    _require_even(k)
    if k % (p - 1) == 0:
        return IntegralityVerdict("adams", p, k, False, None, None, None)
    value = bk_over_k(k, cache)
    v = vp(value, p)
    return IntegralityVerdict("adams", p, k, True, v >= 0, v, value)


def check_carlitz(p: int, k: int, cache: BernoulliCache | None = None) -> IntegralityVerdict:
    """(B_k + 1/p - 1)/k is a p-integer for odd p with p-1 | k."""
    _require_prime(p)
    _require_even(k)
    if p == 2 or k % (p - 1) != 0:
        return IntegralityVerdict("carlitz", p, k, False, None, None, None)
    value = (bernoulli(k, cache) + Fraction(1, p) - 1) / k
    v = vp(value, p) if value != 0 else None
    holds = True if value == 0 else v >= 0
    return IntegralityVerdict("carlitz", p, k, True, holds, v, value)


@dataclass(frozen=True)
class ZetaRatioVerdict:
    k: int
    tol: float
    holds: bool
    zeta_value: float
    scaled_zeta: float
    bernoulli_side: float
    rel_error: float
    terms_used: int


def zeta_ratio_check(k: int, tol: float, cache: BernoulliCache | None = None) -> ZetaRatioVerdict:
    """Check |2 (k-1)! / (2 pi)^k * zeta(k)| against |B_k/k| numerically.

    zeta(k) is summed term by term in doubles until the next term drops
    below tol/10 of the running sum; the discarded tail decays only
    polynomially, so it is compensated with the standard Euler-Maclaurin
    integral + half-term correction before comparing.
    """
    _require_even(k)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    terms = [1.0]
    running = 1.0
    n = 1
    while True:
        n += 1
        t = float(n) ** (-k)
        if t < (tol / 10.0) * running and n >= 32:
            break
        terms.append(t)
        running += t
    # first excluded index is n; tail = integral + half-term + derivative term
    tail = n ** (1.0 - k) / (k - 1.0) + 0.5 * n ** (-1.0 * k) + (k / 12.0) * n ** (-1.0 * k - 1.0)
    zeta = fsum(terms) + tail
    scaled = 2.0 * exp(lgamma(k) - k * log(2.0 * pi)) * zeta
    exact = abs(bk_over_k(k, cache))
    rhs = exact.numerator / exact.denominator
    rel = abs(scaled - rhs) / rhs
    return ZetaRatioVerdict(k, tol, rel < tol, zeta, scaled, rhs, rel, len(terms))


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" or "n" (optional sign) into an exact fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse rational {text!r}") from None


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def default_cache() -> BernoulliCache:
    return _default_cache
