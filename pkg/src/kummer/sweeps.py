"""Randomized and exhaustive invariant sweeps.

Three suites:

  modules   - seeded random partition pairs; checks that algebraic
              congruence at level n is equivalent to numerical congruence
              at every level r <= n, that numerical implies cardinal, and
              that torsion counts match the brute-force element count
              whenever the module is small enough to enumerate.
  kummer    - exhaustive classical Kummer congruence over all qualifying
              (ell, n, k, kp) in the configured ranges.
  theorem2  - same ranges, comparing the ell-power orders instead.

Reports are deterministic for a fixed config (the only randomness is the
seeded partition generator) and list every violating case verbatim.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import local_modules as lm
from .bernoulli import bernoulli
from .errors import ResourceLimitExceeded
from .local_modules import LocalRing, TorsionModule
from .selmer import kummer_check, theorem2_check
from .arith import odd_primes_upto

SUITES = ("modules", "kummer", "theorem2")


@dataclass(frozen=True)
class SweepConfig:
    trials: int = 1000
    seed: int = 42
    ells: tuple[int, ...] = (2, 3, 5)
    res_fs: tuple[int, ...] = (1, 2)
    n_max: int = 6
    max_parts: int = 4
    max_exponent: int = 5
    oracle_bound: int = lm.ORACLE_BOUND
    congruence_ell_max: int = 50
    congruence_n_max: int = 3
    congruence_k_max: int = 400


@dataclass
class SweepReport:
    suite: str
    cases: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "violations": list(self.violations),
        }

    def render(self) -> str:
        lines = [f"suite={self.suite} cases={self.cases} violations={len(self.violations)}"]
        lines.extend(f"  VIOLATION {v}" for v in self.violations)
        return "\n".join(lines)


def _random_partition(rng: random.Random, config: SweepConfig) -> list[int]:
    parts = rng.randint(0, config.max_parts)
    return [rng.randint(1, config.max_exponent) for _ in range(parts)]


def _torsion_preserving_variant(
    rng: random.Random, exponents: tuple[int, ...], n: int, config: SweepConfig
) -> list[int]:
    """Resample every exponent >= n to another value >= n: the level-n
    torsion is unchanged, so congruent pairs actually occur in the sweep."""
    cap = max(n, config.max_exponent)
    return [c if c < n else rng.randint(n, cap) for c in exponents]


def run_module_suite(config: SweepConfig) -> SweepReport:
    rng = random.Random(config.seed)
    report = SweepReport("modules")
    for trial in range(config.trials):
        ring = LocalRing(rng.choice(config.ells), 1, rng.choice(config.res_fs))
        n = rng.randint(1, config.n_max)
        m1 = lm.make_module(ring, _random_partition(rng, config))
        if rng.random() < 0.5:
            m2 = lm.make_module(ring, _random_partition(rng, config))
        else:
            m2 = lm.make_module(ring, _torsion_preserving_variant(rng, m1.exponents, n, config))
        report.cases += 1
        label = (
            f"trial={trial} ring=({ring.ell},{ring.ram_e},{ring.res_f}) n={n} "
            f"m1=[{lm.format_partition(m1.exponents)}] m2=[{lm.format_partition(m2.exponents)}]"
        )
        alg = lm.alg_congruent(m1, m2, n).holds
        num_all = all(lm.num_congruent(m1, m2, r).holds for r in range(1, n + 1))
        if alg != num_all:
            report.violations.append(
                f"{label}: algebraic={alg} but numerical-at-all-levels={num_all}"
            )
        if lm.num_congruent(m1, m2, n).holds and not lm.car_congruent(m1, m2, n).holds:
            report.violations.append(f"{label}: numerical holds but cardinal fails")
        for mod in (m1, m2):
            try:
                counted = lm.torsion_count_oracle(mod, n, config.oracle_bound)
            except ResourceLimitExceeded:
                continue
            expected = lm.cardinality(lm.torsion(mod, n))
            if counted != expected:
                report.violations.append(
                    f"{label}: enumeration counted {counted}, formula gives {expected} "
                    f"for [{lm.format_partition(mod.exponents)}]"
                )
    return report


def _congruence_suite(config: SweepConfig, checker, suite: str) -> SweepReport:
    report = SweepReport(suite)
    if config.congruence_k_max >= 2:
        bernoulli(config.congruence_k_max - config.congruence_k_max % 2)  # warm the cache
    for ell in odd_primes_upto(config.congruence_ell_max):
        for n in range(1, config.congruence_n_max + 1):
            modulus = (ell - 1) * ell ** (n - 1)
            classes: dict[int, list[int]] = {}
            for k in range(2, config.congruence_k_max + 1, 2):
                if k % (ell - 1) != 0:
                    classes.setdefault(k % modulus, []).append(k)
            for members in classes.values():
                for i, k in enumerate(members):
                    for kp in members[i + 1 :]:
                        report.cases += 1
                        verdict = checker(ell, n, k, kp)
                        if not verdict.holds:
                            report.violations.append(
                                f"ell={ell} n={n} k={k} kp={kp}: "
                                f"{verdict.lhs} != {verdict.rhs} (mod {verdict.modulus})"
                            )
    return report


def run_kummer_suite(config: SweepConfig) -> SweepReport:
    return _congruence_suite(config, kummer_check, "kummer")


def run_theorem2_suite(config: SweepConfig) -> SweepReport:
    return _congruence_suite(config, theorem2_check, "theorem2")


def run_suites(config: SweepConfig, suites: tuple[str, ...] = SUITES) -> list[SweepReport]:
    runners = {
        "modules": run_module_suite,
        "kummer": run_kummer_suite,
        "theorem2": run_theorem2_suite,
    }
    return [runners[name](config) for name in suites]
