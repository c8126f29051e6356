import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer import (
    DomainError,
    LocalRing,
    ResourceLimitExceeded,
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

Z3 = LocalRing(3)
Z5 = LocalRing(5)
Z2 = LocalRing(2)


def mod(ring, exps):
    return make_module(ring, exps)


class TestConstruction:
    def test_normal_form(self):
        assert mod(Z3, [1, 4, 0, 2]).exponents == (4, 2, 1)

    def test_zero_module(self):
        m = mod(Z5, [])
        assert m.is_zero and m.exponents == ()

    def test_negative_exponent_rejected(self):
        with pytest.raises(DomainError):
            mod(Z2, [-1])

    def test_nonprime_ring_rejected(self):
        with pytest.raises(DomainError):
            LocalRing(6)

    def test_bad_ring_parameters(self):
        with pytest.raises(DomainError):
            LocalRing(3, ram_e=0)
        with pytest.raises(DomainError):
            LocalRing(3, res_f=0)


class TestTorsion:
    def test_truncation(self):
        assert torsion(mod(Z3, [4, 2, 1]), 3).exponents == (3, 2, 1)
        assert torsion(mod(Z3, [5]), 1).exponents == (1,)

    def test_level_zero_is_zero_module(self):
        assert torsion(mod(Z3, [4, 2]), 0).is_zero

    def test_truncation_against_enumeration(self):
        # lambda^2-killed elements of (Z/27) + (Z/3)
        m = mod(Z3, [3, 1])
        assert torsion(m, 2).exponents == (2, 1)
        assert cardinality(torsion(m, 2)) == 27
        assert torsion_count_oracle(m, 2) == 27

    def test_negative_level_rejected(self):
        with pytest.raises(DomainError):
            torsion(mod(Z3, [1]), -1)


class TestCardinality:
    def test_residue_degree_two(self):
        assert cardinality(mod(LocalRing(3, 1, 2), [3, 1])) == 6561

    def test_zero_module(self):
        assert cardinality(mod(Z3, [])) == 1

    def test_counterexample_pair_has_equal_cardinality(self):
        assert cardinality(mod(Z3, [5])) == cardinality(mod(Z3, [4, 1])) == 243


class TestCountOracle:
    def test_two_torsion(self):
        assert torsion_count_oracle(mod(Z2, [2, 1]), 1) == 4

    def test_level_zero(self):
        assert torsion_count_oracle(mod(Z5, [2, 2]), 0) == 1

    def test_level_above_exponent_gives_whole_module(self):
        assert torsion_count_oracle(mod(Z3, [3]), 5) == 27

    def test_bound(self):
        with pytest.raises(ResourceLimitExceeded):
            torsion_count_oracle(mod(Z2, [30]), 1)
        assert torsion_count_oracle(mod(Z2, [30]), 1, bound=2**31) == 2


class TestAlgebraic:
    def test_level_one_matches(self):
        assert alg_congruent(mod(Z3, [3, 1]), mod(Z3, [2, 2]), 1).holds

    def test_level_two_separates(self):
        assert not alg_congruent(mod(Z3, [3, 1]), mod(Z3, [2, 2]), 2).holds

    def test_counterexample_fails_at_level_one(self):
        assert not alg_congruent(mod(Z3, [5]), mod(Z3, [4, 1]), 1).holds

    def test_mismatched_rings(self):
        with pytest.raises(DomainError):
            alg_congruent(mod(Z3, [1]), mod(Z5, [1]), 1)


class TestNumerical:
    def test_examples(self):
        assert not num_congruent(mod(Z3, [3, 1]), mod(Z3, [2, 2]), 2).holds
        assert not num_congruent(mod(Z3, [3, 1]), mod(Z3, [2, 1, 1]), 1).holds
        assert num_congruent(mod(Z3, [2, 2]), mod(Z3, [3, 1]), 1).holds

    def test_level_must_be_positive(self):
        with pytest.raises(DomainError):
            num_congruent(mod(Z3, [1]), mod(Z3, [1]), 0)


class TestCardinal:
    @pytest.mark.parametrize("ell", [2, 3, 5, 7, 37])
    def test_counterexample_pair_congruent_at_every_level(self, ell):
        ring = LocalRing(ell)
        m1, m2 = mod(ring, [5]), mod(ring, [4, 1])
        for n in range(1, 8):
            v = car_congruent(m1, m2, n)
            assert v.holds
            assert v.evidence["difference_valuation"] == "infinite"

    def test_valuation_of_difference(self):
        # |[1]| - |[2]| = 3 - 9 = -6 has 3-valuation 1
        assert car_congruent(mod(Z3, [1]), mod(Z3, [2]), 1).holds
        assert not car_congruent(mod(Z3, [1]), mod(Z3, [2]), 2).holds

    def test_versus_zero_module(self):
        assert not car_congruent(mod(Z2, [1]), mod(Z2, []), 1).holds

    def test_ramified_ring_scales_valuation(self):
        ring = LocalRing(3, ram_e=2)
        m1, m2 = mod(ring, [1]), mod(ring, [2])
        assert car_congruent(m1, m2, 2).holds
        assert not car_congruent(m1, m2, 3).holds


class TestPartitionText:
    def test_plus_and_comma(self):
        assert parse_partition("4+2+1") == (4, 2, 1)
        assert parse_partition("4,2,1") == (4, 2, 1)
        assert parse_partition("1+4+2") == (4, 2, 1)

    def test_zero_forms(self):
        assert parse_partition("0") == ()
        assert parse_partition("") == ()

    def test_rejects_garbage(self):
        with pytest.raises(DomainError):
            parse_partition("4+x")
        with pytest.raises(DomainError):
            parse_partition("-1")

    def test_format_round_trip(self):
        assert format_partition((4, 2, 1)) == "4+2+1"
        assert format_partition(()) == "0"
        assert parse_partition(format_partition((3, 3, 1))) == (3, 3, 1)


rings = st.builds(
    LocalRing,
    st.sampled_from([2, 3, 5]),
    st.integers(1, 2),
    st.integers(1, 2),
)
partitions = st.lists(st.integers(1, 6), max_size=5)


@st.composite
def module_pairs(draw):
    ring = draw(rings)
    return make_module(ring, draw(partitions)), make_module(ring, draw(partitions))


@given(rings, partitions, st.integers(0, 8), st.integers(0, 8))
def test_torsion_idempotent(ring, exps, r, s):
    m = make_module(ring, exps)
    assert torsion(torsion(m, r), s) == torsion(m, min(r, s))


@given(rings, partitions, st.integers(0, 8))
def test_torsion_cardinality_formula(ring, exps, r):
    m = make_module(ring, exps)
    q = ring.residue_size
    assert cardinality(torsion(m, r)) == q ** sum(min(c, r) for c in m.exponents)


@settings(max_examples=60, deadline=None)
@given(module_pairs(), st.integers(1, 6))
def test_algebraic_iff_numerical_at_all_lower_levels(pair, n):
    m1, m2 = pair
    lhs = alg_congruent(m1, m2, n).holds
    rhs = all(num_congruent(m1, m2, r).holds for r in range(1, n + 1))
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(module_pairs(), st.integers(1, 6))
def test_numerical_implies_cardinal(pair, n):
    m1, m2 = pair
    if num_congruent(m1, m2, n).holds:
        assert car_congruent(m1, m2, n).holds


@settings(max_examples=60, deadline=None)
@given(module_pairs(), st.integers(1, 6))
def test_algebraic_descends_to_lower_levels(pair, n):
    m1, m2 = pair
    if alg_congruent(m1, m2, n).holds:
        assert all(alg_congruent(m1, m2, r).holds for r in range(1, n))


@given(rings, partitions, st.integers(1, 6))
def test_algebraic_is_reflexive_and_symmetric(ring, exps, n):
    m1 = make_module(ring, exps)
    m2 = make_module(ring, list(reversed(exps)))
    assert alg_congruent(m1, m1, n).holds
    assert alg_congruent(m1, m2, n).holds == alg_congruent(m2, m1, n).holds


@settings(max_examples=40, deadline=None)
@given(module_pairs(), st.integers(1, 6))
def test_verdict_evidence_rederives_outcome(pair, n):
    m1, m2 = pair
    alg = alg_congruent(m1, m2, n)
    t1, t2 = alg.evidence["truncated"]
    assert alg.holds == (t1 == t2)
    num = num_congruent(m1, m2, n)
    c1, c2 = num.evidence["torsion_cardinalities"]
    assert num.holds == (c1 == c2)
    car = car_congruent(m1, m2, n)
    dv = car.evidence["difference_valuation"]
    assert car.holds == (dv == "infinite" or dv >= n)


@settings(max_examples=30, deadline=None)
@given(rings, st.lists(st.integers(1, 4), max_size=3), st.integers(0, 4))
def test_count_oracle_agrees_with_formula(ring, exps, r):
    m = make_module(ring, exps)
    if cardinality(m) > 50_000:
        return
    assert torsion_count_oracle(m, r) == cardinality(torsion(m, r))
