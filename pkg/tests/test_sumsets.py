from functools import reduce
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from nsg import (
    HypothesisError, castelnuovo_check, double_sumset, enumerate_genus, freiman_check,
    from_generators, profile, residue_sumset_bound,
)
from nsg.sumsets import SumsetInstance, castelnuovo_values, residue_doubling_size

from . import oracles


def test_double_sumset_examples():
    assert double_sumset({0, 1, 2}) == {0, 1, 2, 3, 4}
    assert double_sumset({0, 2, 3}) == {0, 2, 3, 4, 5, 6}
    K = {0, 5, 10, 15, 18, 20}
    assert len(double_sumset(K)) >= 2 * 5 + 2 + 3
    assert freiman_check(sorted(K), 3)


@settings(max_examples=200)
@given(st.sets(st.integers(0, 60), min_size=1, max_size=12))
def test_double_sumset_oracle(K):
    assert double_sumset(K) == oracles.sumset(K)


def test_freiman_examples():
    assert freiman_check([0, 2, 3], 0)
    assert len(double_sumset([0, 3, 5, 6, 7])) == 12 and freiman_check([0, 3, 5, 6, 7], 2)
    for b in range(3):
        with pytest.raises(HypothesisError):
            freiman_check([0, 4, 6, 8], b)
    with pytest.raises(HypothesisError):
        freiman_check([0, 3, 5, 6, 7], 3)   # b must be < i - 1
    with pytest.raises(HypothesisError):
        freiman_check([0, 2, 3, 4, 5], 1)   # m_i = 5 < i + 1 + b = 6
    with pytest.raises(ValueError):
        SumsetInstance.of([1, 2])


@settings(max_examples=200)
@given(st.sets(st.integers(1, 40), min_size=2, max_size=9))
def test_freiman_random(S):
    K = [0] + sorted(S)
    inst = SumsetInstance.of(K)
    if reduce(gcd, K[1:]) != 1:
        return
    for b in inst.admissible_slack():
        assert freiman_check(K, b)
        assert len(oracles.sumset(K)) >= 2 * inst.i + 2 + b


def test_castelnuovo_examples():
    H = from_generators([5, 18])
    assert castelnuovo_values(H, 5) == (40, 40) and castelnuovo_check(H, 5)
    H = from_generators([2, 3])
    assert castelnuovo_values(H, 2) == (6, 6) and castelnuovo_check(H, 2)
    H = from_generators([4, 6, 17])
    with pytest.raises(HypothesisError):
        castelnuovo_check(H, 3)
    lhs, rhs = castelnuovo_values(H, 3)
    assert (lhs, rhs) == (16, 17) and lhs < rhs
    assert 2 * profile(H).nongap(3) == profile(H).nongap(7)
    with pytest.raises(HypothesisError):
        castelnuovo_check(from_generators([3, 4]), 5)   # i > g + 1
    with pytest.raises(ValueError):
        castelnuovo_values(H, 0)


def test_residue_examples():
    N, ok = residue_sumset_bound(from_generators([4, 10, 13]), 3)
    assert ok and N == residue_doubling_size([4, 8, 10], 10) == 5
    N, ok = residue_sumset_bound(from_generators([5, 18]), 5)
    p = profile(from_generators([5, 18]))
    assert ok and N == 2 * 5 - 1 and 2 * p.nongap(5) == p.nongap(5 + N)
    for g in (5, 8):
        H = from_generators([2, 2 * g + 1])
        for i in range(2, g - 1):
            assert residue_sumset_bound(H, i)[1]
    with pytest.raises(ValueError):
        residue_sumset_bound(from_generators([4, 10, 13]), 9)


def test_residue_size_oracle():
    for H in enumerate_genus(9):
        p = profile(H)
        for i in range(2, H.genus - 1):
            m_i = p.m[i - 1]
            K = {x % m_i for x in p.m[:i]}
            assert residue_doubling_size(p.m[:i], m_i) == len({(a + b) % m_i for a in K for b in K})
