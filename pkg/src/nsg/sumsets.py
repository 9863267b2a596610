"""Doubling of finite sets and the sumset inequalities applied to non-gap prefixes."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .core import NumericalSemigroup, StructureProfile, binom2, profile
from .exceptions import HypothesisError, InvariantViolation


def double_sumset(K: Iterable[int]) -> frozenset[int]:
    """2K = {a + b : a, b in K}."""
    K = sorted(set(K))
    if not K:
        raise ValueError("K must be non-empty")
    return frozenset(a + b for i, a in enumerate(K) for b in K[i:])


@dataclass(frozen=True)
class SumsetInstance:
    """K = {0 < m_1 < ... < m_i} with its doubling."""

    K: tuple[int, ...]
    double: frozenset[int]

    @classmethod
    def of(cls, K: Sequence[int]) -> "SumsetInstance":
        K = tuple(K)
        if not K or K[0] != 0 or any(a >= b for a, b in zip(K, K[1:])):
            raise ValueError(f"K must be strictly increasing and start at 0, got {K}")
        return cls(K, double_sumset(K))

    @property
    def i(self) -> int:
        return len(self.K) - 1

    def admissible_slack(self) -> range:
        """Every b with 0 <= b < i - 1 and m_i >= i + 1 + b."""
        i = self.i
        return range(0, min(i - 2, self.K[-1] - i - 1) + 1)


def freiman_check(K: Sequence[int], b: int) -> bool:
    """#2K >= 2i + 2 + b under the gcd and largest-element hypotheses.

    Always true when the hypotheses hold; a failure raises InvariantViolation.
    """
    inst = SumsetInstance.of(K)
    i = inst.i
    if i < 1 or reduce(gcd, inst.K[1:]) != 1:
        raise HypothesisError(f"gcd of {inst.K[1:]} must be 1")
    if not 0 <= b < i - 1:
        raise HypothesisError(f"need 0 <= b < i - 1 = {i - 1}, got b={b}")
    if inst.K[-1] < i + 1 + b:
        raise HypothesisError(f"need m_i = {inst.K[-1]} >= i + 1 + b = {i + 1 + b}")
    size = len(inst.double)
    if size < 2 * i + 2 + b:
        raise InvariantViolation(f"#2K = {size} < {2 * i + 2 + b} for K={inst.K}, b={b}")
    assert 2 * i + 1 <= size <= binom2(i + 2)
    return True


def castelnuovo_values(H: NumericalSemigroup, i: int,
                       prof: StructureProfile | None = None) -> tuple[int, int]:
    """(2 m_i, m_{3i-1}) without checking any hypothesis."""
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    prof = prof or profile(H)
    return 2 * prof.nongap(i), prof.nongap(3 * i - 1)


def castelnuovo_check(H: NumericalSemigroup, i: int,
                      prof: StructureProfile | None = None) -> bool:
    """2 m_i >= m_{3i-1} when d_i = 1 and i <= g + 1.

    Raises HypothesisError if either condition fails; use
    :func:`castelnuovo_values` to look at the raw numbers anyway.
    """
    prof = prof or profile(H)
    if i < 1 or i > H.genus + 1:
        raise HypothesisError(f"need 1 <= i <= g + 1 = {H.genus + 1}, got {i}")
    if prof.gcd_chain(i) != 1:
        raise HypothesisError(f"d_{i} = {prof.gcd_chain(i)} != 1")
    lhs, rhs = castelnuovo_values(H, i, prof)
    if lhs < rhs:
        raise InvariantViolation(f"{H}: 2 m_{i} = {lhs} < m_{3 * i - 1} = {rhs}")
    return True


def residue_doubling_size(K: Iterable[int], modulus: int) -> int:
    """#2K inside the integers mod ``modulus``; explicit double loop."""
    residues = sorted({k % modulus for k in K})
    return len({(a + b) % modulus for a in residues for b in residues})


def residue_sumset_bound(H: NumericalSemigroup, i: int,
                         prof: StructureProfile | None = None) -> tuple[int, bool]:
    """(N, 2 m_i >= m_{i+N}) where N is the doubling size of {m_1..m_i} mod m_i."""
    g = H.genus
    if not 2 <= i <= g - 2:
        raise ValueError(f"need 2 <= i <= g - 2 = {g - 2}, got {i}")
    prof = prof or profile(H)
    m_i = prof.nongap(i)
    N = residue_doubling_size(prof.m[:i], m_i)
    holds = 2 * m_i >= prof.nongap(i + N)
    if not holds:
        raise InvariantViolation(f"{H}: 2 m_{i} = {2 * m_i} < m_{i + N} = {prof.nongap(i + N)}")
    return N, holds
