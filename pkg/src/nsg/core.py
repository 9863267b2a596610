"""Numerical semigroups as gap bitmasks, plus the sequences derived from them.

A semigroup is stored by its gap set packed into a Python int (bit ``n`` set
iff ``n`` is a gap).  Everything at or above the conductor is a non-gap, so
the bitmask is all that is needed for O(1) membership.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, Sequence

from .exceptions import InfiniteComplementError


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indexes of set bits of ``x`` in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def minimal_generators_mask(gapmask: int, conductor: int, multiplicity: int) -> int:
    """Bitmask of the minimal generators.

    Every minimal generator is below ``conductor + multiplicity``, and a
    non-gap is a minimal generator iff it is not a sum of two positive
    non-gaps.
    """
    bound = conductor + multiplicity + 1
    full = (1 << bound) - 1
    pos = (full ^ 1) & ~gapmask
    sums = 0
    for a in iter_bits(pos):
        if 2 * a >= bound:
            break
        sums |= pos << a
    return pos & ~sums


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    """A numerical semigroup, identified by its gap set.

    Use :func:`from_generators` or :func:`from_gaps` to build one; the
    constructor trusts its arguments.
    """

    gaps: tuple[int, ...]
    conductor: int
    min_generators: tuple[int, ...]
    _gapmask: int = field(repr=False, default=-1)

    def __post_init__(self) -> None:
        if self._gapmask < 0:
            mask = 0
            for gap in self.gaps:
                mask |= 1 << gap
            object.__setattr__(self, "_gapmask", mask)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int:
        """Largest gap, or -1 for the full semigroup of naturals."""
        return self.conductor - 1

    @property
    def multiplicity(self) -> int:
        return self.min_generators[0]

    @property
    def gapmask(self) -> int:
        return self._gapmask

    @property
    def membership(self) -> tuple[bool, ...]:
        """Membership flags for ``0 .. conductor + max(min_generators)``."""
        top = self.conductor + self.min_generators[-1]
        mask = self._gapmask
        return tuple(not (mask >> n) & 1 for n in range(top + 1))

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int) or n < 0:
            return False
        return n >= self.conductor or not (self._gapmask >> n) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._gapmask == other._gapmask

    def __hash__(self) -> int:
        return hash(self._gapmask)

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.min_generators)) + ">"

    def nongaps(self, count: int) -> list[int]:
        """The first ``count`` positive elements, ascending."""
        out: list[int] = []
        mask = self._gapmask
        n = 0
        while len(out) < count:
            n += 1
            if not (mask >> n) & 1:
                out.append(n)
        return out


def _from_mask(gapmask: int, conductor: int) -> NumericalSemigroup:
    if conductor == 0:
        return NumericalSemigroup((), 0, (1,), 0)
    mult = 1
    while (gapmask >> mult) & 1:
        mult += 1
    gens = tuple(iter_bits(minimal_generators_mask(gapmask, conductor, mult)))
    return NumericalSemigroup(tuple(iter_bits(gapmask)), conductor, gens, gapmask)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """The semigroup generated by ``gens``.

    >>> from_generators([4, 7]).genus
    9
    """
    gens = sorted(set(int(x) for x in gens))
    if not gens:
        raise ValueError("need at least one generator")
    if gens[0] <= 0:
        raise ValueError(f"generators must be positive, got {gens[0]}")
    if reduce(gcd, gens) != 1:
        raise InfiniteComplementError(
            f"gcd of {gens} is {reduce(gcd, gens)}: complement is infinite"
        )
    a, b = gens[0], gens[-1]
    # Schur's bound on the Frobenius number: F <= (a - 1)(b - 1) - 1.
    limit = (a - 1) * (b - 1) + 1
    full = (1 << limit) - 1
    members = 1
    for g in gens:
        step = g
        while step < limit:
            members |= (members << step) & full
            step <<= 1
    gapmask = full & ~members
    return _from_mask(gapmask, gapmask.bit_length())


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """The semigroup with the given gap set; raises if the complement is not closed."""
    gaps = sorted(set(gaps))
    if gaps and gaps[0] <= 0:
        raise ValueError("gaps must be positive integers")
    mask = 0
    for gap in gaps:
        mask |= 1 << gap
    conductor = mask.bit_length()
    members = ((1 << conductor) - 1) & ~mask
    for a in iter_bits(members & ~1):
        # a + b must avoid every gap for every non-gap b
        if (members << a) & mask:
            raise ValueError(f"{gaps} is not the gap set of a semigroup")
    return _from_mask(mask, conductor)


@dataclass(frozen=True)
class StructureProfile:
    """Derived sequences of a semigroup of genus g.

    ``m`` holds m_1..m_g, ``f`` holds f_1..f_{g-rho}, ``u`` holds the rho odd
    non-gaps below 2g ascending, ``d`` holds d_1..d_{g+1}.  The accessor
    methods extend each sequence past the stored prefix.
    """

    genus: int
    m: tuple[int, ...]
    f: tuple[int, ...]
    u: tuple[int, ...]
    rho: int
    d: tuple[int, ...]

    def nongap(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"non-gap index must be >= 1, got {i}")
        if i > self.genus:
            return self.genus + i
        return self.m[i - 1]

    def even_nongap(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"index must be >= 1, got {i}")
        if i > len(self.f):
            return 2 * i + 2 * self.rho
        return self.f[i - 1]

    def odd_nongap(self, j: int) -> int:
        """u_j with u_1 the largest odd non-gap below 2g."""
        if not 1 <= j <= self.rho:
            raise ValueError(f"odd non-gap index must be in [1, {self.rho}], got {j}")
        return self.u[self.rho - j]

    def gcd_chain(self, i: int) -> int:
        if i < 1:
            raise ValueError(f"index must be >= 1, got {i}")
        if i > len(self.d):
            return 1
        return self.d[i - 1]


def profile(H: NumericalSemigroup) -> StructureProfile:
    g = H.genus
    mask = H.gapmask
    m = []
    for n in range(1, 2 * g + 1):
        if not (mask >> n) & 1:
            m.append(n)
    f = tuple(x for x in m if not x & 1)
    u = tuple(x for x in m if x & 1)
    rho = g - len(f)
    d = []
    acc = 0
    for x in m:
        acc = gcd(acc, x)
        d.append(acc)
    d.append(gcd(acc, 2 * g + 1))
    return StructureProfile(g, tuple(m), f, u, rho, tuple(d))


def nongap(H: NumericalSemigroup, i: int) -> int:
    """m_i(H), the i-th positive element."""
    if i < 1:
        raise ValueError(f"non-gap index must be >= 1, got {i}")
    g = H.genus
    if i >= g:
        return g + i
    return H.nongaps(i)[-1]


def gcd_chain(H: NumericalSemigroup, i: int) -> int:
    """gcd(m_1, ..., m_i)."""
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    return reduce(gcd, H.nongaps(i))


def even_gap_count(H: NumericalSemigroup) -> int:
    return sum(1 for x in H.gaps if not x & 1)


def binom2(n: int) -> int:
    """n choose 2, taken as 0 for n < 2."""
    return n * (n - 1) // 2 if n >= 2 else 0


def parse_generators(text: str | Sequence[int]) -> list[int]:
    if isinstance(text, str):
        parts = [p for p in text.replace(" ", "").split(",") if p]
        try:
            return [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"bad generator list {text!r}") from None
    return [int(x) for x in text]
