"""Exhaustive generation of semigroups by genus, named families, and census tables.

The fast path walks the semigroup tree: the children of H are the sets
H \\ {x} for each minimal generator x larger than the Frobenius number.  Every
semigroup of genus g sits at depth g exactly once.  A slow subset-closure
search serves as an independent oracle at small genus.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping

from .core import (
    NumericalSemigroup,
    binom2,
    from_generators,
    iter_bits,
    minimal_generators_mask,
    profile,
)

DEFAULT_MAX_GENUS = 26
ORACLE_MAX_GENUS = 12


def max_genus() -> int:
    """Enumeration cap, overridable through ``NSG_MAX_GENUS``."""
    raw = os.environ.get("NSG_MAX_GENUS")
    if raw is None:
        return DEFAULT_MAX_GENUS
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"NSG_MAX_GENUS must be an integer, got {raw!r}") from None


# A tree node is (gapmask, frobenius, multiplicity).  Tuples keep the walk
# cheap and picklable for worker processes.
Node = tuple[int, int, int]

ROOT: Node = (0, -1, 1)


def _generator_mask(node: Node) -> int:
    gapmask, frob, mult = node
    return minimal_generators_mask(gapmask, frob + 1, mult)


def children(node: Node) -> list[Node]:
    """Children ordered by the removed generator, ascending."""
    gapmask, frob, mult = node
    effective = _generator_mask(node) >> (frob + 1)
    out = []
    for k in iter_bits(effective):
        x = frob + 1 + k
        new_mult = mult + 1 if x == mult else mult
        out.append((gapmask | (1 << x), x, new_mult))
    return out


def node_semigroup(node: Node) -> NumericalSemigroup:
    gapmask, frob, _ = node
    gens = tuple(iter_bits(_generator_mask(node)))
    return NumericalSemigroup(tuple(iter_bits(gapmask)), frob + 1, gens, gapmask)


def walk(depth: int, start: Node = ROOT, start_depth: int = 0) -> Iterator[Node]:
    """Depth-first walk yielding the nodes exactly ``depth`` levels below the root."""
    stack = [(start, start_depth)]
    while stack:
        node, level = stack.pop()
        if level == depth:
            yield node
            continue
        kids = children(node)
        for kid in reversed(kids):
            stack.append((kid, level + 1))


def frontier(depth: int, min_nodes: int) -> tuple[int, list[Node]]:
    """Shallowest level at or above ``depth`` holding at least ``min_nodes`` nodes."""
    level = 0
    nodes = [ROOT]
    while level < depth and len(nodes) < min_nodes:
        nodes = [kid for node in nodes for kid in children(node)]
        level += 1
    return level, nodes


@dataclass(frozen=True)
class EnumerationNode:
    semigroup: NumericalSemigroup
    frobenius: int
    effective_generators: tuple[int, ...]

    @classmethod
    def from_node(cls, node: Node) -> "EnumerationNode":
        H = node_semigroup(node)
        eff = tuple(x for x in H.min_generators if x > node[1])
        return cls(H, node[1], eff)

    def parent(self) -> NumericalSemigroup | None:
        """The semigroup obtained by adding the Frobenius number back."""
        H = self.semigroup
        if H.genus == 0:
            return None
        gapmask = H.gapmask & ~(1 << self.frobenius)
        gaps = tuple(iter_bits(gapmask))
        conductor = gaps[-1] + 1 if gaps else 0
        from .core import _from_mask

        return _from_mask(gapmask, conductor)


def _check_genus(g: int) -> None:
    if g < 0:
        raise ValueError(f"genus must be non-negative, got {g}")
    cap = max_genus()
    if g > cap:
        raise ValueError(f"genus {g} exceeds the enumeration cap {cap} (set NSG_MAX_GENUS)")


def enumerate_genus(g: int) -> Iterator[NumericalSemigroup]:
    """Every semigroup of genus ``g``, each once, in tree order."""
    _check_genus(g)
    for node in walk(g):
        yield node_semigroup(node)


def count_genus(g: int) -> int:
    _check_genus(g)
    return sum(1 for _ in walk(g))


def brute_force_enumerate(g: int) -> list[NumericalSemigroup]:
    """Oracle: search g-subsets of [1, 2g-1] whose complement is additively closed.

    Deliberately naive and independent of the bitmask machinery.
    """
    if g < 0:
        raise ValueError(f"genus must be non-negative, got {g}")
    if g > ORACLE_MAX_GENUS:
        raise ValueError(f"brute-force oracle refuses genus {g} > {ORACLE_MAX_GENUS}")
    if g == 0:
        return [NumericalSemigroup((), 0, (1,))]
    top = 2 * g
    found = []
    # 1 is a gap of every semigroup with g >= 1
    for rest in itertools.combinations(range(2, top), g - 1):
        gaps = {1, *rest}
        elements = [n for n in range(1, top + 1) if n not in gaps]
        closed = all(
            a + b not in gaps for a in elements for b in elements if a + b < top
        )
        if not closed:
            continue
        gens = [
            n
            for n in range(1, max(gaps) + 1 + min(elements))
            if n not in gaps
            and not any(n - a not in gaps and n - a > 0 for a in elements if a < n)
        ]
        found.append(NumericalSemigroup(tuple(sorted(gaps)), max(gaps) + 1, tuple(gens)))
    return found


# -- named families ---------------------------------------------------------

FAMILY_NAMES = (
    "quartic_sharp",
    "triadic",
    "triadic_r2",
    "max_weight",
    "min_weight_f4",
    "hyperelliptic",
    "sharp_weight_quartic",
)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: Mapping[str, int] = field(default_factory=dict)


def _need(params: Mapping[str, int], *keys: str) -> list[int]:
    missing = [k for k in keys if k not in params]
    if missing:
        raise ValueError(f"missing family parameters: {', '.join(missing)}")
    return [int(params[k]) for k in keys]


def _predict(H: NumericalSemigroup, **expected: int) -> NumericalSemigroup:
    from .weights import weight_value

    prof = profile(H)
    actual = {"genus": H.genus, "rho": prof.rho, "weight": weight_value(H)}
    for key, value in expected.items():
        if key.startswith("m_"):
            got = prof.nongap(int(key[2:]))
        else:
            got = actual[key]
        if got != value:
            raise ValueError(f"{H}: expected {key}={value}, got {got}")
    return H


def family(spec: FamilySpec) -> NumericalSemigroup:
    """Build a member of a named family and check its predicted statistics."""
    p = spec.params
    name = spec.name
    if name == "quartic_sharp":
        (gamma,) = _need(p, "gamma")
        if gamma < 0:
            raise ValueError("gamma must be >= 0")
        if gamma % 2:
            H = from_generators([4, 4 * gamma + 3])
            return _predict(H, genus=6 * gamma + 3, rho=2 * gamma + 1,
                            **{f"m_{2 * gamma + 1}": 6 * gamma + 2})
        H = from_generators([4, 4 * gamma + 5])
        return _predict(H, genus=6 * gamma + 6, rho=2 * gamma + 2,
                        **{f"m_{2 * gamma + 2}": 6 * gamma + 5})
    if name == "triadic":
        (g,) = _need(p, "g")
        if g < 1 or g % 3 == 2:
            raise ValueError("triadic needs g >= 1 with g mod 3 in {0, 1}")
        return _predict(from_generators([3, g + 1]), genus=g, weight=g * (g - 1) // 3)
    if name == "triadic_r2":
        (g,) = _need(p, "g")
        if g < 2 or g % 3 != 2:
            raise ValueError("triadic_r2 needs g >= 2 with g mod 3 == 2")
        H = from_generators([3, g + 2, 2 * g + 1])
        return _predict(H, genus=g, weight=g * (g - 2) // 3)
    if name == "max_weight":
        g, rho = _need(p, "g", "rho")
        if rho < 1 or g < 2 * rho + 1:
            raise ValueError("max_weight needs rho >= 1 and g >= 2*rho + 1")
        H = from_generators([4, 4 * rho + 2, 2 * g - 4 * rho + 1])
        return _predict(H, genus=g, rho=rho, weight=binom2(g - 2 * rho) + 2 * rho * rho)
    if name == "min_weight_f4":
        g, rho = _need(p, "g", "rho")
        if rho < 1 or g < 2 * rho:
            raise ValueError("min_weight_f4 needs rho >= 1 and g >= 2*rho")
        H = from_generators([4, 4 * rho + 2, 2 * g - 2 * rho + 1, 2 * g - 2 * rho + 3])
        return _predict(H, genus=g, rho=rho, weight=binom2(g - 2 * rho) + rho * rho - rho)
    if name == "hyperelliptic":
        (g,) = _need(p, "g")
        if g < 1:
            raise ValueError("hyperelliptic needs g >= 1")
        return _predict(from_generators([2, 2 * g + 1]), genus=g, rho=0, weight=binom2(g))
    if name == "sharp_weight_quartic":
        gamma, g = _need(p, "gamma", "g")
        lo = max(4 * gamma + 4, (gamma * gamma + 6 * gamma - 3) / 2)
        if gamma < 7 or not lo < g <= gamma * gamma + 4 * gamma + 2:
            raise ValueError(
                f"sharp_weight_quartic needs gamma >= 7 and {lo} < g <= gamma^2+4gamma+2"
            )
        rho = gamma + 1
        H = from_generators([4, 4 * rho + 2, 2 * g - 4 * rho + 1])
        return _predict(H, genus=g, rho=rho, weight=binom2(g - 2 * rho) + 2 * rho * rho)
    raise ValueError(f"unknown family {name!r}; expected one of {', '.join(FAMILY_NAMES)}")


# -- census -------------------------------------------------------------------

Filter = Callable[[NumericalSemigroup], bool]


def parse_filter(text: str) -> Filter:
    """``rho=k``, ``m1=k``, ``f1=k``, ``gamma-hyperelliptic=k`` or ``hyperelliptic``."""
    from .hyperelliptic import is_gamma_hyperelliptic

    if text == "hyperelliptic":
        return lambda H: H.genus >= 1 and 2 in H
    key, sep, value = text.partition("=")
    if not sep:
        raise ValueError(f"bad filter {text!r}; expected key=value")
    try:
        k = int(value)
    except ValueError:
        raise ValueError(f"bad filter value in {text!r}") from None
    if key == "rho":
        return lambda H: profile(H).rho == k
    if key == "m1":
        return lambda H: H.multiplicity == k
    if key == "f1":
        return lambda H: profile(H).even_nongap(1) == k
    if key in ("gamma-hyperelliptic", "gamma"):
        return lambda H: is_gamma_hyperelliptic(H, k)
    raise ValueError(f"unknown filter key {key!r}")


@dataclass
class CensusRow:
    genus: int
    count: int = 0
    rho_histogram: Counter = field(default_factory=Counter)
    gamma_counts: Counter = field(default_factory=Counter)
    weight_histogram: Counter = field(default_factory=Counter)
    min_weight: int | None = None
    max_weight: int | None = None
    min_witness: tuple[int, ...] | None = None
    max_witness: tuple[int, ...] | None = None

    def add(self, H: NumericalSemigroup) -> None:
        from .hyperelliptic import hyperelliptic_gamma
        from .weights import weight_value

        prof = profile(H)
        w = weight_value(H)
        self.count += 1
        self.rho_histogram[prof.rho] += 1
        gamma = hyperelliptic_gamma(H, prof)
        if gamma is not None:
            self.gamma_counts[gamma] += 1
        self.weight_histogram[w] += 1
        if self.min_weight is None or w < self.min_weight:
            self.min_weight, self.min_witness = w, H.min_generators
        if self.max_weight is None or w > self.max_weight:
            self.max_weight, self.max_witness = w, H.min_generators


def census(g_max: int, filters: Iterable[Filter] = ()) -> list[CensusRow]:
    """Per-genus aggregate rows for genus 0..g_max."""
    _check_genus(g_max)
    filters = list(filters)
    rows = []
    for g in range(g_max + 1):
        row = CensusRow(g)
        for H in enumerate_genus(g):
            if all(flt(H) for flt in filters):
                row.add(H)
        rows.append(row)
    return rows
