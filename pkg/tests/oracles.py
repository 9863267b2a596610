"""Slow, obviously-correct reference computations used to cross-check the library."""
from __future__ import annotations

from math import gcd
from functools import reduce


def closure(gens, limit=None):
    """Members of <gens> up to ``limit`` by dynamic programming over n."""
    gens = sorted(set(gens))
    if limit is None:
        a = gens[0]
        limit = max(gens) * a + a
    member = [True] + [False] * limit
    for n in range(1, limit + 1):
        member[n] = any(n >= x and member[n - x] for x in gens)
    return member


def gaps_of(gens):
    if reduce(gcd, gens) != 1:
        raise ValueError("gcd must be 1")
    a = min(gens)
    # every integer past the Frobenius number of <a, b> for coprime pairs is covered
    member = closure(gens, limit=max(gens) * a * 2 + 2 * a)
    return [n for n, ok in enumerate(member) if not ok]


def nongaps(gens, count):
    gaps = set(gaps_of(gens))
    out, n = [], 1
    while len(out) < count:
        if n not in gaps:
            out.append(n)
        n += 1
    return out


def min_generators(gens):
    gaps = set(gaps_of(gens))
    c = max(gaps) + 1 if gaps else 0
    H = [n for n in range(1, c + min(gens) + 1) if n not in gaps]
    sums = {a + b for a in H for b in H}
    return [n for n in H if n not in sums]


def weight(gens):
    gaps = gaps_of(gens)
    return sum(l - i for i, l in enumerate(gaps, start=1))


def sumset(K):
    return {a + b for a in K for b in K}
