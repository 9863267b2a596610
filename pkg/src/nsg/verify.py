"""Exhaustive verification of the semigroup statements over whole genera.

Each statement is a checker ``(H, prof, gamma) -> failure description or
None`` plus a genus gate saying where its hypotheses hold.  Reports merge
associatively, so subtrees of the semigroup tree can be checked in separate
processes and combined in any order.
"""
from __future__ import annotations

import multiprocessing
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

from . import enumeration
from .core import (
    NumericalSemigroup,
    StructureProfile,
    binom2,
    from_generators,
    iter_bits,
    profile,
)
from .hyperelliptic import (
    char1_arms,
    char1_genus_ok,
    char2_arms,
    char3_arms,
    char3_genus_ok,
    char4_arms,
    hyperelliptic_gamma,
    is_gamma_hyperelliptic,
    is_t_hyperelliptic_up_to,
)
from .weights import (
    bound_g_threshold,
    oliv_cap,
    opt_weight_cap,
    opt_weight_extremal,
    weight_bounds,
    weight_from_nongaps,
    weight_value,
)

NOTES = {
    "r_index": "r = floor((g+1)/2) - gamma - 1",
    "bo_weight_upper_family": "<4, 4rho+2, 2g-4rho+1> (statement prints <4, 4rho, 2g-4rho+1>)",
    "sharp_weight_family": "<4, 4(gamma+1)+2, 2g-4(gamma+1)+1> (printed with 4(gamma+1))",
    "quartic_J": "J range used as printed for both parities, without the odd-g substitution",
}


class Counterexample(NamedTuple):
    genus: int
    generators: tuple[int, ...]
    failed: str


@dataclass
class TheoremReport:
    theorem_id: str
    genus_range: tuple[int, int]
    gamma: int | None = None
    checked: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    skipped_genera: list[int] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "fails-with-witnesses" if self.counterexamples else "holds"

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "TheoremReport") -> "TheoremReport":
        lo = min(self.genus_range[0], other.genus_range[0])
        hi = max(self.genus_range[1], other.genus_range[1])
        return TheoremReport(
            self.theorem_id,
            (lo, hi),
            self.gamma,
            self.checked + other.checked,
            sorted(self.counterexamples + other.counterexamples),
            sorted(set(self.skipped_genera) | set(other.skipped_genera)),
        )

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "gamma": self.gamma,
            "genus_range": list(self.genus_range),
            "checked": self.checked,
            "status": self.status,
            "skipped_genera": list(self.skipped_genera),
            "counterexamples": [
                {"genus": c.genus, "generators": list(c.generators), "failed": c.failed}
                for c in self.counterexamples
            ],
        }


Checker = Callable[[NumericalSemigroup, StructureProfile, "int | None"], "str | None"]


def _arms_disagree(arms: dict[str, bool]) -> str | None:
    if len(set(arms.values())) <= 1:
        return None
    return ",".join(f"{k}={v}" for k, v in arms.items())


def _check_char1(H, prof, gamma):
    return _arms_disagree(char1_arms(H, gamma, prof))


def _check_char2(H, prof, gamma):
    return _arms_disagree(char2_arms(H, gamma, prof))


def _check_char3(H, prof, gamma):
    return _arms_disagree(char3_arms(H, gamma, prof))


def _check_char4(H, prof, gamma):
    return _arms_disagree(char4_arms(H, gamma, prof))


def _check_char_weight(H, prof, gamma):
    w = weight_value(H)
    return _arms_disagree({
        "i": is_t_hyperelliptic_up_to(H, gamma, prof),
        "ii": w >= binom2(H.genus - 2 * gamma),
    })


def _check_char_weight1(H, prof, gamma):
    w = weight_value(H)
    base = binom2(H.genus - 2 * gamma)
    return _arms_disagree({
        "i": is_gamma_hyperelliptic(H, gamma, prof),
        "ii": base <= w <= base + 2 * gamma * gamma,
        "iii": base <= w < binom2(H.genus - 2 * gamma + 2),
    })


def _check_dual_weight(H, prof, gamma):
    w = weight_value(H)
    other = weight_from_nongaps(H.genus, sum(prof.m))
    return None if w == other else f"gap-sum {w} != non-gap-sum {other}"


def _check_prop_sem(H, prof, gamma):
    g, m = H.genus, prof.m
    if m[-1] != 2 * g:
        return f"m_g={m[-1]} != 2g"
    if m[0] == 2:
        bad = [i for i in range(1, g + 1) if m[i - 1] != 2 * i]
        return f"m_1=2 but m_{bad[0]} != {2 * bad[0]}" if bad else None
    for i in range(1, g - 1):
        if m[i - 1] < 2 * i + 1:
            return f"m_{i}={m[i - 1]} < {2 * i + 1}"
    if g >= 2 and m[g - 2] < 2 * g - 2:
        return f"m_(g-1)={m[g - 2]} < {2 * g - 2}"
    return None


def _check_structure(H, prof, gamma):
    g, rho = H.genus, prof.rho
    for n in range(4 * rho, 2 * g + 2, 2):
        if n not in H:
            return f"even {n} >= 4rho is a gap"
    if rho >= 1 and prof.even_nongap(rho) != 4 * rho:
        return f"f_rho={prof.even_nongap(rho)} != 4rho"
    if prof.even_nongap(g - rho) != 2 * g:
        return f"f_(g-rho)={prof.even_nongap(g - rho)} != 2g"
    if g >= 4 * rho and any(prof.m[i] != prof.f[i] for i in range(rho)):
        return "g >= 4rho but m_i != f_i for some i <= rho"
    if len(prof.u) != rho or (prof.u and prof.u[-1] > 2 * g - 1):
        return "odd non-gap count in [1, 2g-1] != rho"
    # rho is the only gamma with (E1) and 4gamma+2 in H
    mask = H.gapmask
    candidates = []
    evens = 0
    for c in range(0, 2 * g + 1):
        if c:
            evens += (not (mask >> (4 * c - 2)) & 1) + (not (mask >> (4 * c)) & 1)
        if evens == c and not (mask >> (4 * c + 2)) & 1:
            candidates.append(c)
    if candidates != [rho]:
        return f"gammas with (E1) and (E2') are {candidates}, rho={rho}"
    return None


def _check_feto1(H, prof, gamma):
    return None if 2 * H.genus >= 3 * prof.rho else f"2g < 3rho={3 * prof.rho}"


def _check_feto2(H, prof, gamma):
    g, rho = H.genus, prof.rho
    if g > 2 * rho - 1:
        return None
    u_rho = prof.u[0]
    return None if u_rho >= 4 * rho - 2 * g + 1 else f"u_rho={u_rho} < {4 * rho - 2 * g + 1}"


def _check_des_odd_1(H, prof, gamma):
    g, rho = H.genus, prof.rho
    if rho == 0:
        return None
    bound = max(2 * g - 4 * rho + 1, 3)
    return None if prof.u[0] >= bound else f"u_rho={prof.u[0]} < {bound}"


def _check_bounds_iv(H, prof, gamma):
    g, rho = H.genus, prof.rho
    for j in range(1, rho + 1):
        u = prof.odd_nongap(j)
        if not 2 * g - 4 * j + 1 <= u <= 2 * g - 2 * j + 1:
            return f"u_{j}={u} outside [{2 * g - 4 * j + 1}, {2 * g - 2 * j + 1}]"
    return None


def _check_bounds(H, prof, gamma):
    rho = prof.rho
    if rho == 0:
        return None
    f = prof.even_nongap
    if f(1) == 4:
        if any(f(i) != 4 * i for i in range(1, rho + 1)):
            return "f_1=4 but f_i != 4i"
    else:
        if any(f(i) < 4 * i + 2 for i in range(1, rho - 1)):
            return "f_1>=6 but f_i < 4i+2"
        if rho >= 2 and f(rho - 1) < 4 * rho - 4:
            return f"f_(rho-1)={f(rho - 1)} < {4 * rho - 4}"
        if f(rho) != 4 * rho:
            return f"f_rho={f(rho)} != 4rho"
    for i in range(1, H.genus - rho + 1):
        if f(i) > 2 * rho + 2 * i:
            return f"f_{i}={f(i)} > 2rho+2i"
    return _check_bounds_iv(H, prof, gamma)


@lru_cache(maxsize=None)
def _max_weight_semigroup(g: int, rho: int) -> NumericalSemigroup:
    return from_generators([4, 4 * rho + 2, 2 * g - 4 * rho + 1])


@lru_cache(maxsize=None)
def _opt_extremal_semigroup(g: int) -> NumericalSemigroup:
    return from_generators(opt_weight_extremal(g))


def _check_bo_weight(H, prof, gamma):
    g, rho = H.genus, prof.rho
    if rho == 0:
        return None
    w = weight_value(H)
    lower, upper = weight_bounds(g, rho)
    if not lower <= w <= upper:
        return f"w={w} outside [{lower}, {upper}]"
    lower_shape = prof.even_nongap(1) == 2 * rho + 2 and prof.u[0] == 2 * g - 2 * rho + 1
    if (w == lower) != lower_shape:
        return f"lower equality {w == lower} but f_1/u_rho shape {lower_shape}"
    if g >= 2 * rho:
        extremal = H == _max_weight_semigroup(g, rho)
        if (w == upper) != extremal:
            return f"upper equality {w == upper} but extremal family {extremal}"
    return None


def _check_opt_weight(H, prof, gamma):
    g = H.genus
    c, cap = opt_weight_cap(g)
    if prof.rho <= c:
        return None
    w = weight_value(H)
    if w > cap:
        return f"w={w} > cap {cap} with rho={prof.rho} > c={c}"
    if (w == cap) != (H == _opt_extremal_semigroup(g)):
        return f"w == cap is {w == cap} for {H}"
    return None


def _check_oliv(H, prof, gamma):
    if prof.rho == 0:
        return None
    w = weight_value(H)
    cap = oliv_cap(H.genus, prof.rho)
    return None if w <= cap else f"w={w} > {cap} at rho={prof.rho}"


def _check_cor_cast(H, prof, gamma):
    g = H.genus
    d = prof.d
    for i in range(1, g + 2):
        if d[i - 1] != 1:
            continue
        lhs, rhs = 2 * prof.nongap(i), prof.nongap(3 * i - 1)
        if lhs < rhs:
            return f"i={i}: 2m_i={lhs} < m_(3i-1)={rhs}"
    return None


def _check_freiman(H, prof, gamma):
    # 2K grows by (K + m_i) when m_i joins K; sets are bitmasks
    d = prof.d
    kmask = 1
    dmask = 1
    for i in range(1, H.genus + 2):
        m_i = prof.nongap(i)
        kmask |= 1 << m_i
        dmask |= kmask << m_i
        if i < 2 or d[i - 1] != 1:
            continue
        size = dmask.bit_count()
        b_max = min(i - 2, m_i - i - 1)
        if b_max >= 0 and size < 2 * i + 2 + b_max:
            return f"i={i}, b={b_max}: #2K={size} < {2 * i + 2 + b_max}"
    return None


def _check_residue(H, prof, gamma):
    g, m = H.genus, prof.m
    for i in range(2, g - 1):
        m_i = m[i - 1]
        full = (1 << m_i) - 1
        rmask = 0
        for x in m[:i]:
            rmask |= 1 << (x % m_i)
        smask = 0
        for a in iter_bits(rmask):
            rot = rmask << a
            smask |= (rot & full) | (rot >> m_i)
        N = smask.bit_count()
        if 2 * m_i < prof.nongap(i + N):
            return f"i={i}, N={N}: 2m_i={2 * m_i} < m_(i+N)={prof.nongap(i + N)}"
    return None


def _any_genus(g, gamma):
    return g >= 1


def _weight_gate(g, gamma):
    return g >= 1 and g >= bound_g_threshold(gamma)


def _eleven(g, gamma):
    return g >= 11


@dataclass(frozen=True)
class Statement:
    check: Checker
    gate: Callable[[int, "int | None"], bool]
    uses_gamma: bool = False


THEOREMS: dict[str, Statement] = {
    "char1": Statement(_check_char1, char1_genus_ok, True),
    "char2": Statement(_check_char2, char1_genus_ok, True),
    "char3": Statement(_check_char3, char3_genus_ok, True),
    "char4": Statement(_check_char4, char3_genus_ok, True),
    "char-weight": Statement(_check_char_weight, _weight_gate, True),
    "char-weight1": Statement(_check_char_weight1, _weight_gate, True),
    "feto1": Statement(_check_feto1, _any_genus),
    "feto2": Statement(_check_feto2, _any_genus),
    "bounds-iv": Statement(_check_bounds_iv, _any_genus),
    "des-odd-1": Statement(_check_des_odd_1, _any_genus),
    "bo-weight": Statement(_check_bo_weight, _any_genus),
    "opt-weight": Statement(_check_opt_weight, _eleven),
    "oliv": Statement(_check_oliv, _eleven),
    "prop-sem": Statement(_check_prop_sem, _any_genus),
    "structure": Statement(_check_structure, _any_genus),
    "bounds": Statement(_check_bounds, _any_genus),
    "dual-weight": Statement(_check_dual_weight, _any_genus),
    "cor-cast": Statement(_check_cor_cast, _any_genus),
    "freiman": Statement(_check_freiman, _any_genus),
    "residue": Statement(_check_residue, _any_genus),
}


def _statement(theorem_id: str) -> Statement:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise ValueError(
            f"unknown theorem {theorem_id!r}; expected one of {', '.join(THEOREMS)}"
        ) from None


def check_semigroup(theorem_id: str, H: NumericalSemigroup, gamma: int | None = None,
                    prof: StructureProfile | None = None) -> str | None:
    """Run one checker on one semigroup, ignoring the genus gate."""
    stmt = _statement(theorem_id)
    if stmt.uses_gamma and gamma is None:
        raise ValueError(f"{theorem_id} needs gamma")
    return stmt.check(H, prof or profile(H), gamma)


# -- tasks shared by the serial and the parallel paths ------------------------

Task = tuple[str, "int | None"]


def _run_nodes(nodes: Iterable[enumeration.Node], g: int,
               tasks: list[Task]) -> dict[Task, TheoremReport]:
    reports = {t: TheoremReport(t[0], (g, g), t[1]) for t in tasks}
    checks = [(reports[t], THEOREMS[t[0]].check, t[1]) for t in tasks]
    for node in nodes:
        H = enumeration.node_semigroup(node)
        prof = profile(H)
        for report, check, gamma in checks:
            report.checked += 1
            failed = check(H, prof, gamma)
            if failed is not None:
                report.counterexamples.append(Counterexample(g, H.min_generators, failed))
    return reports


def _subtree_job(args) -> dict[Task, TheoremReport]:
    node, level, g, tasks = args
    return _run_nodes(enumeration.walk(g, node, level), g, tasks)


def _merge_into(acc: dict[Task, TheoremReport], part: dict[Task, TheoremReport]) -> None:
    for key, rep in part.items():
        acc[key] = acc[key].merge(rep) if key in acc else rep


def run_genus(g: int, tasks: list[Task], jobs: int = 1,
              pool=None) -> dict[Task, TheoremReport]:
    """Check every task on every semigroup of genus g."""
    enumeration._check_genus(g)
    if jobs <= 1 and pool is None:
        return _run_nodes(enumeration.walk(g), g, tasks)
    # Many more subtrees than workers; imap_unordered hands them out one at a
    # time so idle workers pick up the remaining subtrees.
    level, nodes = enumeration.frontier(g, 16 * max(jobs, 1))
    acc = {t: TheoremReport(t[0], (g, g), t[1]) for t in tasks}
    args = [(node, level, g, tasks) for node in nodes]
    own = pool is None
    pool = pool or multiprocessing.get_context("fork").Pool(jobs)
    try:
        for part in pool.imap_unordered(_subtree_job, args, chunksize=1):
            _merge_into(acc, part)
    finally:
        if own:
            pool.close()
            pool.join()
    for rep in acc.values():
        rep.counterexamples.sort()
    return acc


def _default_enumerator(g: int) -> Iterable[NumericalSemigroup]:
    return enumeration.enumerate_genus(g)


def verify_theorem(
    theorem_id: str,
    gamma: int | None,
    genus_range: tuple[int, int],
    enumerator: Callable[[int], Iterable[NumericalSemigroup]] | None = None,
    probe_outside: bool = False,
    jobs: int = 1,
) -> TheoremReport:
    """Check one statement on every semigroup with genus in the inclusive range.

    Genera outside the statement's hypotheses are skipped unless
    ``probe_outside`` is set.  A custom ``enumerator`` runs serially.
    """
    stmt = _statement(theorem_id)
    if stmt.uses_gamma and (gamma is None or gamma < 0):
        raise ValueError(f"{theorem_id} needs a gamma >= 0")
    if not stmt.uses_gamma:
        gamma = None
    lo, hi = genus_range
    report = TheoremReport(theorem_id, (lo, hi), gamma)
    task = (theorem_id, gamma)
    pool = None
    if jobs > 1 and enumerator is None:
        pool = multiprocessing.get_context("fork").Pool(jobs)
    try:
        for g in range(lo, hi + 1):
            if g < 1 or not (probe_outside or stmt.gate(g, gamma)):
                report.skipped_genera.append(g)
                continue
            if enumerator is None:
                part = run_genus(g, [task], jobs, pool)[task]
            else:
                part = TheoremReport(theorem_id, (g, g), gamma)
                for H in enumerator(g):
                    part.checked += 1
                    failed = stmt.check(H, profile(H), gamma)
                    if failed is not None:
                        part.counterexamples.append(Counterexample(g, H.min_generators, failed))
            report = report.merge(part)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    report.genus_range = (lo, hi)
    return report


def sweep_tasks(g: int, gammas: Iterable[int] = (0, 1, 2)) -> list[Task]:
    """Every statement whose hypotheses hold at genus g, for each gamma given."""
    tasks: list[Task] = []
    for name, stmt in THEOREMS.items():
        if stmt.uses_gamma:
            tasks.extend((name, gm) for gm in gammas if stmt.gate(g, gm))
        elif stmt.gate(g, None):
            tasks.append((name, None))
    return tasks


def sweep(g: int, jobs: int = 1, gammas: Iterable[int] = (0, 1, 2),
          exclude: Iterable[str] = ()) -> dict[Task, TheoremReport]:
    """All applicable statements over genus g in one pass of the tree."""
    skip = set(exclude)
    tasks = [t for t in sweep_tasks(g, gammas) if t[0] not in skip]
    return run_genus(g, tasks, jobs)

