"""Weights of semigroups and the bounds that tie them to the even-gap count rho."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import NumericalSemigroup, StructureProfile, binom2, profile
from .exceptions import HypothesisError, InvariantViolation
from .hyperelliptic import is_gamma_hyperelliptic, is_t_hyperelliptic_up_to


def weight_value(H: NumericalSemigroup) -> int:
    """sum(l_i - i) over the gaps."""
    g = H.genus
    return sum(H.gaps) - g * (g + 1) // 2


def weight_from_nongaps(g: int, s_sum: int) -> int:
    """Weight from S(H) = m_1 + ... + m_g, valid because m_g = 2g."""
    return (3 * g * g + g) // 2 - s_sum


def weight_bounds(g: int, rho: int) -> tuple[int, int]:
    """(lower, upper) bounds on the weight for genus g and rho even gaps."""
    if g < 1 or rho < 0:
        raise ValueError(f"need g >= 1 and rho >= 0, got g={g}, rho={rho}")
    if 2 * g < 3 * rho:
        raise HypothesisError(f"no semigroup has g={g} and rho={rho} (2g < 3 rho)")
    # n(n-1)/2 even for negative n: the equality case needs it when g < 2 rho
    n = g - 2 * rho
    lower = n * (n - 1) // 2
    if g >= 2 * rho:
        upper = lower + 2 * rho * rho
    else:
        upper = binom2(g + 2 * rho) - 4 * g - 6 * rho * rho + 8 * rho
    return lower, upper


@dataclass
class WeightReport:
    w: int
    s_sum: int
    lower: int
    upper: int
    hits_lower: bool
    hits_upper: bool
    char_weight_flags: dict[str, bool] = field(default_factory=dict)


def weight(H: NumericalSemigroup, prof: StructureProfile | None = None) -> WeightReport:
    """Weight by the gap sum and by the non-gap sum, cross-checked, plus rho bounds."""
    prof = prof or profile(H)
    g = H.genus
    w = weight_value(H)
    s_sum = sum(prof.m)
    if g and w != weight_from_nongaps(g, s_sum):
        raise InvariantViolation(
            f"{H}: gap-sum weight {w} != non-gap-sum weight {weight_from_nongaps(g, s_sum)}"
        )
    if g == 0:
        return WeightReport(0, 0, 0, 0, True, True)
    lower, upper = weight_bounds(g, prof.rho)
    return WeightReport(w, s_sum, lower, upper, w == lower, w == upper)


def classify_weight(
    H: NumericalSemigroup, gamma: int, prof: StructureProfile | None = None
) -> WeightReport:
    """Weight report with the weight-window flags for a target gamma.

    Whether the flags are equivalent to gamma-hyperellipticity depends on g
    reaching :func:`bound_g_threshold`; the caller decides what to make of it.
    """
    prof = prof or profile(H)
    report = weight(H, prof)
    g, w = H.genus, report.w
    base = binom2(g - 2 * gamma)
    report.char_weight_flags = {
        "cw_ii": w >= base,
        "cw1_ii": base <= w <= base + 2 * gamma * gamma,
        "cw1_iii": base <= w < binom2(g - 2 * gamma + 2),
        "gamma_hyperelliptic": is_gamma_hyperelliptic(H, gamma, prof),
        "t_hyperelliptic_up_to_gamma": is_t_hyperelliptic_up_to(H, gamma, prof),
    }
    return report


def bound_g_threshold(gamma: int) -> int:
    """Smallest genus at which weights characterize gamma-hyperellipticity."""
    if gamma < 0:
        raise ValueError(f"gamma must be >= 0, got {gamma}")
    if gamma <= 2:
        return max(12 * gamma - 1, 1)
    if gamma in (3, 5):
        return 11 * gamma + 1
    if gamma in (4, 6):
        return (21 * (gamma - 4) + 88) // 2
    return gamma * gamma + 4 * gamma + 3


# -- closed forms for special shapes -----------------------------------------

@dataclass(frozen=True)
class WeightFormulaParams:
    """Parameters of the closed-form weight families and the optimal-weight cap."""

    g: int
    J: int | None = None
    s: int | None = None

    @property
    def r3(self) -> int:
        return self.g % 3

    @property
    def r6(self) -> int:
        """Residue of g mod 6 taken in 1..6."""
        return (self.g - 1) % 6 + 1

    @property
    def c(self) -> int:
        """rho threshold of the optimal cap: floor((g - 5) / 6).

        Equals (g - r6)/6 - 1 except when 6 | g, where that form is one too
        small (see :func:`printed_c`).
        """
        return (self.g - 5) // 6


def printed_c(g: int) -> int:
    """(g-5)/6 for r6 = 5, else (g - r6)/6 - 1; too small by one when 6 | g."""
    r = (g - 1) % 6 + 1
    return (g - 5) // 6 if r == 5 else (g - r) // 6 - 1


def quartic_J_range(g: int, rho: int) -> range:
    """Admissible J for semigroups with f_1 = 4, genus g and rho even gaps."""
    lo = max(1, math.ceil((3 * rho + 2 - g) / 2))
    hi = min(rho + 1, (g - rho + 3) // 2)
    return range(lo, hi + 1)


def quartic_odd_nongaps(g: int, rho: int, J: int) -> tuple[int, ...]:
    """The rho odd non-gaps below 2g, ascending, for the f_1 = 4 shape indexed by J."""
    if J not in quartic_J_range(g, rho):
        raise ValueError(f"J={J} outside {quartic_J_range(g, rho)} for g={g}, rho={rho}")
    first = {2 * g - 4 * rho + 4 * J - 7 + 4 * i for i in range(1, rho - J + 2)}
    second = {2 * g - 4 * J + 3 + 4 * i for i in range(1, J)}
    return tuple(sorted(first | second))


def weight_formula_quartic(g: int, rho: int, J: int) -> int:
    """Weight of the f_1 = 4 semigroup with parameter J."""
    if rho < 1 or g < 2 * rho:
        raise ValueError(f"f_1 = 4 needs rho >= 1 and g >= 2 rho, got g={g}, rho={rho}")
    if J not in quartic_J_range(g, rho):
        raise ValueError(f"J={J} outside {quartic_J_range(g, rho)} for g={g}, rho={rho}")
    return binom2(g - 2 * rho) + 2 * rho * rho + 4 * rho + 6 + 4 * J * J - (4 * rho + 10) * J


def weight_formula_triadic(g: int, s: int) -> int:
    """Weight of the u_rho = 3 semigroup with parameter s."""
    r = g % 3
    if not 0 <= s <= (g - r) // 3:
        raise ValueError(f"s={s} outside [0, {(g - r) // 3}] for g={g}")
    if r == 2:
        return g * (g - 2) // 3 + 3 * s * s - g * s + s
    return g * (g - 1) // 3 + 3 * s * s - g * s - s


def opt_weight_cap(g: int) -> tuple[int, int]:
    """(c, cap): every semigroup of genus g with rho > c has weight <= cap."""
    if g < 11:
        raise HypothesisError(f"optimal weight cap needs g >= 11, got {g}")
    params = WeightFormulaParams(g)
    if params.r6 in (2, 5):
        return params.c, g * (g - 2) // 3
    return params.c, g * (g - 1) // 3


def opt_weight_extremal(g: int) -> tuple[int, ...]:
    """Generators of the unique semigroup attaining :func:`opt_weight_cap`."""
    if g % 3 == 2:
        return (3, g + 2, 2 * g + 1)
    return (3, g + 1)


def oliv_cap(g: int, rho: int) -> int:
    """Weight cap by rho band, for g >= 11 and rho >= 1.

    (g^2 - 5g + 10)/2 is exact: g^2 - 5g is always even.
    """
    if g < 11 or rho < 1:
        raise HypothesisError(f"needs g >= 11 and rho >= 1, got g={g}, rho={rho}")
    c, _ = opt_weight_cap(g)
    low_band = (g * g - 5 * g + 10) // 2
    third = g * (g - 1) // 3
    if rho <= c:
        return low_band
    if 2 * rho <= g - 3:
        return min(low_band, third)
    return third
