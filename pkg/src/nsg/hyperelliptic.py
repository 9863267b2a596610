"""Gamma-hyperelliptic semigroups and the non-gap tests that characterize them."""
from __future__ import annotations

from .core import NumericalSemigroup, StructureProfile, profile


def is_gamma_hyperelliptic(
    H: NumericalSemigroup, gamma: int, prof: StructureProfile | None = None
) -> bool:
    """Exactly ``gamma`` even elements in [2, 4*gamma] and m_{gamma+1} = 4*gamma + 2."""
    if gamma < 0:
        return False
    prof = prof or profile(H)
    if prof.nongap(gamma + 1) != 4 * gamma + 2:
        return False
    mask = H.gapmask
    evens = sum(1 for n in range(2, 4 * gamma + 1, 2) if not (mask >> n) & 1)
    return evens == gamma


def hyperelliptic_gamma(
    H: NumericalSemigroup, prof: StructureProfile | None = None
) -> int | None:
    """The unique gamma for which H is gamma-hyperelliptic, if any.

    Only gamma = rho(H) can qualify, so a single test suffices.
    """
    prof = prof or profile(H)
    return prof.rho if is_gamma_hyperelliptic(H, prof.rho, prof) else None


def is_t_hyperelliptic_up_to(
    H: NumericalSemigroup, gamma: int, prof: StructureProfile | None = None
) -> bool:
    """H is t-hyperelliptic for some t in 0..gamma."""
    prof = prof or profile(H)
    return prof.rho <= gamma and is_gamma_hyperelliptic(H, prof.rho, prof)


def p2_holds(H: NumericalSemigroup, gamma: int, prof: StructureProfile | None = None) -> bool:
    prof = prof or profile(H)
    return prof.nongap(2 * gamma + 1) == 6 * gamma + 2


def r_index(g: int, gamma: int) -> int:
    """floor((g+1)/2) - gamma - 1: g/2 - gamma - 1 for even g, (g-1)/2 - gamma for odd g."""
    return (g + 1) // 2 - gamma - 1


def p3_holds(H: NumericalSemigroup, gamma: int, prof: StructureProfile | None = None) -> bool:
    """m_r = g - 2 (g even) or m_r = g - 1 (g odd); False when r < 1."""
    g = H.genus
    r = r_index(g, gamma)
    if r < 1:
        return False
    prof = prof or profile(H)
    return prof.nongap(r) == (g - 2 if g % 2 == 0 else g - 1)


def p3_weak(H: NumericalSemigroup, gamma: int, prof: StructureProfile | None = None) -> bool:
    """m_r <= g - 1 < m_{r+1}; False when r < 1."""
    g = H.genus
    r = r_index(g, gamma)
    if r < 1:
        return False
    prof = prof or profile(H)
    return prof.nongap(r) <= g - 1 < prof.nongap(r + 1)


# Arms of each equivalence, keyed by the item label used in the theorems.

def char1_arms(H, gamma, prof):
    return {
        "i": is_gamma_hyperelliptic(H, gamma, prof),
        "ii": p2_holds(H, gamma, prof),
    }


def char2_arms(H, gamma, prof):
    return {
        "i": is_t_hyperelliptic_up_to(H, gamma, prof),
        "ii": prof.nongap(2 * gamma + 1) <= 6 * gamma + 2,
        "iii": prof.rho <= gamma,
    }


def char3_arms(H, gamma, prof):
    return {
        "i": is_gamma_hyperelliptic(H, gamma, prof),
        "ii": p3_holds(H, gamma, prof),
        "iii": p3_weak(H, gamma, prof),
    }


def char4_arms(H, gamma, prof):
    g = H.genus
    r = r_index(g, gamma)
    if r >= 1:
        m_r = prof.nongap(r)
        ii = m_r <= (g - 2 if g % 2 == 0 else g - 1)
        iii = m_r <= g - 1
    else:
        ii = iii = False
    return {
        "i": is_t_hyperelliptic_up_to(H, gamma, prof),
        "ii": ii,
        "iii": iii,
        "iv": prof.rho <= gamma,
    }


def char1_genus_ok(g: int, gamma: int) -> bool:
    return g >= 1 and (gamma == 0 or g >= 6 * gamma + 4)


def char3_genus_ok(g: int, gamma: int) -> bool:
    return g == 6 * gamma + 5 or g >= 6 * gamma + 7
