import pytest

from nsg import brute_force_enumerate, census, enumerate_genus, family, from_generators, profile
from nsg.enumeration import (
    ROOT, EnumerationNode, FamilySpec, children, count_genus, parse_filter, walk,
)
from nsg.weights import weight_value

# Counts of semigroups by genus, checked against the subset oracle up to g = 9.
COUNTS = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693]


def test_counts():
    assert [count_genus(g) for g in range(len(COUNTS))] == COUNTS
    assert all(a < b for a, b in zip(COUNTS[1:], COUNTS[2:]))


def test_small_genera():
    assert [H.min_generators for H in enumerate_genus(0)] == [(1,)]
    assert [H.min_generators for H in enumerate_genus(1)] == [(2, 3)]
    gaps = sorted(H.gaps for H in brute_force_enumerate(3))
    assert gaps == [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 5)]
    assert len(brute_force_enumerate(5)) == 12


@pytest.mark.parametrize("g", range(0, 8))
def test_tree_matches_oracle(g):
    tree = list(enumerate_genus(g))
    assert len(tree) == len(set(tree))
    assert set(tree) == set(brute_force_enumerate(g))


def test_oracle_cap():
    with pytest.raises(ValueError):
        brute_force_enumerate(13)
    with pytest.raises(ValueError):
        list(enumerate_genus(-1))


def test_cap_env(monkeypatch):
    monkeypatch.setenv("NSG_MAX_GENUS", "5")
    with pytest.raises(ValueError, match="cap"):
        list(enumerate_genus(6))


def test_deterministic_order():
    assert [H.min_generators for H in enumerate_genus(6)] == \
        [H.min_generators for H in enumerate_genus(6)]


def test_parent_child_consistency():
    for node in walk(8):
        en = EnumerationNode.from_node(node)
        H = en.semigroup
        parent = en.parent()
        assert parent.genus == H.genus - 1
        # the removed generator is the Frobenius number, and it is a minimal generator of the parent
        assert en.frobenius == max(H.gaps)
        assert en.frobenius in parent.min_generators
    for node in walk(5):
        for child in children(node):
            assert bin(child[0]).count("1") == bin(node[0]).count("1") + 1
    assert len(children(ROOT)) == 1


FAMILY_CASES = [
    (("quartic_sharp", {"gamma": 1}), (4, 7), dict(genus=9, rho=3, m=(3, 8))),
    (("quartic_sharp", {"gamma": 2}), (4, 13), dict(genus=18, rho=6, m=(6, 17))),
    (("max_weight", {"g": 10, "rho": 2}), (4, 10, 13), dict(genus=10, rho=2, w=23)),
    (("min_weight_f4", {"g": 10, "rho": 2}), (4, 10, 17, 19), dict(genus=10, rho=2, w=17)),
    (("triadic", {"g": 10}), (3, 11), dict(genus=10, w=30)),
    (("triadic_r2", {"g": 11}), (3, 13, 23), dict(genus=11, w=33)),
    (("hyperelliptic", {"g": 10}), (2, 21), dict(genus=10, rho=0, w=45)),
]


@pytest.mark.parametrize("spec, gens, stats", FAMILY_CASES)
def test_families(spec, gens, stats):
    H = family(FamilySpec(*spec))
    assert H.min_generators == gens
    p = profile(H)
    assert H.genus == stats["genus"]
    if "rho" in stats:
        assert p.rho == stats["rho"]
    if "w" in stats:
        assert weight_value(H) == stats["w"]
    if "m" in stats:
        i, v = stats["m"]
        assert p.nongap(i) == v
    if H.genus <= 14:
        assert sum(1 for K in enumerate_genus(H.genus) if K == H) == 1


def test_family_errors():
    with pytest.raises(ValueError):
        family(FamilySpec("triadic", {"g": 11}))
    with pytest.raises(ValueError):
        family(FamilySpec("max_weight", {"g": 4, "rho": 2}))
    with pytest.raises(ValueError):
        family(FamilySpec("nope", {}))
    with pytest.raises(ValueError):
        family(FamilySpec("sharp_weight_quartic", {"gamma": 6, "g": 50}))


def test_census():
    rows = census(4)
    assert [r.count for r in rows] == [1, 1, 2, 4, 7]
    (row,) = census(10, [parse_filter("rho=2"), parse_filter("f1=4")])[10:]
    assert sorted(row.weight_histogram) == [17, 19, 23]
    rows = census(10, [parse_filter("hyperelliptic")])
    assert [r.count for r in rows[1:]] == [1] * 10
    assert rows[10].max_witness == (2, 21)
    for row in census(12, [parse_filter("gamma-hyperelliptic=1")]):
        assert set(row.rho_histogram) <= {1}
    with pytest.raises(ValueError):
        parse_filter("colour=3")
