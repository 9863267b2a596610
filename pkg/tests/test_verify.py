import pytest

from nsg import TheoremReport, from_generators, verify_theorem
from nsg.verify import THEOREMS, Counterexample, check_semigroup, run_genus, sweep, sweep_tasks


def witnesses(report):
    return {c.generators for c in report.counterexamples}


def test_char1_examples():
    rep = verify_theorem("char1", 1, (10, 14))
    assert rep.status == "holds" and rep.checked > 0 and not rep.counterexamples
    rep = verify_theorem("char1", 1, (9, 9))
    assert rep.skipped_genera == [9] and rep.checked == 0
    rep = verify_theorem("char1", 1, (9, 9), probe_outside=True)
    assert (4, 7) in witnesses(rep)
    failed = next(c.failed for c in rep.counterexamples if c.generators == (4, 7))
    assert failed == "i=False,ii=True"


def test_char2_hyperelliptic():
    assert verify_theorem("char2", 0, (1, 12)).holds


def test_unknown_and_bad_gamma():
    with pytest.raises(ValueError):
        verify_theorem("nope", None, (1, 3))
    with pytest.raises(ValueError):
        verify_theorem("char1", None, (1, 3))
    with pytest.raises(ValueError):
        check_semigroup("char1", from_generators([2, 3]))


def test_custom_enumerator():
    seen = []

    def only_two(g):
        seen.append(g)
        return [from_generators([2, 2 * g + 1])]

    rep = verify_theorem("structure", None, (1, 4), enumerator=only_two)
    assert rep.checked == 4 and seen == [1, 2, 3, 4]


def test_report_merge_associative():
    a = TheoremReport("x", (1, 1), None, 3, [Counterexample(1, (2, 3), "a")], [])
    b = TheoremReport("x", (2, 2), None, 4, [], [2])
    c = TheoremReport("x", (3, 3), None, 5, [Counterexample(3, (4, 5, 6, 7), "b")], [])
    left, right = a.merge(b).merge(c), a.merge(b.merge(c))
    assert left.to_dict() == right.to_dict()
    assert left.checked == 12 and left.genus_range == (1, 3) and left.status == "fails-with-witnesses"
    assert b.merge(a).to_dict() == a.merge(b).to_dict()


def test_parallel_equals_serial():
    tasks = sweep_tasks(11)
    serial = run_genus(11, tasks, jobs=1)
    parallel = run_genus(11, tasks, jobs=2)
    assert {k: v.to_dict() for k, v in serial.items()} == \
        {k: v.to_dict() for k, v in parallel.items()}


def test_sweep_covers_registry():
    names = {name for name, _ in sweep_tasks(25)}
    assert names == set(THEOREMS)
    reports = sweep(8)
    assert all(r.holds for r in reports.values())


@pytest.mark.parametrize("name", sorted(THEOREMS))
def test_every_statement_small(name):
    stmt = THEOREMS[name]
    gammas = (0, 1) if stmt.uses_gamma else (None,)
    for gm in gammas:
        assert verify_theorem(name, gm, (1, 10)).holds


def test_char_weight1_sharp():
    rep = verify_theorem("char-weight1", 1, (10, 10), probe_outside=True)
    assert (3, 11) in witnesses(rep)


def test_bitmask_checkers_agree_with_set_versions():
    from nsg import enumerate_genus, freiman_check, profile, residue_sumset_bound
    from nsg.sumsets import SumsetInstance, residue_doubling_size

    for g in range(2, 10):
        for H in enumerate_genus(g):
            p = profile(H)
            assert check_semigroup("freiman", H) is None
            assert check_semigroup("residue", H) is None
            for i in range(2, g + 2):
                if p.gcd_chain(i) != 1:
                    continue
                K = [0] + [p.nongap(j) for j in range(1, i + 1)]
                for b in SumsetInstance.of(K).admissible_slack():
                    assert freiman_check(K, b)
            for i in range(2, g - 1):
                N, ok = residue_sumset_bound(H, i)
                assert ok and N == residue_doubling_size(p.m[:i], p.m[i - 1])
