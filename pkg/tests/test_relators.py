import pytest

from bvcalc.relators import (
    FAMILIES,
    bv_hat_instances_closed,
    instances,
    relator_instance,
    verify,
    verify_all,
)
from bvcalc.words import parse


def test_instance_a():
    rel = relator_instance("A", 0, 1)
    assert str(rel.left) == "x1 x0" and str(rel.right) == "x0 x2"


def test_instance_d3_single_index():
    rel = relator_instance("D3", 1)
    assert str(rel.left) == "t1" and str(rel.right) == "x0 t2 s1"
    assert rel.j is None


@pytest.mark.parametrize(
    "family,i,j,needle",
    [("B1", 1, 2, "j - i >= 2"), ("A", 2, 2, "i < j"), ("C3", 1, 0, "i >= j + 2"),
     ("D1", 3, 2, "i - j >= 2"), ("B2", 0, None, "i >= 1")],
)
def test_constraint_violation_names_constraint(family, i, j, needle):
    with pytest.raises(ValueError, match=needle.replace("+", r"\+")):
        relator_instance(family, i, j)


def test_missing_second_index_and_unknown_family():
    with pytest.raises(ValueError):
        relator_instance("C1", 1)
    with pytest.raises(ValueError):
        relator_instance("E9", 1, 2)


def test_braid_relation_and_sigma_two_instance():
    assert verify("B2", 1)
    assert verify("C2", 1)


def test_c2_certifies_sigma_two_rewrite():
    # s1 x1 = x0 s2 s1, hence s2 = x0^-1 s1 x1 s1^-1
    rel = relator_instance("C2", 1)
    assert str(rel.right) == "x0 s2 s1"
    from bvcalc.diagrams import diagram_equal
    from bvcalc.words import evaluate

    assert diagram_equal(evaluate("s2"), evaluate(parse("x0^-1 s1 x1 s1^-1")))


def test_instance_counts_by_family():
    counts = {f: 0 for f in FAMILIES}
    for rel in instances(4):
        counts[rel.family] += 1
    assert counts["A"] == 10  # pairs 0 <= i < j <= 4
    assert counts["B2"] == 4 and counts["C4"] == 5
    assert counts["B1"] == 3  # (1,3) (1,4) (2,4)


def test_verify_all_full_suite():
    report = verify_all(8)
    assert report.passed and report.failures == []
    assert len(report.results) == 211
    assert {r.family for r, _ in report.results} == set(FAMILIES)


def test_report_lines_format():
    report = verify_all(3)
    lines = report.lines()
    assert lines[0].split()[0] == "A"
    for line in lines[:-1]:
        fam, i, j, verdict = line.split()
        assert fam in FAMILIES and i.isdigit() and (j == "-" or j.isdigit())
        assert verdict == "PASS"
    n = len(report.results)
    assert lines[-1] == f"{n}/{n} passed, 0 failed"
    assert any(line.startswith("D3 1 - ") for line in lines)


def test_report_order_is_deterministic():
    a = [r.key for r, _ in verify_all(3).results]
    assert a == sorted(a)


def test_verify_all_rejects_small_index():
    with pytest.raises(ValueError):
        verify_all(2)


def test_tau_free_relators_stay_in_bv_hat():
    assert bv_hat_instances_closed(6) == []
