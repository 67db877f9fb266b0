import xml.etree.ElementTree as ET

import pytest

from bvcalc.diagrams import identity_diagram
from bvcalc.render import crossing_count, diagram_svg, render_svg
from bvcalc.words import evaluate

NS = "{http://www.w3.org/2000/svg}"


def _render(tmp_path, d, name="d.svg"):
    path = render_svg(d, tmp_path / name)
    return path.read_text()


def test_identity_renders_one_strand(tmp_path):
    text = _render(tmp_path, identity_diagram())
    root = ET.fromstring(text)
    assert root.tag == NS + "svg"
    assert crossing_count(text) == 0
    braid = [g for g in root.iter(NS + "g") if g.get("class") == "braid"][0]
    assert len(list(braid)) == 1


def test_tau_one_crossing(tmp_path):
    assert crossing_count(_render(tmp_path, evaluate("t1"))) == 1


def test_xtau_square_crossings(tmp_path):
    assert crossing_count(_render(tmp_path, evaluate("x1 t1 x1 t1"))) == 18


def test_crossing_signs_follow_braid():
    d = evaluate("s1 s2^-1")
    groups = [g for g in diagram_svg(d).iter("g") if g.get("class") == "crossing"]
    got = [(int(g.get("data-position")), int(g.get("data-sign"))) for g in groups]
    assert got == [(abs(i), 1 if i > 0 else -1) for i in d.braid.letters]
    for g in groups:
        under, halo, over = list(g)
        assert halo.get("stroke") == "white"
        assert halo.get("d") == over.get("d") != under.get("d")


def test_layout_is_deterministic(tmp_path):
    d = evaluate("x0 s1 t1^-1 x1")
    assert _render(tmp_path, d, "a.svg") == _render(tmp_path, d, "b.svg")


def test_strands_on_equally_spaced_grid():
    from bvcalc.render import MARGIN, SPACING

    d = evaluate("s1 s2")
    braid = [g for g in diagram_svg(d).iter("g") if g.get("class") == "braid"][0]
    xs = {float(l.get("x1")) for l in braid.iter("line")}
    for path in braid.iter("path"):
        tokens = path.get("d").replace(",", " ").split()
        xs.update((float(tokens[1]), float(tokens[-2])))
    assert xs == {MARGIN + p * SPACING for p in range(d.strands)}


def test_unwritable_path(tmp_path):
    with pytest.raises(OSError):
        render_svg(evaluate("t1"), tmp_path / "missing" / "out.svg")
