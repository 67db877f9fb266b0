"""SVG pictures of tree-braid-tree diagrams.

Top tree hangs down onto the strands, the braid runs top to bottom one letter
per row, and the bottom tree is drawn upside down.  Every crossing is one
``<g class="crossing">`` element; the under strand is broken by a white halo
around the over strand.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import List, Tuple, Union

from .diagrams import Diagram
from .trees import Tree

SPACING = 40.0
ROW = 36.0
LEVEL = 28.0
MARGIN = 24.0
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _height(t: Tree) -> int:
    return 0 if t.is_leaf else 1 + max(_height(t.left), _height(t.right))


def _tree_edges(t: Tree, leaf_x: List[float], base_y: float, direction: int):
    """Edges of a tree whose leaves sit on ``base_y``; direction -1 grows upward."""
    edges: List[Tuple[float, float, float, float]] = []
    counter = [0]

    def place(node: Tree) -> Tuple[float, float, int]:
        if node.is_leaf:
            x = leaf_x[counter[0]]
            counter[0] += 1
            return x, base_y, 0
        lx, ly, lh = place(node.left)
        rx, ry, rh = place(node.right)
        h = 1 + max(lh, rh)
        x = (lx + rx) / 2
        y = base_y + direction * h * LEVEL
        edges.append((x, y, lx, ly))
        edges.append((x, y, rx, ry))
        return x, y, h

    place(t)
    return edges


def _line(parent: ET.Element, x1, y1, x2, y2, **attrs) -> ET.Element:
    return ET.SubElement(
        parent, "line", x1=f"{x1:.1f}", y1=f"{y1:.1f}", x2=f"{x2:.1f}", y2=f"{y2:.1f}", **attrs
    )


def _curve(x1: float, y1: float, x2: float, y2: float) -> str:
    ym = (y1 + y2) / 2
    return f"M {x1:.1f} {y1:.1f} C {x1:.1f} {ym:.1f}, {x2:.1f} {ym:.1f}, {x2:.1f} {y2:.1f}"


def diagram_svg(d: Diagram) -> ET.Element:
    m = d.strands
    k = len(d.braid)
    top_h = _height(d.top)
    bottom_h = _height(d.bottom)
    width = 2 * MARGIN + max(m - 1, 0) * SPACING
    y_top = MARGIN + top_h * LEVEL
    y_bottom = y_top + max(k, 1) * ROW
    height = y_bottom + bottom_h * LEVEL + MARGIN
    xs = [MARGIN + p * SPACING for p in range(m)]

    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=f"{width:.0f}",
        height=f"{height:.0f}",
        viewBox=f"0 0 {width:.0f} {height:.0f}",
    )
    trees = ET.SubElement(svg, "g", {"class": "trees", "stroke": "black", "stroke-width": "2"})
    for x1, y1, x2, y2 in _tree_edges(d.top, xs, y_top, -1):
        _line(trees, x1, y1, x2, y2)
    for x1, y1, x2, y2 in _tree_edges(d.bottom, xs, y_bottom, 1):
        _line(trees, x1, y1, x2, y2)

    braid = ET.SubElement(svg, "g", {"class": "braid", "fill": "none", "stroke-width": "2.5"})
    at = list(range(m))  # at[position] = strand, both 0-based
    for row, letter in enumerate(d.braid.letters):
        y1 = y_top + row * ROW
        y2 = y1 + ROW
        i = abs(letter) - 1
        for pos in range(m):
            if pos not in (i, i + 1):
                _line(braid, xs[pos], y1, xs[pos], y2, stroke=PALETTE[at[pos] % len(PALETTE)])
        sign = 1 if letter > 0 else -1
        g = ET.SubElement(
            braid, "g", {"class": "crossing", "data-position": str(i + 1), "data-sign": str(sign)}
        )
        left, right = at[i], at[i + 1]
        under_path = _curve(xs[i + 1], y1, xs[i], y2)
        over_path = _curve(xs[i], y1, xs[i + 1], y2)
        under, over = right, left
        if sign < 0:
            under_path, over_path = over_path, under_path
            under, over = left, right
        ET.SubElement(g, "path", d=under_path, stroke=PALETTE[under % len(PALETTE)])
        ET.SubElement(g, "path", d=over_path, stroke="white", **{"stroke-width": "8"})
        ET.SubElement(g, "path", d=over_path, stroke=PALETTE[over % len(PALETTE)])
        at[i], at[i + 1] = right, left
    if k == 0:
        for pos in range(m):
            _line(braid, xs[pos], y_top, xs[pos], y_bottom, stroke=PALETTE[at[pos] % len(PALETTE)])
    return svg


def render_svg(d: Diagram, path: Union[str, Path]) -> Path:
    path = Path(path)
    tree = ET.ElementTree(diagram_svg(d))
    ET.indent(tree)
    with open(path, "wb") as fh:
        tree.write(fh, encoding="utf-8", xml_declaration=True)
    return path


def crossing_count(svg_text: str) -> int:
    root = ET.fromstring(svg_text)
    ns = "{http://www.w3.org/2000/svg}"
    return sum(1 for g in root.iter(f"{ns}g") if g.get("class") == "crossing")

