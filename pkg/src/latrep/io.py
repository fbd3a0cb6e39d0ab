"""JSON lattice files and DOT export."""

from __future__ import annotations

import json
from pathlib import Path

from .order import FiniteLattice


def lattice_from_json(data) -> FiniteLattice:
    """Build a lattice from ``{"elements": [...], "covers": [[lo, hi], ...]}``."""
    return FiniteLattice([str(x) for x in data["elements"]], [(str(a), str(b)) for a, b in data["covers"]])


def load_lattice(path) -> FiniteLattice:
    return lattice_from_json(json.loads(Path(path).read_text()))


def lattice_to_json(L: FiniteLattice) -> dict:
    return {"elements": list(L.elements), "covers": [list(c) for c in L.covers]}


def dump_lattice(L, path):
    Path(path).write_text(json.dumps(lattice_to_json(L), indent=1) + "\n")


def _q(x):
    return '"' + str(x).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(L: FiniteLattice, grouping: dict | None = None, name="lattice") -> str:
    """Hasse diagram in DOT: one rank per height, cover edges only.

    ``grouping`` maps elements to the components containing them;
    elements owned by exactly one component are drawn inside that
    component's cluster.
    """
    lines = [f"digraph {_q(name)} {{", "  rankdir=BT;", "  node [shape=circle, fontsize=10];"]
    by_height = {}
    for x in L.elements:
        by_height.setdefault(L.height(x), []).append(x)
    if grouping:
        clusters = {}
        for x in L.elements:
            owners = grouping.get(x, ())
            if len(owners) == 1:
                clusters.setdefault(owners[0], []).append(x)
        for k, comp in enumerate(sorted(clusters)):
            lines.append(f"  subgraph cluster_{k} {{")
            lines.append(f"    label={_q(comp)};")
            for x in clusters[comp]:
                lines.append(f"    {_q(x)};")
            lines.append("  }")
    for h in sorted(by_height):
        members = " ".join(f"{_q(x)};" for x in by_height[h])
        lines.append(f"  {{ rank=same; {members} }}")
    for x, y in L.covers:
        lines.append(f"  {_q(x)} -> {_q(y)} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
