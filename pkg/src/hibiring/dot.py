"""DOT export of Hasse diagrams."""

from __future__ import annotations

from typing import Optional

from .posets import ChainDecomposition, Poset, diagonals

_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
)


def _q(label) -> str:
    return '"' + str(label).replace('"', '\\"') + '"'


def export_dot(p: Poset, decomposition: Optional[ChainDecomposition] = None) -> str:
    """Hasse diagram as a DOT digraph, edges lower -> upper, stable order.

    With a decomposition, nodes are colored per chain and diagonal covers
    are drawn dashed.
    """
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=circle];"]
    color = {}
    diag = set()
    if decomposition is not None:
        for ci, chain in enumerate(decomposition.chains):
            for x in chain:
                color[x] = _PALETTE[ci % len(_PALETTE)]
        diag = {(d.lower, d.upper) for d in diagonals(p, decomposition)}
    for lab in p.labels:
        if lab in color:
            lines.append(f"  {_q(lab)} [color={_q(color[lab])}];")
        else:
            lines.append(f"  {_q(lab)};")
    for lo, hi in p.cover_indices:
        a, b = p.labels[lo], p.labels[hi]
        style = " [style=dashed]" if (a, b) in diag else ""
        lines.append(f"  {_q(a)} -> {_q(b)}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
