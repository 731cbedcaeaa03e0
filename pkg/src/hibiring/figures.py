"""Built-in fixture catalog.

Each entry is a :class:`PosetDocument` whose ``expected`` block records
externally known classification facts; the self-test suite recomputes
every report and compares.  ``fig7``/``fig8`` are generated from the
parametric constructors, ``fig3`` is a small representative of the
two-sided ladder family.
"""

from __future__ import annotations

from .documents import PosetDocument, document_from_poset
from .posets import make_diagonal_poset, make_one_corner_ladder_poset

_CHAIN = lambda names: [[a, b] for a, b in zip(names, names[1:])]  # noqa: E731


def _doc(name, elements, covers, expected) -> PosetDocument:
    return PosetDocument(
        name=name,
        elements=list(elements),
        covers=[tuple(c) for c in covers],
        expected=expected,
    )


def figure_catalog() -> dict[str, PosetDocument]:
    cat: dict[str, PosetDocument] = {}

    # two chains of six with four crossings; its canonical chain
    # decompositions realize two different length multisets
    left = ["a", "b", "c", "d", "e", "f"]
    right = ["g", "h", "i", "j", "k", "l"]
    cat["fig1_different"] = _doc(
        "fig1_different",
        left + right,
        _CHAIN(left) + _CHAIN(right) + [["b", "i"], ["i", "e"], ["h", "c"], ["d", "j"]],
        {"is_hyper_planar": True, "is_regular": False, "is_simple": True},
    )

    # representative of the two-sided ladder family: simple planar, one
    # diagonal into each chain
    u = ["u1", "u2", "u3", "u4"]
    w = ["w1", "w2", "w3"]
    cat["fig3_ladder"] = _doc(
        "fig3_ladder",
        u + w,
        _CHAIN(u) + _CHAIN(w) + [["w1", "u3"], ["u1", "w2"]],
        {"is_hyper_planar": True, "is_simple": True},
    )

    # three chains, unique canonical decomposition with unequal lengths,
    # pseudo-Gorenstein but not regular (and not planar)
    cat["fig4_notvalid"] = _doc(
        "fig4_notvalid",
        ["L0", "L1", "L2", "M0", "M1", "R0", "R1", "R2"],
        _CHAIN(["L0", "L1", "L2"])
        + _CHAIN(["M0", "M1"])
        + _CHAIN(["R0", "R1", "R2"])
        + [["M0", "L1"], ["R1", "M1"]],
        {"is_pseudo_gorenstein": True, "is_regular": False, "is_hyper_planar": True},
    )

    # the 2+3 butterfly: level, regular, simple, not Miyazaki
    cat["fig5_butterfly"] = _doc(
        "fig5_butterfly",
        ["y1", "x1", "y2", "z", "x2"],
        [["y1", "x1"], ["y2", "z"], ["z", "x2"], ["y2", "x1"], ["y1", "x2"]],
        {
            "is_level": True,
            "is_miyazaki": False,
            "is_regular": True,
            "is_simple": True,
        },
    )

    # two chains of five with two non-crossing diagonals: simple planar,
    # neither regular nor pseudo-Gorenstein
    a = ["a1", "a2", "a3", "a4", "a5"]
    b = ["b1", "b2", "b3", "b4", "b5"]
    cat["fig6_counter"] = _doc(
        "fig6_counter",
        a + b,
        _CHAIN(a) + _CHAIN(b) + [["a2", "b2"], ["b3", "a4"]],
        {"is_pseudo_gorenstein": False, "is_simple": True, "is_regular": False},
    )

    cat["fig7_diagonal"] = document_from_poset(
        make_diagonal_poset(2, 4, 4, 2),
        "fig7_diagonal",
        {"is_level": False, "is_simple": True, "is_hyper_planar": True},
    )

    cat["fig8_ladder"] = document_from_poset(
        make_one_corner_ladder_poset(5, 4, 1, 1),
        "fig8_ladder",
        {"is_level": False, "is_simple": True},
    )

    # a two-element chain next to an isolated point; its multichain product
    # with r = 3 strictly increases the Cohen-Macaulay type (2 to 3)
    cat["fig9_type"] = _doc(
        "fig9_type",
        ["u1", "u2", "w"],
        [["u1", "u2"]],
        {"cm_type": 2, "is_gorenstein": False, "is_level": True},
    )

    return cat


#: parameters behind the generated fixtures, for the product/type demos
FIG7_PARAMS = (2, 4, 4, 2)
FIG8_PARAMS = (5, 4, 1, 1)
FIG9_PRODUCT_R = 3
FIG9_PRODUCT_TYPE = 3
