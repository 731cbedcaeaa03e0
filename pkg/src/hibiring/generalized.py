"""Multichain product posets and the generator embedding between them.

For ``r >= 2`` the ring of r-multichains of ideals is the ordinary ring
of the product poset ``P x [r-1]``.  The embedding ``iota`` carries
minimal generators of the canonical ideal of the base into minimal
generators over the product, which gives the type comparison and the
pseudo-Gorenstein transfer implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canonical import (
    Budget,
    GradedFunction,
    _as_budget,
    cm_type,
    gamma,
    in_T,
    is_minimal_generator,
    is_pseudo_gorenstein,
    minimal_generators,
)
from .errors import ConsistencyFailure, NotStrictlyOrderReversing, ParameterOutOfRange
from .posets import (
    Label,
    Poset,
    chain_poset,
    depths_extended,
    direct_product,
    heights_extended,
    rank_extended,
)


@dataclass(frozen=True)
class MultichainPoset:
    """The product of a base poset with the ``r-1``-element chain.

    Elements are labelled ``(x, i)`` with ``x`` in the base and
    ``i = 1..r-1``; ordered x-index major, i minor.
    """

    base: Poset
    r: int
    product: Poset

    def pair_index(self, x: Label, i: int) -> int:
        return self.product.index((x, i))


def multichain_poset(p: Poset, r: int) -> MultichainPoset:
    if r < 2:
        raise ParameterOutOfRange("multichain poset needs r >= 2")
    chain = chain_poset(r - 1)
    raw = direct_product(p, chain)
    relabel = {(x, f"x{i}"): (x, i) for x in p.labels for i in range(1, r)}
    labels = tuple(relabel[lab] for lab in raw.labels)
    prod = Poset(labels, raw.leq_matrix, raw.cover_indices)
    return MultichainPoset(p, r, prod)


def iota(p: Poset, v: GradedFunction, r: int) -> GradedFunction:
    """Send a strictly order-reversing function on the base extension to one
    on the product extension: ``(x, i)`` gets ``v(x) + (r - 1 - i)``."""
    if r < 2:
        raise ParameterOutOfRange("iota needs r >= 2")
    if not in_T(p, v):
        raise NotStrictlyOrderReversing("iota input must lie in T of the base poset")
    mp = multichain_poset(p, r)
    values = []
    for x, i in mp.product.labels:
        values.append(v.value_of(p, x) + (r - 1 - i))
    out = GradedFunction(v.degree + (r - 2), tuple(values))
    if not in_T(mp.product, out):
        raise ConsistencyFailure("iota image failed the strict order-reversal check")
    return out


@dataclass(frozen=True)
class ProductFormulaReport:
    passed: bool
    first_violation: Optional[str] = None


def verify_product_formulas(p: Poset, r: int) -> ProductFormulaReport:
    """Check the height/depth/rank transfer between base and product extensions."""
    if r < 2:
        raise ParameterOutOfRange("needs r >= 2")
    mp = multichain_poset(p, r)
    he_b, de_b = heights_extended(p), depths_extended(p)
    he_p, de_p = heights_extended(mp.product), depths_extended(mp.product)
    for k, (x, i) in enumerate(mp.product.labels):
        bx = p.index(x)
        if he_p[k] != he_b[bx] + (i - 1):
            return ProductFormulaReport(False, f"height at ({x}, {i}): {he_p[k]} != {he_b[bx]} + {i - 1}")
        if de_p[k] != de_b[bx] + (r - i - 1):
            return ProductFormulaReport(False, f"depth at ({x}, {i}): {de_p[k]} != {de_b[bx]} + {r - i - 1}")
    if rank_extended(mp.product) != rank_extended(p) + (r - 2):
        return ProductFormulaReport(
            False,
            f"rank: {rank_extended(mp.product)} != {rank_extended(p)} + {r - 2}",
        )
    return ProductFormulaReport(True)


def compare_types(
    p: Poset, r: int = 3, budget: Budget | int | None = None
) -> tuple[int, int]:
    """Types of the base and the product ring, with the theorem cross-checks.

    Asserts type monotonicity, the pseudo-Gorenstein equivalence, and that
    levelness of the product forces levelness of the base; a violation is
    a bug, not an input condition, so it raises ConsistencyFailure.
    """
    budget = _as_budget(budget)
    mp = multichain_poset(p, r)
    t1 = cm_type(p, budget)
    t2 = cm_type(mp.product, budget)
    if t1 > t2:
        raise ConsistencyFailure(f"type monotonicity violated: {t1} > {t2}")
    pg1 = is_pseudo_gorenstein(p, budget)
    pg2 = is_pseudo_gorenstein(mp.product, budget)
    if pg1 != pg2:
        raise ConsistencyFailure(f"pseudo-Gorenstein transfer violated: base={pg1} product={pg2}")
    lvl1 = gamma(p, budget) == rank_extended(p)
    lvl2 = gamma(mp.product, budget) == rank_extended(mp.product)
    if lvl2 and not lvl1:
        raise ConsistencyFailure("product is level but the base is not")
    return t1, t2


def iota_preserves_minimality(p: Poset, r: int = 3, budget: Budget | int | None = None) -> bool:
    """Whether ``iota`` maps every minimal generator to a minimal generator,
    injectively.  Used as a tested property, not assumed."""
    budget = _as_budget(budget)
    gens = minimal_generators(p, budget)
    mp = multichain_poset(p, r)
    images = set()
    for v in gens.generators:
        img = iota(p, v, r)
        if img in images:
            return False
        images.add(img)
        if not is_minimal_generator(mp.product, img):
            return False
    return True
