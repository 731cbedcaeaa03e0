"""Seeded random posets and the conjecture-search harness.

Sampler: draw a random permutation of the elements, keep each forward
pair with probability ``p``, transitively reduce.  Everything is driven
by one ``random.Random`` instance, so runs are reproducible from the
seed.

Each search target evaluates both sides of an open implication with the
brute oracle and reports counterexamples as poset documents.  A budget
overrun on a candidate is logged and skipped, never reported as a
counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .canonical import cm_type, gamma
from .documents import PosetDocument, document_from_poset
from .errors import BudgetExceeded
from .generalized import multichain_poset
from .posets import (
    Poset,
    build_poset,
    cover_inequalities_hold,
    enumerate_canonical_chain_decompositions,
    is_miyazaki,
    rank_extended,
)

SEARCH_TARGETS = (
    "planar-inequality-vs-level",
    "level-implies-level-r",
    "miyazaki-product",
    "type-monotonicity",
)


def random_poset(rng: random.Random, n: int, p: float = 0.3) -> Poset:
    """A random n-element poset from a permutation-ordered random DAG."""
    labels = [f"x{i}" for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    covers = []
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                covers.append((labels[perm[a]], labels[perm[b]]))
    import warnings

    from .errors import ImpliedCoverWarning

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ImpliedCoverWarning)
        return build_poset(labels, covers)


def iter_random_posets(
    seed: int, count: int, max_size: int, p: float = 0.3, min_size: int = 1
) -> Iterator[Poset]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_size, max_size)
        yield random_poset(rng, n, p)


@dataclass
class Finding:
    index: int
    kind: str
    document: PosetDocument
    detail: str


@dataclass
class SearchResult:
    target: str
    candidates: int = 0
    skipped_budget: int = 0
    findings: list[Finding] = field(default_factory=list)

    def summary(self) -> str:
        lines = [
            f"target: {self.target}",
            f"candidates evaluated: {self.candidates}",
            f"candidates skipped on budget: {self.skipped_budget}",
            f"counterexamples: {len(self.findings)}",
        ]
        for f in self.findings:
            lines.append(f"[{f.index}] {f.kind}: {f.detail}")
            lines.append(f.document.to_json().rstrip())
        return "\n".join(lines)


def _is_planar(p: Poset) -> bool:
    decs = enumerate_canonical_chain_decompositions(p)
    return bool(decs) and len(decs[0].chains) == 2


def _check_planar_inequality(p: Poset, budget: int) -> Optional[str]:
    if not _is_planar(p):
        return None
    ineq = cover_inequalities_hold(p)
    lvl = gamma(p, budget) == rank_extended(p)
    if ineq != lvl:
        return f"cover inequalities {ineq} but level {lvl}"
    return None


def _check_level_product(p: Poset, budget: int, r: int = 3) -> Optional[str]:
    lvl = gamma(p, budget) == rank_extended(p)
    if not lvl:
        return None
    mp = multichain_poset(p, r).product
    lvl_r = gamma(mp, budget) == rank_extended(mp)
    if not lvl_r:
        return f"level base but product with r={r} is not level"
    return None


def _check_miyazaki_product(p: Poset, budget: int, r: int = 3) -> Optional[str]:
    a = is_miyazaki(p)
    b = is_miyazaki(multichain_poset(p, r).product)
    if a != b:
        return f"miyazaki {a} on the base but {b} on the r={r} product"
    return None


def _check_type_monotonicity(p: Poset, budget: int, r: int = 3) -> Optional[str]:
    t1 = cm_type(p, budget)
    t2 = cm_type(multichain_poset(p, r).product, budget)
    if t1 > t2:
        return f"type {t1} exceeds product type {t2}"
    return None


_CHECKS: dict[str, Callable[[Poset, int], Optional[str]]] = {
    "planar-inequality-vs-level": _check_planar_inequality,
    "level-implies-level-r": _check_level_product,
    "miyazaki-product": _check_miyazaki_product,
    "type-monotonicity": _check_type_monotonicity,
}


def run_search(
    target: str,
    seed: int = 0,
    count: int = 100,
    max_size: int = 6,
    edge_probability: float = 0.3,
    budget: int = 5_000_000,
    extra_posets: Optional[list[Poset]] = None,
) -> SearchResult:
    if target not in _CHECKS:
        raise ValueError(f"unknown target {target!r}; choose from {', '.join(SEARCH_TARGETS)}")
    check = _CHECKS[target]
    result = SearchResult(target)
    candidates: list[Poset] = list(extra_posets or [])
    candidates.extend(iter_random_posets(seed, count, max_size, edge_probability))
    for idx, p in enumerate(candidates):
        result.candidates += 1
        try:
            detail = check(p, budget)
        except BudgetExceeded:
            result.skipped_budget += 1
            continue
        if detail is not None:
            doc = document_from_poset(p, f"counterexample-{idx}")
            result.findings.append(Finding(idx, target, doc, detail))
    return result
