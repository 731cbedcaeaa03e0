"""Strictly order-reversing functions, canonical-module generators, classifiers.

Background, in the language of this library: a graded basis of the ring
attached to the ideal lattice of a poset is indexed by order-reversing
functions on the bottom/top extension, and the canonical ideal is indexed
by the strictly order-reversing ones (set ``T``).  The minimal generators
``T0`` determine the Cohen-Macaulay type, the top generator degree
``gamma``, and the Gorenstein / pseudo-Gorenstein / level trichotomy.

Enumeration strategy: a row of maximum value ``M`` is a minimal
generator of degree ``M + 1`` exactly when the least ideal containing
its maximum-value elements, closed downwards and across value-gap-one
covers, reaches a value-1 element.  Work happens per connected
component: exact map counts always come from path counting over the
component's ideal lattice; components with few maps are materialized as
numpy row arrays and certified by a vectorized fixpoint (counts
cross-checked against the path counting), while wide components
enumerate only the certified candidates through a pruned level-chain
search.  Cross-component generator counts follow from the per-component
tables by inclusion-exclusion, never by materializing products.

Every classifier that has both a theorem-based fast path and a brute
oracle runs both (below the oracle threshold) and raises
:class:`ConsistencyFailure` on disagreement; fast paths never silently
override the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Any, Optional

import numpy as np

from .birkhoff import HVector, count_ideals, h_vector, ideals, join_irreducibles, order_polynomial_value
from .errors import (
    BudgetExceeded,
    ConsistencyFailure,
    NotStrictlyOrderReversing,
    TooLarge,
)
from .posets import (
    ChainDecomposition,
    Label,
    Poset,
    cover_inequalities_hold,
    depths_extended,
    diagonals,
    enumerate_canonical_chain_decompositions,
    heights_extended,
    is_butterfly,
    is_miyazaki,
    is_pure,
    is_regular,
    is_simple,
    miyazaki_directions,
    rank,
    rank_extended,
)

DEFAULT_BUDGET = 5_000_000
DEFAULT_ORACLE_THRESHOLD = 10


class Budget:
    """Counts completed enumerated functions against a hard cap."""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def charge(self, amount: int) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(
                f"enumeration budget exceeded ({self.used} > {self.limit}); retry with a larger budget"
            )

    def guard_step(self, width: int) -> None:
        # keeps a runaway partial enumeration from exhausting memory
        if width > 8 * self.limit:
            raise BudgetExceeded(f"partial enumeration width {width} exceeds 8x budget {self.limit}")


def _as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(DEFAULT_BUDGET if budget is None else budget)


# ---------------------------------------------------------------------------
# graded functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class GradedFunction:
    """A function on the extended poset: ``degree`` at the bottom, 0 at the
    top, and ``values`` on the poset in element-index order."""

    degree: int
    values: tuple[int, ...]

    def value_of(self, p: Poset, x: Label) -> int:
        return self.values[p.index(x)]

    def as_dict(self, p: Poset) -> dict:
        return {str(lab): v for lab, v in zip(p.labels, self.values)}


def in_S(p: Poset, f: GradedFunction) -> bool:
    """Membership in the order-reversing set (weak inequalities)."""
    if len(f.values) != len(p) or f.degree < 0 or any(v < 0 for v in f.values):
        return False
    if any(f.values[i] > f.degree for i in range(len(p))):
        return False
    return all(f.values[lo] >= f.values[hi] for lo, hi in p.cover_indices)


def in_T(p: Poset, f: GradedFunction) -> bool:
    """Membership in the strictly order-reversing set."""
    if len(f.values) != len(p) or any(v < 1 for v in f.values):
        return False
    if any(f.values[i] >= f.degree for i in range(len(p))):
        return False
    return all(f.values[lo] > f.values[hi] for lo, hi in p.cover_indices)


def difference_in_S(p: Poset, v: GradedFunction, w: GradedFunction) -> bool:
    """Whether ``v - w`` is order reversing and nonnegative."""
    diff = GradedFunction(v.degree - w.degree, tuple(a - b for a, b in zip(v.values, w.values)))
    return in_S(p, diff)


def depth_function(p: Poset) -> GradedFunction:
    """The extension depths; always strictly order reversing of minimum degree."""
    return GradedFunction(rank_extended(p), depths_extended(p))


def coheight_function(p: Poset) -> GradedFunction:
    """Extension rank minus heights; coincides with the depth function exactly
    when the lattice is pseudo-Gorenstein."""
    r = rank_extended(p)
    return GradedFunction(r, tuple(r - h for h in heights_extended(p)))


# ---------------------------------------------------------------------------
# enumeration of order-reversing maps (numpy rows)
# ---------------------------------------------------------------------------


def _value_rows(p: Poset, elements: tuple[int, ...], cap: int, budget: Budget, strict: bool) -> np.ndarray:
    """All (strictly) order-reversing assignments on the given elements.

    ``elements`` must be closed under covers (a component or the whole
    poset).  Strict maps take values in ``1..cap``, weak ones in
    ``0..cap``.  Returns an ``(N, len(elements))`` int16 array with columns
    in ``elements`` order.
    """
    elset = set(elements)
    order = [x for x in reversed(p.linear_extension()) if x in elset]
    cols: dict[int, int] = {}
    rows = np.zeros((1, 0), dtype=np.int16)
    floor = 1 if strict else 0
    for x in order:
        ups = [cols[u] for u in p.up_covers(x)]
        if ups:
            lb = rows[:, ups].max(axis=1).astype(np.int32) + (1 if strict else 0)
        else:
            lb = np.full(rows.shape[0], floor, dtype=np.int32)
        cnt = np.clip(cap - lb + 1, 0, None)
        total = int(cnt.sum())
        budget.guard_step(total)
        ridx = np.repeat(np.arange(rows.shape[0]), cnt)
        starts = np.cumsum(cnt) - cnt
        offs = np.arange(total, dtype=np.int32) - np.repeat(starts, cnt)
        vals = (np.repeat(lb, cnt) + offs).astype(np.int16)
        rows = np.concatenate([rows[ridx], vals[:, None]], axis=1)
        cols[x] = rows.shape[1] - 1
    budget.charge(rows.shape[0])
    perm = [cols[x] for x in elements]
    return rows[:, perm]


def _certify(
    rows: np.ndarray,
    rowmax: np.ndarray,
    covers_local: list[tuple[int, int]],
    leq_local: np.ndarray,
    min_max: int,
    chunk: int = 1 << 18,
) -> np.ndarray:
    """Row mask: no order ideal reduces the row by one degree.

    Only rows with ``rowmax >= min_max`` are examined; smaller maxima can
    never correspond to minimal generators because the degree would drop
    below the minimum generator degree.  A certified row's closure walks
    from its maximum value down to 1 in unit steps across value-tight
    covers, so every value in ``1..max-1`` must occur as a tight-cover
    target; that necessary condition prunes rows cheaply before the exact
    fixpoint runs.
    """
    n_rows, k = rows.shape
    cert = np.zeros(n_rows, dtype=bool)
    if n_rows == 0:
        return cert
    candidate = rowmax >= min_max
    if not candidate.any():
        return cert
    tight_targets = np.zeros(n_rows, dtype=np.int64)
    for lo, hi in covers_local:
        sel = rows[:, lo] - rows[:, hi] == 1
        tight_targets[sel] |= np.int64(1) << rows[sel, hi].astype(np.int64)
    need = (np.int64(1) << rowmax.astype(np.int64)) - 2
    candidate &= (tight_targets & need) == need
    consider = np.nonzero(candidate)[0]
    if consider.size == 0:
        return cert

    down_of = leq_local.T.astype(np.float32)  # down_of[x, y] = (y <= x)
    for start in range(0, consider.size, chunk):
        sel = consider[start : start + chunk]
        W = rows[sel]
        A = W == W.max(axis=1, keepdims=True)
        while True:
            closed = (A.astype(np.float32) @ down_of) > 0
            for lo, hi in covers_local:
                closed[:, hi] |= closed[:, lo] & (W[:, lo] - W[:, hi] == 1)
            if (closed == A).all():
                break
            A = closed
        cert[sel] = (A & (W == 1)).any(axis=1)
    return cert


class _ComponentLattice:
    """Ideals of one connected component, with the strict-descent relation.

    The level sets of a strictly order-reversing map form a chain of
    ideals; ``beta`` may follow ``alpha`` when ``shadow(alpha) <= beta <=
    alpha``, where the shadow collects the lower covers of the members.
    Path counts through this relation give exact map counts without
    materializing anything.
    """

    def __init__(self, p: Poset, elements: tuple[int, ...], width_cap: int = 4000):
        self.elements = elements
        pos = {g: i for i, g in enumerate(elements)}
        self.covers_local = [
            (pos[lo], pos[hi]) for lo, hi in p.cover_indices if lo in pos and hi in pos
        ]
        k = len(elements)
        dcov = [0] * k
        for lo, hi in self.covers_local:
            dcov[hi] |= 1 << lo
        down = [0] * k
        leq = p.leq_matrix
        for i, gi in enumerate(elements):
            for j, gj in enumerate(elements):
                if leq[gj, gi]:
                    down[i] |= 1 << j
        # frontier enumeration of the component's ideals
        masks = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(k):
                    if m >> i & 1 or down[i] & ~m & ~(1 << i):
                        continue
                    grown = m | 1 << i
                    if grown not in masks:
                        masks.add(grown)
                        nxt.append(grown)
            frontier = nxt
            if len(masks) > width_cap:
                raise BudgetExceeded(
                    f"component ideal lattice exceeds {width_cap} ideals; generator counting is infeasible"
                )
        self.masks = sorted(masks)
        self.full = (1 << k) - 1
        self.shadow = {m: self._shadow_of(m, dcov, k) for m in self.masks}
        self.followers = {
            a: [b for b in self.masks if b & ~a == 0 and self.shadow[a] & ~b == 0]
            for a in self.masks
        }

    @staticmethod
    def _shadow_of(mask: int, dcov: list[int], k: int) -> int:
        out = 0
        for i in range(k):
            if mask >> i & 1:
                out |= dcov[i]
        return out

    def strict_map_counts(self, cap: int) -> list[int]:
        """``A[m]`` = number of strictly order-reversing maps with values in
        ``1..m``, exact integers, for ``m = 0..cap``."""
        idx = {m: i for i, m in enumerate(self.masks)}
        preds: list[list[int]] = [[] for _ in self.masks]
        for a in self.masks:
            for b in self.followers[a]:
                preds[idx[b]].append(idx[a])
        vec = [0] * len(self.masks)
        vec[idx[self.full]] = 1
        counts = [0] * (cap + 1)
        for m in range(1, cap + 1):
            vec = [sum(vec[a] for a in preds[i]) for i in range(len(self.masks))]
            counts[m] = vec[idx[0]]
        return counts


@dataclass
class _ComponentData:
    elements: tuple[int, ...]
    cum_rows: list[int]  # cum_rows[m] = exact #maps with max value <= m
    cert_rows: np.ndarray  # certified rows only
    cert_max: np.ndarray
    cert_at: list[int]  # cert_at[m] = #certified rows with max == m
    full_rows: Optional[np.ndarray]  # all rows, when materialization was cheap
    full_max: Optional[np.ndarray]


@dataclass
class GeneratorTables:
    """Per-component enumeration tables plus exact global generator counts."""

    cap: int
    min_degree: int
    components: list[_ComponentData]
    counts_by_degree: dict[int, int]

    @property
    def cm_type(self) -> int:
        return sum(self.counts_by_degree.values())

    @property
    def gamma(self) -> int:
        return max(self.counts_by_degree)

    def count_T(self, d: int) -> int:
        """Number of strictly order-reversing functions of degree ``d``."""
        if d <= 0:
            return 0
        if d - 1 > self.cap:
            raise ValueError("degree beyond enumerated cap")
        out = 1
        for comp in self.components:
            out *= comp.cum_rows[d - 1]
        return out


def _default_cap(p: Poset) -> int:
    # generator degrees are bounded by |P| except for chains, whose single
    # generator sits at the extension rank |P| + 1
    if rank(p) == len(p) - 1:
        return len(p)
    return len(p) - 1


def _certified_rows_by_levels(
    p: Poset,
    lat: _ComponentLattice,
    cap: int,
    min_max: int,
    budget: Budget,
) -> np.ndarray:
    """Candidate generators of one component via level-set chains.

    A certified row takes every value ``1..max`` (the closure descends in
    unit steps), so its level sets form a strictly shrinking ideal chain
    in which consecutive level sets are joined by a value-tight cover.
    The DFS enumerates exactly those chains, pruning on the tight-cover
    requirement; exact verification of the survivors happens in the
    caller.
    """
    k = len(lat.elements)
    covers_local = lat.covers_local
    out: list[list[int]] = []
    nodes = 0

    strict_followers = {
        a: [b for b in lat.followers[a] if b not in (a, 0)] for a in lat.masks
    }
    # loset[(a, b)]: lower ends of covers whose upper end lies in a\b; a
    # value-tight cover between consecutive level sets b\c exists exactly
    # when loset & b & ~c is nonzero
    loset: dict[tuple[int, int], int] = {}
    for a in lat.masks:
        for b in strict_followers[a]:
            bits = 0
            diff = a & ~b
            for lo, hi in covers_local:
                if diff >> hi & 1:
                    bits |= 1 << lo
            loset[(a, b)] = bits

    # backward reachability over consecutive level pairs: keep only pairs
    # that extend to a chain whose every later triple stays tight and that
    # can terminate; the forward walk then only visits useful prefixes
    good: dict[tuple[int, int], bool] = {
        (a, b): lat.shadow[b] == 0 and loset[(a, b)] & b != 0 for (a, b) in loset
    }
    changed = True
    while changed:
        changed = False
        for (a, b), ok in good.items():
            if ok:
                continue
            ab_loset = loset[(a, b)]
            for c in strict_followers[b]:
                if ab_loset & b & ~c and good[(b, c)]:
                    good[(a, b)] = True
                    changed = True
                    break

    def emit(levels: list[int]) -> None:
        values = [0] * k
        for mask in levels:
            for i in range(k):
                if mask >> i & 1:
                    values[i] += 1
        out.append(values)

    def walk(levels: list[int]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget.limit:
            raise BudgetExceeded("certified-candidate search exceeded the enumeration budget")
        depth = len(levels)
        alpha = levels[-1]
        if lat.shadow[alpha] == 0 and depth >= min_max:
            if depth == 1 or loset[(levels[-2], alpha)] & alpha:
                emit(levels)
        if depth == cap:
            return
        prev_loset = loset[(levels[-2], alpha)] if depth >= 2 else -1
        for beta in strict_followers[alpha]:
            if depth >= 2 and not prev_loset & alpha & ~beta:
                continue
            if not good[(alpha, beta)]:
                continue
            levels.append(beta)
            walk(levels)
            levels.pop()

    walk([lat.full])
    if not out:
        return np.zeros((0, k), dtype=np.int16)
    return np.asarray(out, dtype=np.int16)


def generator_tables(
    p: Poset,
    budget: Budget | int | None = None,
    cap: int | None = None,
    materialize_limit: int | None = None,
) -> GeneratorTables:
    """Count and certify all candidate generators, grouped by component.

    Exact per-degree map counts always come from path counting over the
    component's ideal lattice.  Rows are fully materialized and certified
    in bulk when the count is small; otherwise only the certified
    candidates are generated by the level-chain search.  When both routes
    run, their counts are compared and a mismatch raises
    :class:`ConsistencyFailure`.
    """
    budget = _as_budget(budget)
    if cap is None:
        cap = _default_cap(p)
    if cap >= 60:
        raise BudgetExceeded("generator search for posets this large is not supported")
    if materialize_limit is None:
        materialize_limit = min(2_000_000, budget.limit)
    cache = p._memo("generator_tables", dict)
    if cap in cache:
        return cache[cap]

    r_ext = rank_extended(p)
    min_max = r_ext - 1
    leq = p.leq_matrix
    comps: list[_ComponentData] = []
    for elements in p.components():
        lat = _ComponentLattice(p, elements)
        cum = lat.strict_map_counts(cap)
        leq_local = leq[np.ix_(elements, elements)]
        if cum[cap] <= materialize_limit:
            rows = _value_rows(p, elements, cap, budget, strict=True)
            rowmax = rows.max(axis=1) if rows.shape[1] else np.zeros(rows.shape[0], dtype=np.int16)
            enum_cum = [int((rowmax <= m).sum()) for m in range(cap + 1)]
            if enum_cum != cum:
                raise ConsistencyFailure(
                    f"map counts disagree between enumeration and path counting: {enum_cum} vs {cum}"
                )
            cert = _certify(rows, rowmax, lat.covers_local, leq_local, min_max)
            cert_rows = rows[cert]
            cert_max = rowmax[cert]
            full_rows, full_max = rows, rowmax
        else:
            candidates = _certified_rows_by_levels(p, lat, cap, min_max, budget)
            cand_max = (
                candidates.max(axis=1) if candidates.size else np.zeros(len(candidates), dtype=np.int16)
            )
            verified = _certify(candidates, cand_max, lat.covers_local, leq_local, min_max)
            cert_rows = candidates[verified]
            cert_max = cand_max[verified]
            full_rows = full_max = None
        cat = [int((cert_max == m).sum()) for m in range(cap + 1)]
        comps.append(_ComponentData(elements, cum, cert_rows, cert_max, cat, full_rows, full_max))

    counts: dict[int, int] = {}
    for m in range(min_max, cap + 1):
        with_any = 1
        without_cert = 1
        for comp in comps:
            with_any *= comp.cum_rows[m]
            without_cert *= comp.cum_rows[m] - comp.cert_at[m]
        n_m = with_any - without_cert
        if n_m:
            counts[m + 1] = n_m

    tables = GeneratorTables(cap, r_ext, comps, counts)
    # internal sanity: the minimum generator degree is the extension rank
    if tables.count_T(r_ext - 1) != 0:
        raise ConsistencyFailure("found strictly order-reversing functions below the extension rank")
    t_min = tables.count_T(r_ext)
    if t_min < 1 or counts.get(r_ext, 0) != t_min:
        raise ConsistencyFailure(
            f"minimum-degree generators {counts.get(r_ext, 0)} do not match |T_min| = {t_min}"
        )
    cache[cap] = tables
    return tables


# ---------------------------------------------------------------------------
# public enumeration API
# ---------------------------------------------------------------------------


def enumerate_T(p: Poset, d: int, budget: Budget | int | None = None) -> list[GradedFunction]:
    """All strictly order-reversing functions of degree ``d``, sorted by value vector."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    budget = _as_budget(budget)
    if d == 0:
        return []
    rows = _value_rows(p, tuple(range(len(p))), d - 1, budget, strict=True)
    if rows.shape[0] > 1:
        rows = rows[np.lexsort(rows.T[::-1])]
    return [GradedFunction(d, tuple(int(v) for v in row)) for row in rows]


def enumerate_S(p: Poset, d: int, budget: Budget | int | None = None) -> list[GradedFunction]:
    """All order-reversing functions of degree ``d``, sorted by value vector."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    budget = _as_budget(budget)
    rows = _value_rows(p, tuple(range(len(p))), d, budget, strict=False)
    if rows.shape[0] > 1:
        rows = rows[np.lexsort(rows.T[::-1])]
    return [GradedFunction(d, tuple(int(v) for v in row)) for row in rows]


def count_T(p: Poset, d: int, budget: Budget | int | None = None) -> int:
    """Exact size of ``T_d`` without materializing the functions."""
    tables = generator_tables(p, budget)
    if d - 1 <= tables.cap:
        return tables.count_T(d)
    budget = _as_budget(budget)
    total = 1
    for elements in p.components():
        rows = _value_rows(p, elements, d - 1, budget, strict=True)
        total *= rows.shape[0]
    return total


# ---------------------------------------------------------------------------
# minimal generators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSet:
    """The minimal generators of the canonical ideal, with its degree data."""

    generators: tuple[GradedFunction, ...]
    degree_histogram: tuple[tuple[int, int], ...]
    min_degree: int

    @property
    def cm_type(self) -> int:
        return len(self.generators)

    @property
    def gamma(self) -> int:
        return max(d for d, _ in self.degree_histogram)


def _component_rows_upto(
    p: Poset, comp: _ComponentData, m: int, budget: Budget
) -> np.ndarray:
    """All rows of one component with maximum value at most ``m``."""
    if comp.full_rows is not None:
        return comp.full_rows[comp.full_max <= m]
    rows = _value_rows(p, comp.elements, m, budget, strict=True)
    if rows.shape[0] != comp.cum_rows[m]:
        raise ConsistencyFailure("on-demand enumeration disagrees with path counting")
    return rows


def minimal_generators(
    p: Poset, budget: Budget | int | None = None, cap: int | None = None
) -> GeneratorSet:
    """Materialize the minimal generating set, sorted by (degree, values)."""
    budget = _as_budget(budget)
    tables = generator_tables(p, budget, cap)
    budget.charge(tables.cm_type)

    n = len(p)
    out: list[GradedFunction] = []
    for degree, expected in sorted(tables.counts_by_degree.items()):
        m = degree - 1
        produced = 0
        comps = tables.components
        cert_pool: list[list[tuple[int, ...]]] = []
        any_pool: list[list[tuple[int, ...]]] = []
        safe_pool: list[list[tuple[int, ...]]] = []
        for c in comps:
            cert_keys = {
                tuple(int(v) for v in row) for row in c.cert_rows[c.cert_max == m]
            }
            all_rows = [
                tuple(int(v) for v in row) for row in _component_rows_upto(p, c, m, budget)
            ]
            cert_pool.append([r for r in all_rows if r in cert_keys])
            any_pool.append(all_rows)
            safe_pool.append([r for r in all_rows if r not in cert_keys])
        for first in range(len(comps)):
            pools = []
            for ci in range(len(comps)):
                if ci < first:
                    pools.append(safe_pool[ci])
                elif ci == first:
                    pools.append(cert_pool[ci])
                else:
                    pools.append(any_pool[ci])
            if any(not pool for pool in pools):
                continue
            for combo in cartesian(*pools):
                values = [0] * n
                for ci, row in enumerate(combo):
                    for local, g in enumerate(comps[ci].elements):
                        values[g] = row[local]
                out.append(GradedFunction(degree, tuple(values)))
                produced += 1
        if produced != expected:
            raise ConsistencyFailure(
                f"materialized {produced} generators of degree {degree}, tables expect {expected}"
            )
    out.sort()
    histogram = tuple(sorted(tables.counts_by_degree.items()))
    gen = GeneratorSet(tuple(out), histogram, tables.min_degree)
    if gen.min_degree != rank_extended(p):
        raise ConsistencyFailure("minimum generator degree differs from the extension rank")
    return gen


def cm_type(p: Poset, budget: Budget | int | None = None) -> int:
    """Number of minimal generators of the canonical ideal."""
    return generator_tables(p, budget).cm_type


def gamma(p: Poset, budget: Budget | int | None = None) -> int:
    """Largest degree of a minimal generator; equals the extension rank iff level."""
    return generator_tables(p, budget).gamma


def is_minimal_generator(p: Poset, f: GradedFunction) -> bool:
    """Membership test in the minimal generating set, one function at a time."""
    if not in_T(p, f):
        raise NotStrictlyOrderReversing(f"{f} is not strictly order reversing on the extension")
    top = max(f.values)
    if f.degree > top + 1:
        return False  # reducible by the empty ideal
    leq = p.leq_matrix
    alpha = {i for i, v in enumerate(f.values) if v == top}
    changed = True
    while changed:
        changed = False
        for i in tuple(alpha):
            for j in range(len(p)):
                if j not in alpha and leq[j, i]:
                    alpha.add(j)
                    changed = True
        for lo, hi in p.cover_indices:
            if lo in alpha and hi not in alpha and f.values[lo] - f.values[hi] == 1:
                alpha.add(hi)
                changed = True
    return any(f.values[i] == 1 for i in alpha)


def reduction_witness(p: Poset, f: GradedFunction) -> Optional[tuple[GradedFunction, GradedFunction]]:
    """For a reducible function, a verified witness ``f = w + u`` with ``w``
    strictly order reversing of lower degree and ``u`` order reversing."""
    if not in_T(p, f):
        raise NotStrictlyOrderReversing(f"{f} is not strictly order reversing on the extension")
    top = max(f.values)
    if f.degree > top + 1:
        w = GradedFunction(f.degree - 1, f.values)
        u = GradedFunction(1, tuple(0 for _ in f.values))
        return (w, u) if in_T(p, w) and in_S(p, u) else None
    if is_minimal_generator(p, f):
        return None
    # rebuild the reduction ideal found by the fixpoint
    leq = p.leq_matrix
    alpha = {i for i, v in enumerate(f.values) if v == top}
    changed = True
    while changed:
        changed = False
        for i in tuple(alpha):
            for j in range(len(p)):
                if j not in alpha and leq[j, i]:
                    alpha.add(j)
                    changed = True
        for lo, hi in p.cover_indices:
            if lo in alpha and hi not in alpha and f.values[lo] - f.values[hi] == 1:
                alpha.add(hi)
                changed = True
    u = GradedFunction(1, tuple(1 if i in alpha else 0 for i in range(len(p))))
    w = GradedFunction(f.degree - 1, tuple(v - ui for v, ui in zip(f.values, u.values)))
    if not (in_T(p, w) and in_S(p, u) and difference_in_S(p, f, w)):
        raise ConsistencyFailure("reduction witness failed verification")
    return (w, u)


# ---------------------------------------------------------------------------
# classifiers
# ---------------------------------------------------------------------------


def is_pseudo_gorenstein(p: Poset, budget: Budget | int | None = None) -> bool:
    """Three independent routes, which must agree.

    Chain criterion: every element lies on a chain of maximal length in
    the extension.  Oracle: exactly one strictly order-reversing function
    of minimum degree.  Hilbert route: h-vector leading coefficient 1.
    """
    r = rank_extended(p)
    he, de = heights_extended(p), depths_extended(p)
    via_chains = all(h + d == r for h, d in zip(he, de))
    via_unique_min = count_T(p, r, budget) == 1
    via_h_vector = h_vector(p).leading == 1
    if not (via_chains == via_unique_min == via_h_vector):
        raise ConsistencyFailure(
            "pseudo-Gorenstein routes disagree: "
            f"chains={via_chains} unique-min={via_unique_min} h-leading={via_h_vector}"
        )
    return via_chains


def is_gorenstein(p: Poset, budget: Budget | int | None = None) -> bool:
    """Purity fast path cross-checked against Cohen-Macaulay type 1."""
    via_pure = is_pure(p)
    via_type = cm_type(p, budget) == 1
    if via_pure != via_type:
        raise ConsistencyFailure(f"gorenstein routes disagree: pure={via_pure} type1={via_type}")
    return via_pure


@dataclass
class _LevelFastPaths:
    exact: list[tuple[str, bool]] = field(default_factory=list)
    miyazaki: bool = False
    inequalities_hold: bool = True

    def resolve(self) -> Optional[bool]:
        value: Optional[bool] = None
        source = None
        for name, val in self.exact:
            if value is not None and val != value:
                raise ConsistencyFailure(f"level fast paths disagree: {source}={value}, {name}={val}")
            value, source = val, name
        if self.miyazaki:
            if value is False:
                raise ConsistencyFailure(f"level fast path {source}=False on a Miyazaki poset")
            value, source = True, "miyazaki"
        if not self.inequalities_hold:
            if value is True:
                raise ConsistencyFailure(
                    f"level fast path {source}=True despite a cover-inequality violation"
                )
            value = False
        return value


def _level_fast_paths(p: Poset) -> _LevelFastPaths:
    out = _LevelFastPaths()
    out.miyazaki = is_miyazaki(p)
    out.inequalities_hold = cover_inequalities_hold(p)

    decs = enumerate_canonical_chain_decompositions(p)
    planar = bool(decs) and len(decs[0].chains) == 2
    if planar and all(_regular_dec(p, dec) for dec in decs):
        out.exact.append(("regular-planar-inequalities", out.inequalities_hold))
    wit = is_butterfly(p)
    if wit is not None:
        out.exact.append(("butterfly-short-chain", len(wit[0]) == 2))
    if planar:
        he, de = heights_extended(p), depths_extended(p)
        bound = rank_extended(p) + 1
        for dec in decs:
            diag = diagonals(p, dec)
            if len(diag) == 1:
                d = diag[0]
                val = he[p.index(d.upper)] + de[p.index(d.lower)] <= bound
                out.exact.append(("single-diagonal-inequality", val))
                break
    return out


def _regular_dec(p: Poset, dec: ChainDecomposition) -> bool:
    from .posets import is_regular_decomposition

    return is_regular_decomposition(p, dec)


def is_level(
    p: Poset,
    budget: Budget | int | None = None,
    oracle_threshold: int = DEFAULT_ORACLE_THRESHOLD,
) -> bool:
    """Level test: every canonical-ideal generator sits in the minimum degree.

    The oracle is ``gamma == rank of the extension``.  Theorem-backed fast
    paths (regular planar, butterfly, single diagonal, Miyazaki
    sufficiency, cover-inequality necessity) run first; the oracle runs
    whenever the poset is small enough or no fast path decides, and any
    disagreement raises :class:`ConsistencyFailure`.
    """
    fast = _level_fast_paths(p).resolve()
    if len(p) <= oracle_threshold or fast is None:
        oracle = gamma(p, budget) == rank_extended(p)
        if fast is not None and fast != oracle:
            raise ConsistencyFailure(f"level fast path said {fast}, oracle says {oracle}")
        return oracle
    return fast


# ---------------------------------------------------------------------------
# classification report
# ---------------------------------------------------------------------------


@dataclass
class ConsistencyFlag:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class ClassificationReport:
    """Everything the classifier knows about one poset, plus cross-checks."""

    name: str
    size: int
    rank: int
    rank_extended: int
    is_hyper_planar: bool
    is_simple: bool
    is_miyazaki: bool
    miyazaki_ascending: bool
    miyazaki_descending: bool
    cover_inequalities: bool
    is_pure: bool
    canonical_decomposition_count: int
    decomposition_lengths: list[list[int]]
    is_regular: Optional[bool]
    is_butterfly: Optional[list[list[str]]]
    h_vector: Optional[list[int]]
    is_pseudo_gorenstein: Optional[bool]
    is_gorenstein: Optional[bool]
    is_level: Optional[bool]
    cm_type: Optional[int]
    gamma: Optional[int]
    oracle_mode: str
    budget_exceeded: bool
    consistency_flags: list[ConsistencyFlag]

    @property
    def ok(self) -> bool:
        return all(flag.ok for flag in self.consistency_flags)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "name": self.name,
            "size": self.size,
            "rank": self.rank,
            "rank_extended": self.rank_extended,
            "is_hyper_planar": self.is_hyper_planar,
            "is_simple": self.is_simple,
            "is_miyazaki": self.is_miyazaki,
            "miyazaki_ascending": self.miyazaki_ascending,
            "miyazaki_descending": self.miyazaki_descending,
            "cover_inequalities": self.cover_inequalities,
            "is_pure": self.is_pure,
            "canonical_decomposition_count": self.canonical_decomposition_count,
            "decomposition_lengths": self.decomposition_lengths,
            "is_regular": self.is_regular,
            "is_butterfly": self.is_butterfly,
            "h_vector": self.h_vector,
            "is_pseudo_gorenstein": self.is_pseudo_gorenstein,
            "is_gorenstein": self.is_gorenstein,
            "is_level": self.is_level,
            "cm_type": self.cm_type,
            "gamma": self.gamma,
            "oracle_mode": self.oracle_mode,
            "budget_exceeded": self.budget_exceeded,
            "consistency_ok": self.ok,
            "consistency_flags": [f.to_dict() for f in self.consistency_flags],
        }
        return out


def classify(
    p: Poset,
    name: str = "",
    budget: Budget | int | None = None,
    oracle_threshold: int = DEFAULT_ORACLE_THRESHOLD,
) -> ClassificationReport:
    """Run every predicate and numeric with all applicable cross-checks.

    Sub-errors are aggregated into flags instead of aborting unrelated
    checks; a budget overrun leaves the affected numerics unset and marks
    the report.
    """
    budget = _as_budget(budget)
    flags: list[ConsistencyFlag] = []

    def flag(name_: str, ok: bool, detail: str = "") -> None:
        flags.append(ConsistencyFlag(name_, ok, detail))

    r, r_ext = rank(p), rank_extended(p)
    flag("rank_extension_formula", r_ext == r + 2)

    decs = enumerate_canonical_chain_decompositions(p)
    hyper = bool(decs)
    asc, desc = miyazaki_directions(p)
    ineq = cover_inequalities_hold(p)
    pure = is_pure(p)
    regular = is_regular(p) if hyper else None
    wit = is_butterfly(p)
    if hyper:
        counts = {len(d.chains) for d in decs}
        flag("decomposition_chain_count_invariant", counts == {len(p.maximal_elements())})

    budget_hit = False
    hv: Optional[HVector] = None
    try:
        hv = h_vector(p)
        flag("h_vector_consistent", True)
    except ConsistencyFailure as exc:  # pragma: no cover - bug signal
        flag("h_vector_consistent", False, str(exc))

    mode = "full" if len(p) <= oracle_threshold else "fast-path-only"

    pg: Optional[bool] = None
    try:
        pg = is_pseudo_gorenstein(p, budget)
        flag("pseudo_gorenstein_three_routes", True)
    except ConsistencyFailure as exc:  # pragma: no cover - bug signal
        flag("pseudo_gorenstein_three_routes", False, str(exc))
    except BudgetExceeded:
        budget_hit = True
        he, de = heights_extended(p), depths_extended(p)
        via_chains = all(h + d == r_ext for h, d in zip(he, de))
        via_leading = hv.leading == 1 if hv is not None else via_chains
        if via_chains != via_leading:  # pragma: no cover - bug signal
            flag("pseudo_gorenstein_three_routes", False, "chain and Hilbert routes disagree")
        else:
            pg = via_chains
            flag("pseudo_gorenstein_three_routes", True, "budget: unique-minimum route skipped")

    tables: Optional[GeneratorTables] = None
    try:
        tables = generator_tables(p, budget)
    except BudgetExceeded:
        budget_hit = True
    type_val = tables.cm_type if tables else None
    gamma_val = tables.gamma if tables else None

    gor: Optional[bool] = None
    if tables is not None:
        try:
            gor = is_gorenstein(p, budget)
            flag("gorenstein_two_routes", True)
        except ConsistencyFailure as exc:  # pragma: no cover - bug signal
            flag("gorenstein_two_routes", False, str(exc))
    else:
        gor = pure
        flag("gorenstein_two_routes", True, "budget: purity route only")

    level: Optional[bool] = None
    fast_level: Optional[bool] = None
    try:
        fast_level = _level_fast_paths(p).resolve()
        flag("level_fast_paths_agree", True)
    except ConsistencyFailure as exc:  # pragma: no cover - bug signal
        flag("level_fast_paths_agree", False, str(exc))
    if tables is not None:
        level = tables.gamma == r_ext
        if fast_level is not None:
            flag("level_fast_path_matches_oracle", fast_level == level)
    else:
        level = fast_level

    if hv is not None and tables is not None:
        flag(
            "h_leading_counts_min_degree_generators",
            hv.leading == tables.count_T(r_ext),
            f"leading={hv.leading} |T_min|={tables.count_T(r_ext)}",
        )

    # implication lattice among the classifiers
    if gor is not None and level is not None and pg is not None:
        flag("gorenstein_implies_level_and_pseudo", (not gor) or (level and pg))
        flag("pseudo_and_level_iff_gorenstein", (pg and level) == gor)
    if type_val is not None and gor is not None:
        flag("type_one_iff_gorenstein", (type_val == 1) == gor)
    if level is not None:
        flag("miyazaki_implies_level", (not (asc or desc)) or level)
        flag("level_implies_cover_inequalities", (not level) or ineq)

    # Birkhoff round trip on the ideal lattice, when it is small enough
    try:
        lat = ideals(p, cap=1 << 16)
        flag("ideal_count_equals_degree_one_basis", len(lat) == order_polynomial_value(p, 1))
        flag("ideal_count_independent_recursion", len(lat) == count_ideals(p))
        flag("birkhoff_round_trip", join_irreducibles(lat) == p)
    except TooLarge:
        pass

    return ClassificationReport(
        name=name,
        size=len(p),
        rank=r,
        rank_extended=r_ext,
        is_hyper_planar=hyper,
        is_simple=is_simple(p),
        is_miyazaki=asc or desc,
        miyazaki_ascending=asc,
        miyazaki_descending=desc,
        cover_inequalities=ineq,
        is_pure=pure,
        canonical_decomposition_count=len(decs),
        decomposition_lengths=sorted([list(d.lengths()) for d in decs]),
        is_regular=regular,
        is_butterfly=[list(map(str, c)) for c in wit] if wit else None,
        h_vector=list(hv.coefficients) if hv else None,
        is_pseudo_gorenstein=pg,
        is_gorenstein=gor,
        is_level=level,
        cm_type=type_val,
        gamma=gamma_val,
        oracle_mode=mode,
        budget_exceeded=budget_hit,
        consistency_flags=flags,
    )
