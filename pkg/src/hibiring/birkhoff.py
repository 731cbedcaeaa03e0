"""Ideal lattices, the order polynomial, Hilbert h-vectors and ladders.

Ideals are stored as bitmasks over the element indexing of the source
poset.  The counting routes kept deliberately independent of each other
are: explicit frontier enumeration (:func:`ideals`), a divide and
conquer count (:func:`count_ideals`), and the per-component dynamic
programs behind :func:`order_polynomial_value`.  Tests and the
classifier cross-check them against one another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import ConsistencyFailure, NotPlanar, TooLarge
from .posets import ChainDecomposition, Label, Poset, build_poset, rank

DEFAULT_LATTICE_CAP = 1 << 20


@dataclass(frozen=True)
class PosetIdeal:
    """A downward closed subset of a poset, as a membership bitmask."""

    mask: int

    def members(self, p: Poset) -> tuple[Label, ...]:
        return tuple(lab for i, lab in enumerate(p.labels) if self.mask >> i & 1)

    def membership_vector(self, p: Poset) -> tuple[bool, ...]:
        return tuple(bool(self.mask >> i & 1) for i in range(len(p)))

    def size(self) -> int:
        return self.mask.bit_count()


class DistributiveLattice:
    """All poset ideals of a source poset, ordered by inclusion.

    ``ideals`` lists masks sorted by (cardinality, membership vector);
    ``covers`` are the inclusion covers as index pairs ``(lower, upper)``.
    """

    def __init__(self, source: Poset, masks: tuple[int, ...], covers: tuple[tuple[int, int], ...]):
        self.source = source
        self.ideal_masks = masks
        self.position = {m: i for i, m in enumerate(masks)}
        self.covers = covers

    def __len__(self) -> int:
        return len(self.ideal_masks)

    def __repr__(self) -> str:
        return f"DistributiveLattice({len(self)} ideals over {len(self.source)} elements)"

    def ideal(self, i: int) -> PosetIdeal:
        return PosetIdeal(self.ideal_masks[i])

    def leq(self, i: int, j: int) -> bool:
        return self.ideal_masks[i] & ~self.ideal_masks[j] == 0

    def join(self, i: int, j: int) -> int:
        return self.position[self.ideal_masks[i] | self.ideal_masks[j]]

    def meet(self, i: int, j: int) -> int:
        return self.position[self.ideal_masks[i] & self.ideal_masks[j]]

    def down_cover_counts(self) -> list[int]:
        counts = [0] * len(self)
        for _, hi in self.covers:
            counts[hi] += 1
        return counts

    def maximal_chain_count(self) -> int:
        """Number of maximal chains of the lattice, by path counting."""
        paths = [0] * len(self)
        paths[0] = 1  # masks are sorted by cardinality, so index 0 is the empty ideal
        for lo, hi in sorted(self.covers):
            paths[hi] += paths[lo]
        return paths[-1]


def _downset_masks(p: Poset) -> list[int]:
    leq = p.leq_matrix
    out = []
    for i in range(len(p)):
        m = 0
        for j in range(len(p)):
            if leq[j, i]:
                m |= 1 << j
        out.append(m)
    return out


def _sort_key(n: int):
    # (cardinality, membership vector) with element 0 most significant
    def key(mask: int):
        return (mask.bit_count(), tuple(mask >> i & 1 for i in range(n)))

    return key


def ideals(p: Poset, cap: int = DEFAULT_LATTICE_CAP) -> DistributiveLattice:
    """Enumerate every ideal by iterative frontier expansion.

    Starts from the empty ideal and repeatedly adds one addable element
    (an element all of whose lower covers are already present).  Raises
    :class:`TooLarge` past ``cap`` ideals.
    """
    n = len(p)
    down = _downset_masks(p)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for i in range(n):
                if mask >> i & 1:
                    continue
                if down[i] & ~mask & ~(1 << i):
                    continue
                grown = mask | 1 << i
                if grown not in seen:
                    seen.add(grown)
                    if len(seen) > cap:
                        raise TooLarge(f"more than {cap} ideals")
                    nxt.append(grown)
        frontier = nxt

    masks = tuple(sorted(seen, key=_sort_key(n)))
    position = {m: i for i, m in enumerate(masks)}
    covers = []
    for m in masks:
        for i in range(n):
            if m >> i & 1:
                continue
            if down[i] & ~m & ~(1 << i):
                continue
            covers.append((position[m], position[m | 1 << i]))
    return DistributiveLattice(p, masks, tuple(sorted(covers)))


def count_ideals(p: Poset) -> int:
    """Ideal count by recursive removal of a maximal element (independent route)."""
    n = len(p)
    leq = p.leq_matrix
    up = [0] * n
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if leq[i, j]:
                up[i] |= 1 << j
                down[j] |= 1 << i
    memo: dict[int, int] = {0: 1}

    def go(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        # highest remaining element that is maximal within the induced subposet
        x = None
        for i in range(n - 1, -1, -1):
            if mask >> i & 1 and not (up[i] & mask & ~(1 << i)):
                x = i
                break
        assert x is not None
        res = go(mask & ~(1 << x)) + go(mask & ~down[x])
        memo[mask] = res
        return res

    return go((1 << n) - 1)


def join_irreducibles(lat: DistributiveLattice) -> Poset:
    """The subposet of ideals covering exactly one ideal.

    These are exactly the principal ideals; each is labelled by its
    unique maximal element, so the round trip lands back on the source
    poset's own labels.
    """
    p = lat.source
    counts = lat.down_cover_counts()
    ji = [i for i, c in enumerate(counts) if c == 1]
    gen_label = {}
    for i in ji:
        mask = lat.ideal_masks[i]
        members = [j for j in range(len(p)) if mask >> j & 1]
        tops = [j for j in members if not any(p.leq_matrix[j, k] for k in members if k != j)]
        if len(tops) != 1:
            raise ConsistencyFailure("join-irreducible ideal without a unique maximal element")
        gen_label[i] = p.labels[tops[0]]
    order = sorted(ji, key=lambda i: p.index(gen_label[i]))
    labels = [gen_label[i] for i in order]
    cov = []
    for a in range(len(order)):
        for b in range(len(order)):
            if a == b:
                continue
            if lat.leq(order[a], order[b]):
                strictly_between = any(
                    lat.leq(order[a], order[c]) and lat.leq(order[c], order[b])
                    for c in range(len(order))
                    if c not in (a, b)
                )
                if not strictly_between:
                    cov.append((labels[a], labels[b]))
    return build_poset(labels, cov)


def is_simple_lattice(lat: DistributiveLattice) -> bool:
    """Simplicity computed on the lattice itself, cross-checked against the
    join-irreducible criterion; disagreement raises ConsistencyFailure."""
    n = len(lat)
    direct = True
    for lo, hi in lat.covers:
        pinched = all(
            g in (lo, hi) or lat.leq(g, lo) or lat.leq(hi, g) for g in range(n)
        )
        if pinched:
            direct = False
            break
    from .posets import is_simple

    via_poset = is_simple(join_irreducibles(lat))
    if direct != via_poset:
        raise ConsistencyFailure(
            f"lattice simplicity {direct} disagrees with join-irreducible criterion {via_poset}"
        )
    return direct


# ---------------------------------------------------------------------------
# order polynomial and h-vector
# ---------------------------------------------------------------------------


class _FrontierBlowup(Exception):
    pass


def _frontier_count(p: Poset, elements: tuple[int, ...], i: int, state_cap: int = 30000) -> int:
    """Order-reversing maps of an induced component into ``{0..i}`` by a
    linear-extension DP; the state records values of processed elements
    that still constrain an unprocessed one."""
    elset = set(elements)
    order = [x for x in reversed(p.linear_extension()) if x in elset]
    seen: set[int] = set()
    active_after: list[tuple[int, ...]] = []
    active: list[int] = []
    for x in order:
        seen.add(x)
        active = [a for a in active if any(b not in seen for b in p.down_covers(a))]
        if any(b not in seen for b in p.down_covers(x)):
            active.append(x)
        active_after.append(tuple(active))

    states: dict[tuple[int, ...], int] = {(): 1}
    prev_active: tuple[int, ...] = ()
    for step, x in enumerate(order):
        uppers = p.up_covers(x)
        nxt_active = active_after[step]
        nxt: dict[tuple[int, ...], int] = {}
        for vals, cnt in states.items():
            byel = dict(zip(prev_active, vals))
            lb = max((byel[u] for u in uppers), default=0)
            for v in range(lb, i + 1):
                byel[x] = v
                key = tuple(byel[a] for a in nxt_active)
                nxt[key] = nxt.get(key, 0) + cnt
        if len(nxt) > state_cap:
            raise _FrontierBlowup
        states = nxt
        prev_active = nxt_active
    return sum(states.values())


def _component_ideal_masks(p: Poset, elements: tuple[int, ...]) -> list[int]:
    k = len(elements)
    leq = p.leq_matrix
    down = [0] * k
    for a, ga in enumerate(elements):
        for b, gb in enumerate(elements):
            if leq[gb, ga]:
                down[a] |= 1 << b
    masks = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for a in range(k):
                if m >> a & 1 or down[a] & ~m & ~(1 << a):
                    continue
                grown = m | 1 << a
                if grown not in masks:
                    masks.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return sorted(masks)


def _multichain_count(p: Poset, elements: tuple[int, ...], i: int) -> int:
    """Order-reversing map count as nested ideal chains of length ``i``.

    Handles components whose frontier DP would blow up; the chain vectors
    are cached and extended on demand, exact integers throughout.
    """
    if i == 0:
        return 1
    cache = p._memo("multichain_dp", dict)
    if elements not in cache:
        masks = _component_ideal_masks(p, elements)
        subs = [
            [bi for bi, b in enumerate(masks) if b & ~a == 0] for a in masks
        ]
        cache[elements] = (subs, [[1] * len(masks)])
    subs, chain = cache[elements]
    while len(chain) < i:
        prev = chain[-1]
        chain.append([sum(prev[bi] for bi in sub) for sub in subs])
    return sum(chain[i - 1])


def order_polynomial_value(p: Poset, i: int) -> int:
    """Number of order-reversing maps of the poset into ``{0..i}``.

    Equivalently the number of graded-basis monomials of degree ``i``.
    The count factors over connected components; each component uses a
    linear-extension dynamic program, switching to nested-ideal-chain
    counting when the frontier state space is too wide.  Exact integers
    throughout.
    """
    if i < 0:
        raise ValueError("degree must be >= 0")
    cache = p._memo("order_poly", dict)
    if i in cache:
        return cache[i]
    total = 1
    for elements in p.components():
        try:
            total *= _frontier_count(p, elements, i)
        except _FrontierBlowup:
            total *= _multichain_count(p, elements, i)
    cache[i] = total
    return total


@dataclass(frozen=True)
class HVector:
    """Numerator coefficients of the Hilbert series over ``(1-t)^dimension``."""

    coefficients: tuple[int, ...]
    dimension: int

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1]


def h_vector(p: Poset) -> HVector:
    """The h-vector, by exact binomial transform of the order polynomial.

    The numerator has degree exactly ``|P| - rank(P) - 1``; a zero or
    negative entry, a nonzero coefficient past that degree, or ``h0 != 1``
    all raise :class:`ConsistencyFailure` since they signal a bug.
    """
    n = len(p)
    d = n + 1
    s = n - rank(p) - 1

    def coeff(j: int) -> int:
        return sum(
            (-1) ** (j - i) * math.comb(d, j - i) * order_polynomial_value(p, i)
            for i in range(j + 1)
        )

    coeffs = tuple(coeff(j) for j in range(s + 1))
    if coeffs[0] != 1:
        raise ConsistencyFailure(f"h0 = {coeffs[0]} != 1")
    if any(c < 0 for c in coeffs):
        raise ConsistencyFailure(f"negative h-vector entry in {coeffs}")
    if coeffs[-1] < 1:
        raise ConsistencyFailure(f"vanishing leading coefficient in {coeffs}")
    for j in range(s + 1, n + 1):
        if coeff(j) != 0:
            raise ConsistencyFailure(f"h_{j} nonzero beyond expected degree {s}")
    return HVector(coeffs, d)


# ---------------------------------------------------------------------------
# ladders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ladder:
    """A two-sided ladder: the grid image of a planar ideal lattice.

    Point ``(i, j)`` is the ideal made of the first ``i`` elements of the
    long chain and the first ``j`` of the short one; ``lo``/``hi`` give the
    admissible ``j`` interval per ``i``.  Inside corners sit at the bends
    of the lower and upper border staircases.
    """

    m: int
    n: int
    lo: tuple[int, ...]
    hi: tuple[int, ...]
    chain1: tuple[Label, ...]
    chain2: tuple[Label, ...]

    def contains(self, i: int, j: int) -> bool:
        return 0 <= i <= self.m and self.lo[i] <= j <= self.hi[i]

    def points(self) -> Iterator[tuple[int, int]]:
        for i in range(self.m + 1):
            for j in range(self.lo[i], self.hi[i] + 1):
                yield (i, j)

    def size(self) -> int:
        return sum(self.hi[i] - self.lo[i] + 1 for i in range(self.m + 1))

    @property
    def lower_corners(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i in range(1, self.m + 1):
            if self.lo[i] > self.lo[i - 1]:
                out.append((i - 1, self.lo[i]))
        return tuple(out)

    @property
    def upper_corners(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i in range(1, self.m + 1):
            if self.hi[i] > self.hi[i - 1]:
                out.append((i, self.hi[i - 1]))
        return tuple(out)


def ladder_of_planar(p: Poset, dec: ChainDecomposition) -> Ladder:
    """Embed the ideal lattice of a two-chain poset into a grid.

    Ideals map bijectively to pairs of chain-prefix sizes.  Chains are
    oriented so the first axis is the longer chain (ties keep the input
    order).
    """
    if len(dec.chains) != 2:
        raise NotPlanar("ladder embedding needs a decomposition into exactly 2 chains")
    from .posets import _validate_decomposition

    _validate_decomposition(p, dec)
    c1, c2 = dec.chains
    if len(c2) > len(c1):
        c1, c2 = c2, c1
    m, n = len(c1), len(c2)
    idx1 = [p.index(x) for x in c1]
    idx2 = [p.index(x) for x in c2]
    leq = p.leq_matrix

    def below_count(target_chain: list[int], j: int) -> int:
        # number of elements of target_chain lying below element j
        return sum(1 for k in target_chain if k != j and leq[k, j])

    # lo[i]: elements of c2 forced by the first i elements of c1
    lo = [0] * (m + 1)
    for i in range(1, m + 1):
        lo[i] = max(lo[i - 1], below_count(idx2, idx1[i - 1]))
    # req1[j]: elements of c1 forced by the first j elements of c2
    req1 = [0] * (n + 1)
    for j in range(1, n + 1):
        req1[j] = max(req1[j - 1], below_count(idx1, idx2[j - 1]))
    hi = [0] * (m + 1)
    for i in range(m + 1):
        j = n
        while j > 0 and req1[j] > i:
            j -= 1
        hi[i] = j
    return Ladder(m, n, tuple(lo), tuple(hi), tuple(c1), tuple(c2))


def corners_cross_diagonal(lad: Ladder) -> bool:
    """Whether an inside corner crosses the main diagonal of the grid."""
    if any(i < j for i, j in lad.lower_corners):
        return True
    if any(i > j for i, j in lad.upper_corners):
        return True
    return False
