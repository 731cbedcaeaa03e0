"""Finite posets, Hasse diagrams and the order-theoretic predicates.

A :class:`Poset` is built from labelled elements and cover pairs via
:func:`build_poset`.  Elements are indexed ``0..n-1`` in input order and
every derived structure (closure matrix, heights, chain decompositions)
is expressed over that indexing, so all enumeration orders are
deterministic.  Values are immutable after construction; the ``_cache``
dict only memoizes derived data and never changes observable behaviour.

The adjoined bottom/top convention: :class:`ExtendedPoset` wraps a poset
together with a virtual global minimum and maximum.  Heights, depths and
rank taken on the extension are the ones used throughout the classifier
modules.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Optional, Sequence

import numpy as np

from .errors import (
    CycleDetected,
    DecompositionMismatch,
    DuplicateLabel,
    EmptyPoset,
    ImpliedCoverWarning,
    NotHyperPlanar,
    ParameterOutOfRange,
    UnknownElement,
    UnknownLabel,
)

Label = Hashable

#: Sentinels for the two virtual elements of an extended poset.
BOTTOM = "-inf"
TOP = "+inf"


@dataclass(frozen=True)
class CoverPair:
    """A cover relation ``upper > lower`` with nothing strictly between."""

    lower: Label
    upper: Label


@dataclass(frozen=True)
class ChainDecomposition:
    """A partition of a poset into pairwise disjoint maximal chains.

    Each chain is stored bottom-to-top.  The decomposition itself is kept
    in a canonical order: chains sorted by the index of their bottom
    element in the source poset.
    """

    chains: tuple[tuple[Label, ...], ...]

    def lengths(self) -> tuple[int, ...]:
        """Chain lengths (number of covers, i.e. ``|C| - 1``) as a sorted tuple."""
        return tuple(sorted(len(c) - 1 for c in self.chains))

    def chain_of(self, x: Label) -> int:
        for i, chain in enumerate(self.chains):
            if x in chain:
                return i
        raise UnknownElement(f"element {x!r} not in decomposition")


class Poset:
    """An immutable finite poset given by its transitive closure and covers.

    Do not instantiate directly; use :func:`build_poset` or one of the
    parametric constructors, which validate their input.
    """

    __slots__ = ("labels", "_index", "_leq", "_covers", "_cache")

    def __init__(self, labels: tuple[Label, ...], leq: np.ndarray, covers: tuple[tuple[int, int], ...]):
        self.labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        leq = leq.copy()
        leq.setflags(write=False)
        self._leq = leq
        self._covers = covers
        self._cache: dict[Any, Any] = {}

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, {len(self._covers)} covers)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self._covers == other._covers

    def __hash__(self) -> int:
        return hash((self.labels, self._covers))

    def index(self, x: Label) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"unknown element {x!r}") from None

    def __contains__(self, x: Label) -> bool:
        return x in self._index

    def leq(self, x: Label, y: Label) -> bool:
        """Whether ``x <= y`` in the full (reflexive, transitive) order."""
        return bool(self._leq[self.index(x), self.index(y)])

    def lt(self, x: Label, y: Label) -> bool:
        return x != y and self.leq(x, y)

    @property
    def leq_matrix(self) -> np.ndarray:
        """Read-only boolean matrix; ``leq_matrix[i, j]`` iff element i <= element j."""
        return self._leq

    @property
    def cover_indices(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs ``(lower, upper)`` as element indices, sorted."""
        return self._covers

    # -- derived structure (memoized) -------------------------------------

    def _memo(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def up_covers(self, i: int) -> tuple[int, ...]:
        table = self._memo("up_covers", self._cover_tables)[0]
        return table[i]

    def down_covers(self, i: int) -> tuple[int, ...]:
        table = self._memo("up_covers", self._cover_tables)[1]
        return table[i]

    def _cover_tables(self):
        up = [[] for _ in self.labels]
        down = [[] for _ in self.labels]
        for lo, hi in self._covers:
            up[lo].append(hi)
            down[hi].append(lo)
        return tuple(tuple(v) for v in up), tuple(tuple(v) for v in down)

    def linear_extension(self) -> tuple[int, ...]:
        """A fixed linear extension: repeatedly take the smallest-index minimal element."""

        def compute():
            indeg = [len(self.down_covers(i)) for i in range(len(self))]
            ready = sorted(i for i, d in enumerate(indeg) if d == 0)
            order = []
            while ready:
                x = ready.pop(0)
                order.append(x)
                added = False
                for y in self.up_covers(x):
                    indeg[y] -= 1
                    if indeg[y] == 0:
                        ready.append(y)
                        added = True
                if added:
                    ready.sort()
            return tuple(order)

        return self._memo("linext", compute)

    def maximal_elements(self) -> tuple[Label, ...]:
        return self._memo(
            "maximal", lambda: tuple(self.labels[i] for i in range(len(self)) if not self.up_covers(i))
        )

    def minimal_elements(self) -> tuple[Label, ...]:
        return self._memo(
            "minimal", lambda: tuple(self.labels[i] for i in range(len(self)) if not self.down_covers(i))
        )

    def heights(self) -> tuple[int, ...]:
        """Per-element longest descending chain length within the poset."""

        def compute():
            h = [0] * len(self)
            for x in self.linear_extension():
                down = self.down_covers(x)
                h[x] = 1 + max(h[y] for y in down) if down else 0
            return tuple(h)

        return self._memo("heights", compute)

    def depths(self) -> tuple[int, ...]:
        """Per-element longest ascending chain length within the poset."""

        def compute():
            d = [0] * len(self)
            for x in reversed(self.linear_extension()):
                up = self.up_covers(x)
                d[x] = 1 + max(d[y] for y in up) if up else 0
            return tuple(d)

        return self._memo("depths", compute)

    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the comparability graph, by element index."""

        def compute():
            n = len(self)
            adj = [[] for _ in range(n)]
            for lo, hi in self._covers:
                adj[lo].append(hi)
                adj[hi].append(lo)
            seen = [False] * n
            comps = []
            for start in range(n):
                if seen[start]:
                    continue
                stack, comp = [start], []
                seen[start] = True
                while stack:
                    v = stack.pop()
                    comp.append(v)
                    for w in adj[v]:
                        if not seen[w]:
                            seen[w] = True
                            stack.append(w)
                comps.append(tuple(sorted(comp)))
            return tuple(comps)

        return self._memo("components", compute)

    def dual(self) -> "Poset":
        return dual(self)

    def extended(self) -> "ExtendedPoset":
        return ExtendedPoset(self)


@dataclass(frozen=True)
class ExtendedPoset:
    """A poset with an adjoined virtual bottom and top element.

    The virtual elements are addressed by the module constants
    :data:`BOTTOM` and :data:`TOP`; they are never elements of ``base``.
    """

    base: Poset

    def __len__(self) -> int:
        return len(self.base) + 2

    def __contains__(self, x: Label) -> bool:
        return x in (BOTTOM, TOP) or x in self.base


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------


def build_poset(labels: Sequence[Label], covers: Iterable[tuple[Label, Label]]) -> Poset:
    """Validate and build a poset from labels and ``(lower, upper)`` cover pairs.

    Redundant (transitively implied) input covers are dropped with an
    :class:`ImpliedCoverWarning`; cyclic input raises :class:`CycleDetected`.
    """
    labels = tuple(labels)
    if not labels:
        raise EmptyPoset("a poset needs at least one element")
    index: dict[Label, int] = {}
    for lab in labels:
        if lab in index:
            raise DuplicateLabel(f"duplicate label {lab!r}")
        index[lab] = len(index)
    n = len(labels)

    edges = []
    for lo, hi in covers:
        if lo not in index:
            raise UnknownLabel(f"cover references unknown label {lo!r}")
        if hi not in index:
            raise UnknownLabel(f"cover references unknown label {hi!r}")
        if lo == hi:
            raise CycleDetected(f"self-loop on {lo!r}")
        edges.append((index[lo], index[hi]))
    edges = sorted(set(edges))

    lt = np.zeros((n, n), dtype=bool)
    for lo, hi in edges:
        lt[lo, hi] = True
    # closure by repeated relational composition
    while True:
        grown = lt | (lt @ lt)
        if np.array_equal(grown, lt):
            break
        lt = grown
    if lt.diagonal().any():
        cyc = labels[int(np.nonzero(lt.diagonal())[0][0])]
        raise CycleDetected(f"cover relation contains a cycle through {cyc!r}")

    # transitive reduction: drop edges with an intermediate element
    implied = lt @ lt
    reduced = tuple((lo, hi) for lo, hi in edges if not implied[lo, hi])
    dropped = [e for e in edges if implied[e[0], e[1]]]
    for lo, hi in dropped:
        warnings.warn(
            f"cover ({labels[lo]!r}, {labels[hi]!r}) is transitively implied and was dropped",
            ImpliedCoverWarning,
            stacklevel=2,
        )

    leq = lt | np.eye(n, dtype=bool)
    return Poset(labels, leq, reduced)


def _from_index_covers(labels: Sequence[Label], idx_covers: Iterable[tuple[int, int]]) -> Poset:
    labels = tuple(labels)
    return build_poset(labels, [(labels[lo], labels[hi]) for lo, hi in idx_covers])


# ---------------------------------------------------------------------------
# heights, depths, rank
# ---------------------------------------------------------------------------


def height(q: Poset | ExtendedPoset, x: Label) -> int:
    """Longest descending chain length from ``x`` within ``q``."""
    if isinstance(q, ExtendedPoset):
        if x == BOTTOM:
            return 0
        if x == TOP:
            return rank(q)
        return q.base.heights()[q.base.index(x)] + 1
    return q.heights()[q.index(x)]


def depth(q: Poset | ExtendedPoset, x: Label) -> int:
    """Longest ascending chain length from ``x`` within ``q``."""
    if isinstance(q, ExtendedPoset):
        if x == TOP:
            return 0
        if x == BOTTOM:
            return rank(q)
        return q.base.depths()[q.base.index(x)] + 1
    return q.depths()[q.index(x)]


def rank(q: Poset | ExtendedPoset) -> int:
    """Maximal chain length in ``q``."""
    if isinstance(q, ExtendedPoset):
        return rank(q.base) + 2
    return max(q.heights()) if len(q) else 0


def heights_extended(p: Poset) -> tuple[int, ...]:
    """Heights of all elements of ``p`` taken in the extension, indexed as ``p``."""
    return tuple(h + 1 for h in p.heights())


def depths_extended(p: Poset) -> tuple[int, ...]:
    return tuple(d + 1 for d in p.depths())


def rank_extended(p: Poset) -> int:
    return rank(p) + 2


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def dual(p: Poset) -> Poset:
    """The poset on the same elements with all order relations reversed."""
    covers = tuple(sorted((hi, lo) for lo, hi in p.cover_indices))
    return Poset(p.labels, p.leq_matrix.T, covers)


def disjoint_union(p1: Poset, p2: Poset) -> Poset:
    """Disjoint union; elements of the two parts are pairwise incomparable.

    Labels are tagged ``(0, x)`` / ``(1, y)`` when the label sets collide,
    otherwise kept as-is.
    """
    if set(p1.labels) & set(p2.labels):
        lab1 = tuple((0, x) for x in p1.labels)
        lab2 = tuple((1, y) for y in p2.labels)
    else:
        lab1, lab2 = p1.labels, p2.labels
    labels = lab1 + lab2
    n1 = len(p1)
    covers = [(lo, hi) for lo, hi in p1.cover_indices]
    covers += [(lo + n1, hi + n1) for lo, hi in p2.cover_indices]
    return _from_index_covers(labels, covers)


def direct_product(p1: Poset, p2: Poset) -> Poset:
    """Direct product: ``(x, y) <= (x', y')`` iff ``x <= x'`` and ``y <= y'``."""
    labels = tuple((a, b) for a in p1.labels for b in p2.labels)
    n2 = len(p2)

    def pos(i: int, j: int) -> int:
        return i * n2 + j

    covers = []
    for i in range(len(p1)):
        for j in range(len(p2)):
            for i2 in p1.up_covers(i):
                covers.append((pos(i, j), pos(i2, j)))
            for j2 in p2.up_covers(j):
                covers.append((pos(i, j), pos(i, j2)))
    return _from_index_covers(labels, covers)


def chain_poset(n: int) -> Poset:
    """The chain ``x1 < x2 < ... < xn``."""
    if n < 1:
        raise ParameterOutOfRange("chain_poset needs n >= 1")
    labels = tuple(f"x{i}" for i in range(1, n + 1))
    return _from_index_covers(labels, [(i, i + 1) for i in range(n - 1)])


def antichain_poset(n: int) -> Poset:
    """``n`` pairwise incomparable elements."""
    if n < 1:
        raise ParameterOutOfRange("antichain_poset needs n >= 1")
    return build_poset(tuple(f"x{i}" for i in range(1, n + 1)), [])


def covers(p: Poset) -> list[CoverPair]:
    """The transitive-reduction edges, in deterministic index order."""
    return [CoverPair(p.labels[lo], p.labels[hi]) for lo, hi in p.cover_indices]


# ---------------------------------------------------------------------------
# chains and decompositions
# ---------------------------------------------------------------------------


def maximal_chains(p: Poset) -> list[tuple[int, ...]]:
    """All maximal chains as index tuples (bottom to top), lexicographic order."""

    def compute():
        up = [p.up_covers(i) for i in range(len(p))]
        out: list[tuple[int, ...]] = []
        stack: list[int] = []

        def walk(x: int) -> None:
            stack.append(x)
            if not up[x]:
                out.append(tuple(stack))
            else:
                for y in sorted(up[x]):
                    walk(y)
            stack.pop()

        for i in range(len(p)):
            if not p.down_covers(i):
                walk(i)
        out.sort()
        return out

    return list(p._memo("maximal_chains", compute))


def is_maximal_chain(p: Poset, chain_labels: Sequence[Label]) -> bool:
    """Whether the given bottom-to-top element list is a maximal chain of ``p``."""
    idx = [p.index(x) for x in chain_labels]
    if not idx:
        return False
    if p.down_covers(idx[0]) or p.up_covers(idx[-1]):
        return False
    pairs = set(p.cover_indices)
    return all((a, b) in pairs for a, b in zip(idx, idx[1:]))


def enumerate_canonical_chain_decompositions(p: Poset) -> list[ChainDecomposition]:
    """All partitions of ``p`` into pairwise disjoint maximal chains.

    Empty result means the poset is not hyper-planar.  Backtracks over the
    maximal chains through the smallest uncovered element; output is
    sorted, so the order is reproducible.
    """

    def compute():
        n = len(p)
        chains = maximal_chains(p)
        masks = [0 for _ in chains]
        for k, ch in enumerate(chains):
            m = 0
            for i in ch:
                m |= 1 << i
            masks[k] = m
        by_element: list[list[int]] = [[] for _ in range(n)]
        for k, ch in enumerate(chains):
            for i in ch:
                by_element[i].append(k)

        full = (1 << n) - 1
        found: list[tuple[tuple[int, ...], ...]] = []
        picked: list[int] = []

        def extend(used: int) -> None:
            if used == full:
                found.append(tuple(sorted(chains[k] for k in picked)))
                return
            pivot = ((used + 1) & ~used).bit_length() - 1  # lowest uncovered element
            for k in by_element[pivot]:
                if masks[k] & used:
                    continue
                picked.append(k)
                extend(used | masks[k])
                picked.pop()

        extend(0)
        found.sort()
        return tuple(
            ChainDecomposition(tuple(tuple(p.labels[i] for i in ch) for ch in dec)) for dec in found
        )

    return list(p._memo("canonical_decompositions", compute))


def is_hyper_planar(p: Poset) -> bool:
    return bool(enumerate_canonical_chain_decompositions(p))


def _validate_decomposition(p: Poset, dec: ChainDecomposition) -> None:
    seen: set[Label] = set()
    for chain in dec.chains:
        if not is_maximal_chain(p, chain):
            raise DecompositionMismatch(f"{chain!r} is not a maximal chain of the poset")
        for x in chain:
            if x in seen:
                raise DecompositionMismatch(f"element {x!r} appears in two chains")
            seen.add(x)
    if len(seen) != len(p):
        raise DecompositionMismatch("chains do not cover the whole poset")


def diagonals(p: Poset, dec: ChainDecomposition) -> list[CoverPair]:
    """Covers ``x > y`` whose endpoints lie in different chains of ``dec``."""
    _validate_decomposition(p, dec)
    where = {}
    for ci, chain in enumerate(dec.chains):
        for x in chain:
            where[x] = ci
    out = []
    for lo, hi in p.cover_indices:
        if where[p.labels[lo]] != where[p.labels[hi]]:
            out.append(CoverPair(p.labels[lo], p.labels[hi]))
    return out


def is_regular_decomposition(p: Poset, dec: ChainDecomposition) -> bool:
    """Regularity of one decomposition: chain positions respect every comparability."""
    pos = {}
    for chain in dec.chains:
        for k, x in enumerate(chain):
            pos[x] = k
    n = len(p)
    leq = p.leq_matrix
    for i in range(n):
        for j in range(n):
            if i != j and leq[i, j] and pos[p.labels[i]] >= pos[p.labels[j]]:
                return False
    return True


def is_regular(p: Poset) -> bool:
    """Whether every canonical chain decomposition is regular.

    Raises :class:`NotHyperPlanar` when no decomposition exists.
    """
    decs = enumerate_canonical_chain_decompositions(p)
    if not decs:
        raise NotHyperPlanar("poset admits no canonical chain decomposition")
    return all(is_regular_decomposition(p, dec) for dec in decs)


def regularity_report(p: Poset) -> list[tuple[ChainDecomposition, bool]]:
    """Per-decomposition regularity diagnostic."""
    decs = enumerate_canonical_chain_decompositions(p)
    return [(dec, is_regular_decomposition(p, dec)) for dec in decs]


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------


def is_pure(p: Poset) -> bool:
    """All maximal chains of the poset have equal length."""
    lengths = {len(ch) for ch in maximal_chains(p)}
    return len(lengths) == 1


def is_simple(p: Poset) -> bool:
    """No element is comparable with every element of the poset."""
    leq = p.leq_matrix
    comparable = leq | leq.T
    return not bool(comparable.all(axis=1).any())


def miyazaki_directions(p: Poset) -> tuple[bool, bool]:
    """(ascending, descending) halves of the Miyazaki condition.

    Ascending: every maximal chain ascending from any ``x`` in the
    extension has the same length; equivalently ``depth(y) = depth(x)+1``
    for every cover ``x > y``.  Descending is the dual statement.
    """
    he = heights_extended(p)
    de = depths_extended(p)
    asc = all(de[lo] == de[hi] + 1 for lo, hi in p.cover_indices)
    desc = all(he[hi] == he[lo] + 1 for lo, hi in p.cover_indices)
    return asc, desc


def is_miyazaki(p: Poset) -> bool:
    asc, desc = miyazaki_directions(p)
    return asc or desc


def cover_inequality_violations(p: Poset) -> list[CoverPair]:
    """Covers ``x > y`` with ``height(x) + depth(y) > rank + 1`` in the extension."""
    he = heights_extended(p)
    de = depths_extended(p)
    bound = rank_extended(p) + 1
    return [
        CoverPair(p.labels[lo], p.labels[hi])
        for lo, hi in p.cover_indices
        if he[hi] + de[lo] > bound
    ]


def cover_inequalities_hold(p: Poset) -> bool:
    return not cover_inequality_violations(p)


def is_butterfly(p: Poset) -> Optional[tuple[tuple[Label, ...], tuple[Label, ...]]]:
    """Detect the two-chain crossed-diagonal shape.

    Returns the witnessing chains ``(C1, C2)`` with ``2 <= |C1| <= |C2|``
    when some canonical two-chain decomposition has exactly the two
    diagonals ``max(C1) > min(C2)`` and ``max(C2) > min(C1)``; ``None``
    otherwise.
    """
    for dec in enumerate_canonical_chain_decompositions(p):
        if len(dec.chains) != 2:
            continue
        c1, c2 = sorted(dec.chains, key=lambda c: (len(c), [p.index(x) for x in c]))
        if len(c1) < 2:
            continue
        want = {(c2[0], c1[-1]), (c1[0], c2[-1])}
        got = {(d.lower, d.upper) for d in diagonals(p, dec)}
        if got == want:
            return c1, c2
    return None


# ---------------------------------------------------------------------------
# parametric families
# ---------------------------------------------------------------------------


def make_butterfly(p_size: int, q_size: int) -> Poset:
    """Two chains of sizes ``p_size <= q_size`` whose only diagonals cross
    between the top of each chain and the bottom of the other."""
    if not (2 <= p_size <= q_size):
        raise ParameterOutOfRange("butterfly needs 2 <= p <= q")
    a = [f"a{i}" for i in range(1, p_size + 1)]
    b = [f"b{i}" for i in range(1, q_size + 1)]
    cov = [(a[i], a[i + 1]) for i in range(p_size - 1)]
    cov += [(b[i], b[i + 1]) for i in range(q_size - 1)]
    cov += [(b[0], a[-1]), (a[0], b[-1])]
    return build_poset(a + b, cov)


def make_diagonal_poset(a: int, b: int, c: int, d: int) -> Poset:
    """Two chains joined by the single diagonal ``x > y``.

    The first chain has ``b-1`` elements below ``x`` and ``a-1`` above it;
    the second has ``d-1`` below ``y`` and ``c-1`` above.  ``x`` is element
    ``u{b}`` and ``y`` is ``w{d}``.
    """
    if min(a, b, c, d) < 1:
        raise ParameterOutOfRange("diagonal poset needs a, b, c, d >= 1")
    u = [f"u{i}" for i in range(1, a + b)]
    w = [f"w{i}" for i in range(1, c + d)]
    cov = [(u[i], u[i + 1]) for i in range(len(u) - 1)]
    cov += [(w[i], w[i + 1]) for i in range(len(w) - 1)]
    cov.append((w[d - 1], u[b - 1]))
    return build_poset(u + w, cov)


def make_one_corner_ladder_poset(m: int, n: int, s: int, t: int) -> Poset:
    """The poset whose ideal lattice is the one-corner ladder ``(m, n, s, t)``.

    Substitutes ``a = s``, ``d = t``, ``b = m + 1 - s``, ``c = n + 1 - t``
    into the single-diagonal construction; the substitution must keep all
    four parameters positive.
    """
    a, d_ = s, t
    b, c = m + 1 - s, n + 1 - t
    if min(a, b, c, d_) < 1:
        raise ParameterOutOfRange(
            f"one-corner ladder ({m}, {n}, {s}, {t}) leaves a non-positive chain segment"
        )
    return make_diagonal_poset(a, b, c, d_)
