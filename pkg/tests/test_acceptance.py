"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria execute.  Every tolerance is exact (integer equality / boolean
equivalence); the stated wall-clock limits are asserted too.
"""

from __future__ import annotations

import time
from contextlib import contextmanager

from hibiring import (
    ChainDecomposition,
    CoverPair,
    chain_poset,
    cm_type,
    compare_types,
    count_T,
    cover_inequalities_hold,
    depths_extended,
    diagonals,
    disjoint_union,
    enumerate_canonical_chain_decompositions,
    figure_catalog,
    h_vector,
    heights_extended,
    ideals,
    iota,
    is_gorenstein,
    is_level,
    is_minimal_generator,
    is_miyazaki,
    is_pseudo_gorenstein,
    is_regular,
    is_simple,
    iter_random_posets,
    join_irreducibles,
    make_butterfly,
    make_diagonal_poset,
    minimal_generators,
    multichain_poset,
    order_polynomial_value,
    rank,
    rank_extended,
    verify_product_formulas,
)
CATALOG = figure_catalog()
FIGURES = {name: doc.to_poset() for name, doc in CATALOG.items()}


@contextmanager
def criterion(num: int, description: str, limit_s: float):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        status = "PASS"
    finally:
        dt = time.perf_counter() - t0
        print(f"CRITERION {num:2d}: {status} ({dt:.1f}s, limit {limit_s:.0f}s) - {description}")
    assert dt < limit_s, f"criterion {num} exceeded its {limit_s}s budget ({dt:.1f}s)"


def oracle_level(p) -> bool:
    from hibiring import gamma

    return gamma(p) == rank_extended(p)


# ---------------------------------------------------------------------------


def test_criterion_01_figure_nine_types():
    with criterion(1, "catalog product fixture has types 2 and 3", 60):
        p = FIGURES["fig9_type"]
        assert cm_type(p) == 2
        product = multichain_poset(p, 3).product
        assert cm_type(product) == 3


def test_criterion_02_one_corner_ladder_sweep():
    with criterion(2, "one-corner ladders: level iff min(m,n) <= s+t, all a,b,c,d <= 4", 120):
        for a in range(1, 5):
            for b in range(1, 5):
                for c in range(1, 5):
                    for d in range(1, 5):
                        p = make_diagonal_poset(a, b, c, d)
                        m, n, s, t = a + b - 1, c + d - 1, a, d
                        assert is_level(p, oracle_threshold=100) == (min(m, n) <= s + t), (
                            a,
                            b,
                            c,
                            d,
                        )


def test_criterion_03_butterfly_equivalences():
    with criterion(3, "butterflies up to 5+5: level iff short chain is 2, all equivalences", 60):
        for p_size in range(2, 6):
            for q_size in range(p_size, 6):
                p = make_butterfly(p_size, q_size)
                lvl = is_level(p, oracle_threshold=100)
                ineq = cover_inequalities_hold(p)
                he, de = heights_extended(p), depths_extended(p)
                stepwise = all(
                    de[lo] == de[hi] + 1 or he[hi] == he[lo] + 1 for lo, hi in p.cover_indices
                )
                short_is_two = p_size == 2
                assert lvl == ineq == stepwise == short_is_two, (p_size, q_size)


def test_criterion_04_pseudo_gorenstein_three_routes(random_corpus_7):
    with criterion(4, "three pseudo-Gorenstein routes agree on catalog + 1000 random posets", 300):
        for p in list(FIGURES.values()) + random_corpus_7:
            r = rank_extended(p)
            he, de = heights_extended(p), depths_extended(p)
            via_chains = all(h + d == r for h, d in zip(he, de))
            via_unique = count_T(p, r) == 1
            via_leading = h_vector(p).leading == 1
            assert via_chains == via_unique == via_leading
            assert is_pseudo_gorenstein(p) == via_chains  # raises on internal disagreement


def test_criterion_05_figure_fixtures():
    with criterion(5, "figure fixtures reproduce their stated classifications", 60):
        fig4 = FIGURES["fig4_notvalid"]
        assert is_pseudo_gorenstein(fig4) and not is_regular(fig4)

        fig6 = FIGURES["fig6_counter"]
        assert not is_pseudo_gorenstein(fig6) and is_simple(fig6) and not is_regular(fig6)

        fig5 = FIGURES["fig5_butterfly"]
        assert is_level(fig5) and not is_miyazaki(fig5) and is_regular(fig5)

        fig1 = FIGURES["fig1_different"]
        decs = enumerate_canonical_chain_decompositions(fig1)
        # exactly the two length multisets {5,5} and {4,6} occur, realized by
        # the two straight-chain / mixed-chain decompositions
        assert sorted({d.lengths() for d in decs}) == [(4, 6), (5, 5)]
        c_dec = ChainDecomposition((tuple("abcdef"), tuple("ghijkl")))
        d_dec = ChainDecomposition((tuple("abief"), tuple("ghcdjkl")))
        found = {frozenset(d.chains) for d in decs}
        assert {frozenset(c_dec.chains), frozenset(d_dec.chains)} <= found
        b_i = CoverPair("b", "i")
        assert b_i in diagonals(fig1, c_dec)
        assert b_i not in diagonals(fig1, d_dec)


def test_criterion_06_level_needs_cover_inequalities(random_corpus_7):
    with criterion(6, "no random poset is level while violating a cover inequality", 300):
        for p in random_corpus_7:
            if oracle_level(p):
                assert cover_inequalities_hold(p)


def _regular_planar_instances(min_count: int):
    out = []
    for p_size in range(2, 6):
        for q_size in range(p_size, 6):
            out.append(make_butterfly(p_size, q_size))
    for a in range(1, 4):
        for b in range(1, 4):
            for c in range(1, 4):
                for d in range(1, 4):
                    out.append(make_diagonal_poset(a, b, c, d))
    for p in iter_random_posets(seed=777001, count=2500, max_size=7):
        out.append(p)
        if len(out) > 4000:
            break
    keep = []
    for p in out:
        decs = enumerate_canonical_chain_decompositions(p)
        if decs and len(decs[0].chains) == 2 and is_regular(p):
            keep.append(p)
        if len(keep) >= min_count:
            break
    return keep


def test_criterion_07_regular_planar_level_equivalences():
    with criterion(7, "regular planar: level iff cover inequalities iff stepwise, 200+ instances", 600):
        instances = _regular_planar_instances(200)
        assert len(instances) >= 200
        for p in instances:
            lvl = oracle_level(p)
            ineq = cover_inequalities_hold(p)
            he, de = heights_extended(p), depths_extended(p)
            stepwise_all = all(
                de[lo] == de[hi] + 1 or he[hi] == he[lo] + 1 for lo, hi in p.cover_indices
            )
            # per the diagonal remark, checking only diagonals must agree
            dec = enumerate_canonical_chain_decompositions(p)[0]
            diag = {(d.lower, d.upper) for d in diagonals(p, dec)}
            stepwise_diag = all(
                de[lo] == de[hi] + 1 or he[hi] == he[lo] + 1
                for lo, hi in p.cover_indices
                if (p.labels[lo], p.labels[hi]) in diag
            )
            assert lvl == ineq == stepwise_all == stepwise_diag


def _equal_length_components():
    out = []
    for ell in range(1, 5):
        for copies in range(1, 4):
            u = chain_poset(ell + 1)
            for _ in range(copies - 1):
                u = disjoint_union(u, chain_poset(ell + 1))
            out.append(u)
    for p_size in range(2, 6):
        out.append(make_butterfly(p_size, p_size))
        out.append(disjoint_union(make_butterfly(p_size, p_size), chain_poset(p_size)))
        out.append(
            disjoint_union(make_butterfly(p_size, p_size), make_butterfly(p_size, p_size))
        )
    return out


def test_criterion_08_hyper_planar_suites(random_corpus_7):
    with criterion(
        8, "equal-length / simple-planar / equal-length-corollary suites, 200+ instances each", 900
    ):
        regular_hyper = list(_equal_length_components())
        simple_planar = []
        for p_size in range(2, 6):
            for q_size in range(p_size, 6):
                simple_planar.append(make_butterfly(p_size, q_size))
        for a in range(1, 4):
            for b in range(1, 4):
                for c in range(1, 4):
                    for d in range(1, 4):
                        simple_planar.append(make_diagonal_poset(a, b, c, d))
        extra = list(iter_random_posets(seed=777002, count=3000, max_size=7))
        for p in random_corpus_7 + extra:
            decs = enumerate_canonical_chain_decompositions(p)
            if not decs:
                continue
            if is_regular(p):
                regular_hyper.append(p)
            if len(decs[0].chains) == 2 and is_simple(p):
                simple_planar.append(p)

        regular_hyper = regular_hyper[:1200]
        assert len(regular_hyper) >= 200

        # equal chain lengths characterize pseudo-Gorenstein under regularity
        equal_length_instances = []
        for p in regular_hyper:
            if not is_regular(p):
                continue
            dec = enumerate_canonical_chain_decompositions(p)[0]
            equal = len(set(dec.lengths())) == 1
            assert is_pseudo_gorenstein(p) == equal, p
            if equal:
                equal_length_instances.append(p)

        # simple planar: pseudo-Gorenstein iff regular with equal chain lengths
        simple_planar = [
            p
            for p in simple_planar
            if (ds := enumerate_canonical_chain_decompositions(p))
            and len(ds[0].chains) == 2
            and is_simple(p)
        ][:1200]
        assert len(simple_planar) >= 200
        for p in simple_planar:
            dec = enumerate_canonical_chain_decompositions(p)[0]
            equal = len(set(dec.lengths())) == 1
            assert is_pseudo_gorenstein(p) == (is_regular(p) and equal), p

        # the three-chain fixture shows the simple-planar rule needs planarity
        fig4 = FIGURES["fig4_notvalid"]
        dec4 = enumerate_canonical_chain_decompositions(fig4)[0]
        assert is_pseudo_gorenstein(fig4)
        assert not (is_regular(fig4) and len(set(dec4.lengths())) == 1)

        # with equal lengths and regularity: Gorenstein, level, Miyazaki agree
        assert len(equal_length_instances) >= 200
        for p in equal_length_instances:
            gor = is_gorenstein(p)
            lvl = oracle_level(p)
            miy = is_miyazaki(p)
            assert gor == lvl == miy, p


def test_criterion_09_multichain_product_suite():
    with criterion(9, "product transfer: types, pseudo-Gorenstein, level, embedding, formulas", 600):
        for p in iter_random_posets(seed=424243, count=200, max_size=6):
            assert verify_product_formulas(p, 3).passed
            t_base, t_prod = compare_types(p, 3)  # raises if any transfer fails
            assert t_base <= t_prod
            product = multichain_poset(p, 3).product
            assert is_pseudo_gorenstein(p) == is_pseudo_gorenstein(product)
            if oracle_level(product):
                assert oracle_level(p)
            images = set()
            for v in minimal_generators(p).generators:
                img = iota(p, v, 3)
                assert img not in images
                images.add(img)
                assert is_minimal_generator(product, img)


def test_criterion_10_birkhoff_round_trip_and_counts():
    with criterion(10, "Birkhoff round trip, basis counts and h-vector shape on all fixtures", 120):
        for name, p in FIGURES.items():
            lat = ideals(p)
            assert join_irreducibles(lat) == p, name
            assert len(lat) == order_polynomial_value(p, 1), name
            hv = h_vector(p)
            assert hv.coefficients[0] == 1, name
            assert hv.degree == len(p) - (rank(p) + 1), name


def test_criterion_11_generator_degree_bound(random_corpus_7):
    with criterion(11, "generator degrees bounded by |P| (extension rank for chains); bound tight", 600):
        for p in random_corpus_7:
            gens = minimal_generators(p)
            is_chain = rank(p) == len(p) - 1
            bound = rank_extended(p) if is_chain else len(p)
            assert all(g.degree <= bound for g in gens.generators)
            regens = minimal_generators(p, cap=len(p) + 1)
            assert [(g.degree, g.values) for g in regens.generators] == [
                (g.degree, g.values) for g in gens.generators
            ]
