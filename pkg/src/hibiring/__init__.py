"""Classification of finite posets and their ideal lattices.

Public surface: poset construction and order combinatorics
(:mod:`hibiring.posets`), ideal lattices with Hilbert data
(:mod:`hibiring.birkhoff`), canonical-ideal generators and the
Gorenstein / pseudo-Gorenstein / level classifiers
(:mod:`hibiring.canonical`), multichain products
(:mod:`hibiring.generalized`), plus document, fixture, DOT and search
utilities behind the CLI.
"""

from .birkhoff import (
    DistributiveLattice,
    HVector,
    Ladder,
    PosetIdeal,
    corners_cross_diagonal,
    count_ideals,
    h_vector,
    ideals,
    is_simple_lattice,
    join_irreducibles,
    ladder_of_planar,
    order_polynomial_value,
)
from .canonical import (
    Budget,
    ClassificationReport,
    GeneratorSet,
    GradedFunction,
    classify,
    cm_type,
    coheight_function,
    count_T,
    depth_function,
    enumerate_S,
    enumerate_T,
    gamma,
    is_gorenstein,
    is_level,
    is_minimal_generator,
    is_pseudo_gorenstein,
    minimal_generators,
    reduction_witness,
)
from .documents import PosetDocument, document_from_poset, parse_document, parse_poset
from .dot import export_dot
from .errors import (
    BudgetExceeded,
    ConsistencyFailure,
    CycleDetected,
    DecompositionMismatch,
    DuplicateLabel,
    EmptyPoset,
    HibiringError,
    ImpliedCoverWarning,
    NotHyperPlanar,
    NotPlanar,
    NotStrictlyOrderReversing,
    ParameterOutOfRange,
    ParseError,
    TooLarge,
    UnknownElement,
    UnknownLabel,
)
from .figures import figure_catalog
from .generalized import (
    MultichainPoset,
    compare_types,
    iota,
    iota_preserves_minimality,
    multichain_poset,
    verify_product_formulas,
)
from .posets import (
    BOTTOM,
    TOP,
    ChainDecomposition,
    CoverPair,
    ExtendedPoset,
    Poset,
    antichain_poset,
    build_poset,
    chain_poset,
    cover_inequalities_hold,
    cover_inequality_violations,
    covers,
    depth,
    depths_extended,
    diagonals,
    direct_product,
    disjoint_union,
    dual,
    enumerate_canonical_chain_decompositions,
    height,
    heights_extended,
    is_butterfly,
    is_hyper_planar,
    is_miyazaki,
    is_pure,
    is_regular,
    is_simple,
    make_butterfly,
    make_diagonal_poset,
    make_one_corner_ladder_poset,
    maximal_chains,
    miyazaki_directions,
    rank,
    rank_extended,
    regularity_report,
)
from .search import iter_random_posets, random_poset, run_search

__version__ = "0.1.0"
