"""Computations in free partially commutative groups.

The group ``G(Γ)`` is generated by the vertices of a finite simple graph
``Γ``; two generators commute exactly when they are adjacent.
"""

from .errors import DomainError, GraphLoadError, NotACentraliserError, UnsupportedError
from .graph import (
    ClosedSetLattice,
    CommutationGraph,
    complete_graph,
    cycle_graph,
    enumerate_closed_sets,
    format_graph,
    lattice_height,
    load_graph,
    parse_graph,
    path_graph,
    random_graph,
)
from .words import (
    ConjDecomposition,
    GroupElement,
    alpha,
    block_decomposition,
    blocks_of,
    check_conj_decomposition,
    conjugate,
    conjugate_decompose,
    cyclic_permutations,
    cyclic_reduce,
    cyclic_shifts,
    divides,
    equal,
    greatest_divisor,
    invert,
    is_cyclically_minimal,
    is_root_element,
    left_divisors,
    length,
    multiply,
    parse_word,
    project,
    reduce,
    root,
)
from .subgroups import (
    ParabolicSubgroup,
    QuasiparabolicSubgroup,
    Rank,
    block_set,
    centraliser_of_element,
    centraliser_of_set,
    contains,
    contains_subgroup,
    differences,
    from_json,
    intersect_parabolic,
    intersect_quasiparabolic,
    is_centraliser,
    meet,
    parabolic,
    parabolic_join,
    parabolic_part,
    present_as_centraliser,
    rank,
    rank_less,
    standardize,
    subgroup_equal,
    to_json,
    whole_group,
)
from .lattice import (
    CentraliserChain,
    ChainSearchResult,
    centraliser_lattice_height,
    centre,
    cpad_chain,
    parabolicize_chain,
    random_centraliser_chain,
    search_longer_chain,
    verify_chain,
    witness_chain,
)

__version__ = "0.1.0"
