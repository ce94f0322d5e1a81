"""matchkit: exact perfect-matching analysis of small loopless multigraphs.

Core pieces: multigraph representation with identity-carrying parallel edges
and the mg-v1 text format; deterministic perfect-matching enumeration and the
minimal k-matchability test; odd-subdivision reduction; alternating-cycle and
chord machinery; canonical forms; and an exhaustive, isomorphism-free search
for the finite base families of minimally k-matchable graphs.
"""

from ._backend import BACKEND
from .alternating import (
    Chord,
    ChordKind,
    OrientedCycle,
    chambers,
    chords_cross,
    exchange,
    find_chords,
    is_alternating_cycle,
    symdiff_decompose,
)
from .canon import CanonicalForm, canonical_form, canonical_labeling, is_isomorphic
from .family import (
    Classification,
    FamilyMember,
    FamilyReport,
    SearchConfig,
    classify,
    known_family_graphs,
    search_family,
    theorem1_bound,
    theorem1_bound_value,
)
from .generate import GenerationStats, ResourceGuardExceeded, iter_multigraphs
from .matching import (
    Lemma1Report,
    MatchingSet,
    MinimalityVerdict,
    PerfectMatching,
    brute_force_count,
    count_matchings,
    enumerate_matchings,
    is_minimally_k_matchable,
    is_perfect_matching,
    lemma1_bound_check,
)
from .multigraph import (
    Edge,
    EdgeId,
    MgFormatError,
    Multigraph,
    banana_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_pairs,
    k2_graph,
    parse_graph,
    path_graph,
    serialize_graph,
    theta_graph,
)
from .reduction import (
    ReductionTrace,
    SmoothStep,
    StripStep,
    SubdivisionSpec,
    add_k2,
    has_smooth_candidate,
    reduce,
    smooth_once,
    subdivide_edge,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CanonicalForm",
    "Chord",
    "ChordKind",
    "Classification",
    "Edge",
    "EdgeId",
    "FamilyMember",
    "FamilyReport",
    "GenerationStats",
    "Lemma1Report",
    "MatchingSet",
    "MgFormatError",
    "MinimalityVerdict",
    "Multigraph",
    "OrientedCycle",
    "PerfectMatching",
    "ReductionTrace",
    "ResourceGuardExceeded",
    "SearchConfig",
    "SmoothStep",
    "StripStep",
    "SubdivisionSpec",
    "add_k2",
    "banana_graph",
    "brute_force_count",
    "canonical_form",
    "canonical_labeling",
    "chambers",
    "chords_cross",
    "classify",
    "complete_graph",
    "count_matchings",
    "cycle_graph",
    "disjoint_union",
    "empty_graph",
    "enumerate_matchings",
    "exchange",
    "find_chords",
    "from_pairs",
    "has_smooth_candidate",
    "is_alternating_cycle",
    "is_isomorphic",
    "is_minimally_k_matchable",
    "is_perfect_matching",
    "iter_multigraphs",
    "k2_graph",
    "known_family_graphs",
    "lemma1_bound_check",
    "parse_graph",
    "path_graph",
    "reduce",
    "search_family",
    "serialize_graph",
    "smooth_once",
    "subdivide_edge",
    "symdiff_decompose",
    "theorem1_bound",
    "theorem1_bound_value",
    "theta_graph",
]
