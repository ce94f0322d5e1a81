"""Exhaustive search for the base families of minimally k-matchable graphs.

A base-family member is minimally k-matchable, irreducible (no smoothing
step applies), and free of single-edge two-vertex components.  Every
minimally k-matchable graph decomposes as an odd subdivision of such a
member plus disjoint K2 copies, so enumerating members up to a vertex bound
pins the family exactly for small k.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import ceil, log2

from .canon import CanonicalForm, canonical_form
from .generate import (
    GenerationStats,
    ResourceGuardExceeded,
    expand_subtree,
    split_frontier,
)
from .matching import MinimalityVerdict, count_matchings, is_minimally_k_matchable
from .multigraph import (
    Multigraph,
    banana_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    parse_graph,
    serialize_graph,
)
from .reduction import has_smooth_candidate, reduce

DEFAULT_GUARD = 10_000_000
_PARALLEL_SPLIT_EDGES = 3


@dataclass
class FilterStats:
    odd_or_isolated: int = 0
    k2_component: int = 0
    reducible: int = 0
    below_count: int = 0
    lemma1_killed: int = 0
    not_minimal: int = 0
    members: int = 0

    def merge(self, other: "FilterStats") -> None:
        for name in self.__dataclass_fields__:
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}


@dataclass(frozen=True)
class SearchConfig:
    k: int
    max_vertices: int
    max_multiplicity: int | None = None  # defaults to k (degrees are capped at k)
    worker_count: int = 1
    guard: int | None = DEFAULT_GUARD

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if self.max_vertices < 2 or self.max_vertices % 2 != 0:
            raise ValueError("max_vertices must be a positive even integer")
        if self.max_multiplicity is not None and not (
            1 <= self.max_multiplicity <= self.k
        ):
            raise ValueError("max_multiplicity must be in 1..k")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")

    @property
    def multiplicity_cap(self) -> int:
        return self.max_multiplicity if self.max_multiplicity is not None else self.k


@dataclass(frozen=True)
class FamilyMember:
    canonical: CanonicalForm
    vertex_count: int
    edge_count: int
    matching_count: int
    certificate: MinimalityVerdict
    name: str | None

    @property
    def graph(self) -> Multigraph:
        return parse_graph(self.canonical.serialization.decode("ascii"))

    def short_hash(self) -> str:
        return hashlib.sha256(self.canonical.serialization).hexdigest()[:12]

    def to_json_dict(self) -> dict:
        return {
            "canonical_mg": self.canonical.serialization.decode("ascii"),
            "hash": self.short_hash(),
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "matching_count": self.matching_count,
            "automorphisms": self.canonical.automorphism_count,
            "certificate": {
                "is_k_matchable": self.certificate.is_k_matchable,
                "is_minimal": self.certificate.is_minimal,
                "witness_edge": self.certificate.witness_edge,
                "count": self.certificate.count,
            },
            "name": self.name,
        }


@dataclass(frozen=True)
class FamilyReport:
    k: int
    max_vertices: int
    max_multiplicity: int
    members: tuple[FamilyMember, ...]
    generation: GenerationStats
    filtering: FilterStats
    worker_count: int

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "explored_bound": self.max_vertices,
            "max_multiplicity": self.max_multiplicity,
            "completeness_note": (
                f"members complete for graphs with at most {self.max_vertices} vertices"
            ),
            "member_count": len(self.members),
            "members": [m.to_json_dict() for m in self.members],
            "statistics": {
                "generation": self.generation.to_dict(),
                "filtering": self.filtering.to_dict(),
            },
            "theorem1_bound_next": theorem1_bound_value(self.k, self.members),
        }


def _member_filter(g: Multigraph, k: int, fstats: FilterStats) -> MinimalityVerdict | None:
    """Run the cheap rejections first, full minimality last."""
    n = g.vertex_count
    degs = g.degrees()
    # the empty graph has exactly one (empty) perfect matching but is not a
    # base-family member; with isolated vertices or odd order there is none
    if n == 0 or n % 2 == 1 or (degs and min(degs) == 0):
        fstats.odd_or_isolated += 1
        return None
    comps = g.components()
    if any(len(c) == 2 and g.multiplicity(c[0], c[1]) == 1 for c in comps):
        fstats.k2_component += 1
        return None
    if has_smooth_candidate(g):
        fstats.reducible += 1
        return None
    cnt = count_matchings(g, cap=2 * k - 1)
    if cnt < k:
        fstats.below_count += 1
        return None
    if cnt > 2 * k - 2 and min(degs) >= 2:
        fstats.lemma1_killed += 1
        return None
    verdict = is_minimally_k_matchable(g, k)
    if not verdict.is_minimal:
        fstats.not_minimal += 1
        return None
    fstats.members += 1
    return verdict


def _member_record(g: Multigraph, k: int, verdict: MinimalityVerdict) -> FamilyMember:
    cf = canonical_form(g)
    return FamilyMember(
        canonical=cf,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        matching_count=count_matchings(g),
        certificate=verdict,
        name=known_family_names(k).get(cf.serialization),
    )


def _search_worker(args) -> tuple[dict, dict, list]:
    root, k, max_degree, mult_cap, guard = args
    gstats = GenerationStats()
    fstats = FilterStats()
    found = []
    for g in expand_subtree(root, max_degree, mult_cap, gstats, guard=guard):
        verdict = _member_filter(g, k, fstats)
        if verdict is not None:
            found.append(_member_record(g, k, verdict))
    return gstats.to_dict(), fstats.to_dict(), found


def search_family(cfg: SearchConfig) -> FamilyReport:
    """Enumerate the bounded universe and keep the base-family members.

    Output is deterministic (members sorted by canonical serialization) and
    independent of worker_count.  Raises ResourceGuardExceeded when the
    generated-class counter passes cfg.guard.
    """
    k = cfg.k
    mult_cap = cfg.multiplicity_cap
    gstats = GenerationStats()
    fstats = FilterStats()
    members: list[FamilyMember] = []

    if cfg.worker_count == 1:
        for n in range(cfg.max_vertices + 1):
            for g in expand_subtree(empty_graph(n), k, mult_cap, gstats, guard=cfg.guard):
                verdict = _member_filter(g, k, fstats)
                if verdict is not None:
                    members.append(_member_record(g, k, verdict))
    else:
        shallow, frontier = split_frontier(
            cfg.max_vertices, mult_cap, k, _PARALLEL_SPLIT_EDGES, gstats, guard=cfg.guard
        )
        for g in shallow:
            verdict = _member_filter(g, k, fstats)
            if verdict is not None:
                members.append(_member_record(g, k, verdict))
        per_worker_guard = cfg.guard
        tasks = [(g, k, k, mult_cap, per_worker_guard) for g in frontier]
        with ProcessPoolExecutor(max_workers=cfg.worker_count) as pool:
            for gd, fd, found in pool.map(_search_worker, tasks, chunksize=1):
                sub_g = GenerationStats(**gd)
                sub_f = FilterStats(**fd)
                gstats.merge(sub_g)
                fstats.merge(sub_f)
                members.extend(found)
        # frontier roots were counted once by the splitter and once by their
        # worker; frontier members were filtered only in the workers
        gstats.classes -= len(frontier)
        if cfg.guard is not None and gstats.classes > cfg.guard:
            raise ResourceGuardExceeded(cfg.guard, gstats)

    members.sort(key=lambda m: m.canonical.serialization)
    return FamilyReport(
        k=k,
        max_vertices=cfg.max_vertices,
        max_multiplicity=mult_cap,
        members=tuple(members),
        generation=gstats,
        filtering=fstats,
        worker_count=cfg.worker_count,
    )


# -- known small families ------------------------------------------------------


def two_two_cycles() -> Multigraph:
    return cycle_graph(2).disjoint_union(cycle_graph(2))


def known_family_graphs(k: int) -> dict[str, Multigraph]:
    """The proven base families for k <= 3, keyed by their member names."""
    if k == 1:
        return {}
    if k == 2:
        return {"C2": cycle_graph(2)}
    if k == 3:
        return {
            "two-2-cycles": two_two_cycles(),
            "theta": banana_graph(3),
            "K4": complete_graph(4),
        }
    return {}


def known_family_names(k: int) -> dict[bytes, str]:
    return {
        canonical_form(g).serialization: name
        for name, g in known_family_graphs(k).items()
    }


# -- classification -------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    k: int
    verdict: MinimalityVerdict
    base_mg: str | None
    base_canonical: bytes | None
    stripped_k2: int | None
    name: str | None

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "is_k_matchable": self.verdict.is_k_matchable,
            "is_minimal": self.verdict.is_minimal,
            "witness_edge": self.verdict.witness_edge,
            "count": self.verdict.count,
            "base_mg": self.base_mg,
            "stripped_k2": self.stripped_k2,
            "name": self.name,
        }


def classify(g: Multigraph, k: int) -> Classification:
    """Minimality verdict plus, when minimal, the reduction base and its
    family name if the base is a known member for this k."""
    verdict = is_minimally_k_matchable(g, k)
    if not (verdict.is_k_matchable and verdict.is_minimal):
        return Classification(k, verdict, None, None, None, None)
    trace = reduce(g)
    cf = canonical_form(trace.base)
    return Classification(
        k=k,
        verdict=verdict,
        base_mg=serialize_graph(trace.base),
        base_canonical=cf.serialization,
        stripped_k2=trace.stripped_k2,
        name=known_family_names(k).get(cf.serialization),
    )


# -- vertex bound for the next family level -------------------------------------


def theorem1_bound_value(k: int, members) -> int | None:
    """Ceiling of max over members of |V| + (6*log2(k-1) + 12)*|E| +
    2*log2(k) + 2; None when k < 2 or the family is empty."""
    if k < 2:
        return None
    items = [(m.vertex_count, m.edge_count) for m in members]
    if not items:
        return None
    coeff = 6.0 * log2(k - 1) + 12.0
    tail = 2.0 * log2(k) + 2.0
    return ceil(max(nv + coeff * ne + tail for nv, ne in items))


def theorem1_bound(k: int, family: FamilyReport) -> int | None:
    """Vertex bound implied by the family at level k for level k+1 graphs."""
    return theorem1_bound_value(k, family.members)
