"""Brute-force ground truth on finite hypergraphs: exhaustive matching
and cover enumeration, strong-maximality/minimality from the definition,
and truncation builders for the catalogue constructions."""

from __future__ import annotations

from dataclasses import dataclass

from . import catalogue
from .universe import truncation_window, vertex_key

ENUMERATION_GUARD = 24  # edges; keeps exhaustive suites at desk scale


def _vkey(v):
    # Test hypergraphs may use arbitrary hashable vertex labels.
    try:
        return (0, vertex_key(v))
    except TypeError:
        return (1, repr(v))


def _ekey(e) -> tuple:
    return tuple(sorted(_vkey(v) for v in e))


@dataclass(frozen=True)
class FiniteHypergraph:
    vertices: frozenset
    edges: tuple  # deduplicated tuple of frozensets

    def __post_init__(self):
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate edges")
        for e in self.edges:
            if not e <= self.vertices:
                raise ValueError("edge outside the vertex set")

    @staticmethod
    def of(vertices, edges) -> "FiniteHypergraph":
        uniq = sorted(set(frozenset(e) for e in edges), key=_ekey)
        return FiniteHypergraph(frozenset(vertices), tuple(uniq))


def _check_guard(h: FiniteHypergraph) -> None:
    if len(h.edges) > ENUMERATION_GUARD:
        raise ValueError(
            f"enumeration guard exceeded: {len(h.edges)} > {ENUMERATION_GUARD}"
        )


def enumerate_matchings(h: FiniteHypergraph) -> list[frozenset]:
    """All pairwise-disjoint edge subsets, the empty one included."""
    _check_guard(h)
    out: list[frozenset] = []

    def rec(i: int, chosen: list, used: set) -> None:
        if i == len(h.edges):
            out.append(frozenset(chosen))
            return
        rec(i + 1, chosen, used)
        e = h.edges[i]
        if not (used & e):
            chosen.append(e)
            rec(i + 1, chosen, used | e)
            chosen.pop()

    rec(0, [], set())
    return out


def enumerate_covers_of(h: FiniteHypergraph, targets) -> list[frozenset]:
    """All edge subsets whose union contains the target vertices."""
    _check_guard(h)
    targets = set(targets)
    out = []
    n = len(h.edges)
    for mask in range(1 << n):
        covered = set()
        for i in range(n):
            if mask & (1 << i):
                covered.update(h.edges[i])
        if targets <= covered:
            out.append(
                frozenset(h.edges[i] for i in range(n) if mask & (1 << i))
            )
    return out


def enumerate_covers(h: FiniteHypergraph) -> list[frozenset]:
    """All edge subsets whose union is the whole vertex set."""
    return enumerate_covers_of(h, h.vertices)


def _strongly_extreme(candidates: list[frozenset], minimal: bool) -> list[frozenset]:
    def beats(a: frozenset, b: frozenset) -> bool:
        # b witnesses against a
        if minimal:
            return len(a - b) > len(b - a)
        return len(a - b) < len(b - a)

    return [a for a in candidates if not any(beats(a, b) for b in candidates)]


def strongly_maximal_matchings(h: FiniteHypergraph) -> list[frozenset]:
    """Matchings losing to no other matching under the set-difference
    comparison.  On finite hypergraphs these are exactly the maximum
    matchings; both are computed and cross-asserted."""
    matchings = enumerate_matchings(h)
    strong = _strongly_extreme(matchings, minimal=False)
    best = max((len(m) for m in matchings), default=0)
    maximum = [m for m in matchings if len(m) == best]
    assert sorted(map(sorted_key, strong)) == sorted(map(sorted_key, maximum))
    return strong


def strongly_minimal_edge_covers(h: FiniteHypergraph) -> list[frozenset]:
    """Covers losing to no other cover; equal to the minimum-cardinality
    covers on finite hypergraphs, cross-asserted."""
    for v in h.vertices:
        if not any(v in e for e in h.edges):
            raise ValueError("isolated vertex: no edge-cover exists")
    covers = enumerate_covers(h)
    strong = _strongly_extreme(covers, minimal=True)
    best = min(len(c) for c in covers)
    minimum = [c for c in covers if len(c) == best]
    assert sorted(map(sorted_key, strong)) == sorted(map(sorted_key, minimum))
    return strong


def sorted_key(edge_set: frozenset) -> tuple:
    return tuple(sorted(_ekey(e) for e in edge_set))


def truncate(tag: str, bound: int) -> FiniteHypergraph:
    """Finite restriction of a catalogue construction: window vertices and
    the edges lying entirely inside the window."""
    hg = catalogue.hypergraph(tag)
    edges = hg.edges_within(bound)
    if len(edges) > ENUMERATION_GUARD:
        raise ValueError(
            f"enumeration guard exceeded: truncation has {len(edges)} edges"
        )
    return FiniteHypergraph.of(truncation_window(tag, bound), edges)


def gadget_subhypergraph(k: int) -> FiniteHypergraph:
    """The gadget on the host {1..k} as a finite hypergraph."""
    from .gadget import build_gadget
    from .universe import base_edge

    g = build_gadget(base_edge(range(1, k + 1)))
    return FiniteHypergraph.of(g.vertices, g.edges)
