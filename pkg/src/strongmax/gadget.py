"""The edge gadget, the gadgetized hypergraphs built from it, the two
uniformization maps, and the flag-complex / complement-graph layer.

A gadget on a host edge of size k adds 2k-2 private vertices and carries
2k-1 edges: k outer edges (each meeting one host vertex) and k-1 inner
edges (private pairs).  The outer edges are the unique maximum matching;
the inner edges are a matching of size k-1 avoiding the host entirely.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable

from . import catalogue
from .universe import (
    BaseEdge,
    Edge,
    GadgetMinus,
    GadgetPlus,
    Nat,
    SharedPad,
    UniformPad,
    base_edge,
    make_edge,
)


@dataclass(frozen=True)
class Gadget:
    host: BaseEdge
    outer_edges: tuple  # k edges, outer_edges[i-1] contains host vertex v_i
    inner_edges: tuple  # k-1 edges

    @property
    def k(self) -> int:
        return len(self.host)

    @property
    def vertices(self) -> frozenset:
        out = set()
        for e in self.outer_edges + self.inner_edges:
            out.update(e)
        return frozenset(out)

    @property
    def added_vertices(self) -> frozenset:
        return frozenset(v for v in self.vertices if not isinstance(v, Nat))

    @property
    def edges(self) -> tuple:
        return self.outer_edges + self.inner_edges

    @property
    def outer_set(self) -> frozenset:
        return frozenset(self.outer_edges)

    @property
    def inner_set(self) -> frozenset:
        return frozenset(self.inner_edges)


@lru_cache(maxsize=4096)
def build_gadget(host: BaseEdge) -> Gadget:
    """Build the gadget on a host edge, labelling its vertices ascending."""
    host = base_edge(host)
    k = len(host)
    if k < 2:
        raise ValueError("gadget undefined for host edges of size < 2")
    v = [None] + [Nat(n) for n in host]  # 1-based host labels
    plus = {i: GadgetPlus(host, i) for i in range(1, k)}
    minus = {i: GadgetMinus(host, i) for i in range(2, k + 1)}
    outer = [make_edge([v[1], plus[1]])]
    outer += [make_edge([v[i], minus[i], plus[i]]) for i in range(2, k)]
    outer.append(make_edge([v[k], minus[k]]))
    inner = [make_edge([plus[i], minus[i + 1]]) for i in range(1, k)]
    return Gadget(host, tuple(outer), tuple(inner))


class MatchingState(Enum):
    DEFICIENT = "deficient"          # fewer than k-1 edges
    OTHER_K_MINUS_1 = "other_k_minus_1"
    INNER_EXACT = "inner_exact"
    OUTER_EXACT = "outer_exact"


class CoverState(Enum):
    INNER_EXACT = "inner_exact"      # the k-1 inner edges
    EXACTLY_K_NO_OUTER = "exactly_k_no_outer"
    EXACTLY_K_WITH_OUTER = "exactly_k_with_outer"
    OVERSIZED = "oversized"          # more than k edges
    INVALID = "invalid"


def is_matching(edges: Iterable[Edge]) -> bool:
    seen = set()
    for e in edges:
        if seen & e:
            return False
        seen.update(e)
    return True


def classify_matching_part(g: Gadget, part: Iterable[Edge]) -> MatchingState:
    """Classify a matching's intersection with one gadget."""
    s = frozenset(part)
    if not s <= frozenset(g.edges):
        raise ValueError("part contains edges outside the gadget")
    if not is_matching(s):
        raise ValueError("part is not a matching")
    k = g.k
    if len(s) < k - 1:
        return MatchingState.DEFICIENT
    if len(s) == k - 1:
        if s == g.inner_set:
            return MatchingState.INNER_EXACT
        return MatchingState.OTHER_K_MINUS_1
    # The outer set is the unique matching of size k and no larger
    # matching exists, so any matching this big is the outer set.
    assert s == g.outer_set
    return MatchingState.OUTER_EXACT


def classify_cover_part(g: Gadget, part: Iterable[Edge]) -> CoverState:
    """Classify a cover's intersection with one gadget.  The part must
    cover all 2k-2 added vertices."""
    s = frozenset(part)
    if not s <= frozenset(g.edges):
        raise ValueError("part contains edges outside the gadget")
    covered = set()
    for e in s:
        covered.update(e)
    if not g.added_vertices <= covered:
        raise ValueError("part leaves an added vertex uncovered")
    k = g.k
    if len(s) < k - 1:
        return CoverState.INVALID
    if len(s) == k - 1:
        # Each added vertex lies in some edge and each edge holds at most
        # two of them, so k-1 covering edges force the inner set.
        if s != g.inner_set:
            raise ValueError("k-1 covering edges that are not the inner set")
        return CoverState.INNER_EXACT
    if len(s) == k:
        if s & g.outer_set:
            return CoverState.EXACTLY_K_WITH_OUTER
        return CoverState.EXACTLY_K_NO_OUTER
    return CoverState.OVERSIZED


# Uniformization: pad every 2-edge up to size 3.  For matchings each
# 2-edge gets its own private vertex; for covers all 2-edges share one.

def phi1_map(e: Edge) -> Edge:
    if len(e) == 3:
        return e
    if len(e) == 2:
        return e | {UniformPad(e)}
    raise ValueError("uniformization is defined for edges of size 2 or 3")


def phi1_unmap(e: Edge) -> Edge:
    core = frozenset(v for v in e if not isinstance(v, UniformPad))
    if core == e:
        return e
    (pad,) = (v for v in e if isinstance(v, UniformPad))
    if pad.edge != core:
        raise ValueError("pad vertex does not match its edge")
    return core


def phi2_map(e: Edge) -> Edge:
    if len(e) == 3:
        return e
    if len(e) == 2:
        return e | {SharedPad()}
    raise ValueError("uniformization is defined for edges of size 2 or 3")


def phi2_unmap(e: Edge) -> Edge:
    core = frozenset(v for v in e if not isinstance(v, SharedPad))
    return core


# The gadgetized hypergraphs.  Hosts are base edges of size >= 2.

def _host_of_gadget_vertex(v) -> BaseEdge | None:
    if isinstance(v, (GadgetPlus, GadgetMinus)):
        return v.host
    return None


def gadget_edge_host(e: Edge, base: str) -> BaseEdge | None:
    """If e is an edge of the gadgetized hypergraph over `base`, return its
    host edge; otherwise None."""
    hosts = {_host_of_gadget_vertex(v) for v in e} - {None}
    if len(hosts) != 1:
        return None
    (host,) = hosts
    if len(host) < 2:
        return None
    if base == "h1star" and not catalogue.h1star_is_edge(host):
        return None
    if base == "h2star" and not catalogue.h2star_is_edge(host):
        return None
    g = build_gadget(host)
    return host if e in g.edges else None


def h1_is_edge(e: Edge) -> bool:
    return gadget_edge_host(e, "h1star") is not None


def h2_is_edge(e: Edge) -> bool:
    return gadget_edge_host(e, "h2star") is not None


def h2plus_is_edge(e: Iterable) -> bool:
    """Down-closure membership: nonempty subsets of gadgetized-cover edges."""
    s = frozenset(e)
    if not s or len(s) > 3:
        return False
    hosts = {_host_of_gadget_vertex(v) for v in s} - {None}
    if len(hosts) > 1:
        return False
    if hosts:
        (host,) = hosts
        if not all(isinstance(v, (Nat, GadgetPlus, GadgetMinus)) for v in s):
            return False
        g = build_gadget(host)
        return any(s <= edge for edge in g.edges)
    # Only ground vertices: a single one always lies in some outer edge;
    # two or more never do (outer edges hold one host vertex each).
    return len(s) == 1 and all(isinstance(v, Nat) for v in s)


def complement_is_edge(u, v) -> bool:
    """Edges of the complement graph: pairs that are not flag-complex edges."""
    if u == v:
        raise ValueError("not a pair: u == v")
    return not h2plus_is_edge({u, v})


def _gadgetized_edges_within(base: str, bound: int) -> list:
    out = []
    for host in catalogue.gadget_hosts_within(base, bound):
        out.extend(build_gadget(host).edges)
    return out


def _h2plus_edges_within(bound: int) -> list:
    seen = set()
    out = []
    for e in _gadgetized_edges_within("h2star", bound):
        for sub in _nonempty_subsets(e):
            if sub not in seen:
                seen.add(sub)
                out.append(sub)
    return out


def _nonempty_subsets(e: Edge):
    items = list(e)
    n = len(items)
    for mask in range(1, 1 << n):
        yield frozenset(items[i] for i in range(n) if mask & (1 << i))


def _complement_edges_within(bound: int) -> list:
    from .universe import truncation_window, vertex_key

    verts = sorted(truncation_window("h2", bound), key=vertex_key)
    out = []
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if complement_is_edge(u, v):
                out.append(frozenset({u, v}))
    return out


def hypergraph(tag: str):
    from .universe import IntensionalHypergraph, truncation_window

    if tag == "h1":
        return IntensionalHypergraph(
            "h1", h1_is_edge,
            lambda b: truncation_window("h1", b),
            lambda b: _gadgetized_edges_within("h1star", b),
        )
    if tag == "h2":
        return IntensionalHypergraph(
            "h2", h2_is_edge,
            lambda b: truncation_window("h2", b),
            lambda b: _gadgetized_edges_within("h2star", b),
        )
    if tag == "h2plus":
        return IntensionalHypergraph(
            "h2plus", h2plus_is_edge,
            lambda b: truncation_window("h2plus", b),
            _h2plus_edges_within,
        )
    if tag == "complement":
        return IntensionalHypergraph(
            "complement",
            lambda e: len(e) == 2 and complement_is_edge(*e),
            lambda b: truncation_window("complement", b),
            _complement_edges_within,
        )
    raise ValueError(f"unknown gadgetized construction: {tag}")
