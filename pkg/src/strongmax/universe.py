"""Vertex encodings and finite truncations of the catalogue hypergraphs.

All constructions live on one of two ground sets: the positive integers
(written Nat) or the positive-integer grid.  Gadgetized constructions add
private vertices to each host edge; those vertices carry their host edge in
the encoding, so disjointness between gadgets holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union

BaseEdge = tuple[int, ...]  # sorted tuple of positive integers


@dataclass(frozen=True)
class Nat:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Nat vertices are positive integers")


@dataclass(frozen=True)
class Grid:
    x: int
    y: int

    def __post_init__(self):
        if self.x < 1 or self.y < 1:
            raise ValueError("Grid vertices have positive coordinates")


@dataclass(frozen=True)
class GadgetPlus:
    """The i-th 'plus' vertex added to a host edge, 1 <= i <= k-1."""

    host: BaseEdge
    i: int

    def __post_init__(self):
        k = len(self.host)
        if not 1 <= self.i <= k - 1:
            raise ValueError(f"plus index {self.i} out of range for k={k}")


@dataclass(frozen=True)
class GadgetMinus:
    """The i-th 'minus' vertex added to a host edge, 2 <= i <= k."""

    host: BaseEdge
    i: int

    def __post_init__(self):
        k = len(self.host)
        if not 2 <= self.i <= k:
            raise ValueError(f"minus index {self.i} out of range for k={k}")


@dataclass(frozen=True)
class UniformPad:
    """Private padding vertex for one 2-edge (per-edge uniformization)."""

    edge: frozenset  # frozenset[Vertex], the padded 2-edge


@dataclass(frozen=True)
class SharedPad:
    """The single padding vertex shared by all 2-edges (cover uniformization)."""


Vertex = Union[Nat, Grid, GadgetPlus, GadgetMinus, UniformPad, SharedPad]
Edge = frozenset  # frozenset[Vertex]


def vertex_key(v: Vertex):
    """Total order on vertices; used for all canonical orderings."""
    if isinstance(v, Nat):
        return (0, v.n)
    if isinstance(v, Grid):
        return (1, v.x, v.y)
    if isinstance(v, GadgetPlus):
        return (2, v.host, 0, v.i)
    if isinstance(v, GadgetMinus):
        return (2, v.host, 1, v.i)
    if isinstance(v, UniformPad):
        return (3, edge_key(v.edge))
    if isinstance(v, SharedPad):
        return (4,)
    raise TypeError(f"not a vertex: {v!r}")


def edge_key(e: Iterable) -> tuple:
    """Lexicographic key on the sorted vertex keys of an edge."""
    return tuple(sorted(vertex_key(v) for v in e))


def make_edge(vertices: Iterable) -> Edge:
    e = frozenset(vertices)
    if not e:
        raise ValueError("empty edges are excluded")
    return e


def base_edge(members: Iterable[int]) -> BaseEdge:
    t = tuple(sorted(set(members)))
    if not t:
        raise ValueError("empty edges are excluded")
    if t[0] < 1:
        raise ValueError("base edges contain positive integers only")
    return t


def base_edge_key(e: BaseEdge):
    return (min(e), e)


def nat_edge(members: Iterable[int]) -> Edge:
    return make_edge(Nat(n) for n in members)


# JSON encoding.  Nat -> int; Grid -> [x, y]; gadget vertices ->
# {"host": [...], "role": "+"|"-", "i": n}; pads -> {"pad": <edge>} and
# {"pad": "shared"}.

def vertex_to_json(v: Vertex):
    if isinstance(v, Nat):
        return v.n
    if isinstance(v, Grid):
        return [v.x, v.y]
    if isinstance(v, GadgetPlus):
        return {"host": list(v.host), "role": "+", "i": v.i}
    if isinstance(v, GadgetMinus):
        return {"host": list(v.host), "role": "-", "i": v.i}
    if isinstance(v, UniformPad):
        return {"pad": edge_to_json(v.edge)}
    if isinstance(v, SharedPad):
        return {"pad": "shared"}
    raise TypeError(f"not a vertex: {v!r}")


def vertex_from_json(obj) -> Vertex:
    if isinstance(obj, bool):
        raise ValueError(f"not a vertex encoding: {obj!r}")
    if isinstance(obj, int):
        return Nat(obj)
    if isinstance(obj, list):
        if len(obj) != 2 or not all(isinstance(c, int) for c in obj):
            raise ValueError(f"not a vertex encoding: {obj!r}")
        return Grid(obj[0], obj[1])
    if isinstance(obj, dict):
        if "pad" in obj:
            if obj["pad"] == "shared":
                return SharedPad()
            return UniformPad(edge_from_json(obj["pad"]))
        if "host" in obj:
            host = base_edge(obj["host"])
            if obj["role"] == "+":
                return GadgetPlus(host, obj["i"])
            if obj["role"] == "-":
                return GadgetMinus(host, obj["i"])
    raise ValueError(f"not a vertex encoding: {obj!r}")


def edge_to_json(e: Iterable) -> list:
    return [vertex_to_json(v) for v in sorted(e, key=vertex_key)]


def edge_from_json(obj) -> Edge:
    if not isinstance(obj, list):
        raise ValueError(f"not an edge encoding: {obj!r}")
    return make_edge(vertex_from_json(v) for v in obj)


@dataclass(frozen=True)
class IntensionalHypergraph:
    """A possibly infinite hypergraph given by a membership predicate plus a
    bounded enumerator over truncation windows."""

    id: str
    is_edge: Callable[[Edge], bool]
    window: Callable[[int], frozenset]
    edges_within: Callable[[int], list]

    def incident_edges(self, v: Vertex, bound: int) -> list:
        return [e for e in self.edges_within(bound) if v in e]


def _check_bound(bound: int) -> None:
    if bound < 1:
        raise ValueError("bound must be >= 1")


def nat_window(bound: int) -> frozenset:
    _check_bound(bound)
    return frozenset(Nat(n) for n in range(1, bound + 1))


def grid_window(bound: int) -> frozenset:
    _check_bound(bound)
    return frozenset(
        Grid(x, y) for x in range(1, bound + 1) for y in range(1, bound + 1)
    )


def truncation_window(tag: str, bound: int) -> frozenset:
    """Window of the named construction: {1..b} for Nat universes,
    {1..b}^2 for the grid, and host window plus gadget vertices for the
    gadgetized constructions."""
    from . import catalogue, gadget  # late import; modules are siblings

    _check_bound(bound)
    if tag in ("h1star", "h2star", "covergraph", "vertexcover"):
        return nat_window(bound)
    if tag == "tardos":
        return grid_window(bound)
    if tag in ("h1", "h2", "h2plus", "complement"):
        base = "h1star" if tag == "h1" else "h2star"
        verts = set(nat_window(bound))
        for host in catalogue.gadget_hosts_within(base, bound):
            verts.update(gadget.build_gadget(host).vertices)
        return frozenset(verts)
    raise ValueError(f"unknown construction: {tag}")
