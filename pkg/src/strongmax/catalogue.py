"""The four base constructions: the min-sized-edge hypergraph on the
positive integers, the all-finite-subsets hypergraph, the doubling
vertex-cover graph, and the Gamma-shaped grid hypergraph."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .universe import (
    BaseEdge,
    Edge,
    Grid,
    IntensionalHypergraph,
    Nat,
    base_edge,
    grid_window,
    nat_edge,
    nat_window,
)


def h1star_is_edge(members: Iterable[int]) -> bool:
    """Edge iff nonempty and the size equals the minimum element."""
    s = set(members)
    return bool(s) and len(s) == min(s)


def h2star_is_edge(members: Iterable[int]) -> bool:
    """Every nonempty finite subset is an edge."""
    return bool(set(members))


def covergraph_is_edge(u: int, v: int) -> bool:
    """Pair {u, v} is an edge iff twice the smaller is at most the larger."""
    if u == v:
        raise ValueError("not a pair: u == v")
    return 2 * min(u, v) <= max(u, v)


@dataclass(frozen=True)
class TardosEdge:
    """A Gamma-shaped edge: a column of height y at x, joined to a
    horizontal arm from (x, y) to (2x, y)."""

    x: int
    y: int

    def __post_init__(self):
        if self.x < 1 or self.y < 1:
            raise ValueError("TardosEdge coordinates are positive")

    def points(self) -> frozenset:
        return tardos_edge_points(self.x, self.y)


def tardos_edge_points(x: int, y: int) -> frozenset:
    """The x + y grid points of the Gamma shape."""
    if x < 1 or y < 1:
        raise ValueError("coordinates must be >= 1")
    column = {Grid(x, j) for j in range(1, y + 1)}
    arm = {Grid(i, y) for i in range(x, 2 * x + 1)}
    return frozenset(column | arm)


def tardos_intersects(e: TardosEdge, f: TardosEdge) -> bool:
    """Closed-form point-set intersection test.

    Cases: shared column; column of one meets the arm of the other
    (arm at height y spans x..2x, so needs x <= x' <= 2x and y <= y');
    arms at equal height with overlapping x-intervals.
    """
    if e.x == f.x:
        return True
    if e.x <= f.x <= 2 * e.x and e.y <= f.y:
        return True
    if f.x <= e.x <= 2 * f.x and f.y <= e.y:
        return True
    if e.y == f.y and e.x <= 2 * f.x and f.x <= 2 * e.x:
        return True
    return False


def tardos_disjoint(e: TardosEdge, f: TardosEdge) -> bool:
    return not tardos_intersects(e, f)


def h1star_edges_within(bound: int) -> Iterator[BaseEdge]:
    """All edges with every member in {1..bound}, by increasing minimum."""
    for m in range(1, bound + 1):
        for rest in combinations(range(m + 1, bound + 1), m - 1):
            yield base_edge((m,) + rest)


def h2star_edges_within(bound: int) -> Iterator[BaseEdge]:
    for m in range(1, bound + 1):
        for size in range(1, bound - m + 2):
            for rest in combinations(range(m + 1, bound + 1), size - 1):
                yield base_edge((m,) + rest)


def tardos_edges_within(bound: int) -> Iterator[TardosEdge]:
    """Edges whose point set lies inside the bound x bound window,
    by increasing x."""
    for x in range(1, bound // 2 + 1):
        for y in range(1, bound + 1):
            yield TardosEdge(x, y)


def gadget_hosts_within(base: str, bound: int) -> list[BaseEdge]:
    """Host edges of the gadgetized constructions inside the window:
    base edges of size >= 2 (gadgets are undefined on singletons)."""
    if base == "h1star":
        it = h1star_edges_within(bound)
    elif base == "h2star":
        it = h2star_edges_within(bound)
    else:
        raise ValueError(f"no gadget hosts for {base}")
    return [e for e in it if len(e) >= 2]


def _nat_members(e: Edge) -> set[int] | None:
    out = set()
    for v in e:
        if not isinstance(v, Nat):
            return None
        out.add(v.n)
    return out


def _h1star_edge_pred(e: Edge) -> bool:
    m = _nat_members(e)
    return m is not None and h1star_is_edge(m)


def _h2star_edge_pred(e: Edge) -> bool:
    m = _nat_members(e)
    return m is not None and h2star_is_edge(m)


def _covergraph_edge_pred(e: Edge) -> bool:
    m = _nat_members(e)
    if m is None or len(m) != 2:
        return False
    u, v = sorted(m)
    return covergraph_is_edge(u, v)


def _tardos_edge_pred(e: Edge) -> bool:
    pts = set(e)
    if not pts or not all(isinstance(p, Grid) for p in pts):
        return False
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    x, y = min(xs), max(ys)
    return pts == set(tardos_edge_points(x, y))


def hypergraph(tag: str) -> IntensionalHypergraph:
    """Catalogue lookup by construction tag."""
    from . import gadget  # sibling module; late import avoids a cycle

    if tag == "h1star":
        return IntensionalHypergraph(
            "h1star",
            _h1star_edge_pred,
            nat_window,
            lambda b: [nat_edge(e) for e in h1star_edges_within(b)],
        )
    if tag == "h2star":
        return IntensionalHypergraph(
            "h2star",
            _h2star_edge_pred,
            nat_window,
            lambda b: [nat_edge(e) for e in h2star_edges_within(b)],
        )
    if tag == "covergraph":
        return IntensionalHypergraph(
            "covergraph",
            _covergraph_edge_pred,
            nat_window,
            lambda b: [
                nat_edge((u, v))
                for u in range(1, b + 1)
                for v in range(2 * u, b + 1)
            ],
        )
    if tag == "tardos":
        return IntensionalHypergraph(
            "tardos",
            _tardos_edge_pred,
            grid_window,
            lambda b: [e.points() for e in tardos_edges_within(b)],
        )
    if tag in ("h1", "h2", "h2plus", "complement"):
        return gadget.hypergraph(tag)
    raise ValueError(f"unknown construction: {tag}")


CONSTRUCTIONS = (
    "h1star",
    "h2star",
    "covergraph",
    "tardos",
    "h1",
    "h2",
    "h2plus",
    "complement",
)
