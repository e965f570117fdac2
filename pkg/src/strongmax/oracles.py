"""The seven constructive improvement procedures.

Each oracle takes a verified candidate object (matching, cover,
vertex-cover, or colouring) of one of the catalogue constructions and
returns a finite witness that strictly improves it, demonstrating that
no strongly maximal (resp. strongly minimal) object exists.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from . import gadget
from .catalogue import TardosEdge
from .gadget import MatchingState, build_gadget
from .objects import (
    CofiniteSet,
    ColouringByClasses,
    ExplicitFinite,
    GadgetMap,
    ImprovementWitness,
    Stream,
    verify_colouring,
    verify_cover_upto,
    verify_matching,
    verify_vertexcover,
)
from .universe import (
    BaseEdge,
    Nat,
    base_edge,
    base_edge_key,
    edge_key,
    vertex_key,
)


class OracleError(ValueError):
    """Oracle precondition failure."""


DEFAULT_PROBE = 8


# --- The min-sized-edge hypergraph: no strongly maximal matching -----------

def _h1star_extend_edge(edges: Iterable[BaseEdge]) -> BaseEdge:
    """A fresh edge {m..2m-1} disjoint from everything seen, m at least 3."""
    used = [v for e in edges for v in e]
    m = max(3, max(used, default=2) + 1)
    return base_edge(range(m, 2 * m))


def _h1star_split(e1: BaseEdge, e2: BaseEdge) -> tuple[BaseEdge, ...]:
    """Split the union of two matching edges into three, the i-th keeping
    the i-th smallest element of e1 as its minimum and filling ascending."""
    v1, v2, v3 = sorted(e1)[:3]
    pool = sorted((set(e1) | set(e2)) - {v1, v2, v3})
    out = []
    at = 0
    for v in (v1, v2, v3):
        out.append(base_edge([v] + pool[at:at + v - 1]))
        at += v - 1
    return tuple(out)


def _h1star_improvement_steps(
    edges: Iterator[BaseEdge], finite: bool
) -> tuple[frozenset, frozenset]:
    """Core improvement at the ground level: extend a finite matching by a
    fresh edge; for an infinite one, replace two suitable edges by three."""
    if finite:
        return frozenset(), frozenset({_h1star_extend_edge(edges)})
    e1 = None
    for e in edges:
        if e1 is None:
            if min(e) >= 3:
                e1 = e
            continue
        v1, v2, v3 = sorted(e1)[:3]
        if min(e) >= v2 + v3:
            return frozenset({e1, e}), frozenset(_h1star_split(e1, e))
    raise OracleError("stream exhausted while declared infinite")


def improve_matching_h1star(
    m: ExplicitFinite | Stream, probe_bound: int = DEFAULT_PROBE
) -> ImprovementWitness:
    if not verify_matching(m, probe_bound):
        raise OracleError("input does not verify as a matching")
    if isinstance(m, ExplicitFinite):
        removed, added = _h1star_improvement_steps(iter(m.edges), finite=True)
    elif isinstance(m, Stream):
        removed, added = _h1star_improvement_steps(m.iter_edges(), finite=False)
    else:
        raise OracleError("unsupported presentation class")
    return ImprovementWitness(removed, added, "maximize")


# --- The all-subsets hypergraph: no strongly minimal edge-cover ------------

def _first_two(edges: Iterator[BaseEdge]) -> tuple[BaseEdge, BaseEdge]:
    first = list(itertools.islice(edges, 2))
    if len(first) < 2:
        raise OracleError("cover presents fewer than two edges")
    return first[0], first[1]


def improve_edgecover_h2star(
    c: ExplicitFinite | Stream, probe_bound: int = DEFAULT_PROBE
) -> ImprovementWitness:
    if not verify_cover_upto(c, probe_bound):
        raise OracleError("input does not verify as a cover")
    if isinstance(c, ExplicitFinite):
        it = iter(sorted(c.edges, key=base_edge_key))
        contains = lambda e: e in c.edges
    elif isinstance(c, Stream):
        it = c.iter_edges()
        contains = c.contains
    else:
        raise OracleError("unsupported presentation class")
    e1, e2 = _first_two(it)
    union = base_edge(set(e1) | set(e2))
    if union in (e1, e2):
        # nested edges: dropping the smaller one loses no coverage
        smaller = e1 if union == e2 else e2
        return ImprovementWitness(frozenset({smaller}), frozenset(), "minimize")
    added = frozenset() if contains(union) else frozenset({union})
    return ImprovementWitness(frozenset({e1, e2}), added, "minimize")


# --- Gadgetized matchings ---------------------------------------------------

def _merge_hosts(*sources: Iterable[BaseEdge]) -> Iterator[BaseEdge]:
    """Merge host iterators already sorted by canonical key, dropping
    duplicates."""
    import heapq

    last = None
    for host in heapq.merge(*sources, key=base_edge_key):
        if host != last:
            yield host
        last = host


def _matching_mstar_iter(p: GadgetMap) -> Iterator[BaseEdge]:
    """Hosts whose gadget carries exactly its outer edges, by canonical key."""
    ov = p.overrides_dict()
    ov_outer = sorted(
        (
            h
            for h, edges in ov.items()
            if gadget.classify_matching_part(build_gadget(h), edges)
            is MatchingState.OUTER_EXACT
        ),
        key=base_edge_key,
    )
    if p.schema == "inner_all":
        return iter(ov_outer)
    stream_hosts = (h for h in p.base.iter_edges() if h not in ov)
    return _merge_hosts(stream_hosts, ov_outer)


def _gadget_plan_witness(
    p: GadgetMap, plan: dict[BaseEdge, frozenset]
) -> ImprovementWitness:
    """Turn a host -> target-edge-set plan into a removed/added witness."""
    removed: set = set()
    added: set = set()
    for host, target in plan.items():
        cur = p.gadget_edges(host)
        removed.update(cur - target)
        added.update(target - cur)
    direction = "maximize" if p.kind == "matching" else "minimize"
    return ImprovementWitness(frozenset(removed), frozenset(added), direction)


def improve_matching_h1(
    p: GadgetMap, probe_bound: int = DEFAULT_PROBE
) -> ImprovementWitness:
    if p.construction != "h1" or p.kind != "matching":
        raise OracleError("expected a gadget-map matching over h1")
    if not verify_matching(p, probe_bound):
        raise OracleError("input does not verify as a matching")

    # Phase 1: a gadget holding fewer than k-1 edges is fixed locally by
    # its inner edges, a strict gain all by itself.
    for host, edges in sorted(
        p.overrides_dict().items(), key=lambda kv: base_edge_key(kv[0])
    ):
        g = build_gadget(host)
        state = gadget.classify_matching_part(g, edges)
        if state is MatchingState.DEFICIENT:
            return _gadget_plan_witness(p, {host: g.inner_set})

    # Phase 2: improve the induced ground matching and replay the change
    # gadget by gadget.
    finite = p.schema == "inner_all"
    removed_b, added_b = _h1star_improvement_steps(
        _matching_mstar_iter(p), finite=finite
    )

    plan: dict[BaseEdge, frozenset] = {}
    for host in removed_b:
        plan[host] = build_gadget(host).inner_set
    for host in added_b:
        plan[host] = build_gadget(host).outer_set
    # Gadgets whose selected edges meet a vertex of the new ground edges
    # must release it: they switch to their inner edges.
    for u in sorted({v for e in added_b for v in e}):
        for host in p.hosts_covering(u):
            if host not in plan:
                plan[host] = build_gadget(host).inner_set
    return _gadget_plan_witness(p, plan)


# --- Gadgetized covers -------------------------------------------------------

def _cover_cstar_iter(p: GadgetMap) -> Iterator[BaseEdge]:
    """Hosts whose gadget carries at least one outer edge, by canonical key."""
    ov = p.overrides_dict()
    ov_outer = sorted(
        (
            h
            for h, edges in ov.items()
            if edges & build_gadget(h).outer_set
        ),
        key=base_edge_key,
    )
    if p.schema == "inner_all":
        return iter(ov_outer)
    stream_hosts = (h for h in p.base.iter_edges() if h not in ov)
    return _merge_hosts(stream_hosts, ov_outer)


def _cstar_contains(p: GadgetMap, host: BaseEdge) -> bool:
    return bool(p.gadget_edges(host) & build_gadget(host).outer_set)


def _cstar_hosts_containing(p: GadgetMap, u: int) -> list[BaseEdge]:
    """All induced ground-cover hosts containing u; complete because host
    edges containing u have minimum at most u and enumeration is monotone."""
    out = []
    for host in _cover_cstar_iter(p):
        if min(host) > u:
            break
        if u in host:
            out.append(host)
    return out


def improve_edgecover_h2(
    p: GadgetMap, probe_bound: int = DEFAULT_PROBE
) -> ImprovementWitness:
    if p.construction != "h2" or p.kind != "cover":
        raise OracleError("expected a gadget-map cover over h2")
    if not verify_cover_upto(p, probe_bound):
        raise OracleError("input does not verify as a cover")

    # Phase 1: an oversized gadget is replaced by its outer edges, which
    # cover the whole gadget with only k edges.
    for host, edges in sorted(
        p.overrides_dict().items(), key=lambda kv: base_edge_key(kv[0])
    ):
        g = build_gadget(host)
        state = gadget.classify_cover_part(g, edges)
        if state is gadget.CoverState.OVERSIZED:
            return _gadget_plan_witness(p, {host: g.outer_set})
        if state is gadget.CoverState.EXACTLY_K_NO_OUTER:
            return _gadget_plan_witness(p, {host: g.inner_set})

    # Phase 2: merge the first two edges of the induced ground cover and
    # replay the change gadget by gadget.
    e1, e2 = _first_two(_cover_cstar_iter(p))
    union = base_edge(set(e1) | set(e2))
    if union in (e1, e2):
        # nested hosts: the smaller gadget alone leaves the ground cover
        removed_b = (e1 if union == e2 else e2,)
        added_b = ()
    else:
        removed_b = (e1, e2)
        added_b = () if _cstar_contains(p, union) else (union,)

    plan: dict[BaseEdge, frozenset] = {}
    for host in removed_b:
        plan[host] = build_gadget(host).inner_set
    for host in added_b:
        plan[host] = build_gadget(host).outer_set
    # Ground vertices uncovered by the switch to inner edges are handed to
    # their covering edge in the improved ground cover; if that edge's
    # gadget is kept, it must switch to its outer edges.
    for u in sorted(set().union(*removed_b)):
        dstar_at_u = [
            h
            for h in _cstar_hosts_containing(p, u)
            if h not in removed_b
        ]
        if u in union:
            dstar_at_u.append(union)
        e_v = min(dstar_at_u, key=base_edge_key)
        if _cstar_contains(p, e_v) and e_v not in plan:
            plan[e_v] = build_gadget(e_v).outer_set
    return _gadget_plan_witness(p, plan)


# --- Colourings of the complement graph -------------------------------------

def _lift_class(chi: ColouringByClasses, cls: frozenset) -> frozenset:
    """Extend a flag-complex class to the least gadget edge containing it."""
    host = gadget.gadget_edge_host(cls, "h2star")
    if host is not None:
        return cls  # already a gadget edge
    gadget_vs = [v for v in cls if not isinstance(v, Nat)]
    if gadget_vs:
        host = gadget._host_of_gadget_vertex(gadget_vs[0])
        cands = [e for e in build_gadget(host).edges if cls <= e]
    else:
        (v,) = cls
        cands = []
        for host in chi.base.hosts_covering(v.n) if chi.base else []:
            cands.extend(
                e for e in build_gadget(host).edges if v in e
            )
        if not cands:
            # Any two-element host works; pick the least.
            host = base_edge({v.n, v.n + 1} if v.n > 1 else {1, 2})
            cands = [e for e in build_gadget(host).edges if v in e]
    if not cands:
        raise OracleError("class does not extend to a gadget edge")
    return min(cands, key=edge_key)


def _singleton_merge(chi: ColouringByClasses) -> ImprovementWitness:
    """For one-colour-per-vertex colourings: merge the two private
    vertices of some gadget's first inner edge into one class."""
    n = 1
    while True:
        host = base_edge((n, n + 1))
        g = build_gadget(host)
        inner = g.inner_edges[0]
        a, b = sorted(inner, key=vertex_key)
        ca, cb = frozenset({a}), frozenset({b})
        if chi.has_class(ca) and chi.has_class(cb) and not chi.has_class(inner):
            return ImprovementWitness(
                frozenset({ca, cb}), frozenset({inner}), "minimize"
            )
        n += 1
        if n > 10_000:
            raise OracleError("no mergeable singleton classes found")


def improve_colouring(
    chi: ColouringByClasses, probe_bound: int = 6
) -> ImprovementWitness:
    if not verify_colouring(chi, probe_bound):
        raise OracleError("input does not verify as a colouring")
    if chi.base is None:
        return _singleton_merge(chi)

    # Lift every class to a gadget edge; the lifts form an edge-cover of
    # the gadgetized construction presented over the same base schema.
    plus_lifts = {cls: _lift_class(chi, cls) for cls in chi.plus}
    cover = chi.base
    touched_hosts = set()
    for cls in chi.minus:
        touched_hosts.add(gadget.gadget_edge_host(cls, "h2star"))
    for lift in plus_lifts.values():
        touched_hosts.add(gadget.gadget_edge_host(lift, "h2star"))
    for host in sorted(touched_hosts, key=base_edge_key):
        edges = set(cover.gadget_edges(host))
        edges -= {c for c in chi.minus if c in edges}
        edges |= {e for e in plus_lifts.values()
                  if gadget.gadget_edge_host(e, "h2star") == host}
        cover = cover.with_override(host, frozenset(edges))

    w_cover = improve_edgecover_h2(cover, probe_bound)

    # Classes whose lift was removed lose their colour.
    removed_classes = set()
    for cls, lift in plus_lifts.items():
        if lift in w_cover.removed:
            removed_classes.add(cls)
    removed_hosts = {
        gadget.gadget_edge_host(e, "h2star") for e in w_cover.removed
    }
    for host in removed_hosts:
        for e in chi.base.gadget_edges(host):
            if e in w_cover.removed and chi.has_class(e):
                removed_classes.add(e)
    if not removed_classes:
        raise OracleError("cover witness does not touch any class")

    # Recolour each lost vertex into the least new cover edge containing
    # it, falling back to extending a surviving class when necessary.
    new_classes: dict[frozenset, set] = {}
    extended: dict[frozenset, set] = {}
    for cls in removed_classes:
        for v in cls:
            targets = sorted(
                (e for e in w_cover.added if v in e), key=edge_key
            )
            if targets:
                new_classes.setdefault(targets[0], set()).add(v)
                continue
            # v stays covered by a surviving lift: extend the class behind
            # that lift by v (still inside one gadget edge, so independent).
            cands = []
            for e in _kept_lift_edges(cover, w_cover, v):
                for cls2, lift in plus_lifts.items():
                    if lift == e and cls2 not in removed_classes:
                        cands.append(cls2)
                if chi.has_class(e) and e not in removed_classes:
                    cands.append(e)
            if not cands:
                raise OracleError("no recolouring target for a lost vertex")
            extended.setdefault(min(cands, key=edge_key), set()).add(v)

    removed = set(removed_classes) | set(extended)
    added = {frozenset(vs) for vs in new_classes.values()}
    added |= {cls | frozenset(vs) for cls, vs in extended.items()}
    return ImprovementWitness(frozenset(removed), frozenset(added), "minimize")


def _kept_lift_edges(cover, w_cover, v) -> list:
    host = gadget._host_of_gadget_vertex(v)
    hosts = [host] if host else cover.hosts_covering(v.n)
    out = []
    for h in hosts:
        for e in cover.gadget_edges(h):
            if v in e and e not in w_cover.removed:
                out.append(e)
    return out


# --- Vertex-covers of the doubling graph ------------------------------------

def improve_vertexcover(a: CofiniteSet) -> ImprovementWitness:
    if not verify_vertexcover(a):
        raise OracleError("input does not verify as a vertex-cover")
    comp = sorted(a.complement)
    if not comp:
        return ImprovementWitness(frozenset({1}), frozenset(), "minimize")
    x, y = comp[0], comp[-1]
    return ImprovementWitness(
        frozenset({y + 1, y + 2}), frozenset({x}), "minimize"
    )


# --- The Gamma-shaped grid hypergraph ----------------------------------------

def _tardos_pick(edges: Iterator[TardosEdge], finite: bool) -> TardosEdge | None:
    """The first edge (by x) whose successor is at least as tall; for finite
    inputs, the last edge plays its own successor."""
    prev = None
    for e in edges:
        if prev is not None and e.y >= prev.y:
            return prev
        prev = e
    if not finite:
        raise OracleError("stream exhausted while declared infinite")
    return prev


def improve_matching_tardos(
    m: ExplicitFinite | Stream, probe_bound: int = DEFAULT_PROBE
) -> ImprovementWitness:
    if not verify_matching(m, probe_bound):
        raise OracleError("input does not verify as a matching")
    if isinstance(m, ExplicitFinite):
        it = iter(sorted(m.edges, key=lambda e: (e.x, e.y)))
        picked = _tardos_pick(it, finite=True)
    elif isinstance(m, Stream):
        picked = _tardos_pick(m.iter_edges(), finite=False)
    else:
        raise OracleError("unsupported presentation class")
    if picked is None:
        return ImprovementWitness(
            frozenset(), frozenset({TardosEdge(1, 1)}), "maximize"
        )
    # Successor height; for the sentinel case the edge is its own successor.
    succ_y = _tardos_successor_height(m, picked)
    f1 = TardosEdge(2 * picked.x - 1, succ_y + 2)
    f2 = TardosEdge(2 * picked.x, succ_y + 1)
    return ImprovementWitness(
        frozenset({picked}), frozenset({f1, f2}), "maximize"
    )


def _tardos_successor_height(m, picked: TardosEdge) -> int:
    it = (
        iter(sorted(m.edges, key=lambda e: (e.x, e.y)))
        if isinstance(m, ExplicitFinite)
        else m.iter_edges()
    )
    prev = None
    for e in it:
        if prev == picked:
            return e.y
        prev = e
    return picked.y  # sentinel: last edge uses its own height


IMPROVERS = {
    "h1star": improve_matching_h1star,
    "h2star": improve_edgecover_h2star,
    "h1": improve_matching_h1,
    "h2": improve_edgecover_h2,
    "colouring": improve_colouring,
    "vertexcover": lambda p, probe_bound=DEFAULT_PROBE: improve_vertexcover(p),
    "tardos": improve_matching_tardos,
}


def improve(p, probe_bound: int = DEFAULT_PROBE) -> ImprovementWitness:
    """Dispatch on the presentation's construction tag."""
    try:
        fn = IMPROVERS[p.construction]
    except (AttributeError, KeyError):
        raise OracleError(f"no oracle for {getattr(p, 'construction', p)!r}")
    return fn(p, probe_bound=probe_bound)
