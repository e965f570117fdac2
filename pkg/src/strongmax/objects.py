"""Finite presentations of possibly infinite matchings, covers, and
colourings, together with verification, witness application, and delta
comparison.

Presentation variants:

* ``ExplicitFinite`` -- a finite edge list.
* ``Stream`` -- a named infinite generator in canonical order, patched by
  finite ``minus``/``plus`` edge sets.
* ``GadgetMap`` -- for the gadgetized constructions: a base schema
  (inner edges everywhere, or outer edges on the gadgets of a host
  stream and inner elsewhere) plus finitely many per-gadget overrides.
* ``CofiniteSet`` -- a vertex-cover of the doubling graph given by its
  finite complement.
* ``ColouringByClasses`` -- colour classes of the complement graph:
  a schema (the gadget-map cover classes, or one singleton class per
  vertex) patched by finite removed/added class sets.

Edges are typed per construction: sorted integer tuples for the ground
hypergraphs, ``TardosEdge`` for the grid construction, and frozensets of
vertices for the gadgetized ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterator

from . import catalogue, gadget
from .catalogue import TardosEdge, tardos_disjoint
from .universe import (
    BaseEdge,
    Edge,
    Nat,
    base_edge,
    base_edge_key,
    edge_from_json,
    edge_key,
    edge_to_json,
)


class PresentationError(ValueError):
    """Malformed presentation or witness."""


# Per-construction edge handling -------------------------------------------

def edge_sort_key(construction: str, e):
    if construction in ("h1star", "h2star"):
        return base_edge_key(e)
    if construction == "tardos":
        return (e.x, e.y)
    return edge_key(e)


def edge_is_valid(construction: str, e) -> bool:
    if construction == "h1star":
        return isinstance(e, tuple) and catalogue.h1star_is_edge(e)
    if construction == "h2star":
        return isinstance(e, tuple) and catalogue.h2star_is_edge(e)
    if construction == "tardos":
        return isinstance(e, TardosEdge)
    if construction == "h1":
        return gadget.h1_is_edge(e)
    if construction == "h2":
        return gadget.h2_is_edge(e)
    raise PresentationError(f"unknown construction: {construction}")


def edges_disjoint(construction: str, e, f) -> bool:
    if construction == "tardos":
        return tardos_disjoint(e, f)
    return not (frozenset(e) & frozenset(f))


def obj_edge_to_json(construction: str, e):
    if construction in ("h1star", "h2star"):
        return list(e)
    if construction == "tardos":
        return {"x": e.x, "y": e.y}
    return edge_to_json(e)


def obj_edge_from_json(construction: str, obj):
    if construction in ("h1star", "h2star"):
        return base_edge(obj)
    if construction == "tardos":
        if isinstance(obj, dict):
            return TardosEdge(obj["x"], obj["y"])
        if isinstance(obj, (list, tuple)) and len(obj) == 2:
            return TardosEdge(obj[0], obj[1])
        raise PresentationError(f"bad tardos edge: {obj!r}")
    return edge_from_json(obj)


# Stream generators ---------------------------------------------------------

def _gen_h1star_doubling(params) -> Iterator[BaseEdge]:
    m = int(params.get("start", 3))
    if m < 3:
        raise PresentationError("doubling stream starts at 3 or above")
    while True:
        yield base_edge(range(m, 2 * m))
        m = 2 * m


def _gen_h2star_blocks(params) -> Iterator[BaseEdge]:
    size = int(params.get("size", 2))
    if size < 1:
        raise PresentationError("block size must be >= 1")
    lo = 1
    while True:
        yield base_edge(range(lo, lo + size))
        lo += size


def _gen_h2star_singletons(params) -> Iterator[BaseEdge]:
    n = 1
    while True:
        yield (n,)
        n += 1


def _gen_tardos_geometric(params) -> Iterator[TardosEdge]:
    y1 = int(params.get("y1", 1))
    x, i = 1, 0
    while True:
        yield TardosEdge(x, max(y1 - i, 1))
        x = 4 * x + 1
        i += 1


GENERATORS = {
    ("h1star", "doubling"): _gen_h1star_doubling,
    ("h2star", "blocks"): _gen_h2star_blocks,
    ("h2star", "singletons"): _gen_h2star_singletons,
    ("tardos", "geometric"): _gen_tardos_geometric,
}


# Presentation variants -----------------------------------------------------

@dataclass(frozen=True)
class ExplicitFinite:
    construction: str
    kind: str  # "matching" | "cover"
    edges: frozenset


@dataclass(frozen=True)
class Stream:
    """Infinite named generator patched by finite minus/plus edge sets.
    Enumeration is monotone in the construction's canonical key, which
    makes bounded point queries complete."""

    construction: str
    kind: str
    generator: str
    params: tuple = ()  # sorted (key, value) pairs, hashable
    minus: frozenset = frozenset()
    plus: frozenset = frozenset()

    def params_dict(self) -> dict:
        return dict(self.params)

    def raw_iter(self) -> Iterator:
        try:
            fn = GENERATORS[(self.construction, self.generator)]
        except KeyError:
            raise PresentationError(
                f"unknown generator {self.generator!r} for {self.construction}"
            )
        return fn(self.params_dict())

    def iter_edges(self) -> Iterator:
        key = lambda e: edge_sort_key(self.construction, e)
        pending = sorted(self.plus, key=key)
        j = 0
        for e in self.raw_iter():
            while j < len(pending) and key(pending[j]) <= key(e):
                if pending[j] != e:
                    yield pending[j]
                j += 1
            if e not in self.minus:
                yield e

    def contains(self, e) -> bool:
        if e in self.plus:
            return True
        if e in self.minus:
            return False
        return self._generated(e)

    def _generated(self, e) -> bool:
        key = edge_sort_key(self.construction, e)
        for g in self.raw_iter():
            gk = edge_sort_key(self.construction, g)
            if g == e:
                return True
            if gk > key:
                return False


@dataclass(frozen=True)
class GadgetMap:
    """Per-gadget edge choice over a gadgetized construction.

    ``schema`` is ``"inner_all"`` or ``"outer_on"``; in the latter case
    ``base`` is a Stream of host edges (of the underlying ground
    construction) whose gadgets take their outer edges, all others
    taking inner.  ``overrides`` maps finitely many hosts to explicit
    gadget-edge subsets.
    """

    construction: str  # "h1" | "h2"
    kind: str          # "matching" | "cover"
    schema: str        # "inner_all" | "outer_on"
    base: Stream | None = None
    overrides: tuple = ()  # sorted ((host, frozenset(edges)), ...)

    def __post_init__(self):
        if self.schema not in ("inner_all", "outer_on"):
            raise PresentationError(f"unknown schema {self.schema!r}")
        if (self.schema == "outer_on") != (self.base is not None):
            raise PresentationError("outer_on schema requires a base stream")

    @property
    def base_construction(self) -> str:
        return "h1star" if self.construction == "h1" else "h2star"

    def overrides_dict(self) -> dict:
        return dict(self.overrides)

    def schema_edges(self, host: BaseEdge) -> frozenset:
        g = gadget.build_gadget(host)
        if self.schema == "outer_on" and self.base.contains(host):
            return g.outer_set
        return g.inner_set

    def gadget_edges(self, host: BaseEdge) -> frozenset:
        ov = self.overrides_dict()
        if host in ov:
            return ov[host]
        return self.schema_edges(host)

    def with_override(self, host: BaseEdge, edges: frozenset) -> "GadgetMap":
        ov = self.overrides_dict()
        if edges == self.schema_edges(host):
            ov.pop(host, None)
        else:
            ov[host] = frozenset(edges)
        items = tuple(sorted(ov.items(), key=lambda kv: base_edge_key(kv[0])))
        return replace(self, overrides=items)

    def hosts_covering(self, u: int) -> list[BaseEdge]:
        """Hosts whose selected edges include one containing ground vertex u.
        Complete: any host edge containing u has min <= u, and the base
        stream is monotone in min."""
        found = []
        ov = self.overrides_dict()
        for host, edges in ov.items():
            if u in host and any(Nat(u) in e for e in edges):
                found.append(host)
        if self.schema == "outer_on":
            for host in self.base.iter_edges():
                if min(host) > u:
                    break
                if u in host and host not in ov and len(host) >= 2:
                    found.append(host)  # outer edges cover all host vertices
        return sorted(found, key=base_edge_key)

    def covering_edges(self, u: int) -> list:
        out = []
        for host in self.hosts_covering(u):
            out.extend(e for e in self.gadget_edges(host) if Nat(u) in e)
        return sorted(out, key=edge_key)


@dataclass(frozen=True)
class CofiniteSet:
    """Vertex-cover of the doubling graph, given by its finite complement."""

    complement: frozenset  # frozenset[int]
    construction: str = "vertexcover"
    kind: str = "vertexcover"

    def __post_init__(self):
        if any(not isinstance(n, int) or n < 1 for n in self.complement):
            raise PresentationError("complement members are positive integers")


@dataclass(frozen=True)
class ColouringByClasses:
    """Colour classes of the complement graph: a class schema patched by
    finite removed/added class sets.  Classes are flag-complex edges."""

    base: GadgetMap | None  # cover-schema classes, or None for singletons
    minus: frozenset = frozenset()  # frozenset[frozenset[Vertex]]
    plus: frozenset = frozenset()
    construction: str = "colouring"
    kind: str = "colouring"

    def __post_init__(self):
        if self.base is not None and (
            self.base.construction != "h2" or self.base.kind != "cover"
        ):
            raise PresentationError("colouring base must be a cover map over h2")

    def is_base_class(self, cls: frozenset) -> bool:
        if self.base is None:
            if len(cls) != 1:
                return False
            (v,) = cls
            return gadget.h2plus_is_edge({v})
        host = gadget.gadget_edge_host(cls, "h2star")
        if host is None:
            return False
        return cls in self.base.gadget_edges(host)

    def has_class(self, cls: frozenset) -> bool:
        if cls in self.plus:
            return True
        if cls in self.minus:
            return False
        return self.is_base_class(cls)

    def classes_of_vertex(self, v) -> list:
        """All current classes containing v (complete: base classes
        containing v are computable per gadget)."""
        out = [c for c in self.plus if v in c]
        cands = []
        if self.base is None:
            cands = [frozenset({v})]
        else:
            if isinstance(v, Nat):
                for host in self.base.hosts_covering(v.n):
                    cands.extend(
                        e for e in self.base.gadget_edges(host) if v in e
                    )
            else:
                host = gadget._host_of_gadget_vertex(v)
                if host is not None:
                    cands.extend(
                        e for e in self.base.gadget_edges(host) if v in e
                    )
        for c in cands:
            if c not in self.minus and c not in self.plus:
                out.append(c)
        return sorted(set(out), key=edge_key)


Presentation = ExplicitFinite | Stream | GadgetMap | CofiniteSet | ColouringByClasses


@dataclass(frozen=True)
class ImprovementWitness:
    """Finite (removed, added) pair whose application strictly improves
    the object: more added than removed for matchings, fewer for covers,
    vertex-covers, and colourings."""

    removed: frozenset
    added: frozenset
    direction: str  # "maximize" | "minimize"

    def __post_init__(self):
        if self.removed & self.added:
            raise PresentationError("witness removed and added sets overlap")
        if self.direction not in ("maximize", "minimize"):
            raise PresentationError(f"bad direction {self.direction!r}")

    @property
    def delta(self) -> tuple[int, int]:
        return (len(self.removed), len(self.added))


# Verification --------------------------------------------------------------

def _pull_window_edges(p: Stream, bound: int) -> list:
    """All stream edges intersecting the truncation window, plus a monotone
    key check on what was pulled."""
    out = []
    last = None
    for e in p.iter_edges():
        k = edge_sort_key(p.construction, e)
        if last is not None and k <= last:
            raise PresentationError("stream order is not strictly monotone")
        last = k
        if p.construction == "tardos":
            if e.x > bound:
                break
        else:
            if min(e) > bound:
                break
        out.append(e)
    return out


def verify_matching(p: Presentation, probe_bound: int = 8) -> bool:
    """Exact matching check for explicit presentations; for streams and
    gadget maps, exact on all edges intersecting the probe window plus
    schema-level consistency."""
    if isinstance(p, ExplicitFinite):
        edges = sorted(p.edges, key=lambda e: edge_sort_key(p.construction, e))
        if not all(edge_is_valid(p.construction, e) for e in edges):
            return False
        return all(
            edges_disjoint(p.construction, e, f)
            for e, f in itertools.combinations(edges, 2)
        )
    if isinstance(p, Stream):
        window = _pull_window_edges(p, probe_bound)
        if not all(edge_is_valid(p.construction, e) for e in window):
            return False
        return all(
            edges_disjoint(p.construction, e, f)
            for e, f in itertools.combinations(window, 2)
        )
    if isinstance(p, GadgetMap):
        if p.kind != "matching" or p.construction != "h1":
            raise PresentationError("not a matching presentation")
        for host, edges in p.overrides_dict().items():
            if not catalogue.h1star_is_edge(host) or len(host) < 2:
                return False
            g = gadget.build_gadget(host)
            if not edges <= frozenset(g.edges):
                return False
            if not gadget.is_matching(edges):
                return False
        if p.schema == "outer_on":
            base_hosts = _pull_window_edges(p.base, probe_bound)
            ov = p.overrides_dict()
            active = [h for h in base_hosts if h not in ov]
            if not all(
                catalogue.h1star_is_edge(h) and len(h) >= 2 for h in active
            ):
                return False
            if not all(
                not (set(a) & set(b))
                for a, b in itertools.combinations(active, 2)
            ):
                return False
        # No ground vertex may lie in selected edges of two gadgets.
        probe = set(range(1, probe_bound + 1))
        for host in p.overrides_dict():
            probe.update(host)
        for u in sorted(probe):
            if len(p.covering_edges(u)) > 1:
                return False
        return True
    raise PresentationError(f"not a matching presentation: {type(p).__name__}")


def verify_cover_upto(p: Presentation, bound: int = 8) -> bool:
    """Every vertex of the truncation window is covered; for gadget maps,
    per-gadget added-vertex coverage is checked exactly."""
    if isinstance(p, ExplicitFinite):
        if p.construction not in ("h1star", "h2star"):
            raise PresentationError("explicit covers live on the ground sets")
        if not all(edge_is_valid(p.construction, e) for e in p.edges):
            return False
        covered = set()
        for e in p.edges:
            covered.update(e)
        return set(range(1, bound + 1)) <= covered
    if isinstance(p, Stream):
        window = _pull_window_edges(p, bound)
        if not all(edge_is_valid(p.construction, e) for e in window):
            return False
        covered = set()
        for e in window:
            covered.update(e)
        return set(range(1, bound + 1)) <= covered
    if isinstance(p, GadgetMap):
        if p.kind != "cover" or p.construction != "h2":
            raise PresentationError("not a cover presentation")
        for host, edges in p.overrides_dict().items():
            if len(host) < 2:
                return False
            g = gadget.build_gadget(host)
            if not edges <= frozenset(g.edges):
                return False
            try:
                state = gadget.classify_cover_part(g, edges)
            except ValueError:
                return False
            if state is gadget.CoverState.INVALID:
                return False
        for u in range(1, bound + 1):
            if not p.covering_edges(u):
                return False
        return True
    raise PresentationError(f"not a cover presentation: {type(p).__name__}")


def verify_vertexcover(a: CofiniteSet) -> bool:
    """Cofinite vertex set covers every doubling edge iff its complement
    is independent: 2u > v for all u < v in the complement."""
    comp = sorted(a.complement)
    return all(
        2 * u > v for u, v in itertools.combinations(comp, 2)
    )


def verify_colouring(chi: ColouringByClasses, bound: int = 6) -> bool:
    """Classes are flag-complex edges (independent in the complement
    graph), pairwise disjoint, and jointly cover the truncation window."""
    from .universe import truncation_window

    for cls in chi.minus:
        if not chi.is_base_class(cls):
            return False
    for cls in chi.plus:
        if not gadget.h2plus_is_edge(cls):
            return False
    touched = set()
    for cls in chi.plus | chi.minus:
        touched.update(cls)
    verts = truncation_window("h2", bound) | touched
    for v in sorted(verts, key=lambda v: edge_key([v])):
        if len(chi.classes_of_vertex(v)) != 1:
            return False
    return True


def verify_presentation(p: Presentation, bound: int = 8) -> bool:
    """Kind dispatch over the four verifiers."""
    if isinstance(p, CofiniteSet):
        return verify_vertexcover(p)
    if isinstance(p, ColouringByClasses):
        return verify_colouring(p, bound)
    if p.kind == "matching":
        return verify_matching(p, bound)
    if p.kind == "cover":
        return verify_cover_upto(p, bound)
    raise PresentationError(f"unknown kind {p.kind!r}")


# Witness application and delta ---------------------------------------------

def apply_witness(p: Presentation, w: ImprovementWitness) -> Presentation:
    """Apply a witness, checking its preconditions: removed edges must be
    presented, added edges must not be."""
    if isinstance(p, ExplicitFinite):
        if not w.removed <= p.edges:
            raise PresentationError("witness removes an edge not presented")
        if w.added & p.edges:
            raise PresentationError("witness adds an edge already presented")
        return replace(p, edges=(p.edges - w.removed) | w.added)
    if isinstance(p, Stream):
        minus, plus = set(p.minus), set(p.plus)
        for e in w.removed:
            if e in plus:
                plus.discard(e)
            elif e not in minus and p._generated(e):
                minus.add(e)
            else:
                raise PresentationError("witness removes an edge not presented")
        for e in w.added:
            if p.contains(e):
                raise PresentationError("witness adds an edge already presented")
            if e in minus:
                minus.discard(e)
            else:
                plus.add(e)
        return replace(p, minus=frozenset(minus), plus=frozenset(plus))
    if isinstance(p, GadgetMap):
        by_host: dict[BaseEdge, tuple[set, set]] = {}
        for e in w.removed:
            host = gadget.gadget_edge_host(e, p.base_construction)
            if host is None:
                raise PresentationError("witness edge outside the construction")
            by_host.setdefault(host, (set(), set()))[0].add(e)
        for e in w.added:
            host = gadget.gadget_edge_host(e, p.base_construction)
            if host is None:
                raise PresentationError("witness edge outside the construction")
            by_host.setdefault(host, (set(), set()))[1].add(e)
        q = p
        for host in sorted(by_host, key=base_edge_key):
            rem, add = by_host[host]
            cur = q.gadget_edges(host)
            if not rem <= cur:
                raise PresentationError("witness removes an edge not presented")
            if add & cur:
                raise PresentationError("witness adds an edge already presented")
            q = q.with_override(host, (cur - rem) | frozenset(add))
        return q
    if isinstance(p, CofiniteSet):
        # Elements removed from the cover join the complement; added leave it.
        if w.removed & p.complement:
            raise PresentationError("witness removes a vertex not in the cover")
        if not w.added <= p.complement:
            raise PresentationError("witness adds a vertex already in the cover")
        return replace(
            p, complement=(p.complement - w.added) | w.removed
        )
    if isinstance(p, ColouringByClasses):
        minus, plus = set(p.minus), set(p.plus)
        for cls in w.removed:
            if cls in plus:
                plus.discard(cls)
            elif p.is_base_class(cls) and cls not in minus:
                minus.add(cls)
            else:
                raise PresentationError("witness removes a class not presented")
        for cls in w.added:
            if ColouringByClasses(
                p.base, frozenset(minus), frozenset(plus)
            ).has_class(cls):
                raise PresentationError("witness adds a class already presented")
            if cls in minus:
                minus.discard(cls)
            else:
                plus.add(cls)
        return replace(p, minus=frozenset(minus), plus=frozenset(plus))
    raise PresentationError(f"cannot apply witness to {type(p).__name__}")


def _same_schema(p, q) -> bool:
    if type(p) is not type(q):
        return False
    if isinstance(p, Stream):
        return (
            p.construction == q.construction
            and p.generator == q.generator
            and p.params == q.params
        )
    if isinstance(p, GadgetMap):
        if p.construction != q.construction or p.schema != q.schema:
            return False
        if p.schema == "outer_on":
            return _same_schema(p.base, q.base)
        return True
    if isinstance(p, ColouringByClasses):
        if (p.base is None) != (q.base is None):
            return False
        return p.base is None or _same_schema(p.base, q.base)
    return True


def delta(p: Presentation, q: Presentation) -> tuple[int, int]:
    """(|p \\ q|, |q \\ p|) for presentations with finite symmetric
    difference; raises for schema-incomparable pairs."""
    if isinstance(p, ExplicitFinite) and isinstance(q, ExplicitFinite):
        if p.construction != q.construction:
            raise PresentationError("incomparable presentations")
        return (len(p.edges - q.edges), len(q.edges - p.edges))
    if isinstance(p, Stream) and isinstance(q, Stream):
        if not _same_schema(p, q):
            raise PresentationError("incomparable presentations")
        cand = p.minus | p.plus | q.minus | q.plus
        only_p = sum(1 for e in cand if p.contains(e) and not q.contains(e))
        only_q = sum(1 for e in cand if q.contains(e) and not p.contains(e))
        return (only_p, only_q)
    if isinstance(p, GadgetMap) and isinstance(q, GadgetMap):
        if not _same_schema(p, q):
            raise PresentationError("incomparable presentations")
        hosts = set(p.overrides_dict()) | set(q.overrides_dict())
        if p.schema == "outer_on":
            hosts |= set(p.base.minus | p.base.plus | q.base.minus | q.base.plus)
        only_p = only_q = 0
        for host in hosts:
            a, b = p.gadget_edges(host), q.gadget_edges(host)
            only_p += len(a - b)
            only_q += len(b - a)
        return (only_p, only_q)
    if isinstance(p, CofiniteSet) and isinstance(q, CofiniteSet):
        return (
            len(q.complement - p.complement),
            len(p.complement - q.complement),
        )
    if isinstance(p, ColouringByClasses) and isinstance(q, ColouringByClasses):
        if not _same_schema(p, q):
            raise PresentationError("incomparable presentations")
        cand = p.minus | p.plus | q.minus | q.plus
        only_p = sum(1 for c in cand if p.has_class(c) and not q.has_class(c))
        only_q = sum(1 for c in cand if q.has_class(c) and not p.has_class(c))
        return (only_p, only_q)
    raise PresentationError("incomparable presentations")


# JSON schema ---------------------------------------------------------------

def presentation_to_json(p: Presentation) -> dict:
    if isinstance(p, ExplicitFinite):
        return {
            "variant": "explicit",
            "construction": p.construction,
            "kind": p.kind,
            "edges": [
                obj_edge_to_json(p.construction, e)
                for e in sorted(
                    p.edges, key=lambda e: edge_sort_key(p.construction, e)
                )
            ],
        }
    if isinstance(p, Stream):
        return {
            "variant": "stream",
            "construction": p.construction,
            "kind": p.kind,
            "generator": p.generator,
            "params": dict(p.params),
            "minus": [
                obj_edge_to_json(p.construction, e)
                for e in sorted(
                    p.minus, key=lambda e: edge_sort_key(p.construction, e)
                )
            ],
            "plus": [
                obj_edge_to_json(p.construction, e)
                for e in sorted(
                    p.plus, key=lambda e: edge_sort_key(p.construction, e)
                )
            ],
        }
    if isinstance(p, GadgetMap):
        out = {
            "variant": "gadget_map",
            "construction": p.construction,
            "kind": p.kind,
            "schema": p.schema,
            "overrides": [
                {
                    "host": list(host),
                    "edges": [
                        edge_to_json(e) for e in sorted(edges, key=edge_key)
                    ],
                }
                for host, edges in sorted(
                    p.overrides_dict().items(),
                    key=lambda kv: base_edge_key(kv[0]),
                )
            ],
        }
        if p.base is not None:
            out["base"] = presentation_to_json(p.base)
        return out
    if isinstance(p, CofiniteSet):
        return {
            "variant": "cofinite",
            "construction": "vertexcover",
            "kind": "vertexcover",
            "complement": sorted(p.complement),
        }
    if isinstance(p, ColouringByClasses):
        return {
            "variant": "colouring",
            "construction": "colouring",
            "kind": "colouring",
            "base": presentation_to_json(p.base) if p.base else "singletons",
            "minus": [
                edge_to_json(c) for c in sorted(p.minus, key=edge_key)
            ],
            "plus": [
                edge_to_json(c) for c in sorted(p.plus, key=edge_key)
            ],
        }
    raise PresentationError(f"cannot serialize {type(p).__name__}")


def presentation_from_json(obj: dict) -> Presentation:
    try:
        variant = obj["variant"]
    except (TypeError, KeyError):
        raise PresentationError("presentation JSON needs a 'variant' field")
    if variant == "explicit":
        c = obj["construction"]
        return ExplicitFinite(
            c,
            obj["kind"],
            frozenset(obj_edge_from_json(c, e) for e in obj["edges"]),
        )
    if variant == "stream":
        c = obj["construction"]
        return Stream(
            c,
            obj["kind"],
            obj["generator"],
            tuple(sorted(obj.get("params", {}).items())),
            frozenset(obj_edge_from_json(c, e) for e in obj.get("minus", [])),
            frozenset(obj_edge_from_json(c, e) for e in obj.get("plus", [])),
        )
    if variant == "gadget_map":
        base = obj.get("base")
        overrides = tuple(
            sorted(
                (
                    (
                        base_edge(ov["host"]),
                        frozenset(edge_from_json(e) for e in ov["edges"]),
                    )
                    for ov in obj.get("overrides", [])
                ),
                key=lambda kv: base_edge_key(kv[0]),
            )
        )
        return GadgetMap(
            obj["construction"],
            obj["kind"],
            obj["schema"],
            presentation_from_json(base) if base else None,
            overrides,
        )
    if variant == "cofinite":
        return CofiniteSet(frozenset(obj["complement"]))
    if variant == "colouring":
        base = obj.get("base")
        return ColouringByClasses(
            presentation_from_json(base) if base and base != "singletons" else None,
            frozenset(edge_from_json(c) for c in obj.get("minus", [])),
            frozenset(edge_from_json(c) for c in obj.get("plus", [])),
        )
    raise PresentationError(f"unknown presentation variant {variant!r}")


def witness_to_json(construction: str, w: ImprovementWitness) -> dict:
    def enc(e):
        if construction == "vertexcover":
            return e
        if construction == "colouring":
            return edge_to_json(e)
        return obj_edge_to_json(construction, e)

    def srt(items):
        if construction == "vertexcover":
            return sorted(items)
        if construction == "colouring":
            return sorted(items, key=edge_key)
        return sorted(items, key=lambda e: edge_sort_key(construction, e))

    return {
        "removed": [enc(e) for e in srt(w.removed)],
        "added": [enc(e) for e in srt(w.added)],
        "delta": list(w.delta),
        "direction": w.direction,
    }
