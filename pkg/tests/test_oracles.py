import random

import pytest

from strongmax.catalogue import TardosEdge, tardos_disjoint
from strongmax.gadget import build_gadget
from strongmax.objects import (
    CofiniteSet,
    ColouringByClasses,
    ExplicitFinite,
    GadgetMap,
    Stream,
    apply_witness,
    delta,
    verify_presentation,
)
from strongmax.oracles import (
    OracleError,
    _h1star_split,
    improve,
    improve_colouring,
    improve_edgecover_h2,
    improve_edgecover_h2star,
    improve_matching_h1,
    improve_matching_h1star,
    improve_matching_tardos,
    improve_vertexcover,
)
from strongmax.universe import base_edge


def explicit(construction, kind, edges):
    return ExplicitFinite(construction, kind, frozenset(edges))


def check_contract(p, w, bound=8):
    """Oracle output contract: the witness applies, the result verifies,
    and the presentation delta equals the witness delta."""
    q = apply_witness(p, w)
    assert verify_presentation(q, bound)
    assert delta(p, q) == w.delta
    if w.direction == "maximize":
        assert w.delta[1] > w.delta[0]
    else:
        assert w.delta[1] < w.delta[0]
    return q


# Ground matchings -------------------------------------------------------------

def test_h1star_finite_extension():
    w = improve_matching_h1star(explicit("h1star", "matching", {(3, 4, 5)}))
    assert w.removed == frozenset()
    assert w.added == frozenset({tuple(range(6, 12))})
    check_contract(explicit("h1star", "matching", {(3, 4, 5)}), w)


def test_h1star_empty_matching():
    p = explicit("h1star", "matching", set())
    w = improve_matching_h1star(p)
    assert w.added == frozenset({(3, 4, 5)})
    check_contract(p, w)


def test_h1star_stream_split():
    p = Stream("h1star", "matching", "doubling")
    w = improve_matching_h1star(p)
    assert w.removed == frozenset({(3, 4, 5), tuple(range(12, 24))})
    assert w.added == frozenset({
        (3, 12, 13),
        (4, 14, 15, 16),
        (5, 17, 18, 19, 20),
    })
    check_contract(p, w)


def test_h1star_split_pieces_are_edges():
    rng = random.Random(11)
    for _ in range(500):
        v1 = rng.randint(3, 9)
        e1 = base_edge([v1] + rng.sample(range(v1 + 1, 60), v1 - 1))
        v1, v2, v3 = sorted(e1)[:3]
        # matching edges are disjoint: e2 starts past e1 entirely
        m = max(v2 + v3, max(e1) + 1) + rng.randint(0, 20)
        e2 = base_edge(range(m, 2 * m))
        parts = _h1star_split(e1, e2)
        union = set(e1) | set(e2)
        got = set()
        for part in parts:
            assert len(part) == min(part)  # still an edge
            assert not (got & set(part))
            got.update(part)
        # three pieces from two edges, drawn from the union
        assert got <= union
        assert sorted(min(part) for part in parts) == [v1, v2, v3]


def test_h1star_rejects_invalid_input():
    with pytest.raises(OracleError):
        improve_matching_h1star(explicit("h1star", "matching", {(2, 3, 4)}))


# Ground covers ----------------------------------------------------------------

def test_h2star_explicit_merge():
    p = explicit("h2star", "cover", {(1, 2), (3, 4), (5,), (6,), (7,), (8,)})
    w = improve_edgecover_h2star(p)
    assert w.removed == frozenset({(1, 2), (3, 4)})
    assert w.added == frozenset({(1, 2, 3, 4)})
    check_contract(p, w)


def test_h2star_singleton_stream_merge():
    p = Stream("h2star", "cover", "singletons")
    w = improve_edgecover_h2star(p)
    assert w.removed == frozenset({(1,), (2,)})
    assert w.added == frozenset({(1, 2)})
    check_contract(p, w)


def test_h2star_nested_edges_drop_the_smaller():
    p = explicit("h2star", "cover",
                 {(1, 2), (3, 4), (1, 2, 3, 4), (5,), (6,), (7,), (8,)})
    w = improve_edgecover_h2star(p)
    # first two in canonical order are (1,2) and (1,2,3,4): nested
    assert w.removed == frozenset({(1, 2)})
    assert w.added == frozenset()
    check_contract(p, w)


# Gadgetized matchings -----------------------------------------------------------

def test_h1_inner_all_improvement():
    p = GadgetMap("h1", "matching", "inner_all")
    w = improve_matching_h1(p)
    g = build_gadget((3, 4, 5))
    assert w.removed == g.inner_set
    assert w.added == g.outer_set
    assert w.delta == (2, 3)
    check_contract(p, w)


def test_h1_deficient_gadget_fixed_locally():
    host = base_edge((3, 4, 5))
    p = GadgetMap("h1", "matching", "inner_all",
                  overrides=((host, frozenset()),))
    w = improve_matching_h1(p)
    g = build_gadget(host)
    assert w.added == g.inner_set
    assert w.removed == frozenset()
    check_contract(p, w)


def test_h1_outer_on_stream_replay():
    p = GadgetMap(
        "h1", "matching", "outer_on", Stream("h1star", "hosts", "doubling")
    )
    w = improve_matching_h1(p)
    d = w.delta
    assert d[1] - d[0] == 1  # net gain of one edge
    check_contract(p, w)


# Gadgetized covers ---------------------------------------------------------------

def h2_block_cover():
    return GadgetMap(
        "h2", "cover", "outer_on", Stream("h2star", "hosts", "blocks")
    )


def test_h2_cover_improvement():
    p = h2_block_cover()
    w = improve_edgecover_h2(p)
    d = w.delta
    assert d[0] - d[1] == 1  # net loss of one edge
    check_contract(p, w)


def test_h2_oversized_gadget_fixed_locally():
    host = base_edge((1, 2))
    g = build_gadget(host)
    p = GadgetMap(
        "h2", "cover", "outer_on", Stream("h2star", "hosts", "blocks"),
        overrides=((host, frozenset(g.edges)),),
    )
    w = improve_edgecover_h2(p)
    assert apply_witness(p, w).gadget_edges(host) == g.outer_set
    check_contract(p, w)


# Vertex covers -------------------------------------------------------------------

def test_vertexcover_step():
    a = CofiniteSet(frozenset({3}))
    w = improve_vertexcover(a)
    assert w.removed == frozenset({4, 5})
    assert w.added == frozenset({3})
    b = check_contract(a, w)
    assert b.complement == frozenset({4, 5})


def test_vertexcover_two_element_complement():
    a = CofiniteSet(frozenset({2, 3}))
    w = improve_vertexcover(a)
    assert w.removed == frozenset({4, 5})
    assert w.added == frozenset({2})
    check_contract(a, w)


def test_vertexcover_full_cover():
    a = CofiniteSet(frozenset())
    w = improve_vertexcover(a)
    assert w.removed == frozenset({1})
    assert w.added == frozenset()
    check_contract(a, w)


def test_vertexcover_rejects_non_cover():
    with pytest.raises(OracleError):
        improve_vertexcover(CofiniteSet(frozenset({2, 4})))


# Colourings ----------------------------------------------------------------------

def test_colouring_singleton_merge():
    chi = ColouringByClasses(None)
    w = improve_colouring(chi)
    assert w.delta == (2, 1)
    chi2 = check_contract(chi, w, bound=5)
    w2 = improve_colouring(chi2)
    assert w2.delta == (2, 1)
    check_contract(chi2, w2, bound=5)


def test_colouring_over_cover_base():
    chi = ColouringByClasses(h2_block_cover())
    w = improve_colouring(chi, 6)
    d = w.delta
    assert d[0] > d[1]
    check_contract(chi, w, bound=6)


# Gamma-shaped matchings ------------------------------------------------------------

def test_tardos_empty_matching():
    p = explicit("tardos", "matching", set())
    w = improve_matching_tardos(p)
    assert w.added == frozenset({TardosEdge(1, 1)})
    check_contract(p, w)


def test_tardos_single_edge():
    p = explicit("tardos", "matching", {TardosEdge(1, 1)})
    w = improve_matching_tardos(p)
    assert w.removed == frozenset({TardosEdge(1, 1)})
    assert w.added == frozenset({TardosEdge(1, 3), TardosEdge(2, 2)})
    check_contract(p, w)


def test_tardos_staircase_example():
    p = explicit("tardos", "matching", {
        TardosEdge(1, 5), TardosEdge(2, 3), TardosEdge(3, 2), TardosEdge(7, 5),
    })
    w = improve_matching_tardos(p)
    assert w.removed == frozenset({TardosEdge(3, 2)})
    assert w.added == frozenset({TardosEdge(5, 7), TardosEdge(6, 6)})
    check_contract(p, w)


def test_tardos_second_example():
    p = explicit("tardos", "matching", {
        TardosEdge(1, 2), TardosEdge(2, 1), TardosEdge(5, 7),
    })
    w = improve_matching_tardos(p)
    assert w.removed == frozenset({TardosEdge(2, 1)})
    assert w.added == frozenset({TardosEdge(3, 9), TardosEdge(4, 8)})
    check_contract(p, w)


def test_tardos_geometric_stream():
    p = Stream("tardos", "matching", "geometric", (("y1", 5),))
    w = improve_matching_tardos(p)
    assert w.delta == (1, 2)
    check_contract(p, w)


def test_tardos_added_edges_clear_everything():
    rng = random.Random(23)
    for _ in range(100):
        edges = set()
        for _ in range(rng.randint(0, 5)):
            e = TardosEdge(rng.randint(1, 30), rng.randint(1, 30))
            if all(tardos_disjoint(e, f) for f in edges):
                edges.add(e)
        p = explicit("tardos", "matching", edges)
        w = improve_matching_tardos(p)
        check_contract(p, w)


# Dispatch ------------------------------------------------------------------------

def test_improve_dispatch():
    w = improve(CofiniteSet(frozenset({3})))
    assert w.direction == "minimize"
    with pytest.raises(OracleError):
        improve(explicit("covergraph", "matching", set()))
    with pytest.raises(OracleError):
        improve(object())


def test_randomized_oracle_contract():
    """Every oracle keeps its contract on randomized valid inputs."""
    rng = random.Random(5)
    for _ in range(60):
        # h1star explicit matchings
        edges = []
        used = set()
        for _ in range(rng.randint(0, 4)):
            m = rng.randint(3, 12)
            if m in used:
                continue
            pool = [v for v in range(m + 1, 200) if v not in used]
            e = base_edge([m] + rng.sample(pool, m - 1))
            if not (set(e) & used):
                edges.append(e)
                used.update(e)
        p = explicit("h1star", "matching", edges)
        w = improve_matching_h1star(p)
        check_contract(p, w)
    for _ in range(60):
        # vertexcover complements: independent sets of the doubling graph
        # live strictly inside a factor-two band above their minimum
        lo = rng.randint(2, 20)
        band = list(range(lo + 1, 2 * lo))
        comp = {lo} | set(rng.sample(band, min(len(band), rng.randint(0, 3))))
        a = CofiniteSet(frozenset(comp))
        w = improve_vertexcover(a)
        check_contract(a, w)
