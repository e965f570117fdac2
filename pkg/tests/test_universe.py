import pytest
from hypothesis import given, strategies as st

from strongmax.universe import (
    GadgetMinus,
    GadgetPlus,
    Grid,
    Nat,
    SharedPad,
    UniformPad,
    base_edge,
    edge_from_json,
    edge_key,
    edge_to_json,
    grid_window,
    make_edge,
    nat_edge,
    nat_window,
    truncation_window,
    vertex_from_json,
    vertex_key,
    vertex_to_json,
)


def test_nat_positive_only():
    assert Nat(1).n == 1
    with pytest.raises(ValueError):
        Nat(0)


def test_grid_positive_only():
    assert Grid(2, 3) == Grid(2, 3)
    with pytest.raises(ValueError):
        Grid(1, 0)


def test_gadget_vertex_index_ranges():
    host = base_edge((3, 4, 5))
    GadgetPlus(host, 1)
    GadgetPlus(host, 2)
    with pytest.raises(ValueError):
        GadgetPlus(host, 3)
    GadgetMinus(host, 2)
    GadgetMinus(host, 3)
    with pytest.raises(ValueError):
        GadgetMinus(host, 1)


def test_base_edge_sorts_and_dedupes():
    assert base_edge([5, 3, 3, 4]) == (3, 4, 5)
    with pytest.raises(ValueError):
        base_edge([])
    with pytest.raises(ValueError):
        base_edge([0, 1])


def test_make_edge_rejects_empty():
    with pytest.raises(ValueError):
        make_edge([])


def test_vertex_key_is_a_total_order():
    host = base_edge((2, 3))
    vs = [
        Nat(1),
        Nat(2),
        Grid(1, 1),
        Grid(1, 2),
        GadgetPlus(host, 1),
        GadgetMinus(host, 2),
        UniformPad(nat_edge((1, 2))),
        SharedPad(),
    ]
    keys = [vertex_key(v) for v in vs]
    assert len(set(keys)) == len(keys)
    assert sorted(keys) == keys


def test_edge_key_is_order_insensitive():
    assert edge_key([Nat(2), Nat(1)]) == edge_key([Nat(1), Nat(2)])


def test_windows():
    assert nat_window(3) == frozenset({Nat(1), Nat(2), Nat(3)})
    assert len(grid_window(3)) == 9
    with pytest.raises(ValueError):
        nat_window(0)
    with pytest.raises(ValueError):
        truncation_window("h1star", 0)
    with pytest.raises(ValueError):
        truncation_window("nonsense", 3)


def test_gadgetized_window_includes_private_vertices():
    w = truncation_window("h1", 5)
    assert Nat(5) in w
    assert GadgetPlus(base_edge((2, 3)), 1) in w
    assert GadgetMinus(base_edge((2, 3)), 2) in w


def test_vertex_json_round_trip_examples():
    host = base_edge((2, 3))
    cases = [
        (Nat(7), 7),
        (Grid(2, 5), [2, 5]),
        (GadgetPlus(host, 1), {"host": [2, 3], "role": "+", "i": 1}),
        (GadgetMinus(host, 2), {"host": [2, 3], "role": "-", "i": 2}),
        (SharedPad(), {"pad": "shared"}),
    ]
    for v, obj in cases:
        assert vertex_to_json(v) == obj
        assert vertex_from_json(obj) == v
    pad = UniformPad(nat_edge((1, 2)))
    assert vertex_from_json(vertex_to_json(pad)) == pad


def test_vertex_from_json_rejects_garbage():
    for bad in (True, [1], [1, 2, 3], {"nope": 1}, "x"):
        with pytest.raises(ValueError):
            vertex_from_json(bad)


def test_edge_json_is_sorted_and_round_trips():
    e = nat_edge((3, 1, 2))
    assert edge_to_json(e) == [1, 2, 3]
    assert edge_from_json([3, 1, 2]) == e
    with pytest.raises(ValueError):
        edge_from_json("not a list")


host_st = st.sets(
    st.integers(min_value=1, max_value=30), min_size=2, max_size=5
).map(base_edge)


@st.composite
def vertices(draw):
    which = draw(st.integers(0, 4))
    if which == 0:
        return Nat(draw(st.integers(1, 100)))
    if which == 1:
        return Grid(draw(st.integers(1, 50)), draw(st.integers(1, 50)))
    host = draw(host_st)
    if which == 2:
        return GadgetPlus(host, draw(st.integers(1, len(host) - 1)))
    if which == 3:
        return GadgetMinus(host, draw(st.integers(2, len(host))))
    return SharedPad()


@given(vertices())
def test_vertex_json_round_trip_property(v):
    assert vertex_from_json(vertex_to_json(v)) == v


@given(st.sets(vertices(), min_size=1, max_size=5))
def test_edge_json_round_trip_property(vs):
    e = make_edge(vs)
    assert edge_from_json(edge_to_json(e)) == e
