import pytest
from hypothesis import given, settings, strategies as st

from oracles import dynkin_graph
from totalpp.quiver import (Quiver, QuiverError, build_dynkin, build_q_dn, direction, double_quiver,
                            enumerate_paths, lattice_points, parse_dynkin_type)


def test_paths_compose_in_traversal_order():
    q = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    p = q.path(["a", "b"])
    assert (p.source, p.target) == (0, 2)
    assert q.render_path(p) == "b*a"
    with pytest.raises(QuiverError):
        q.path(["b", "a"])


def test_bad_quivers_are_rejected():
    with pytest.raises(QuiverError):
        Quiver(["1", "1"], [])
    with pytest.raises(QuiverError):
        Quiver(["1"], [("a", "1", "2")])
    with pytest.raises(QuiverError):
        Quiver(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])


@pytest.mark.parametrize("t", ["A1", "A3", "A5", "D4", "D6", "E6", "E8"])
def test_dynkin_quivers_match_their_graphs(t):
    kind, n = parse_dynkin_type(t)
    q = build_dynkin(t)
    assert q.num_vertices == n
    assert q.num_arrows == n - 1
    if kind in "AD":
        edges = {tuple(sorted((int(a.source), int(a.target)))) for a in q.arrows}
        assert edges == set(dynkin_graph(kind, n))


def test_orientation_flips():
    q = build_dynkin("A3", "-+")
    assert {(a.source, a.target) for a in q.arrows} == {("2", "1"), ("2", "3")}
    with pytest.raises(QuiverError):
        build_dynkin("A3", "+")
    with pytest.raises(QuiverError):
        build_dynkin("D3")


def test_double_quiver_pairs_every_arrow():
    q = build_dynkin("D4")
    dq, pairing = double_quiver(q)
    assert dq.num_arrows == 2 * q.num_arrows
    for a in q.arrows:
        s = dq.arrows[dq.arrow_index[pairing[a.name]]]
        assert (s.source, s.target) == (a.target, a.source)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6), st.integers(0, 4))
def test_path_counts_on_linear_quiver(n, ell):
    q = build_dynkin(f"A{n}")
    paths = enumerate_paths(q, ell)
    # paths of length k in a line on n vertices: n - k
    assert len(paths) == sum(max(n - k, 0) for k in range(ell + 1))
    keys = [p.key() for p in paths]
    assert [k[0] for k in keys] == sorted(k[0] for k in keys)


@pytest.mark.parametrize("d,n,count", [(1, 3, 3), (2, 3, 6), (3, 3, 10), (2, 4, 10), (1, 5, 5)])
def test_lattice_vertex_counts(d, n, count):
    assert len(lattice_points(d, n)) == count
    assert build_q_dn(d, n).num_vertices == count


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4))
def test_lattice_directions_sum_to_zero(d, n):
    fs = [direction(d, i) for i in range(1, d + 2)]
    assert all(sum(f) == 0 for f in fs)
    assert tuple(map(sum, zip(*fs))) == (0,) * (d + 1)
    q = build_q_dn(d, n)
    full = q.num_arrows
    partial = build_q_dn(d, n, include_last=False).num_arrows
    assert partial <= full
    for a in q.arrows:
        x, y = tuple(map(int, a.source)), tuple(map(int, a.target))
        assert tuple(b - c for b, c in zip(y, x)) in fs


def test_dot_export_lists_arrows():
    dot = build_dynkin("A2").to_dot()
    assert dot.startswith("digraph") and '"1" -> "2"' in dot
