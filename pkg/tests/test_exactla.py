from fractions import Fraction

import pytest
import sympy
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, settings, strategies as st

from oracles import sympy_rref
from totalpp.exactla import (QQ, DimensionMismatch, Echelon, ExactMatrix, PrimeField, inverse,
                             is_invertible, kernel, nullspace, parse_field, rank_of_vectors,
                             row_reduce, solve_linear, solve_sparse)

small = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def as_fraction(x):
    return Fraction(int(x.numerator), int(x.denominator))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_matches_sympy(rows):
    rref, rank, pivots = row_reduce(ExactMatrix.from_rows(rows))
    expected, exp_piv = sympy_rref(rows)
    assert pivots == exp_piv
    assert rank == len(exp_piv)
    got = [[as_fraction(x) for x in r] for r in rref.to_lists()]
    assert got == [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in r] for r in expected]


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_linear_solutions_satisfy_system(rows, data):
    m = ExactMatrix.from_rows(rows)
    b = data.draw(st.lists(small, min_size=m.rows, max_size=m.rows))
    sol = solve_linear(m, b)
    consistent = sympy.Matrix(rows).rank() == sympy.Matrix([r + [x] for r, x in zip(rows, b)]).rank()
    assert sol.consistent == consistent
    for v in sol.kernel:
        assert all(sum(a * x for a, x in zip(r, v)) == 0 for r in m.entries)
    if consistent:
        assert [sum(a * x for a, x in zip(r, sol.particular)) for r in m.entries] == [QQ(x) for x in b]
    assert len(sol.kernel) == m.cols - sympy.Matrix(rows).rank()


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4))
def test_sparse_echelon_rank_agrees_with_dense(rows):
    vecs = [{j: QQ(x) for j, x in enumerate(r) if x} for r in rows]
    assert rank_of_vectors(vecs) == ExactMatrix.from_rows(rows).rank()
    ns = nullspace(vecs, len(rows[0]))
    assert len(ns) == len(kernel(ExactMatrix.from_rows(rows)))
    for v in ns:
        for r in vecs:
            assert sum(r.get(k, 0) * x for k, x in v.items()) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_round_trip(rows):
    m = ExactMatrix.from_rows(rows)
    if not is_invertible(m):
        with pytest.raises(ZeroDivisionError):
            inverse(m)
        return
    assert m @ inverse(m) == ExactMatrix.identity(3)


def test_echelon_express_tracks_coordinates():
    e = Echelon(QQ, track=True)
    e.add({0: QQ(1), 1: QQ(2)}, {0: QQ(1)})
    e.add({1: QQ(1), 2: QQ(1)}, {1: QQ(1)})
    c = e.express({0: QQ(1), 1: QQ(3), 2: QQ(1)})
    assert c == {0: 1, 1: 1}
    assert e.express({2: QQ(1)}) is None


def test_solve_sparse_inconsistent():
    assert solve_sparse([{0: QQ(1)}, {0: QQ(1)}], [1, 2], 1) is None
    assert solve_sparse([{0: QQ(2)}], [1], 1) == {0: QQ(1) / 2}


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_field_inverses(p):
    F = PrimeField(p)
    for a in range(1, p):
        assert F(a) * (F.one / F(a)) == F.one
    assert F(p) == F.zero


@settings(max_examples=30, deadline=None)
@given(matrices(4, 4))
def test_rank_mod_p_matches_sympy(rows):
    K = sympy.GF(3)
    dm = DomainMatrix([[K(x) for x in r] for r in rows], (len(rows), len(rows[0])), K)
    r_p = ExactMatrix.from_rows(rows, PrimeField(3)).rank()
    assert r_p == dm.rank()
    assert r_p <= ExactMatrix.from_rows(rows).rank()


def test_parse_field():
    assert parse_field("q") == QQ
    assert parse_field("gf:7") == PrimeField(7)
    for bad in ("gf:4", "gf:x", "reals"):
        with pytest.raises(ValueError):
            parse_field(bad)


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        ExactMatrix.from_rows([[1, 2]]) @ ExactMatrix.from_rows([[1, 2]])
    with pytest.raises(DimensionMismatch):
        solve_linear(ExactMatrix.from_rows([[1]]), [1, 2])
