import pytest
from hypothesis import given, settings, strategies as st

from oracles import ARQuiverOracle, dynkin_graph, positive_roots
from totalpp.exactla import PrimeField
from totalpp.homological import TauFunctor, global_dimension, dominant_dimension
from totalpp.presentation import path_algebra
from totalpp.preprojective import (auslander_algebra, build_catalog, morita_reduce, pi_combinatorial, pi_graded,
                                   pi_tensor, psi_X)
from totalpp.quiver import build_dynkin, parse_dynkin_type
from totalpp.repmod import ModuleError, projective
from totalpp.suites import morita, pi_routes

TYPES = ["A2", "A3", "A4", "D4"]


def setup(t, field=None):
    q = build_dynkin(t)
    H = path_algebra(q) if field is None else path_algebra(q, field)
    td = TauFunctor(H, 1)
    orc = ARQuiverOracle(q.num_vertices, [(q.arrow_target(a), q.arrow_source(a)) for a in range(q.num_arrows)])
    return H, td, orc


@pytest.mark.parametrize("t", TYPES)
def test_catalog_is_the_set_of_positive_roots(t):
    H, td, _ = setup(t)
    kind, n = parse_dynkin_type(t)
    cat = build_catalog(H, 1, tau=td)
    roots = positive_roots(n, dynkin_graph(kind, n))
    assert sorted(tuple(m.dims) for m in cat.modules) == sorted(roots)
    assert sum(e.injective for e in cat.entries) == n


@pytest.mark.parametrize("t", TYPES)
def test_preprojective_routes_match_oracle(t):
    H, td, orc = setup(t)
    kind, n = parse_dynkin_type(t)
    expected = orc.pi_graded()
    assert sum(expected) == sum(map(sum, positive_roots(n, dynkin_graph(kind, n))))
    assert tuple(pi_graded(H, tau=td).graded_dims()) == expected
    assert tuple(pi_tensor(H, tau=td).graded_dims()) == expected
    assert tuple(pi_combinatorial(t).graded_dims()) == expected


@pytest.mark.parametrize("t", ["A2", "A3", "D4"])
def test_preprojective_cartan_agreement(t):
    rep = pi_routes(t)
    assert rep.passed, rep.details


@pytest.mark.parametrize("t", TYPES)
def test_total_hom_algebra_matches_oracle(t):
    H, td, orc = setup(t)
    cat = build_catalog(H, 1, tau=td)
    psi = psi_X(H, cat.modules, 1, tau=td, labels=cat.labels)
    assert tuple(psi.graded_dims()) == orc.psi_graded()
    assert psi.algebra.check_associative()
    assert psi.algebra.check_grading()


@pytest.mark.parametrize("t", TYPES)
def test_auslander_algebra_dimension(t):
    H, td, orc = setup(t)
    au = auslander_algebra(H, 1, tau=td)
    assert au.algebra.dim == orc.auslander_dim()
    assert global_dimension(au.algebra) <= 2 <= dominant_dimension(au.algebra)


def test_morita_corner_is_preprojective():
    rep = morita("A2")
    assert rep.passed
    assert rep.details["dim"] == 4 and rep.details["graded_dims"] == [3, 1]


def test_morita_rejects_modules_outside_the_catalog():
    H, td, _ = setup("A2")
    cat = build_catalog(H, 1, tau=td)
    psi = psi_X(H, cat.modules, 1, tau=td, labels=cat.labels)
    other = path_algebra(build_dynkin("A2"))
    with pytest.raises(ModuleError):
        morita_reduce(psi, [projective(other, 0)])


def test_preprojective_over_prime_field_agrees():
    H, td, orc = setup("A3", PrimeField(7))
    assert tuple(pi_graded(H, tau=td).graded_dims()) == orc.pi_graded()


@settings(max_examples=12, deadline=None)
@given(st.sampled_from(["A3", "A4"]), st.data())
def test_orientation_does_not_change_dimensions(t, data):
    kind, n = parse_dynkin_type(t)
    orient = "".join(data.draw(st.lists(st.sampled_from("+-"), min_size=n - 1, max_size=n - 1)))
    q = build_dynkin(t, orient)
    H = path_algebra(q)
    td = TauFunctor(H, 1)
    orc = ARQuiverOracle(n, [(q.arrow_target(a), q.arrow_source(a)) for a in range(q.num_arrows)])
    assert pi_combinatorial(t, orientation=orient).dim == sum(orc.pi_graded())
    assert tuple(pi_graded(H, tau=td).graded_dims()) == orc.pi_graded()
    cat = build_catalog(H, 1, tau=td)
    assert tuple(psi_X(H, cat.modules, 1, tau=td).graded_dims()) == orc.psi_graded()
