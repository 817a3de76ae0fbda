import pytest

from oracles import dynkin_oracle
from totalpp.bimodule import Bimodule, NotNilpotentError, TensorProduct, ext_bimodule, tensor_algebra
from totalpp.compare import compare_presentations
from totalpp.golden import L8_LAMBDA, load
from totalpp.grammar import parse_presentation
from totalpp.homological import TauFunctor
from totalpp.presentation import AlgebraPresentation, path_algebra, quotient_algebra
from totalpp.preprojective import pi_combinatorial, pi_tensor
from totalpp.quiver import build_dynkin
from totalpp.suites import golden_d4, golden_l8, psi_routes, rigidity, tensor_suite
from totalpp.total import end_of_pi_tensor_pi, total_presentation, verify_iso_via_surjection


@pytest.mark.parametrize("t", ["A2", "A3", "D4"])
def test_regular_bimodule_axioms(t):
    A = path_algebra(build_dynkin(t))
    R = Bimodule.regular(A)
    assert R.check()
    assert R.total_dim == A.dim
    # A ⊗_A A ≅ A
    assert TensorProduct(R, R).result.total_dim == A.dim


@pytest.mark.parametrize("t", ["A2", "A3", "D4"])
def test_ext_bimodule_tensor_algebra(t):
    H = path_algebra(build_dynkin(t))
    td = TauFunctor(H, 1)
    M = ext_bimodule(td)
    assert M.check()
    T = tensor_algebra(M)
    assert T.dim == pi_combinatorial(t).dim
    assert T.check_associative()


def test_tensor_algebra_of_preprojective_is_not_nilpotent():
    P = pi_combinatorial("A2")
    with pytest.raises(NotNilpotentError):
        tensor_algebra(Bimodule.regular(P), bound=4)


@pytest.mark.parametrize("t", ["A2", "A3"])
def test_extended_tensor_algebra_checks(t):
    for rep in tensor_suite(t):
        assert rep.passed, (rep.name, rep.details)


@pytest.mark.parametrize("t", ["A2", "A3"])
def test_three_routes_to_total_algebra(t):
    rep = psi_routes(t)
    assert rep.passed, rep.details
    expected = dynkin_oracle(t[0], int(t[1:])).psi_graded()
    assert all(tuple(d) == expected for d in rep.details["graded_dims"])


def test_a2_total_algebra_reference():
    rep = psi_routes("A2")
    assert rep.details["graded_dims"][0] == [5, 2]


@pytest.mark.parametrize("t", ["A2", "A3"])
def test_ext_rigidity(t):
    assert rigidity(t).passed


def test_end_algebra_is_graded_and_associative():
    E = end_of_pi_tensor_pi(pi_tensor(path_algebra(build_dynkin("A3"))))
    assert E.algebra.check_associative()
    assert E.algebra.check_grading()


def test_golden_presentations():
    for rep in golden_d4() + golden_l8():
        assert rep.passed, (rep.name, rep.details)


def test_total_presentation_adds_one_arrow_per_non_injective():
    H = path_algebra(build_dynkin("D4"))
    tp = total_presentation(H, 1)
    gamma_q = tp.auslander.presentation.quiver
    assert tp.presentation.quiver.num_arrows - gamma_q.num_arrows == 8
    assert tp.presentation.quiver.vertices == gamma_q.vertices


def test_dropped_relation_is_detected():
    H = path_algebra(build_dynkin("D4"))
    tp = total_presentation(H, 1)
    gold, vmap = load("d4_psi")
    thin = AlgebraPresentation(tp.presentation.quiver, tp.presentation.relations[:-1])
    assert not compare_presentations(thin, gold, vmap).passed
    assert compare_presentations(tp.presentation, gold, vmap).passed


SQUARE = "quiver S {{ vertices: 1 2 3 4; arrows: a: 1 -> 2; b: 2 -> 4; c: 1 -> 3; d: 3 -> 4; }}\n" \
         "relations {{ {} }}"


@pytest.mark.parametrize("rel,same", [
    ("b*a - d*c;", True),
    ("b*a + 3*d*c;", True),
    ("b*a;", False),
    ("b*a; d*c;", False),
])
def test_square_gauge_comparison(rel, same):
    gold = parse_presentation(SQUARE.format("b*a - d*c;"))
    assert compare_presentations(parse_presentation(SQUARE.format(rel)), gold).passed == same


def test_relabeling_must_be_a_bijection():
    gold = parse_presentation(SQUARE.format("b*a - d*c;"))
    vmap = {"1": "1", "2": "3", "3": "2", "4": "4"}
    assert compare_presentations(gold, gold, vmap).passed
    cmp = compare_presentations(gold, gold, {"1": "1", "2": "2", "3": "2", "4": "4"})
    assert not cmp.passed and cmp.reasons


def test_eight_vertex_isomorphism():
    L = quotient_algebra(parse_presentation(L8_LAMBDA))
    tp = total_presentation(L, 3)
    rep = verify_iso_via_surjection(tp)
    assert rep.passed
    assert quotient_algebra(tp.presentation).dim == rep.details["dim_psi"]
