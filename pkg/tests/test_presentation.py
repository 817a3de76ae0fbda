import pytest
from hypothesis import given, settings, strategies as st

from oracles import quotient_dim_bruteforce
from totalpp.exactla import QQ, PrimeField
from totalpp.presentation import (AlgebraPresentation, InfiniteDimensionalError, PathElement,
                                  PresentationError, path_algebra, quotient_algebra, recover_presentation)
from totalpp.preprojective import pi_combinatorial
from totalpp.quiver import Quiver, build_dynkin, enumerate_paths


@st.composite
def acyclic_presentations(draw):
    n = draw(st.integers(2, 4))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=5))
    arrows = [(f"x{k}", str(s), str(t)) for k, (s, t) in enumerate(chosen)]
    q = Quiver([str(i) for i in range(n)], arrows)
    longer = [p for p in enumerate_paths(q, n) if p.length >= 2]
    rels = []
    if longer:
        for _ in range(draw(st.integers(0, 3))):
            p = draw(st.sampled_from(longer))
            same = [r for r in longer if (r.source, r.target) == (p.source, p.target)]
            other = draw(st.sampled_from(same))
            c = draw(st.integers(-2, 2))
            words = [(1, q.arrow_names(p))]
            if other != p and c:
                words.append((c, q.arrow_names(other)))
            rels.append(words)
    return q, rels


@settings(max_examples=40, deadline=None)
@given(acyclic_presentations())
def test_quotient_dimension_matches_bruteforce(data):
    q, rels = data
    els = [PathElement.from_words(q, w) for w in rels]
    alg = quotient_algebra(AlgebraPresentation(q, els))
    arrows = {a.name: (a.source, a.target) for a in q.arrows}
    assert alg.dim == quotient_dim_bruteforce(q.vertices, arrows, rels, q.num_vertices)
    assert alg.check_associative()


@settings(max_examples=25, deadline=None)
@given(acyclic_presentations())
def test_recovered_presentation_gives_same_algebra(data):
    q, rels = data
    alg = quotient_algebra(AlgebraPresentation(q, [PathElement.from_words(q, w) for w in rels]))
    again = quotient_algebra(recover_presentation(alg))
    assert again.dim == alg.dim
    assert sorted(again.cartan().values()) == sorted(alg.cartan().values())


def test_path_algebra_of_a3():
    alg = path_algebra(build_dynkin("A3"))
    assert alg.dim == 6
    assert alg.check_idempotents() and alg.check_associative()


@pytest.mark.parametrize("t,dim", [("A2", 4), ("A3", 10), ("A4", 20), ("D4", 28)])
def test_preprojective_dimension_from_relations(t, dim):
    assert pi_combinatorial(t).dim == dim


def test_preprojective_over_prime_field():
    assert pi_combinatorial("A3", field=PrimeField(5)).dim == 10


def test_cycle_without_relations_is_infinite():
    q = Quiver(["1"], [("x", "1", "1")])
    with pytest.raises(InfiniteDimensionalError):
        path_algebra(q, degree_bound=6)


def test_cyclic_with_zero_relation_is_finite():
    q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    p = AlgebraPresentation(q, [PathElement.from_words(q, [(1, ["a", "b"])]),
                                PathElement.from_words(q, [(1, ["b", "a"])])])
    assert quotient_algebra(p).dim == 4


def test_relations_must_be_uniform_and_long():
    q = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")])
    with pytest.raises(PresentationError):
        AlgebraPresentation(q, [PathElement.from_words(q, [(1, ["a", "b"]), (1, ["a"])])])
    with pytest.raises(PresentationError):
        AlgebraPresentation(q, [PathElement.from_words(q, [(1, ["c"])])])


def test_element_arithmetic():
    q = build_dynkin("A3")
    a, b = PathElement.arrow(q, "a"), PathElement.arrow(q, "b")
    ba = b * a
    assert ba.render() == "b*a"
    assert (ba - ba).is_zero()
    assert (a * b).is_zero()
    assert (2 * ba).leading_coefficient() == QQ(2)
