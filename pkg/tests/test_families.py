import pytest
from hypothesis import given, settings, strategies as st

from oracles import quotient_dim_bruteforce
from totalpp.compare import compare_presentations
from totalpp.families import (FAMILY_INSTANCES, family_relations, is_excluded, lambda_dn, pi_dn, psi_dn,
                              tau_vertex, verify_family_proposition)
from totalpp.golden import load
from totalpp.presentation import quotient_algebra
from totalpp.quiver import build_q_dn, lattice_points
from totalpp.suites import family_suite


def bruteforce(p, rels):
    q = p.quiver
    arrows = {a.name: (a.source, a.target) for a in q.arrows}
    # two layers past the longest normal path, so a wrong top degree still shows up
    top = max(w.length for w in quotient_algebra(p).basis_paths)
    return quotient_dim_bruteforce(q.vertices, arrows, [w for _, w in rels], top + 2)


@pytest.mark.parametrize("d,n", [(1, 2), (1, 3), (2, 3)])
def test_lambda_dimension_by_bruteforce(d, n):
    rels = family_relations(d, n, range(1, d + 1))
    assert quotient_algebra(lambda_dn(d, n)).dim == bruteforce(lambda_dn(d, n), rels)


@pytest.mark.parametrize("d,n", [(1, 2), (1, 3), (2, 3)])
def test_cyclic_families_by_bruteforce(d, n):
    # relations are homogeneous, so truncating by path length is exact
    for build, keep in ((pi_dn, lambda t: True), (psi_dn, lambda t: not is_excluded(t, d))):
        rels = [(t, w) for t, w in family_relations(d, n) if keep(t)]
        assert quotient_algebra(build(d, n)).dim == bruteforce(build(d, n), rels)


def test_small_reference_dimensions():
    assert [quotient_algebra(pi_dn(1, n)).dim for n in (2, 3)] == [4, 10]
    assert [quotient_algebra(lambda_dn(1, n)).dim for n in (2, 3)] == [3, 6]


def test_lambda_2_3_is_the_auslander_algebra_of_a3():
    gold, vmap = load("lambda_2_3")
    assert compare_presentations(lambda_dn(2, 3), gold, vmap).passed
    gold, vmap = load("lambda_3_3")
    assert compare_presentations(lambda_dn(3, 3), gold, vmap).passed
    gold, vmap = load("psi_3_3")
    assert compare_presentations(psi_dn(3, 3), gold, vmap).passed


def test_psi_and_pi_differ_by_excluded_relations():
    for d, n in [(1, 3), (2, 3), (3, 3)]:
        excluded = [t for t, _ in family_relations(d, n) if is_excluded(t, d)]
        assert len(psi_dn(d, n).relations) == len(pi_dn(d, n).relations) - len(excluded)
        assert all(t.j == d + 1 for t in excluded)


@pytest.mark.parametrize("n,psi,pi", [(2, 5, 4), (3, 14, 10)])
def test_first_total_family_keeps_more_than_preprojective(n, psi, pi):
    # for d = 1 the excluded relations are not empty, so the two quotients differ
    assert quotient_algebra(psi_dn(1, n)).dim == psi
    assert quotient_algebra(pi_dn(1, n)).dim == pi


def test_swapped_family_fails_comparison():
    gold, vmap = load("psi_3_3")
    assert not compare_presentations(pi_dn(3, 3), gold, vmap).passed


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 3), st.integers(2, 4))
def test_relation_tags_are_well_formed(d, n):
    pts = set(lattice_points(d, n))
    seen = set()
    for tag, words in family_relations(d, n):
        assert tag.x in pts and tag.i != tag.j
        key = (tag.x, frozenset((tag.i, tag.j)))
        assert key not in seen
        seen.add(key)
        assert len(words) in (1, 2)
    q = build_q_dn(d, n)
    for _, words in family_relations(d, n):
        for _, w in words:
            q.path(w)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 3), st.integers(2, 4), st.data())
def test_tau_vertex_stays_in_lattice_sum(d, n, data):
    x = data.draw(st.sampled_from(lattice_points(d + 1, n)))
    i = data.draw(st.integers(0, 2))
    y = tau_vertex(x, i)
    assert sum(y) == sum(x)
    assert y[-1] == x[-1] + i


@pytest.mark.parametrize("d,n", FAMILY_INSTANCES)
def test_family_descriptions(d, n):
    rep = verify_family_proposition(d, n)
    assert rep.passed, rep.to_json()
    assert [c.name for c in rep.checks] == ["auslander", "preprojective", "total"]


def test_family_suite():
    assert all(r.passed for r in family_suite())
