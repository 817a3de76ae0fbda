import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import ARQuiverOracle
from totalpp.exactla import PrimeField
from totalpp.homological import knit_ar_quiver
from totalpp.presentation import path_algebra
from totalpp.preprojective import pi_combinatorial
from totalpp.quiver import build_dynkin
from totalpp.repmod import (HomSpace, ModuleError, ModuleMorphism, direct_sum, dualize, hom_dim,
                            injective, is_indecomposable, is_isomorphic, projective, simple)


def right_module_oracle(q):
    # right modules over kQ are representations of the opposite quiver
    arrows = [(q.arrow_target(a), q.arrow_source(a)) for a in range(q.num_arrows)]
    return ARQuiverOracle(q.num_vertices, arrows)


@pytest.mark.parametrize("t", ["A2", "A3", "A4", "D4"])
def test_hom_dimensions_match_hammocks(t):
    q = build_dynkin(t)
    H = path_algebra(q)
    ar = knit_ar_quiver(H)
    orc = right_module_oracle(q)
    assert sorted(ar.dimvecs.values()) == sorted(orc.dim.values())
    from totalpp.preprojective import build_catalog
    mods = build_catalog(H, 1).modules
    by_dim = {tuple(m.dims): m for m in mods}
    assert len(by_dim) == len(orc.vertices)
    for x in orc.vertices:
        for y in orc.vertices:
            assert hom_dim(by_dim[orc.dim[x]], by_dim[orc.dim[y]]) == orc.hom(x, y)


@pytest.mark.parametrize("t", ["A3", "D4"])
def test_standard_modules(t):
    H = path_algebra(build_dynkin(t))
    for v in range(H.num_vertices):
        P, I, S = projective(H, v), injective(H, v), simple(H, v)
        for m in (P, I, S):
            assert m.validate()
            assert is_indecomposable(m)
        assert hom_dim(P, S) == 1
        assert hom_dim(S, I) == 1
        assert dualize(dualize(P)).dims == P.dims


def test_pi_projectives_over_prime_field():
    A = pi_combinatorial("A3", field=PrimeField(3))
    total = sum(projective(A, v).total_dim for v in range(A.num_vertices))
    assert total == 10


def test_direct_sums_split():
    H = path_algebra(build_dynkin("A3"))
    P0, P1 = projective(H, 0), projective(H, 1)
    s, inj, proj = direct_sum([P0, P1])
    assert not is_indecomposable(s)
    for i, p in zip(inj, proj):
        assert p.compose(i) == ModuleMorphism.identity(i.source)
    assert hom_dim(s, s) == sum(hom_dim(a, b) for a in (P0, P1) for b in (P0, P1))


def test_isomorphism_detection():
    H = path_algebra(build_dynkin("A3"))
    P = projective(H, 0)
    ok, iso = is_isomorphic(P, direct_sum([P]).module)
    assert ok and iso.is_isomorphism()
    # the source of the line is simple projective
    assert is_isomorphic(P, simple(H, 0))[0]
    assert not is_isomorphic(P, injective(H, 0))[0]


def test_mismatched_matrices_are_rejected():
    H = path_algebra(build_dynkin("A2"))
    P = projective(H, 0)
    with pytest.raises(ModuleError):
        type(P)(H, P.dims[:-1], P.mats)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_homomorphisms_are_module_maps(seed):
    rng = random.Random(seed)
    H = path_algebra(build_dynkin("D4"))
    from totalpp.preprojective import build_catalog
    mods = build_catalog(H, 1).modules
    x, y, z = (rng.choice(mods) for _ in range(3))
    hxy, hyz = HomSpace(x, y), HomSpace(y, z)
    f = hxy.combination({k: H.field(rng.randint(-3, 3)) for k in range(hxy.dim)})
    g = hyz.combination({k: H.field(rng.randint(-3, 3)) for k in range(hyz.dim)})
    assert f.is_homomorphism() and g.is_homomorphism()
    assert g.compose(f).is_homomorphism()
    if hxy.dim:
        assert hxy.combination(hxy.coordinates(f)) == f
