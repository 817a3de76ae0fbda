"""Verification suites run by ``totalpp check``."""
from __future__ import annotations

import math
import random
import time

from .compare import compare_presentations
from .families import FAMILY_INSTANCES, lambda_dn, verify_family_proposition
from .golden import L8_LAMBDA, load
from .grammar import parse_presentation
from .homological import TauFunctor, dominant_dimension, global_dimension, knit_ar_quiver
from .presentation import path_algebra, quotient_algebra
from .preprojective import build_catalog, morita_reduce, pi_combinatorial, pi_graded, \
    pi_tensor, psi_X
from .quiver import build_dynkin, build_q_dn
from .repmod import HomSpace, ModuleMorphism, projective
from .total import Report, alpha_check, associativity_report, end_of_pi_tensor_pi, ext1_rigidity, \
    extended_tensor_algebra, total_presentation, u_is_tensor_of_degree_one, verify_iso_via_surjection


def hereditary(type_: str, field=None):
    q = build_dynkin(type_)
    return path_algebra(q) if field is None else path_algebra(q, field)


def _timed(fn) -> list:
    t = time.perf_counter()
    rep = fn()
    reps = rep if isinstance(rep, list) else [rep]
    secs = round(time.perf_counter() - t, 3)
    for r in reps:
        r.details.setdefault("seconds", secs)
    return reps


def pi_routes(type_: str) -> Report:
    """Π by generators and relations, as ⊕ Hom(Λ, τ^{-i}Λ) and as a tensor algebra."""
    H = hereditary(type_)
    td = TauFunctor(H, 1)
    comb = pi_combinatorial(type_)
    graded = pi_graded(H, tau=td)
    tensor = pi_tensor(H, tau=td)
    dims = [comb.dim, graded.dim, tensor.dim]
    cartan = comb.cartan() == graded.algebra.cartan() == tensor.cartan()
    graded_eq = tuple(comb.graded_dims()) == tuple(graded.graded_dims()) == tuple(tensor.graded_dims())
    return Report(f"pi_routes[{type_}]", len(set(dims)) == 1 and cartan and graded_eq, {
        "dims": dims, "cartan_equal": cartan, "graded_dims": list(graded.graded_dims()),
        "graded_equal": graded_eq})


def psi_routes(type_: str) -> Report:
    """Ψ as Hom algebra, as End(Π⊗Π) and from the quiver presentation."""
    H = hereditary(type_)
    td = TauFunctor(H, 1)
    cat = build_catalog(H, 1, tau=td)
    hom = psi_X(H, cat.modules, 1, tau=td, labels=cat.labels)
    end = end_of_pi_tensor_pi(pi_tensor(H, tau=td))
    tp = total_presentation(H, 1, tau=td)
    quot = quotient_algebra(tp.presentation, grading=tp.grading())
    iso = verify_iso_via_surjection(tp, psi=hom)
    dims = [tuple(hom.graded_dims()), tuple(end.graded_dims()), tuple(quot.graded_dims())]
    return Report(f"psi_routes[{type_}]", len(set(dims)) == 1 and iso.passed, {
        "graded_dims": [list(d) for d in dims], "iso_via_surjection": iso.passed})


def psi_bounds(type_: str) -> Report:
    """gldim Ψ ≤ d + 2 ≤ domdim Ψ."""
    H = hereditary(type_)
    td = TauFunctor(H, 1)
    cat = build_catalog(H, 1, tau=td)
    psi = psi_X(H, cat.modules, 1, tau=td, labels=cat.labels)
    gl = global_dimension(psi.algebra)
    dom = dominant_dimension(psi.algebra)
    return Report(f"psi_bounds[{type_}]", gl <= 3 <= dom, {
        "gldim": gl if gl != math.inf else "inf", "domdim": dom if dom != math.inf else "inf"})


def golden_d4() -> list:
    H = hereditary("D4")
    tp = total_presentation(H, 1)
    out = []
    for key, ours in (("d4_gamma", tp.auslander.presentation), ("d4_psi", tp.presentation)):
        g, vm = load(key)
        cmp = compare_presentations(ours, g, vm)
        out.append(Report(f"golden[{key}]", cmp.passed, {"reasons": cmp.reasons}))
    return out


def golden_l8() -> list:
    L = quotient_algebra(parse_presentation(L8_LAMBDA))
    tp = total_presentation(L, 3)
    out = []
    for key, ours in (("l8_gamma", tp.auslander.presentation), ("l8_psi", tp.presentation)):
        g, vm = load(key)
        cmp = compare_presentations(ours, g, vm)
        out.append(Report(f"golden[{key}]", cmp.passed, {"reasons": cmp.reasons}))
    iso = verify_iso_via_surjection(tp)
    out.append(Report("golden[l8_iso]", iso.passed, {"dim_psi": iso.details["dim_psi"]}))
    return out


def family_suite() -> list:
    out = []
    counts = [build_q_dn(d, 3).num_vertices for d in (1, 2, 3)]
    out.append(Report("family[vertex_counts]", counts == [3, 6, 10], {"counts": counts}))
    g, vm = load("lambda_2_3")
    cmp = compare_presentations(lambda_dn(2, 3), g, vm)
    out.append(Report("family[lambda_2_3]", cmp.passed, {"reasons": cmp.reasons}))
    for d, n in FAMILY_INSTANCES:
        rep = verify_family_proposition(d, n)
        out.append(Report(f"family[descriptions_{d}_{n}]", rep.passed,
                          {c.name: c.passed for c in rep.checks}))
    return out


def tensor_suite(type_: str) -> list:
    H = hereditary(type_)
    U = extended_tensor_algebra(pi_tensor(H).tensor)
    E = end_of_pi_tensor_pi(U)
    out = []
    for rep in (associativity_report(U), u_is_tensor_of_degree_one(U), alpha_check(E)):
        rep.name = f"{rep.name}[{type_}]"
        out.append(rep)
    return out


def rigidity(type_: str) -> Report:
    H = hereditary(type_)
    rep = ext1_rigidity(end_of_pi_tensor_pi(pi_tensor(H)))
    rep.name = f"ext1_rigidity[{type_}]"
    return rep


def morita(type_: str = "A2") -> Report:
    H = hereditary(type_)
    td = TauFunctor(H, 1)
    cat = build_catalog(H, 1, tau=td)
    psi = psi_X(H, cat.modules, 1, tau=td, labels=cat.labels)
    red = morita_reduce(psi, [projective(H, v) for v in range(H.num_vertices)])
    pi = pi_combinatorial(type_)
    rename = {f"t0_{v}": v for v in H.vertices}
    cartan = {(rename[s], rename[t]): n for (s, t), n in red.cartan().items()}
    ok = red.dim == pi.dim and cartan == pi.cartan() and \
        tuple(red.graded_dims()) == tuple(pi_graded(H, tau=td).graded_dims())
    return Report(f"morita[{type_}]", ok, {"dim": red.dim, "graded_dims": list(red.graded_dims())})


def tau_vs_knitting(type_: str) -> Report:
    """τ^- iterated on projectives against the knitted AR quiver."""
    H = hereditary(type_)
    td = TauFunctor(H, 1)
    ar = knit_ar_quiver(H)
    bad = []
    for v in range(H.num_vertices):
        x = projective(H, v)
        i = 0
        while x.total_dim:
            if (i, v) not in ar.dimvecs or tuple(x.dims) != tuple(ar.dimvecs[(i, v)]):
                bad.append((i, v))
            x = td.apply(x)
            i += 1
        last = (i - 1, v)
        if not ar.injective.get(last, False) or (i, v) in ar.dimvecs:
            bad.append(last)
    return Report(f"tau_vs_knitting[{type_}]", not bad, {"indecomposables": len(ar.tags), "mismatches": bad})


def functor_laws(type_: str, pairs: int = 50, seed: int = 0) -> Report:
    """τ^-(g∘f) = τ^-g∘τ^-f, τ^-(f+f') = τ^-f+τ^-f' and τ^-(id) = id on random morphisms."""
    H = hereditary(type_)
    td = TauFunctor(H, 1)
    mods = build_catalog(H, 1, tau=td).modules
    f = H.field
    rng = random.Random(seed)
    homs = {}

    def hom(a, b):
        if (a, b) not in homs:
            homs[(a, b)] = HomSpace(mods[a], mods[b])
        return homs[(a, b)]

    def rand(hs):
        return hs.combination({k: f(rng.randint(-5, 5)) for k in range(hs.dim)})

    checked = failures = 0
    attempts = 0
    while checked < pairs and attempts < 50 * pairs:
        attempts += 1
        a, b, c = (rng.randrange(len(mods)) for _ in range(3))
        hf, hg = hom(a, b), hom(b, c)
        if not hf.dim or not hg.dim:
            continue
        x, x2, y = rand(hf), rand(hf), rand(hg)
        ok = td.apply_morphism(y.compose(x)) == td.apply_morphism(y).compose(td.apply_morphism(x))
        ok &= td.apply_morphism(x + x2) == td.apply_morphism(x) + td.apply_morphism(x2)
        idm = td.apply_morphism(ModuleMorphism.identity(mods[a]))
        ok &= idm == ModuleMorphism.identity(idm.source)
        checked += 1
        failures += not ok
    return Report(f"functor_laws[{type_}]", failures == 0 and checked == pairs,
                  {"pairs": checked, "failures": failures, "seed": seed})


SUITES = {
    "pi": lambda slow: [lambda t=t: pi_routes(t) for t in ("A2", "A3", "D4")],
    "psi": lambda slow: [lambda t=t: psi_routes(t) for t in ("A2", "A3")],
    "bounds": lambda slow: [lambda t=t: psi_bounds(t) for t in (("A2", "A3", "D4") if slow else ("A2", "A3"))],
    "golden": lambda slow: [golden_d4, golden_l8],
    "family": lambda slow: [family_suite],
    "tensor": lambda slow: [lambda t=t: tensor_suite(t) for t in ("A2", "A3")],
    "homological": lambda slow: [lambda t=t: tau_vs_knitting(t) for t in ("A2", "A3", "A4", "D4")]
    + [lambda t=t: functor_laws(t) for t in ("A3", "D4")],
    "rigidity": lambda slow: [lambda t=t: rigidity(t) for t in ("A2", "A3")],
    "morita": lambda slow: [morita],
}


def run_suite(name: str, slow: bool = False) -> list:
    if name == "all":
        return [r for k in SUITES for r in run_suite(k, slow)]
    if name not in SUITES:
        raise KeyError(name)
    return [r for item in SUITES[name](slow) for r in _timed(item)]
