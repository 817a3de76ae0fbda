"""One test per acceptance criterion, each reporting a single PASS/FAIL line."""
import time

import pytest

import conftest
from oracles import dynkin_oracle
from totalpp.compare import compare_presentations
from totalpp.families import lambda_dn
from totalpp.golden import load
from totalpp.presentation import path_algebra
from totalpp.quiver import build_dynkin
from totalpp.suites import (family_suite, functor_laws, golden_d4, golden_l8, morita, pi_routes, psi_bounds,
                            psi_routes, rigidity, tau_vs_knitting, tensor_suite)
from totalpp.total import total_presentation


def report(number, title, checks, limit, elapsed, detail=""):
    ok = all(checks) and elapsed < limit
    line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s, limit {limit}s){detail}"
    print(line)
    conftest.ACCEPTANCE_LINES.append(line)
    return ok


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_criterion_1_preprojective_routes():
    checks, worst, dims = [], 0.0, []
    for t in ("A2", "A3", "D4"):
        rep, s = timed(lambda: pi_routes(t))
        expected = sum(dynkin_oracle(t[0], int(t[1:])).pi_graded())
        checks.append(rep.passed and rep.details["dims"] == [expected] * 3)
        dims.append(rep.details["dims"][0])
        worst = max(worst, s)
    assert report(1, "three routes to the preprojective algebra", checks, 10, worst, f" dims {dims}")


def test_criterion_2_total_algebra_routes():
    checks, worst, graded = [], 0.0, []
    for t in ("A2", "A3"):
        rep, s = timed(lambda: psi_routes(t))
        expected = list(dynkin_oracle(t[0], int(t[1:])).psi_graded())
        checks.append(rep.passed and all(d == expected for d in rep.details["graded_dims"]))
        graded.append(rep.details["graded_dims"][0])
        worst = max(worst, s)
    checks.append(graded[0] == [5, 2])
    assert report(2, "total algebra as Hom, End and quotient", checks, 60, worst, f" graded {graded}")


def test_criterion_3_dimension_bounds():
    reps, s = timed(lambda: [psi_bounds(t) for t in ("A2", "A3")])
    info = [(r.details["gldim"], r.details["domdim"]) for r in reps]
    assert report(3, "gldim <= 3 <= domdim for A2, A3", [r.passed for r in reps], 60, s, f" {info}")


@pytest.mark.slow
def test_criterion_3_dimension_bounds_d4():
    rep, s = timed(lambda: psi_bounds("D4"))
    info = (rep.details["gldim"], rep.details["domdim"])
    assert report("3-slow", "gldim <= 3 <= domdim for D4", [rep.passed], 1800, s, f" {info}")


def test_criterion_4_golden_presentations():
    def run():
        reps = golden_d4() + golden_l8()
        tp = total_presentation(path_algebra(build_dynkin("D4")), 1)
        q = tp.presentation.quiver
        new = sorted(set(q.arrow_index) - set(tp.auslander.presentation.quiver.arrow_index))
        return reps, q.num_vertices, new
    (reps, nverts, new), s = timed(run)
    checks = [r.passed for r in reps] + [nverts == 12, len(new) == 8]
    assert report(4, "golden total presentations", checks, 120, s,
                  f" {[(r.name, r.passed) for r in reps]}")


def test_criterion_5_lattice_family():
    def run():
        reps = family_suite()
        gold, vmap = load("lambda_2_3")
        cmp = compare_presentations(lambda_dn(2, 3), gold, vmap)
        return reps, cmp
    (reps, cmp), s = timed(run)
    checks = [r.passed for r in reps] + [cmp.passed]
    assert report(5, "lattice family", checks, 300, s, f" {[(r.name, r.passed) for r in reps]}")


def test_criterion_6_extended_tensor_algebra():
    reps, s = timed(lambda: tensor_suite("A2") + tensor_suite("A3"))
    assert report(6, "extended tensor algebra", [r.passed for r in reps], 60, s,
                  f" {[(r.name, r.passed) for r in reps]}")


def test_criterion_7_homological_oracles():
    def run():
        reps = [tau_vs_knitting(t) for t in ("A2", "A3", "A4", "D4")]
        reps += [functor_laws(t, pairs=50, seed=0) for t in ("A3", "D4")]
        return reps
    reps, s = timed(run)
    assert report(7, "tau inverse against knitting and functor laws", [r.passed for r in reps], 60, s,
                  f" {[(r.name, r.passed) for r in reps]}")


def test_criterion_8_ext_rigidity():
    reps, s = timed(lambda: [rigidity("A2"), rigidity("A3")])
    assert report(8, "Ext^1 rigidity of the tensor square", [r.passed for r in reps], 120, s)


def test_criterion_9_morita_corner():
    rep, s = timed(lambda: morita("A2"))
    checks = [rep.passed, rep.details["dim"] == 4, rep.details["graded_dims"] == [3, 1]]
    assert report(9, "Morita corner of the total algebra", checks, 10, s,
                  f" dim {rep.details['dim']} graded {rep.details['graded_dims']}")
