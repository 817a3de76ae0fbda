"""Comparing presentations up to vertex relabeling, arrow rescaling and sign.

Two presentations on the same quiver define the same algebra up to the
rescaling a ↦ s_a·a of arrows when, block by block, the rescaled relation
spans agree.  Rescaling multiplies the coordinate of a path by the product
of the scalars along it, so agreement of reduced echelon forms reduces to a
multiplicative linear system in the s_a: parities decide signs over GF(2)
and prime exponents are solved over ℚ.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import sympy

from .exactla import QQ, Echelon, ExactMatrix, PrimeField, solve_linear
from .presentation import AlgebraPresentation, PathElement


@dataclass
class Comparison:
    passed: bool
    reasons: list = dc_field(default_factory=list)
    arrow_map: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.passed


def relabel(p: AlgebraPresentation, target_quiver, vertex_map: dict | None = None):
    """Move ``p`` onto ``target_quiver`` matching arrows by relabeled endpoints.

    Returns (relations on target_quiver, arrow name map) or raises ValueError.
    """
    q = p.quiver
    vmap = vertex_map or {v: v for v in q.vertices}
    if sorted(vmap[v] for v in q.vertices) != sorted(target_quiver.vertices):
        raise ValueError("vertex relabeling is not a bijection onto the target vertices")
    ours: dict = {}
    for a in q.arrows:
        ours.setdefault((vmap[a.source], vmap[a.target]), []).append(a.name)
    theirs: dict = {}
    for a in target_quiver.arrows:
        theirs.setdefault((a.source, a.target), []).append(a.name)
    amap = {}
    for key in set(ours) | set(theirs):
        x, y = ours.get(key, []), theirs.get(key, [])
        if len(x) != len(y):
            raise ValueError(f"arrow count differs between {key[0]} and {key[1]}: {len(x)} vs {len(y)}")
        if len(x) == 1:
            amap[x[0]] = y[0]
        elif sorted(x) == sorted(y):
            amap.update({n: n for n in x})
        else:
            raise ValueError(f"parallel arrows between {key[0]} and {key[1]} cannot be matched by endpoints")
    rels = [PathElement.from_words(target_quiver, [(c, [amap[n] for n in q.arrow_names(path)])
                                                   for path, c in r.terms.items()], r.field)
            for r in p.relations]
    return rels, amap


def _blocks(rels):
    out: dict = {}
    for r in rels:
        out.setdefault(r.endpoints(), []).append(r)
    return out


def _rref(rels, cols, field):
    e = Echelon(field)
    for r in rels:
        e.add({cols[p]: c for p, c in r.terms.items()})
    rows, _ = e.reduced_rows()
    return rows


def _valuations(x) -> dict:
    out: dict = {}
    num, den = int(abs(x.numerator)), int(x.denominator)
    for pr, e in sympy.factorint(num).items():
        out[pr] = out.get(pr, 0) + e
    for pr, e in sympy.factorint(den).items():
        out[pr] = out.get(pr, 0) - e
    return out


def compare_presentations(ours: AlgebraPresentation, golden: AlgebraPresentation,
                          vertex_map: dict | None = None) -> Comparison:
    """Same relation spans in every block after relabeling and some arrow rescaling."""
    if ours.field != QQ or golden.field != QQ:
        raise NotImplementedError("gauge comparison is implemented over the rationals")
    try:
        rels, amap = relabel(ours, golden.quiver, vertex_map)
    except ValueError as e:
        return Comparison(False, [str(e)])
    gq = golden.quiver
    reasons = []
    mine, theirs = _blocks(rels), _blocks(golden.relations)
    equations = []  # (exponent difference per arrow index, ratio)
    for blk in sorted(set(mine) | set(theirs)):
        a, b = mine.get(blk, []), theirs.get(blk, [])
        paths = sorted({p for r in a + b for p in r.terms}, key=lambda p: p.key())
        cols = {p: k for k, p in enumerate(paths)}
        ra, rb = _rref(a, cols, QQ), _rref(b, cols, QQ)
        where = f"{gq.vertices[blk[0]]}->{gq.vertices[blk[1]]}"
        if sorted(ra) != sorted(rb):
            reasons.append(f"block {where}: relation spaces differ in shape")
            continue
        for piv in ra:
            x, y = ra[piv], rb[piv]
            if set(x) != set(y):
                reasons.append(f"block {where}: supports differ")
                continue
            for col, val in x.items():
                if col == piv:
                    continue
                diff = [0] * gq.num_arrows
                for ai in paths[col].arrows:
                    diff[ai] += 1
                for ai in paths[piv].arrows:
                    diff[ai] -= 1
                equations.append((diff, y[col] / val))
    if reasons:
        return Comparison(False, reasons, amap)
    if equations and not _solvable(equations, gq.num_arrows):
        return Comparison(False, ["no arrow rescaling matches the coefficients"], amap)
    return Comparison(True, [], amap)


def _solvable(equations, n) -> bool:
    gf2 = PrimeField(2)
    rows = [[gf2(d % 2) for d in diff] for diff, _ in equations]
    rhs = [gf2(1 if r < 0 else 0) for _, r in equations]
    if not solve_linear(ExactMatrix.from_rows(rows, gf2, cols=n), rhs).consistent:
        return False
    primes = sorted({p for _, r in equations for p in _valuations(r)})
    m = ExactMatrix.from_rows([[QQ(d) for d in diff] for diff, _ in equations], QQ, cols=n)
    for pr in primes:
        b = [QQ(_valuations(r).get(pr, 0)) for _, r in equations]
        if not solve_linear(m, b).consistent:
            return False
    return True
