"""Lattice families Λ^(d,n), Π^(d,n), Ψ^(d,n) and their cross-checks.

Vertices are lattice points x in Z_{>=0}^{d+1} with coordinate sum n-1,
labelled by their digits ("120").  Arrows a_{x,i}: x -> x + f_i are named
``a_{label}_{i}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .compare import compare_presentations
from .exactla import QQ
from .homological import TauFunctor
from .presentation import AlgebraPresentation, PathElement, quotient_algebra, recover_presentation
from .preprojective import auslander_algebra, pi_graded
from .quiver import add, build_q_dn, direction, lattice_arrow_name, lattice_points, point_label
from .total import Report, total_presentation, verify_iso_via_surjection

FAMILY_INSTANCES = ((1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class FamilyRelationTag:
    x: tuple
    i: int
    j: int

    def name(self) -> str:
        return f"r_{point_label(self.x)}_{self.i}{self.j}"


def family_relations(d: int, n: int, directions=None):
    """All r_{x,i,j}, one per unordered pair {i, j}, as (tag, words).

    A commutator a_{x+f_i,j}a_{x,i} - a_{x+f_j,i}a_{x,j} when both two-step
    routes exist (tag with i < j), otherwise the single composite.
    """
    pts = set(lattice_points(d, n))
    dirs = sorted(directions or range(1, d + 2))
    out = []
    for x in lattice_points(d, n):
        for a, i in enumerate(dirs):
            for j in dirs[a + 1:]:
                fi, fj = direction(d, i), direction(d, j)
                end = add(add(x, fi), fj)
                if end not in pts:
                    continue
                yi, yj = add(x, fi), add(x, fj)
                via_i = [lattice_arrow_name(x, i), lattice_arrow_name(yi, j)]
                via_j = [lattice_arrow_name(x, j), lattice_arrow_name(yj, i)]
                if yi in pts and yj in pts:
                    out.append((FamilyRelationTag(x, i, j), [(1, via_i), (-1, via_j)]))
                elif yi in pts:
                    out.append((FamilyRelationTag(x, i, j), [(1, via_i)]))
                elif yj in pts:
                    out.append((FamilyRelationTag(x, j, i), [(1, via_j)]))
    return out


def _presentation(q, rels, field, name):
    els = [PathElement.from_words(q, [(field(c), w) for c, w in words], field) for _, words in rels]
    p = AlgebraPresentation(q, els, field, name=name)
    p.tags = [t for t, _ in rels]
    return p


def pi_dn(d: int, n: int, field=QQ) -> AlgebraPresentation:
    q = build_q_dn(d, n)
    return _presentation(q, family_relations(d, n), field, f"Pi_{d}_{n}")


def lambda_dn(d: int, n: int, field=QQ) -> AlgebraPresentation:
    q = build_q_dn(d, n, include_last=False)
    q.name = f"Qc{d}_{n}"
    return _presentation(q, family_relations(d, n, range(1, d + 1)), field, f"Lambda_{d}_{n}")


def is_excluded(tag: FamilyRelationTag, d: int) -> bool:
    """r_{x,i,d+1} with x_{d+1} = 0 is left out of Ψ."""
    return tag.j == d + 1 and tag.x[d] == 0


def psi_dn(d: int, n: int, field=QQ) -> AlgebraPresentation:
    q = build_q_dn(d, n)
    rels = [(t, w) for t, w in family_relations(d, n) if not is_excluded(t, d)]
    return _presentation(q, rels, field, f"Psi_{d}_{n}")


def lambda_algebra(d: int, n: int, field=QQ):
    return quotient_algebra(lambda_dn(d, n, field))


def tau_vertex(x, i: int = 1):
    """Lattice point of τ^{-i} at x in the next family: x - i·f_{d+2}."""
    x = tuple(x)
    return (x[0] - i,) + x[1:-1] + (x[-1] + i,)


def auslander_vertex_map(d: int, n: int, catalog) -> dict:
    """Catalog label t{i}_{y} ↦ label of (y, 0) - i·f_{d+2}.

    Projectives sit on the face x_{d+2} = 0 and τ_d^- moves by -f_{d+2}.
    """
    out = {}
    for k, e in enumerate(catalog.entries):
        i, j = e.tag
        y = tuple(int(c) for c in catalog.algebra.vertices[j])
        out[catalog.label(k)] = point_label(tau_vertex(y + (0,), i))
    return out


@dataclass
class FamilyReport:
    d: int
    n: int
    checks: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"d": self.d, "n": self.n, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def _quiver_match(ours, golden, vmap) -> tuple:
    cmp = compare_presentations(ours, golden, vmap)
    return cmp.passed, cmp.reasons


def verify_family_proposition(d: int, n: int, seed: int = 0) -> FamilyReport:
    """Checks (a) Auslander, (b) preprojective, (c) total, each against the lattice presentation."""
    rep = FamilyReport(d, n)
    lam = lambda_algebra(d, n)
    td = TauFunctor(lam, d)

    au = auslander_algebra(lam, d, tau=td, seed=seed)
    vmap = auslander_vertex_map(d, n, au.catalog)
    gold = lambda_dn(d + 1, n)
    ok, why = _quiver_match(au.presentation, gold, vmap)
    gdim = quotient_algebra(gold).dim
    rep.checks.append(Report("auslander", ok and gdim == au.algebra.dim, {
        "vertices": len(vmap), "dim_gamma": au.algebra.dim, "dim_lattice": gdim, "reasons": why}))

    pg = pi_graded(lam, d, tau=td)
    rec = recover_presentation(pg.algebra)
    gold = pi_dn(d, n)
    ok, why = _quiver_match(rec, gold, None)
    gdim = quotient_algebra(gold).dim
    rep.checks.append(Report("preprojective", ok and gdim == pg.dim, {
        "dim_pi": pg.dim, "dim_lattice": gdim, "graded_dims": list(pg.graded_dims()), "reasons": why}))

    tp = total_presentation(lam, d, tau=td, seed=seed, auslander=au)
    gold = psi_dn(d + 1, n)
    ok, why = _quiver_match(tp.presentation, gold, vmap)
    iso = verify_iso_via_surjection(tp)
    gdim = quotient_algebra(gold).dim
    rep.checks.append(Report("total", ok and iso.passed and gdim == iso.details["dim_psi"], {
        "dim_psi": iso.details["dim_psi"], "dim_lattice": gdim, "iso": iso.passed, "reasons": why}))
    return rep
