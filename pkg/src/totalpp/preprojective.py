"""Preprojective algebras by three routes, graded Hom algebras and Auslander algebras."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import AlgebraError, FDAlgebra, Generator
from .bimodule import TensorAlgebra, ext_bimodule
from .exactla import QQ, Echelon
from .homological import HomologicalError, TauFunctor, _projective
from .presentation import (AlgebraPresentation, arrow_lifts, preprojective_relations,
                           quotient_algebra, recover_presentation)
from .quiver import Quiver, build_dynkin, double_quiver
from .repmod import HomSpace, ModuleError, ModuleMorphism, Representation, injective, is_isomorphic


class IterationBoundError(HomologicalError):
    pass


def letter_name(n: int) -> str:
    letters = "abcdefghijklmnopqrstuvwxyz"
    return letters[n] if n < 26 else f"{letters[n % 26]}{n // 26}"


def with_arrow_generators(alg: FDAlgebra, prefix: str = "g") -> FDAlgebra:
    """Copy of ``alg`` whose generators lift a basis of rad/rad²."""
    gens = [Generator(f"{prefix}{n}", s, t, v) for n, ((s, t), v) in enumerate(arrow_lifts(alg))]
    out = FDAlgebra(alg.field, alg.vertices, alg.src, alg.tgt, alg.mult, alg.idempotents, gens,
                    alg.labels, alg.grading, alg.name)
    out._radical = alg.radical_basis()
    return out


class GradedHomAlgebra:
    """⊕_i ⊕_{v,w} Hom(X_v, F^i X_w) with a product supplied by ``compose``.

    ``target(i, w)`` returns the module F^i X_w and ``compose(g, j, f, i)``
    returns the product of g (degree j) and f (degree i) as a morphism into
    ``target(i + j, .)``.  The realized FDAlgebra has one vertex per summand.
    """

    def __init__(self, fld, labels, summands, target, compose, top: int, name: str = "Psi", pieces=None,
                 unit=None):
        self.field = fld
        self.labels = list(labels)
        self.summands = list(summands)
        self.target = target
        self.compose = compose
        self.name = name
        n = len(self.summands)
        self.pieces: dict = {}
        for i in range(top + 1 if pieces is None else 0):
            for w in range(n):
                tw = target(i, w)
                if tw.total_dim == 0:
                    continue
                for v in range(n):
                    hs = HomSpace(self.summands[v], tw)
                    if i == 0 and v == w:
                        hs = _identity_first(hs, unit(v) if unit else None)
                    if hs.dim:
                        self.pieces[(i, v, w)] = hs
        if pieces is not None:
            self.pieces = {k: hs for k, hs in pieces.items() if hs.dim}
        self.top = max((k[0] for k in self.pieces), default=0)
        self._realize()

    def _realize(self):
        f = self.field
        src, tgt, grading, labels = [], [], [], []
        self.where = []
        self.index = {}
        for key in sorted(self.pieces):
            i, v, w = key
            ids = []
            for k in range(self.pieces[key].dim):
                ids.append(len(src))
                self.where.append((i, v, w, k))
                src.append(v)
                tgt.append(w)
                grading.append(i)
                labels.append(f"[{i}:{self.labels[v]}->{self.labels[w]}]#{k}")
            self.index[key] = ids
        n = len(self.summands)
        idem = []
        for v in range(n):
            ids = self.index.get((0, v, v))
            if not ids:
                raise AlgebraError(f"summand {self.labels[v]} is zero")
            idem.append(ids[0])
        by_tgt: dict = {}
        for b in range(len(src)):
            by_tgt.setdefault(tgt[b], []).append(b)
        mult: dict = {}
        for a in range(len(src)):
            j, w, u, ka = self.where[a]
            g = self.pieces[(j, w, u)].basis[ka]
            row = {}
            for b in by_tgt.get(w, ()):
                i, v, _, kb = self.where[b]
                fm = self.pieces[(i, v, w)].basis[kb]
                pr = self.compose(g, j, fm, i)
                vec = self._coords(i + j, v, u, pr)
                if vec:
                    row[b] = vec
            if row:
                mult[a] = row
        alg = FDAlgebra(f, self.labels, src, tgt, mult, idem, [], labels, grading, name=self.name)
        self.algebra = with_arrow_generators(alg)

    def _coords(self, i, v, u, phi: ModuleMorphism | None) -> dict:
        if phi is None:
            return {}
        hs = self.pieces.get((i, v, u))
        if hs is None:
            if not phi.is_zero():
                raise AlgebraError(f"nonzero product outside the computed degrees ({i})")
            return {}
        ids = self.index[(i, v, u)]
        return {ids[k]: c for k, c in hs.coordinates(phi).items() if c}

    def element(self, i, v, w, phi: ModuleMorphism) -> dict:
        return self._coords(i, v, w, phi)

    def morphism(self, b: int) -> ModuleMorphism:
        i, v, w, k = self.where[b]
        return self.pieces[(i, v, w)].basis[k]

    def graded_dims(self):
        return self.algebra.graded_dims()

    @property
    def dim(self):
        return self.algebra.dim


def _identity_first(hs: HomSpace, ident: ModuleMorphism | None = None) -> HomSpace:
    """Same span with the unit first; ``ident`` overrides the identity map."""
    x = hs.source
    if ident is None:
        ident = ModuleMorphism(x, hs.target, ModuleMorphism.identity(x).mats)
    e = Echelon(x.field)
    e.add(ident.flat())
    basis = [ident]
    for b in hs.basis:
        if e.add(b.flat()):
            basis.append(b)
    return HomSpace(x, hs.target, basis)


# ---------------------------------------------------------------- catalogs


@dataclass
class CatalogEntry:
    tag: tuple
    module: Representation
    injective: bool
    successor: tuple | None = None
    predecessor: tuple | None = None


@dataclass
class SummandCatalog:
    algebra: FDAlgebra
    d: int
    entries: list = dc_field(default_factory=list)
    tau: TauFunctor | None = None

    def label(self, k: int) -> str:
        i, j = self.entries[k].tag
        return f"t{i}_{self.algebra.vertices[j]}"

    @property
    def labels(self):
        return [self.label(k) for k in range(len(self.entries))]

    @property
    def modules(self):
        return [e.module for e in self.entries]

    def find(self, tag) -> int:
        for k, e in enumerate(self.entries):
            if e.tag == tuple(tag):
                return k
        raise KeyError(tag)

    def to_json(self) -> dict:
        A = self.algebra
        out = []
        for k, e in enumerate(self.entries):
            out.append({
                "label": self.label(k),
                "tag": list(e.tag),
                "dims": list(e.module.dims),
                "injective": e.injective,
                "tau_minus": None if e.successor is None else f"t{e.successor[0]}_{A.vertices[e.successor[1]]}",
                "tau": None if e.predecessor is None else f"t{e.predecessor[0]}_{A.vertices[e.predecessor[1]]}",
            })
        return {"algebra": A.name, "d": self.d, "entries": out}


def build_catalog(alg: FDAlgebra, d: int = 1, tau: TauFunctor | None = None, bound: int | None = None,
                  seed: int = 0) -> SummandCatalog:
    """τ_d^{-i} P_j for all j and i ≥ 0 until zero, deduplicated up to isomorphism."""
    td = tau or TauFunctor(alg, d)
    bound = alg.dim if bound is None else bound
    injs = [injective(alg, v) for v in range(alg.num_vertices)]
    raw = []
    for j in range(alg.num_vertices):
        x = _projective(alg, j)
        i = 0
        while x.total_dim:
            if i > bound:
                raise IterationBoundError(f"τ_d^- iteration bound {bound} exceeded; not τ_d-finite")
            raw.append(((i, j), x))
            x = td.apply(x)
            i += 1
    raw.sort(key=lambda t: t[0])
    cat = SummandCatalog(alg, d, tau=td)
    for tag, x in raw:
        if any(is_isomorphic(x, e.module, seed=seed)[0] for e in cat.entries):
            continue
        inj = any(is_isomorphic(x, I, seed=seed)[0] for I in injs)
        cat.entries.append(CatalogEntry(tag, x, inj))
    for e in cat.entries:
        y = td.apply(e.module)
        if not y.total_dim:
            continue
        hit = next((o for o in cat.entries if o.module is y), None)
        if hit is None:
            hit = next((o for o in cat.entries if is_isomorphic(y, o.module, seed=seed)[0]), None)
        if hit is None:
            raise IterationBoundError(f"catalog is not closed under τ_d^-: {e.tag}")
        e.successor = hit.tag
        hit.predecessor = e.tag
    return cat


# ---------------------------------------------------------------- Π and Ψ


def pi_combinatorial(delta, field=QQ, orientation=None, degree_bound=None) -> FDAlgebra:
    q = delta if isinstance(delta, Quiver) else build_dynkin(delta, orientation)
    dq, pairing = double_quiver(q)
    p = AlgebraPresentation(dq, preprojective_relations(dq, pairing, field), field, name=f"Pi({q.name})")
    # starred arrows carry tensor degree one
    return quotient_algebra(p, degree_bound, grading={s: 1 for s in pairing.values()})


def _summands(x):
    if isinstance(x, Representation):
        return list(getattr(x, "summands", None) or [x])
    return list(x)


def psi_X(alg: FDAlgebra, x, d: int = 1, tau: TauFunctor | None = None, labels=None,
          bound: int | None = None, name: str = "Psi") -> GradedHomAlgebra:
    """⊕_i Hom(X, τ_d^{-i} X) with g·f = τ_d^{-i}(g) f."""
    xs = _summands(x)
    td = tau or TauFunctor(alg, d)
    bound = alg.dim if bound is None else bound
    top = 0
    while any(td.iterate(m, top + 1).total_dim for m in xs):
        top += 1
        if top > bound:
            raise IterationBoundError(f"τ_d^- iteration bound {bound} exceeded; not τ_d-finite")

    def target(i, w):
        return td.iterate(xs[w], i)

    def compose(g, j, f, i):
        return td.iterate_morphism(g, i).compose(f)

    labels = labels or [m.name or str(k) for k, m in enumerate(xs)]
    h = GradedHomAlgebra(alg.field, labels, xs, target, compose, top, name=name)
    h.tau = td
    h.base = alg
    return h


def pi_graded(alg: FDAlgebra, d: int = 1, tau: TauFunctor | None = None) -> GradedHomAlgebra:
    xs = [_projective(alg, v) for v in range(alg.num_vertices)]
    return psi_X(alg, xs, d, tau=tau, labels=list(alg.vertices), name=f"Pi({alg.name})")


def pi_tensor(alg: FDAlgebra, d: int = 1, tau: TauFunctor | None = None, bound: int | None = None) -> FDAlgebra:
    td = tau or TauFunctor(alg, d)
    T = TensorAlgebra(ext_bimodule(td), bound)
    out = T.algebra
    out.name = f"T({alg.name})"
    out.tensor = T
    return out


def morita_reduce(psi: GradedHomAlgebra, y, seed: int = 0) -> FDAlgebra:
    """Corner eΨe for the summands of X matching the indecomposable summands of y."""
    verts = []
    for m in _summands(y):
        hit = None
        for v, xv in enumerate(psi.summands):
            if m.algebra is xv.algebra and is_isomorphic(m, xv, seed=seed)[0]:
                hit = v
                break
        if hit is None:
            raise ModuleError(f"{m.name} is not in add X")
        if hit not in verts:
            verts.append(hit)
    if sorted(verts) == list(range(len(psi.summands))):
        return psi.algebra
    A = psi.algebra
    vs = sorted(verts)
    vset = set(vs)
    keep = [i for i in range(A.dim) if A.src[i] in vset and A.tgt[i] in vset]
    sub = A.subalgebra_on(keep, vs, name=A.name + "_corner")
    return with_arrow_generators(sub)


# ---------------------------------------------------------------- Auslander algebras


@dataclass
class AuslanderResult:
    algebra: FDAlgebra
    catalog: SummandCatalog
    presentation: AlgebraPresentation
    arrow_images: list
    hom: GradedHomAlgebra

    def __iter__(self):
        return iter((self.algebra, self.catalog, self.presentation))


def auslander_algebra(alg: FDAlgebra, d: int = 1, tau: TauFunctor | None = None, seed: int = 0,
                      arrow_names=None) -> AuslanderResult:
    """Γ = End_Λ(⊕ catalog) with vertices labelled t{i}_{j} and a recovered presentation."""
    cat = build_catalog(alg, d, tau=tau, seed=seed)
    xs = cat.modules

    def target(i, w):
        return xs[w]

    def compose(g, j, f, i):
        return g.compose(f)

    h = GradedHomAlgebra(alg.field, cat.labels, xs, target, compose, 0, name=f"Gamma({alg.name})")
    names = arrow_names or (lambda n, s, t: letter_name(n))
    rec = recover_presentation(h.algebra, arrow_names=names, full=True)
    rec.presentation.name = h.algebra.name
    return AuslanderResult(h.algebra, cat, rec.presentation, rec.arrow_images, h)
