"""Projective resolutions, Ext, the functor Ext^d(DΛ, -), and AR knitting."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import FDAlgebra
from .exactla import Echelon, ExactMatrix, QuotientSpace, nullspace, solve_linear
from .quiver import Arrow, Quiver
from .repmod import (ModuleError, ModuleMorphism, Representation, direct_sum, dualize, injective,
                     is_isomorphic, kernel_of, opposite_of, projective, zero_module)


class HomologicalError(ValueError):
    pass


class BoundExceeded(HomologicalError):
    pass


def _projective(alg: FDAlgebra, v: int) -> Representation:
    cache = alg.__dict__.setdefault("_proj_cache", {})
    if v not in cache:
        cache[v] = projective(alg, v)
    return cache[v]


class FreeModule:
    """A direct sum of indecomposable projectives P_{v_0} ⊕ P_{v_1} ⊕ ..."""

    def __init__(self, alg: FDAlgebra, verts):
        self.algebra = alg
        self.verts = list(verts)
        projs = [_projective(alg, v) for v in self.verts]
        self.projs = projs
        self.module = direct_sum(projs).module if projs else zero_module(alg)
        nv = alg.num_vertices
        self.offsets = []
        run = [0] * nv
        for p in projs:
            self.offsets.append(list(run))
            for w in range(nv):
                run[w] += p.dims[w]

    def __len__(self):
        return len(self.verts)

    def generator(self, s: int):
        """The element e_{v_s} of summand s, as a vector at vertex v_s."""
        v = self.verts[s]
        vec = [self.algebra.field.zero] * self.module.dims[v]
        p = self.projs[s]
        k = p.basis_elements[v].index(self.algebra.idempotents[v])
        vec[self.offsets[s][v] + k] = self.algebra.field.one
        return vec

    def split(self, vec, w: int):
        """Decompose a vector at vertex w into (summand, algebra element) parts."""
        out = []
        for s, p in enumerate(self.projs):
            o = self.offsets[s][w]
            el = {}
            for k, x in enumerate(p.basis_elements[w]):
                c = vec[o + k]
                if c:
                    el[x] = c
            if el:
                out.append((s, el))
        return out

    def hom_from(self, target: Representation, images) -> ModuleMorphism:
        """The morphism sending generator s to images[s] (a vector at v_s)."""
        A = self.algebra
        f = A.field
        mats = []
        for w in range(A.num_vertices):
            rows = []
            for s, p in enumerate(self.projs):
                y = images[s]
                for x in p.basis_elements[w]:
                    rows.append(tuple(target.action(x).row_times(y)))
            mats.append(ExactMatrix(f, len(rows), target.dims[w], tuple(rows)))
        return ModuleMorphism(self.module, target, mats)


def radical_top(m: Representation):
    """Per vertex, standard basis vectors spanning a complement of (m·rad)_v."""
    A = m.algebra
    f = m.field
    tops = []
    for v in range(A.num_vertices):
        e = Echelon(f)
        for g, gm in zip(A.generators, m.mats):
            if g.source == v:
                for row in gm.entries:
                    e.add({i: x for i, x in enumerate(row) if x})
        top = []
        for i in range(m.dims[v]):
            if e.add({i: f.one}):
                vec = [f.zero] * m.dims[v]
                vec[i] = f.one
                top.append(vec)
        tops.append(top)
    return tops


def projective_cover(m: Representation):
    """(free module, epimorphism onto m)."""
    tops = radical_top(m)
    verts, images = [], []
    for v, top in enumerate(tops):
        for vec in top:
            verts.append(v)
            images.append(vec)
    F = FreeModule(m.algebra, verts)
    return F, F.hom_from(m, images)


@dataclass
class ProjectiveResolution:
    module: Representation
    terms: list
    differentials: list
    syzygies: list
    complete: bool
    minimal: bool = True

    @property
    def length(self):
        return len(self.terms) - 1

    def term_vertices(self):
        return [t.verts for t in self.terms]


def minimal_resolution(x: Representation, length: int) -> ProjectiveResolution:
    """Minimal projective resolution with terms P_0 .. P_length.

    ``differentials[0]`` is the augmentation P_0 -> x and ``differentials[k]``
    maps P_k -> P_{k-1}.  Stops early once a syzygy vanishes.
    """
    if length < 0:
        raise HomologicalError("length must be non-negative")
    terms, diffs, syz = [], [], []
    K = x
    inc = ModuleMorphism.identity(x)
    complete = x.total_dim == 0
    for k in range(length + 1):
        if K.total_dim == 0:
            complete = True
            break
        F, eps = projective_cover(K)
        terms.append(F)
        diffs.append(inc.compose(eps))
        K, inc = kernel_of(eps)
        syz.append(K)
    else:
        complete = K.total_dim == 0
    return ProjectiveResolution(x, terms, diffs, syz, complete)


# ---------------------------------------------------------------- Hom(P, Y)


def _free_hom_layout(F: FreeModule, y: Representation):
    offs, n = [], 0
    for v in F.verts:
        offs.append(n)
        n += y.dims[v]
    return offs, n


def _precompose(F_src: FreeModule, images, F_tgt: FreeModule, y: Representation, xi: dict):
    """ξ ∘ φ where φ: F_src -> F_tgt sends generator s to images[s].

    ξ ∈ Hom(F_tgt, y) is a sparse coordinate vector; so is the result.
    """
    offs_t, _ = _free_hom_layout(F_tgt, y)
    offs_s, _ = _free_hom_layout(F_src, y)
    f = y.field
    comps = []
    for k, v in enumerate(F_tgt.verts):
        comps.append([xi.get(offs_t[k] + i, f.zero) for i in range(y.dims[v])])
    out = {}
    for s, img in enumerate(images):
        w = F_src.verts[s]
        acc = [f.zero] * y.dims[w]
        for k, el in F_tgt.split(img, w):
            if not any(comps[k]):
                continue
            part = y.act(comps[k], el, F_tgt.verts[k]).get(w)
            if part:
                acc = [a + b for a, b in zip(acc, part)]
        for i, c in enumerate(acc):
            if c:
                out[offs_s[s] + i] = c
    return out


def _generator_images(res: ProjectiveResolution, k: int):
    """Images of the generators of P_k under d_k, as vectors in P_{k-1}."""
    F = res.terms[k]
    d = res.differentials[k]
    return [d.apply(F.generator(s), F.verts[s]) for s in range(len(F))]


def coboundary(res: ProjectiveResolution, k: int, y: Representation):
    """Matrix columns of Hom(P_{k-1}, y) -> Hom(P_k, y), as sparse images of unit vectors."""
    F_prev, F = res.terms[k - 1], res.terms[k]
    images = _generator_images(res, k)
    _, n_prev = _free_hom_layout(F_prev, y)
    cols = []
    one = y.field.one
    for i in range(n_prev):
        cols.append(_precompose(F, images, F_prev, y, {i: one}))
    return cols


@dataclass
class ExtSpace:
    degree: int
    dim: int
    cocycles: list
    quotient: object
    resolution: ProjectiveResolution


def _ext_data(res: ProjectiveResolution, i: int, y: Representation):
    f = y.field
    if i >= len(res.terms):
        return None
    F = res.terms[i]
    _, n = _free_hom_layout(F, y)
    # cocycles: kernel of Hom(P_i, y) -> Hom(P_{i+1}, y)
    if i + 1 < len(res.terms):
        cols = coboundary(res, i + 1, y)
        eqs: dict = {}
        for c, col in enumerate(cols):
            for r, x in col.items():
                eqs.setdefault(r, {})[c] = x
        z = nullspace(list(eqs.values()), n, f)
    else:
        if not res.complete:
            raise HomologicalError("resolution too short for this Ext degree")
        z = [{c: f.one} for c in range(n)]
    b = coboundary(res, i, y) if i >= 1 else []
    return QuotientSpace(z, [v for v in b if v], f)


def ext_space(i: int, x: Representation, y: Representation, res: ProjectiveResolution | None = None) -> ExtSpace:
    if i < 0:
        raise HomologicalError("Ext degree must be non-negative")
    if res is None:
        res = minimal_resolution(x, i + 1)
    q = _ext_data(res, i, y)
    if q is None:
        return ExtSpace(i, 0, [], None, res)
    return ExtSpace(i, q.dim, list(q.reps), q, res)


# ---------------------------------------------------------------- tau functor


class TauFunctor:
    """X ↦ Ext^d(DΛ, X) with its right module structure, on objects and morphisms.

    DΛ = ⊕_v I_v is resolved summand by summand.  Left multiplication by a
    generator g: s -> t is a map I_s -> I_t which is lifted to a chain map
    between the resolutions; the right action on Ext^d(DΛ, X) is
    precomposition with the degree-d component of that lift.
    """

    def __init__(self, alg: FDAlgebra, d: int = 1, check: bool = True):
        if d < 1:
            raise HomologicalError("d must be positive")
        self.algebra = alg
        self.d = d
        if check:
            gl = global_dimension(alg, bound=d + 1)
            if gl > d:
                raise HomologicalError(f"global dimension {gl} exceeds d = {d}")
        self.injectives = [injective(alg, v) for v in range(alg.num_vertices)]
        self.res = [minimal_resolution(I, d + 1) for I in self.injectives]
        for r in self.res:
            if not r.complete:
                raise HomologicalError(f"injective has projective dimension > {d}")
        self.lifts = [self._lift_generator(gi) for gi in range(len(alg.generators))]
        self._objects: dict = {}
        self._morphisms: dict = {}

    def _left_mult(self, gi: int) -> ModuleMorphism:
        """x ↦ g·x as a morphism I_s -> I_t."""
        A = self.algebra
        f = A.field
        g = A.generators[gi]
        Is, It = self.injectives[g.source], self.injectives[g.target]
        mats = []
        for w in range(A.num_vertices):
            rows = []
            # (g φ)(x) = φ(x g) for x in e_w A e_t
            for y in Is.basis_elements[w]:
                row = []
                for x in It.basis_elements[w]:
                    row.append(A.product({x: f.one}, g.vector).get(y, f.zero))
                rows.append(tuple(row))
            mats.append(ExactMatrix(f, Is.dims[w], It.dims[w], tuple(rows)))
        phi = ModuleMorphism(Is, It, mats)
        return phi

    def _lift_generator(self, gi: int):
        A = self.algebra
        g = A.generators[gi]
        rs, rt = self.res[g.source], self.res[g.target]
        L = self._left_mult(gi)
        maps = []  # maps[k] = generator images of c_k: P_k^s -> P_k^t
        for k in range(len(rs.terms)):
            Fs = rs.terms[k]
            if k >= len(rt.terms):
                if len(Fs):
                    # the target resolution stopped, the lift must be zero
                    maps.append([[A.field.zero] * 0 for _ in range(len(Fs))])
                else:
                    maps.append([])
                continue
            dt = rt.differentials[k]
            imgs = []
            if k == 0:
                eps_s = rs.differentials[0]
                targets = [L.apply(eps_s.apply(Fs.generator(s), Fs.verts[s]), Fs.verts[s])
                           for s in range(len(Fs))]
            else:
                prev = maps[k - 1]
                cprev = self._as_morphism(rs.terms[k - 1], rt.terms[k - 1], prev)
                ds = rs.differentials[k]
                targets = [cprev.apply(ds.apply(Fs.generator(s), Fs.verts[s]), Fs.verts[s])
                           for s in range(len(Fs))]
            for s in range(len(Fs)):
                w = Fs.verts[s]
                sol = solve_linear(dt.mats[w].transpose(), targets[s])
                if not sol.consistent:
                    raise HomologicalError("chain lift failed; resolution is not exact")
                imgs.append(list(sol.particular))
            maps.append(imgs)
        return maps

    def _as_morphism(self, Fs: FreeModule, Ft: FreeModule, imgs):
        return Fs.hom_from(Ft.module, imgs)

    def _ext_quotients(self, x: Representation):
        d = self.d
        out = []
        for r in self.res:
            q = _ext_data(r, d, x) if d < len(r.terms) else None
            out.append(q)
        return out

    def apply(self, x: Representation) -> Representation:
        key = id(x)
        hit = self._objects.get(key)
        if hit is not None and hit[0] is x:
            return hit[1]
        if x.algebra is not self.algebra:
            raise ModuleError("module over a different algebra")
        A = self.algebra
        f = A.field
        d = self.d
        qs = self._ext_quotients(x)
        dims = [q.dim if q is not None else 0 for q in qs]
        mats = []
        for gi, g in enumerate(A.generators):
            s, t = g.source, g.target
            rows = []
            if dims[t] and dims[s]:
                Fs, Ft = self.res[s].terms[d], self.res[t].terms[d]
                imgs = self.lifts[gi][d]
                for xi in qs[t].reps:
                    pulled = _precompose(Fs, imgs, Ft, x, xi)
                    c = qs[s].coordinates(pulled)
                    rows.append(tuple(c.get(k, f.zero) for k in range(dims[s])))
            else:
                rows = [tuple(f.zero for _ in range(dims[s])) for _ in range(dims[t])]
            mats.append(ExactMatrix(f, dims[t], dims[s], tuple(rows)))
        out = Representation(A, dims, mats, name=f"tau-({x.name})")
        out._ext = qs
        self._objects[key] = (x, out)
        return out

    def apply_morphism(self, phi: ModuleMorphism) -> ModuleMorphism:
        key = id(phi)
        hit = self._morphisms.get(key)
        if hit is not None and hit[0] is phi:
            return hit[1]
        X, Y = phi.source, phi.target
        tX, tY = self.apply(X), self.apply(Y)
        A = self.algebra
        f = A.field
        mats = []
        for v in range(A.num_vertices):
            qx, qy = tX._ext[v], tY._ext[v]
            rows = []
            if tX.dims[v] and tY.dims[v]:
                F = self.res[v].terms[self.d]
                offs_x, _ = _free_hom_layout(F, X)
                offs_y, _ = _free_hom_layout(F, Y)
                for xi in qx.reps:
                    pushed = {}
                    for k, w in enumerate(F.verts):
                        comp = [xi.get(offs_x[k] + i, f.zero) for i in range(X.dims[w])]
                        if any(comp):
                            img = phi.apply(comp, w)
                            for i, c in enumerate(img):
                                if c:
                                    pushed[offs_y[k] + i] = c
                    c = qy.coordinates(pushed)
                    rows.append(tuple(c.get(k, f.zero) for k in range(tY.dims[v])))
            else:
                rows = [tuple(f.zero for _ in range(tY.dims[v])) for _ in range(tX.dims[v])]
            mats.append(ExactMatrix(f, tX.dims[v], tY.dims[v], tuple(rows)))
        out = ModuleMorphism(tX, tY, mats)
        self._morphisms[key] = (phi, out)
        return out

    def iterate(self, x: Representation, i: int) -> Representation:
        for _ in range(i):
            x = self.apply(x)
        return x

    def iterate_morphism(self, phi: ModuleMorphism, i: int) -> ModuleMorphism:
        for _ in range(i):
            phi = self.apply_morphism(phi)
        return phi


def tau_minus(td: TauFunctor, x: Representation) -> Representation:
    return td.apply(x)


def tau_minus_morphism(td: TauFunctor, f: ModuleMorphism) -> ModuleMorphism:
    return td.apply_morphism(f)


# ---------------------------------------------------------------- dimensions


def _syzygy_repeats(k: Representation, earlier) -> bool:
    return any(e.dims == k.dims and is_isomorphic(e, k)[0] for e in earlier)


def projective_dimension(x: Representation, bound: int):
    """Projective dimension, or math.inf when syzygies repeat or the bound is hit."""
    if x.total_dim == 0:
        return 0
    K = x
    seen = []
    for k in range(bound + 1):
        F, eps = projective_cover(K)
        K, _ = kernel_of(eps)
        if K.total_dim == 0:
            return k
        if _syzygy_repeats(K, seen):
            return math.inf
        seen.append(K)
    return math.inf


def global_dimension(alg: FDAlgebra, bound: int | None = None):
    if bound is None:
        bound = 2 * alg.num_vertices + 2
    from .repmod import simple
    best = 0
    for v in range(alg.num_vertices):
        pd = projective_dimension(simple(alg, v), bound)
        best = max(best, pd)
        if best == math.inf:
            break
    return best


def loewy_length(alg: FDAlgebra) -> int:
    if alg.basis_paths is not None:
        return max((p.length for p in alg.basis_paths), default=0) + 1
    rad = alg.radical_basis()
    if not rad:
        return 1
    power = list(rad)
    n = 1
    while power:
        e = Echelon(alg.field)
        nxt = []
        for x in power:
            for r in rad:
                pr = alg.product(x, r)
                if pr and e.add(pr):
                    nxt.append(pr)
        power = nxt
        n += 1
    return n


def projective_injective_vertices(alg: FDAlgebra):
    out = []
    injs = [injective(alg, w) for w in range(alg.num_vertices)]
    for v in range(alg.num_vertices):
        P = _projective(alg, v)
        if any(I.dims == P.dims and is_isomorphic(P, I)[0] for I in injs):
            out.append(v)
    return out


def dominant_dimension(alg: FDAlgebra, bound: int | None = None):
    """Leading projective-injective terms of the minimal injective coresolution of A_A.

    Computed dually: resolve D(A_A) over the opposite algebra.  Returns
    math.inf when the coresolution ends with every term projective-injective;
    returns ``bound`` when the bound is reached first.
    """
    if bound is None:
        bound = 2 * loewy_length(alg) + 4
    op = opposite_of(alg)
    pi_op = set(projective_injective_vertices(op))
    dA = direct_sum([dualize(_projective(alg, v)) for v in range(alg.num_vertices)]).module
    K = dA
    count = 0
    for _ in range(bound):
        if K.total_dim == 0:
            return math.inf
        F, eps = projective_cover(K)
        if not all(v in pi_op for v in F.verts):
            return count
        count += 1
        K, _ = kernel_of(eps)
    if K.total_dim == 0:
        return math.inf
    return count


# ---------------------------------------------------------------- knitting


@dataclass
class ARQuiver:
    tags: list
    dimvecs: dict
    arrows: list
    tau_pairs: list
    injective: dict
    vertex_labels: tuple = ()

    def label(self, tag) -> str:
        i, v = tag
        return f"t{i}_{v}"

    def to_quiver(self) -> Quiver:
        arrows = [Arrow(f"x{n}", self.label(s), self.label(t)) for n, (s, t) in enumerate(self.arrows)]
        return Quiver([self.label(t) for t in self.tags], arrows, name="AR")

    def to_dot(self) -> str:
        lines = ['digraph "AR" {']
        for t in self.tags:
            dv = "".join(str(x) for x in self.dimvecs[t])
            lines.append(f'  "{self.label(t)}" [label="{self.label(t)}\\n{dv}"];')
        for s, t in self.arrows:
            lines.append(f'  "{self.label(s)}" -> "{self.label(t)}";')
        for x, y in self.tau_pairs:
            lines.append(f'  "{self.label(y)}" -> "{self.label(x)}" [style=dashed, constraint=false];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def knit_ar_quiver(h: FDAlgebra, max_vertices: int = 300) -> ARQuiver:
    """AR quiver of a hereditary representation-finite path algebra, by knitting.

    Only the quiver is used: dimension vectors of projectives and injectives
    come from path counts, and each τ⁻X is computed by the mesh rule
    dim τ⁻X = Σ_{X→E} dim E − dim X.
    """
    q = h.quiver
    if q is None:
        raise HomologicalError("knitting needs a path algebra with a quiver")
    if h.presentation is not None and h.presentation.relations:
        raise HomologicalError("knitting needs a hereditary path algebra (no relations)")
    n = q.num_vertices
    cnt = [[0] * n for _ in range(n)]  # cnt[u][v] = number of paths u -> v
    for p in h.basis_paths:
        cnt[p.source][p.target] += 1
    proj = {v: tuple(cnt[w][v] for w in range(n)) for v in range(n)}
    inj = {tuple(cnt[v][w] for w in range(n)) for v in range(n)}
    tags = [(0, v) for v in range(n)]
    dim = {(0, v): proj[v] for v in range(n)}
    succ = {t: [] for t in tags}
    pred = {t: [] for t in tags}
    arrows = []
    for a in range(q.num_arrows):
        s, t = (0, q.arrow_source(a)), (0, q.arrow_target(a))
        succ[s].append(t)
        pred[t].append(s)
        arrows.append((s, t))
    done: dict = {}
    pending = list(tags)
    tau_pairs = []
    while pending:
        progress = False
        for x in list(pending):
            if any(y not in done for y in pred[x]):
                continue
            pending.remove(x)
            progress = True
            if dim[x] in inj:
                done[x] = None
                continue
            new = tuple(sum(dim[e][k] for e in succ[x]) - dim[x][k] for k in range(n))
            if any(c < 0 for c in new) or not any(new):
                raise HomologicalError("knitting produced an invalid dimension vector")
            y = (x[0] + 1, x[1])
            dim[y] = new
            tags.append(y)
            succ[y], pred[y] = [], []
            for e in succ[x]:
                succ[e].append(y)
                pred[y].append(e)
                arrows.append((e, y))
            done[x] = y
            tau_pairs.append((x, y))
            pending.append(y)
            if len(tags) > max_vertices:
                raise BoundExceeded("knitting does not terminate; not of Dynkin type")
        if not progress:
            raise HomologicalError("knitting is stuck")
    tags.sort()
    arrows.sort()
    return ARQuiver(tags, dim, arrows, sorted(tau_pairs),
                    {t: done.get(t) is None for t in tags}, q.vertices)
