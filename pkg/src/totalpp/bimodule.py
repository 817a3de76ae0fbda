"""Bimodules over a basic algebra, balanced tensor products and tensor algebras.

A bimodule B over Λ is stored block-wise: ``dims[(u, w)] = dim e_u B e_w``.
For a generator g: s -> t the right action maps block (u, t) to (u, s) and the
left action maps block (s, w) to (t, w); both act on row vectors.
"""
from __future__ import annotations

from .algebra import FDAlgebra, Generator
from .exactla import Echelon, ExactMatrix
from .repmod import ModuleMorphism, Representation, opposite_of


class BimoduleError(ValueError):
    pass


class NotNilpotentError(BimoduleError):
    pass


class Bimodule:
    def __init__(self, algebra: FDAlgebra, dims: dict, right, left, name: str = "B"):
        self.algebra = algebra
        self.field = algebra.field
        n = algebra.num_vertices
        self.dims = {(u, w): dims.get((u, w), 0) for u in range(n) for w in range(n)}
        self.right = right
        self.left = left
        self.name = name
        self._right_mods: dict = {}
        self._left_mods: dict = {}

    @property
    def total_dim(self):
        return sum(self.dims.values())

    def right_module(self, u: int) -> Representation:
        """e_u B as a right module."""
        m = self._right_mods.get(u)
        if m is None:
            A = self.algebra
            dims = [self.dims[(u, w)] for w in range(A.num_vertices)]
            m = Representation(A, dims, [self.right[gi][u] for gi in range(len(A.generators))],
                               name=f"{self.name}[{A.vertices[u]},-]")
            self._right_mods[u] = m
        return m

    def left_module(self, w: int) -> Representation:
        """B e_w as a right module over the opposite algebra."""
        m = self._left_mods.get(w)
        if m is None:
            A = self.algebra
            op = opposite_of(A)
            dims = [self.dims[(u, w)] for u in range(A.num_vertices)]
            m = Representation(op, dims, [self.left[gi][w] for gi in range(len(A.generators))],
                               name=f"{self.name}[-,{A.vertices[w]}]")
            self._left_mods[w] = m
        return m

    def right_action(self, u: int, x: int) -> ExactMatrix:
        """Matrix of m ↦ m·x from block (u, tgt x) to (u, src x)."""
        return self.right_module(u).action(x)

    def left_action(self, w: int, x: int) -> ExactMatrix:
        """Matrix of m ↦ x·m from block (src x, w) to (tgt x, w)."""
        return self.left_module(w).action(x)

    def check(self) -> bool:
        """Both actions are module structures and they commute on generators."""
        A = self.algebra
        n = A.num_vertices
        if not all(self.right_module(u).validate() for u in range(n)):
            return False
        if not all(self.left_module(w).validate() for w in range(n)):
            return False
        for g in range(len(A.generators)):
            gs, gt = A.generators[g].source, A.generators[g].target
            for h in range(len(A.generators)):
                hs, ht = A.generators[h].source, A.generators[h].target
                # (g m) h == g (m h) for m in block (gs, ht)
                lhs = self.left[g][ht] @ self.right[h][gt]
                rhs = self.right[h][gs] @ self.left[g][hs]
                if lhs != rhs:
                    return False
        return True

    @classmethod
    def regular(cls, alg: FDAlgebra) -> "Bimodule":
        """Λ as a bimodule; block (u, w) has the basis elements w -> u."""
        f = alg.field
        n = alg.num_vertices
        elems = {(u, w): [i for i in range(alg.dim) if alg.tgt[i] == u and alg.src[i] == w]
                 for u in range(n) for w in range(n)}
        pos = {k: {i: p for p, i in enumerate(v)} for k, v in elems.items()}
        right, left = [], []
        for g in alg.generators:
            s, t = g.source, g.target
            rm = {}
            for u in range(n):
                rows = []
                for x in elems[(u, t)]:
                    pr = alg.product({x: f.one}, g.vector)
                    row = [f.zero] * len(elems[(u, s)])
                    for k, c in pr.items():
                        row[pos[(u, s)][k]] = c
                    rows.append(tuple(row))
                rm[u] = ExactMatrix(f, len(elems[(u, t)]), len(elems[(u, s)]), tuple(rows))
            lm = {}
            for w in range(n):
                rows = []
                for x in elems[(s, w)]:
                    pr = alg.product(g.vector, {x: f.one})
                    row = [f.zero] * len(elems[(t, w)])
                    for k, c in pr.items():
                        row[pos[(t, w)][k]] = c
                    rows.append(tuple(row))
                lm[w] = ExactMatrix(f, len(elems[(s, w)]), len(elems[(t, w)]), tuple(rows))
            right.append(rm)
            left.append(lm)
        b = cls(alg, {k: len(v) for k, v in elems.items()}, right, left, name="L")
        b.elements = elems
        return b

    @classmethod
    def zero(cls, alg: FDAlgebra) -> "Bimodule":
        f = alg.field
        n = alg.num_vertices
        z = {u: ExactMatrix.zeros(0, 0, f) for u in range(n)}
        return cls(alg, {}, [dict(z) for _ in alg.generators], [dict(z) for _ in alg.generators], name="0")


class TensorProduct:
    """B ⊗_Λ C as the quotient of ⊕_v B e_v ⊗ e_v C by the balancing relations.

    For each block (u, w) the quotient basis is given by the non-pivot
    columns of the echelonized relation space; basis element k lifts to the
    pure tensor ``lift[(u, w)][k] = (v, i, j)``.
    """

    def __init__(self, B: Bimodule, C: Bimodule, name: str | None = None):
        if B.algebra is not C.algebra:
            raise BimoduleError("bimodules over different algebras")
        A = B.algebra
        self.B, self.C, self.algebra = B, C, A
        f = A.field
        n = A.num_vertices
        self.layout = {}
        self.ech = {}
        self.lift = {}
        self.pos = {}
        dims = {}
        for u in range(n):
            for w in range(n):
                offs = {}
                size = 0
                for v in range(n):
                    offs[v] = size
                    size += B.dims[(u, v)] * C.dims[(v, w)]
                self.layout[(u, w)] = (offs, size)
                e = Echelon(f)
                if size:
                    for gi, g in enumerate(A.generators):
                        s, t = g.source, g.target
                        R = B.right[gi][u]   # (u,t) -> (u,s)
                        L = C.left[gi][w]    # (s,w) -> (t,w)
                        cs = C.dims[(s, w)]
                        ct = C.dims[(t, w)]
                        for i in range(B.dims[(u, t)]):
                            for j in range(cs):
                                rel = {}
                                for k, x in enumerate(R.entries[i]):
                                    if x:
                                        rel[offs[s] + k * cs + j] = x
                                for k, x in enumerate(L.entries[j]):
                                    if x:
                                        idx = offs[t] + i * ct + k
                                        rel[idx] = rel.get(idx, 0) - x
                                rel = {a: b for a, b in rel.items() if b}
                                if rel:
                                    e.add(rel)
                self.ech[(u, w)] = e
                free = [c for c in range(size) if c not in e.rows]
                self.pos[(u, w)] = {c: k for k, c in enumerate(free)}
                lifts = []
                for c in free:
                    v = max(vv for vv in range(n) if offs[vv] <= c and
                            (B.dims[(u, vv)] * C.dims[(vv, w)] > 0))
                    r = c - offs[v]
                    cw = C.dims[(v, w)]
                    lifts.append((v, r // cw, r % cw))
                self.lift[(u, w)] = lifts
                dims[(u, w)] = len(free)
        self.dims = dims
        self.result = self._build(name or f"{B.name}{C.name}")

    def pure_index(self, u, w, v, i, j) -> int:
        offs, _ = self.layout[(u, w)]
        return offs[v] + i * self.C.dims[(v, w)] + j

    def project(self, u: int, w: int, vec: dict) -> list:
        """Quotient coordinates of a vector in the pure-tensor coordinates."""
        r, _ = self.ech[(u, w)].reduce(vec)
        pos = self.pos[(u, w)]
        out = [self.algebra.field.zero] * self.dims[(u, w)]
        for c, x in r.items():
            out[pos[c]] = x
        return out

    def tensor(self, u, w, v, bvec, cvec) -> dict:
        """The pure tensor b ⊗ c (b in block (u, v), c in block (v, w)) as a sparse vector."""
        offs, _ = self.layout[(u, w)]
        cw = self.C.dims[(v, w)]
        out = {}
        for i, x in enumerate(bvec):
            if x:
                for j, y in enumerate(cvec):
                    if y:
                        out[offs[v] + i * cw + j] = x * y
        return out

    def _build(self, name) -> Bimodule:
        A = self.algebra
        f = A.field
        n = A.num_vertices
        B, C = self.B, self.C
        right, left = [], []
        for gi, g in enumerate(A.generators):
            s, t = g.source, g.target
            rm = {}
            for u in range(n):
                rows = []
                for (v, i, j) in self.lift[(u, t)]:
                    cg = C.right[gi][v].entries[j]  # c_j . g in block (v, s)
                    bvec = [f.zero] * B.dims[(u, v)]
                    bvec[i] = f.one
                    rows.append(tuple(self.project(u, s, self.tensor(u, s, v, bvec, cg))))
                rm[u] = ExactMatrix(f, self.dims[(u, t)], self.dims[(u, s)], tuple(rows))
            lm = {}
            for w in range(n):
                rows = []
                for (v, i, j) in self.lift[(s, w)]:
                    gb = B.left[gi][v].entries[i]  # g . b_i in block (t, v)
                    cvec = [f.zero] * C.dims[(v, w)]
                    cvec[j] = f.one
                    rows.append(tuple(self.project(t, w, self.tensor(t, w, v, gb, cvec))))
                lm[w] = ExactMatrix(f, self.dims[(s, w)], self.dims[(t, w)], tuple(rows))
            right.append(rm)
            left.append(lm)
        return Bimodule(A, self.dims, right, left, name=name)


class TensorAlgebra:
    """T_Λ(M) = ⊕_n M^{⊗n} with its realized FDAlgebra.

    ``pieces[n]`` is the bimodule T_n; ``index[(n, u, w)]`` lists the global
    basis indices of block (u, w) of T_n in the realized algebra.
    """

    def __init__(self, M: Bimodule, bound: int | None = None):
        A = M.algebra
        self.base = A
        self.M = M
        if bound is None:
            bound = 2 * A.dim + 2
        T0 = Bimodule.regular(A)
        self.pieces = [T0]
        self.tensors = [None]
        cur = M
        n = 1
        while cur.total_dim:
            if n > bound:
                raise NotNilpotentError(f"tensor powers do not vanish below degree {bound}; not nilpotent")
            self.pieces.append(cur)
            tp = TensorProduct(cur, M, name=f"T{n + 1}")
            self.tensors.append(tp)
            cur = tp.result
            n += 1
        self.top = len(self.pieces) - 1
        self._products: dict = {}
        self._realize()

    def _realize(self):
        A = self.base
        f = A.field
        nv = A.num_vertices
        src, tgt, grading, labels = [], [], [], []
        self.index = {}
        self.where = []
        for i in range(A.dim):
            src.append(A.src[i])
            tgt.append(A.tgt[i])
            grading.append(0)
            labels.append(A.labels[i])
        T0 = self.pieces[0]
        for (u, w), elems in T0.elements.items():
            self.index[(0, u, w)] = list(elems)
        for i in range(A.dim):
            u, w = A.tgt[i], A.src[i]
            self.where.append((0, u, w, self.index[(0, u, w)].index(i)))
        for n in range(1, self.top + 1):
            P = self.pieces[n]
            for u in range(nv):
                for w in range(nv):
                    ids = []
                    for k in range(P.dims[(u, w)]):
                        ids.append(len(src))
                        self.where.append((n, u, w, k))
                        src.append(w)
                        tgt.append(u)
                        grading.append(n)
                        labels.append(f"T{n}[{A.vertices[u]},{A.vertices[w]}]#{k}")
                    self.index[(n, u, w)] = ids
        dim = len(src)
        mult: dict = {}
        by_tgt: dict = {}
        for b in range(dim):
            by_tgt.setdefault(tgt[b], []).append(b)
        for a in range(dim):
            row = {}
            for b in by_tgt.get(src[a], ()):
                pr = self.basis_product(a, b)
                if pr:
                    row[b] = pr
            if row:
                mult[a] = row
        gens = [Generator(g.name, g.source, g.target, dict(g.vector)) for g in A.generators]
        for (n, u, w), ids in sorted(self.index.items()):
            if n == 1:
                for k, b in enumerate(ids):
                    gens.append(Generator(f"m{A.vertices[u]}{A.vertices[w]}_{k}", w, u, {b: f.one}))
        self.algebra = FDAlgebra(f, A.vertices, src, tgt, mult, A.idempotents, gens, labels, grading,
                                 name=f"T({A.name})")

    def vector(self, n, u, w, coords) -> dict:
        ids = self.index[(n, u, w)]
        return {ids[k]: c for k, c in enumerate(coords) if c}

    def coords(self, n, u, w, vec: dict) -> list:
        f = self.base.field
        out = [f.zero] * self.pieces[n].dims[(u, w)]
        for b, c in vec.items():
            m, uu, ww, k = self.where[b]
            if (m, uu, ww) != (n, u, w):
                raise BimoduleError("vector lies outside the requested block")
            out[k] = c
        return out

    def basis_product(self, a: int, b: int) -> dict:
        """Product of realized basis elements a · b (b acts first)."""
        key = (a, b)
        hit = self._products.get(key)
        if hit is not None:
            return hit
        res = self._product(a, b)
        self._products[key] = res
        return res

    def _product(self, a: int, b: int) -> dict:
        A = self.base
        f = A.field
        i, u, v, ka = self.where[a]
        j, v2, w, kb = self.where[b]
        if v != v2:
            return {}
        if i + j > self.top:
            return {}
        if i == 0 and j == 0:
            return dict(A.basis_product(a, b))
        if i == 0:
            # left action of the Λ-basis element a on block (v, w) of T_j
            P = self.pieces[j]
            if P.dims[(v, w)] == 0:
                return {}
            row = P.left_action(w, a).entries[kb]
            return self.vector(j, u, w, row)
        if j == 0:
            P = self.pieces[i]
            row = P.right_action(u, b).entries[ka]
            return self.vector(i, u, w, row)
        # b = b' ⊗ m with b' in T_{j-1}, m in M
        tp_prev = self.tensors[j - 1] if j - 1 >= 1 else None
        if j == 1:
            # a ⊗ b directly in T_i ⊗ M = T_{i+1}
            tp = self.tensors[i]
            avec = [f.zero] * self.pieces[i].dims[(u, v)]
            avec[ka] = f.one
            bvec = [f.zero] * self.M.dims[(v, w)]
            bvec[kb] = f.one
            return self.vector(i + 1, u, w, tp.project(u, w, tp.tensor(u, w, v, avec, bvec)))
        vv, bi, mj = tp_prev.lift[(v, w)][kb]
        bprime = self.index[(j - 1, v, vv)][bi]
        left = self._product_vec({a: f.one}, {bprime: f.one})  # in T_{i+j-1}, block (u, vv)
        if not left:
            return {}
        tp = self.tensors[i + j - 1]
        lvec = self.coords(i + j - 1, u, vv, left)
        mvec = [f.zero] * self.M.dims[(vv, w)]
        mvec[mj] = f.one
        return self.vector(i + j, u, w, tp.project(u, w, tp.tensor(u, w, vv, lvec, mvec)))

    def _product_vec(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for a, c in x.items():
            for b, d in y.items():
                for k, e in self.basis_product(a, b).items():
                    val = out.get(k, 0) + c * d * e
                    if val:
                        out[k] = val
                    else:
                        out.pop(k, None)
        return out


def tensor_algebra(M: Bimodule, bound: int | None = None) -> FDAlgebra:
    return TensorAlgebra(M, bound).algebra


def left_multiplication(alg: FDAlgebra, gi: int, projectives) -> ModuleMorphism:
    """x ↦ g·x as a morphism P_s -> P_t for the generator g: s -> t."""
    f = alg.field
    g = alg.generators[gi]
    Ps, Pt = projectives[g.source], projectives[g.target]
    mats = []
    for w in range(alg.num_vertices):
        pos = {x: k for k, x in enumerate(Pt.basis_elements[w])}
        rows = []
        for x in Ps.basis_elements[w]:
            row = [f.zero] * Pt.dims[w]
            for k, c in alg.product(g.vector, {x: f.one}).items():
                row[pos[k]] = c
            rows.append(tuple(row))
        mats.append(ExactMatrix(f, Ps.dims[w], Pt.dims[w], tuple(rows)))
    return ModuleMorphism(Ps, Pt, mats)


def ext_bimodule(td) -> Bimodule:
    """M = Ext^d(DΛ, Λ); the block e_u M is τ_d^-(P_u), the left action comes from τ_d^-(g·-)."""
    from .homological import _projective
    A = td.algebra
    n = A.num_vertices
    projs = [_projective(A, v) for v in range(n)]
    taus = [td.apply(P) for P in projs]
    dims = {(u, w): taus[u].dims[w] for u in range(n) for w in range(n)}
    right = [{u: taus[u].mats[gi] for u in range(n)} for gi in range(len(A.generators))]
    left = []
    for gi in range(len(A.generators)):
        phi = td.apply_morphism(left_multiplication(A, gi, projs))
        left.append({w: phi.mats[w] for w in range(n)})
    b = Bimodule(A, dims, right, left, name="M")
    b.right_modules_tau = taus
    return b
