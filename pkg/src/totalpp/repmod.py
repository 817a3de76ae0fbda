"""Right modules over an FDAlgebra, described by one matrix per generator.

A right module M decomposes as M = ⊕_v M e_v.  A generator g: s -> t acts
by a matrix of shape dim M_t × dim M_s on row vectors: m ↦ m @ G.  A
morphism is one matrix per vertex, again acting on row vectors.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import FDAlgebra
from .exactla import DimensionMismatch, Echelon, ExactMatrix, is_invertible, kernel, nullspace


class ModuleError(ValueError):
    pass


class Representation:
    def __init__(self, algebra: FDAlgebra, dims, mats, name: str = "", check: bool = False):
        self.algebra = algebra
        self.field = algebra.field
        self.dims = tuple(dims)
        self.mats = tuple(mats)
        self.name = name
        if len(self.dims) != algebra.num_vertices:
            raise ModuleError("one dimension per vertex is required")
        if len(self.mats) != len(algebra.generators):
            raise ModuleError("one matrix per generator is required")
        for g, m in zip(algebra.generators, self.mats):
            if m.shape != (self.dims[g.target], self.dims[g.source]):
                raise ModuleError(f"matrix for {g.name} has shape {m.shape}, expected "
                                  f"{(self.dims[g.target], self.dims[g.source])}")
        self._word_mats: dict = {}
        self._actions: dict = {}
        if check and not self.validate():
            raise ModuleError("the matrices do not satisfy the relations of the algebra")

    def __repr__(self):
        return f"Representation({self.name or '?'}, dims={self.dims})"

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def _word_matrix(self, w: int) -> ExactMatrix:
        m = self._word_mats.get(w)
        if m is not None:
            return m
        words, _ = self.algebra.words()
        start, gens = words[w]
        f = self.field
        m = ExactMatrix.identity(self.dims[start], f)
        # word g_1 ... g_k in traversal order is the element g_k ... g_1
        for gi in gens:
            m = self.mats[gi] @ m
        self._word_mats[w] = m
        return m

    def action(self, i: int) -> ExactMatrix:
        """Matrix of the basis element i: M_tgt -> M_src."""
        m = self._actions.get(i)
        if m is not None:
            return m
        A = self.algebra
        _, exprs = A.words()
        m = ExactMatrix.zeros(self.dims[A.tgt[i]], self.dims[A.src[i]], self.field)
        for w, c in exprs[i].items():
            m = m + self._word_matrix(w).scale(c)
        self._actions[i] = m
        return m

    def act(self, v, element: dict, vertex: int):
        """Row vector v in M_vertex times an element; returns {src vertex: vector}."""
        A = self.algebra
        out: dict = {}
        for i, c in element.items():
            if A.tgt[i] != vertex:
                continue
            w = self.action(i).row_times(v)
            s = A.src[i]
            if s in out:
                out[s] = [a + c * b for a, b in zip(out[s], w)]
            else:
                out[s] = [c * b for b in w]
        return out

    def validate(self) -> bool:
        A = self.algebra
        for gi, g in enumerate(A.generators):
            for b in range(A.dim):
                if A.tgt[b] != g.source:
                    continue
                lhs_el = A.product(g.vector, {b: self.field.one})
                lhs = ExactMatrix.zeros(self.dims[g.target], self.dims[A.src[b]], self.field)
                for k, c in lhs_el.items():
                    lhs = lhs + self.action(k).scale(c)
                if lhs != self.mats[gi] @ self.action(b):
                    return False
        return True

    def generator_matrix(self, name: str) -> ExactMatrix:
        for g, m in zip(self.algebra.generators, self.mats):
            if g.name == name:
                return m
        raise ModuleError(f"no generator named {name}")

    def to_json(self) -> dict:
        f = self.field
        A = self.algebra
        return {
            "name": self.name,
            "dims": {v: d for v, d in zip(A.vertices, self.dims)},
            "matrices": {g.name: [[f.format(x) for x in row] for row in m.entries]
                         for g, m in zip(A.generators, self.mats)},
        }


class ModuleMorphism:
    def __init__(self, source: Representation, target: Representation, mats):
        self.source = source
        self.target = target
        self.mats = tuple(mats)
        for v, m in enumerate(self.mats):
            if m.shape != (source.dims[v], target.dims[v]):
                raise DimensionMismatch(f"morphism block {v} has shape {m.shape}")

    def __repr__(self):
        return f"ModuleMorphism({self.source.name} -> {self.target.name})"

    @classmethod
    def zero(cls, x, y):
        f = x.field
        return cls(x, y, [ExactMatrix.zeros(a, b, f) for a, b in zip(x.dims, y.dims)])

    @classmethod
    def identity(cls, x):
        return cls(x, x, [ExactMatrix.identity(a, x.field) for a in x.dims])

    def compose(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """self ∘ other (apply other first)."""
        if other.target is not self.source and other.target.dims != self.source.dims:
            raise ModuleError("morphisms do not compose")
        return ModuleMorphism(other.source, self.target, [a @ b for a, b in zip(other.mats, self.mats)])

    def __add__(self, other):
        return ModuleMorphism(self.source, self.target, [a + b for a, b in zip(self.mats, other.mats)])

    def __sub__(self, other):
        return ModuleMorphism(self.source, self.target, [a - b for a, b in zip(self.mats, other.mats)])

    def scale(self, c):
        return ModuleMorphism(self.source, self.target, [a.scale(c) for a in self.mats])

    def is_zero(self):
        return all(m.is_zero() for m in self.mats)

    def __eq__(self, other):
        return isinstance(other, ModuleMorphism) and all(a == b for a, b in zip(self.mats, other.mats))

    __hash__ = None

    def is_homomorphism(self) -> bool:
        X, Y = self.source, self.target
        for g, gx, gy in zip(X.algebra.generators, X.mats, Y.mats):
            if gx @ self.mats[g.source] != self.mats[g.target] @ gy:
                return False
        return True

    def is_isomorphism(self) -> bool:
        return all(is_invertible(m) for m in self.mats)

    def apply(self, v, vertex: int):
        return self.mats[vertex].row_times(v)

    def flat(self) -> dict:
        out = {}
        n = 0
        for m in self.mats:
            for row in m.entries:
                for x in row:
                    if x:
                        out[n] = x
                    n += 1
        return out


def _unflatten(x: Representation, y: Representation, vec: dict) -> ModuleMorphism:
    f = x.field
    mats = []
    n = 0
    for a, b in zip(x.dims, y.dims):
        rows = []
        for r in range(a):
            rows.append(tuple(vec.get(n + r * b + c, f.zero) for c in range(b)))
        mats.append(ExactMatrix(f, a, b, tuple(rows)))
        n += a * b
    return ModuleMorphism(x, y, mats)


def hom_equations(x: Representation, y: Representation):
    """Sparse linear conditions on the flattened blocks of a morphism x -> y."""
    if x.algebra is not y.algebra:
        raise ModuleError("modules over different algebras")
    A = x.algebra
    offs = []
    n = 0
    for a, b in zip(x.dims, y.dims):
        offs.append(n)
        n += a * b
    eqs = []
    for g, gx, gy in zip(A.generators, x.mats, y.mats):
        s, t = g.source, g.target
        # gx F_s = F_t gy, both of shape x_t × y_s
        ys, yt = y.dims[s], y.dims[t]
        gye = gy.entries
        for r in range(x.dims[t]):
            gxr = gx.entries[r]
            for c in range(ys):
                eq: dict = {}
                for k, a in enumerate(gxr):
                    if a:
                        idx = offs[s] + k * ys + c
                        eq[idx] = eq.get(idx, 0) + a
                for k in range(yt):
                    b = gye[k][c]
                    if b:
                        idx = offs[t] + r * yt + k
                        eq[idx] = eq.get(idx, 0) - b
                eq = {i: v for i, v in eq.items() if v}
                if eq:
                    eqs.append(eq)
    return eqs, n


class HomSpace:
    """A basis of Hom(x, y) with coordinates for arbitrary morphisms."""

    def __init__(self, x: Representation, y: Representation, basis=None):
        self.source = x
        self.target = y
        if basis is None:
            eqs, n = hom_equations(x, y)
            basis = [_unflatten(x, y, v) for v in nullspace(eqs, n, x.field)]
        self.basis = list(basis)
        self._ech = None

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, f: ModuleMorphism) -> dict:
        if self._ech is None:
            e = Echelon(self.source.field, track=True)
            for k, b in enumerate(self.basis):
                if not e.add(b.flat(), {k: self.source.field.one}):
                    raise ModuleError("hom basis is linearly dependent")
            self._ech = e
        c = self._ech.express(f.flat())
        if c is None:
            raise ModuleError("morphism does not lie in the span of the basis")
        return c

    def combination(self, coeffs: dict) -> ModuleMorphism:
        out = ModuleMorphism.zero(self.source, self.target)
        for k, c in coeffs.items():
            out = out + self.basis[k].scale(c)
        return out


def hom_basis(x: Representation, y: Representation):
    return HomSpace(x, y).basis


def hom_dim(x: Representation, y: Representation) -> int:
    eqs, n = hom_equations(x, y)
    e = Echelon(x.field)
    for q in eqs:
        e.add(q)
    return n - len(e)


# ---------------------------------------------------------------- standard modules


def projective(alg: FDAlgebra, v) -> Representation:
    """e_v A: at vertex w it has the basis elements w -> v."""
    v = alg.vertex(v)
    f = alg.field
    elems = [[i for i in range(alg.dim) if alg.tgt[i] == v and alg.src[i] == w]
             for w in range(alg.num_vertices)]
    pos = [{i: n for n, i in enumerate(es)} for es in elems]
    mats = []
    for g in alg.generators:
        s, t = g.source, g.target
        rows = []
        for x in elems[t]:
            prod = alg.product({x: f.one}, g.vector)
            row = [f.zero] * len(elems[s])
            for k, c in prod.items():
                row[pos[s][k]] = c
            rows.append(tuple(row))
        mats.append(ExactMatrix(f, len(elems[t]), len(elems[s]), tuple(rows)))
    m = Representation(alg, [len(e) for e in elems], mats, name=f"P{alg.vertices[v]}")
    m.basis_elements = elems
    m.top_vertex = v
    return m


def injective(alg: FDAlgebra, v) -> Representation:
    """D(A e_v): at vertex w it is dual to the basis elements v -> w."""
    v = alg.vertex(v)
    f = alg.field
    elems = [[i for i in range(alg.dim) if alg.src[i] == v and alg.tgt[i] == w]
             for w in range(alg.num_vertices)]
    pos = [{i: n for n, i in enumerate(es)} for es in elems]
    mats = []
    for g in alg.generators:
        s, t = g.source, g.target
        # (phi . g)(x) = phi(g x) for x in e_s A e_v
        cols = []
        for x in elems[s]:
            prod = alg.product(g.vector, {x: f.one})
            col = [f.zero] * len(elems[t])
            for k, c in prod.items():
                col[pos[t][k]] = c
            cols.append(col)
        rows = tuple(tuple(cols[j][i] for j in range(len(elems[s]))) for i in range(len(elems[t])))
        mats.append(ExactMatrix(f, len(elems[t]), len(elems[s]), rows))
    m = Representation(alg, [len(e) for e in elems], mats, name=f"I{alg.vertices[v]}")
    m.basis_elements = elems
    return m


def simple(alg: FDAlgebra, v) -> Representation:
    v = alg.vertex(v)
    dims = [1 if w == v else 0 for w in range(alg.num_vertices)]
    mats = [ExactMatrix.zeros(dims[g.target], dims[g.source], alg.field) for g in alg.generators]
    return Representation(alg, dims, mats, name=f"S{alg.vertices[v]}")


def zero_module(alg: FDAlgebra) -> Representation:
    return Representation(alg, [0] * alg.num_vertices,
                          [ExactMatrix.zeros(0, 0, alg.field) for _ in alg.generators], name="0")


def opposite_of(alg: FDAlgebra) -> FDAlgebra:
    op = getattr(alg, "_opposite", None)
    if op is None:
        op = alg.opposite()
        alg._opposite = op
        op._opposite = alg
    return op


def dualize(x: Representation) -> Representation:
    """The dual D(x) as a right module over the opposite algebra."""
    op = opposite_of(x.algebra)
    return Representation(op, x.dims, [m.transpose() for m in x.mats], name=f"D({x.name})")


def regular_module(alg: FDAlgebra):
    return direct_sum([projective(alg, v) for v in range(alg.num_vertices)])[0]


@dataclass
class DirectSum:
    module: Representation
    injections: list
    projections: list

    def __iter__(self):
        return iter((self.module, self.injections, self.projections))

    def __getitem__(self, k):
        return (self.module, self.injections, self.projections)[k]


def direct_sum(xs) -> DirectSum:
    xs = list(xs)
    if not xs:
        raise ModuleError("direct sum of an empty list needs an algebra; use zero_module")
    A = xs[0].algebra
    if any(x.algebra is not A for x in xs):
        raise ModuleError("modules over different algebras")
    f = A.field
    nv = A.num_vertices
    dims = [sum(x.dims[v] for x in xs) for v in range(nv)]
    from .exactla import block_diagonal
    mats = [block_diagonal([x.mats[gi] for x in xs], f) for gi in range(len(A.generators))]
    s = Representation(A, dims, mats, name="+".join(x.name for x in xs))
    inj, proj = [], []
    offs = [0] * nv
    for x in xs:
        im, pm = [], []
        for v in range(nv):
            a, n, o = x.dims[v], dims[v], offs[v]
            rows = tuple(tuple(f.one if c == o + r else f.zero for c in range(n)) for r in range(a))
            m = ExactMatrix(f, a, n, rows)
            im.append(m)
            pm.append(m.transpose())
            offs[v] += a
        inj.append(ModuleMorphism(x, s, im))
        proj.append(ModuleMorphism(s, x, pm))
    return DirectSum(s, inj, proj)


def submodule(m: Representation, spans) -> tuple:
    """Submodule spanned per vertex by the given row vectors (assumed closed).

    Returns (module, inclusion).  ``spans[v]`` is a list of vectors in m_v;
    they are reduced to a basis first.
    """
    A = m.algebra
    f = m.field
    bases = []
    echs = []
    for v in range(A.num_vertices):
        e = Echelon(f, track=True)
        basis = []
        for vec in spans[v]:
            sv = {i: x for i, x in enumerate(vec) if x}
            if e.add(sv, {len(basis): f.one}):
                basis.append(list(vec))
        bases.append(basis)
        echs.append(e)
    mats = []
    for g, gm in zip(A.generators, m.mats):
        s, t = g.source, g.target
        rows = []
        for u in bases[t]:
            img = gm.row_times(u)
            c = echs[s].express({i: x for i, x in enumerate(img) if x})
            if c is None:
                raise ModuleError("subspaces are not closed under the action")
            rows.append(tuple(c.get(k, f.zero) for k in range(len(bases[s]))))
        mats.append(ExactMatrix(f, len(bases[t]), len(bases[s]), tuple(rows)))
    sub = Representation(A, [len(b) for b in bases], mats, name=f"sub({m.name})")
    inc = ModuleMorphism(sub, m, [ExactMatrix(f, len(b), m.dims[v], tuple(tuple(r) for r in b))
                                  for v, b in enumerate(bases)])
    return sub, inc


def kernel_of(phi: ModuleMorphism):
    spans = [list(kernel(m.transpose())) for m in phi.mats]
    return submodule(phi.source, spans)


def image_of(phi: ModuleMorphism):
    spans = [[list(r) for r in m.entries] for m in phi.mats]
    return submodule(phi.target, spans)


# ---------------------------------------------------------------- isomorphism


def _generic_combination(hs: HomSpace, rng, bound):
    f = hs.source.field
    return hs.combination({k: f.random_element(rng, bound) for k in range(hs.dim)})


def is_isomorphic(x: Representation, y: Representation, seed: int = 0, tries: int = 12):
    """Decide x ≅ y; returns (decision, witness or None)."""
    if x.algebra is not y.algebra:
        raise ModuleError("modules over different algebras")
    if x.dims != y.dims:
        return False, None
    if x.total_dim == 0:
        return True, ModuleMorphism.zero(x, y)
    hs = HomSpace(x, y)
    if hs.dim == 0:
        return False, None
    rng = random.Random(seed)
    for t in range(tries):
        phi = _generic_combination(hs, rng, 3 + 4 * t)
        if phi.is_isomorphism():
            return True, phi
    return _determinant_fallback(hs)


def _determinant_fallback(hs: HomSpace):
    """Certified answer via the determinant as a polynomial in the Hom coordinates."""
    import sympy
    f = hs.source.field
    if f.characteristic != 0:
        # finite field: enumerate when small, otherwise report not found
        return False, None
    syms = sympy.symbols(f"c0:{hs.dim}")
    for v in range(len(hs.source.dims)):
        n = hs.source.dims[v]
        if n == 0:
            continue
        M = sympy.zeros(n, n)
        for k, b in enumerate(hs.basis):
            for i in range(n):
                for j in range(n):
                    x = b.mats[v].entries[i][j]
                    if x:
                        M[i, j] += syms[k] * sympy.Rational(int(x.numerator), int(x.denominator))
        if sympy.expand(M.det()) == 0:
            return False, None
    # the product of nonzero polynomials is nonzero; find a point where it is
    import itertools
    for pt in itertools.product(range(-3, 4), repeat=min(hs.dim, 6)):
        coeffs = {k: f(pt[k]) if k < len(pt) else f.one for k in range(hs.dim)}
        phi = hs.combination(coeffs)
        if phi.is_isomorphism():
            return True, phi
    raise ModuleError("isomorphism exists but no witness found on the search grid")


def end_radical_dim(x: Representation) -> tuple:
    """(dim End(x), dim rad End(x)) using the trace form of End(x) on x."""
    f = x.field
    if f.characteristic != 0:
        raise ModuleError("radical of End via the trace form needs characteristic zero")
    hs = HomSpace(x, x)
    n = hs.dim
    eqs = []
    for j in range(n):
        eq = {}
        for i in range(n):
            comp = hs.basis[j].compose(hs.basis[i])
            t = f.zero
            for m in comp.mats:
                for k in range(m.rows):
                    t += m.entries[k][k]
            if t:
                eq[i] = t
        eqs.append(eq)
    rad = nullspace(eqs, n, f)
    return n, len(rad)


def is_indecomposable(x: Representation) -> bool:
    if x.total_dim == 0:
        return False
    n, r = end_radical_dim(x)
    return n - r == 1
