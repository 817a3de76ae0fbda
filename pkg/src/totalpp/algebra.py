"""Finite-dimensional basic algebras given by structure constants.

Every basis element ``b`` is homogeneous with respect to the vertex
idempotents: ``b = e_t b e_s`` where ``s = src[b]`` and ``t = tgt[b]``.
Products follow the composition convention for arrows: for ``x: s -> t``
and ``y: t -> u`` the product ``y x`` is nonzero only when endpoints match.
A list of named generators in the radical (arrows, or radical basis
elements for abstract algebras) is kept so that modules can be described by
one matrix per generator.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactla import QQ, Echelon, sparse_add


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    source: int
    target: int
    vector: dict


class FDAlgebra:
    def __init__(self, field, vertices, src, tgt, mult, idempotents, generators,
                 labels=None, grading=None, name="A", quiver=None, basis_paths=None,
                 presentation=None):
        self.field = field
        self.vertices = tuple(vertices)
        self.src = tuple(src)
        self.tgt = tuple(tgt)
        self.mult = mult
        self.idempotents = tuple(idempotents)
        self.generators = tuple(generators)
        self.dim = len(self.src)
        self.labels = tuple(labels) if labels is not None else tuple(f"b{i}" for i in range(self.dim))
        self.grading = tuple(grading) if grading is not None else None
        self.name = name
        self.quiver = quiver
        self.basis_paths = basis_paths
        self.presentation = presentation
        self._words = None
        self._blocks = None
        self._radical = None
        if len(self.idempotents) != len(self.vertices):
            raise AlgebraError("one idempotent per vertex is required")

    def __repr__(self):
        return f"FDAlgebra({self.name}, dim={self.dim}, vertices={len(self.vertices)})"

    @property
    def num_vertices(self):
        return len(self.vertices)

    def vertex(self, v) -> int:
        if isinstance(v, int):
            return v
        try:
            return self.vertices.index(str(v))
        except ValueError:
            raise AlgebraError(f"unknown vertex {v!r}") from None

    # ------------------------------------------------------------ products

    def basis_product(self, i: int, j: int) -> dict:
        row = self.mult.get(i)
        if row is None:
            return {}
        return row.get(j, {})

    def product(self, x: dict, y: dict) -> dict:
        out: dict = {}
        mult = self.mult
        for i, a in x.items():
            row = mult.get(i)
            if not row:
                continue
            for j, b in y.items():
                r = row.get(j)
                if r:
                    ab = a * b
                    for k, c in r.items():
                        v = out.get(k, 0) + ab * c
                        if v:
                            out[k] = v
                        else:
                            out.pop(k, None)
        return out

    def unit(self) -> dict:
        return {e: self.field.one for e in self.idempotents}

    def blocks(self):
        """Map (s, t) -> basis indices of e_t A e_s."""
        if self._blocks is None:
            b: dict = {}
            for i in range(self.dim):
                b.setdefault((self.src[i], self.tgt[i]), []).append(i)
            self._blocks = b
        return self._blocks

    def block(self, s: int, t: int):
        return self.blocks().get((s, t), [])

    def cartan(self) -> dict:
        """(source label, target label) -> dim e_t A e_s."""
        return {(self.vertices[s], self.vertices[t]): len(ix) for (s, t), ix in sorted(self.blocks().items())}

    def graded_dims(self):
        if self.grading is None:
            return (self.dim,)
        top = max(self.grading, default=0)
        out = [0] * (top + 1)
        for g in self.grading:
            out[g] += 1
        return tuple(out)

    def graded_cartan(self) -> dict:
        out: dict = {}
        g = self.grading or (0,) * self.dim
        for i in range(self.dim):
            key = (self.vertices[self.src[i]], self.vertices[self.tgt[i]], g[i])
            out[key] = out.get(key, 0) + 1
        return dict(sorted(out.items()))

    # ------------------------------------------------------------ checks

    def check_associative(self) -> bool:
        mult = self.mult
        for i, row in mult.items():
            for j, ij in row.items():
                for k in mult.get(j, {}):
                    left = self.product(ij, {k: 1})
                    right = self.product({i: 1}, mult[j][k])
                    if sparse_add(left, right, -1):
                        return False
        return True

    def check_idempotents(self) -> bool:
        one = self.field.one
        for a, e in enumerate(self.idempotents):
            if self.src[e] != a or self.tgt[e] != a:
                return False
            for i in range(self.dim):
                lx = self.basis_product(e, i)
                rx = self.basis_product(i, e)
                want_l = {i: one} if self.tgt[i] == a else {}
                want_r = {i: one} if self.src[i] == a else {}
                if sparse_add(lx, want_l, -1) or sparse_add(rx, want_r, -1):
                    return False
        return True

    def check_grading(self) -> bool:
        if self.grading is None:
            return True
        g = self.grading
        for i, row in self.mult.items():
            for j, r in row.items():
                if any(g[k] != g[i] + g[j] for k in r):
                    return False
        return True

    # ------------------------------------------------------------ words

    def words(self):
        """Express each basis element through words in the generators.

        Returns (words, expressions): ``words[w] = (vertex, gens)`` with
        ``gens`` in traversal order, and ``expressions[i]`` maps word indices
        to coefficients.
        """
        if self._words is not None:
            return self._words
        if self.basis_paths is not None:
            words = []
            exprs = []
            one = self.field.one
            for p in self.basis_paths:
                exprs.append({len(words): one})
                words.append((p.source, tuple(p.arrows)))
            self._words = (words, exprs)
            return self._words
        ech = Echelon(self.field, track=True)
        words = []
        vecs = []
        frontier = []
        one = self.field.one
        for v, e in enumerate(self.idempotents):
            vec = {e: one}
            if ech.add(vec, {len(words): one}):
                frontier.append(len(words))
                words.append((v, ()))
                vecs.append(vec)
        by_source: dict = {}
        for gi, g in enumerate(self.generators):
            by_source.setdefault(g.source, []).append(gi)
        while frontier:
            nxt = []
            for w in frontier:
                start, gens = words[w]
                end = self.generators[gens[-1]].target if gens else start
                for gi in by_source.get(end, ()):
                    vec = self.product(self.generators[gi].vector, vecs[w])
                    if vec and ech.add(vec, {len(words): one}):
                        nxt.append(len(words))
                        words.append((start, gens + (gi,)))
                        vecs.append(vec)
            frontier = nxt
        if len(ech) != self.dim:
            raise AlgebraError("generators and idempotents do not generate the algebra")
        exprs = []
        for i in range(self.dim):
            exprs.append(ech.express({i: one}))
        self._words = (words, exprs)
        return self._words

    # ------------------------------------------------------------ radical

    def radical_basis(self):
        """Basis of the Jacobson radical, block by block, as sparse vectors.

        Path algebras use the span of nontrivial paths.  Otherwise the algebra
        is assumed basic: off-diagonal blocks lie in the radical and each
        local corner e_v A e_v has radical the kernel of its unique character
        x ↦ λ(x), read off from left multiplication on the corner.
        """
        if self._radical is not None:
            return self._radical
        if self.basis_paths is not None:
            self._radical = [{i: self.field.one} for i, p in enumerate(self.basis_paths) if p.arrows]
            return self._radical
        out = []
        for (s, t), ix in sorted(self.blocks().items()):
            if s != t:
                out.extend({i: self.field.one} for i in ix)
                continue
            e = self.idempotents[s]
            for b in ix:
                if b == e:
                    continue
                lam = self._character(b, ix)
                v = {b: self.field.one}
                if lam:
                    v[e] = -lam
                out.append(v)
        self._radical = out
        return out

    def _character(self, b: int, ix):
        """The scalar λ with b − λ·e nilpotent in the local corner spanned by ix."""
        f = self.field
        n = len(ix)
        pos = {k: a for a, k in enumerate(ix)}
        rows = []
        for y in ix:
            row = [f.zero] * n
            for k, c in self.basis_product(b, y).items():
                row[pos[k]] = c
            rows.append(row)
        p = f.characteristic
        if p == 0 or n % p:
            return sum((rows[a][a] for a in range(n)), f.zero) / f(n)
        from .exactla import ExactMatrix
        for c in range(p):
            lam = f(c)
            shifted = ExactMatrix.from_rows([[x - (lam if a == k else f.zero) for k, x in enumerate(r)]
                                             for a, r in enumerate(rows)], f)
            if shifted.rank() < n:
                return lam
        raise AlgebraError("corner algebra is not local")

    def is_basic_split(self) -> bool:
        return self.dim - len(self.radical_basis()) == self.num_vertices

    def with_radical_generators(self, prefix: str = "r") -> "FDAlgebra":
        """Copy whose generators are the radical basis elements."""
        gens = []
        for k, v in enumerate(self.radical_basis()):
            i = next(iter(v))
            gens.append(Generator(f"{prefix}{k}", self.src[i], self.tgt[i], v))
        return FDAlgebra(self.field, self.vertices, self.src, self.tgt, self.mult,
                         self.idempotents, gens, self.labels, self.grading, self.name)

    # ------------------------------------------------------------ derived

    def opposite(self) -> "FDAlgebra":
        mult: dict = {}
        for i, row in self.mult.items():
            for j, r in row.items():
                mult.setdefault(j, {})[i] = r
        gens = [Generator(g.name, g.target, g.source, g.vector) for g in self.generators]
        op = FDAlgebra(self.field, self.vertices, self.tgt, self.src, mult, self.idempotents, gens,
                       self.labels, self.grading, self.name + "_op")
        if self.basis_paths is not None:
            # words reverse under the opposite product
            from .quiver import Path
            op.basis_paths = [Path(p.target, p.source, tuple(reversed(p.arrows))) for p in self.basis_paths]
        return op

    def subalgebra_on(self, basis_indices, vertex_indices, grading=True, name=None) -> "FDAlgebra":
        """Restrict to a subset of basis elements closed under products.

        Used for corners eAe and for the degree-zero part of graded algebras.
        """
        keep = list(basis_indices)
        pos = {b: n for n, b in enumerate(keep)}
        vpos = {v: n for n, v in enumerate(vertex_indices)}
        mult: dict = {}
        for i in keep:
            row = self.mult.get(i, {})
            for j, r in row.items():
                if j in pos and r:
                    if any(k not in pos for k in r):
                        raise AlgebraError("basis subset is not closed under multiplication")
                    mult.setdefault(pos[i], {})[pos[j]] = {pos[k]: c for k, c in r.items()}
        src = [vpos[self.src[i]] for i in keep]
        tgt = [vpos[self.tgt[i]] for i in keep]
        idem = [pos[self.idempotents[v]] for v in vertex_indices]
        gens = []
        for g in self.generators:
            if g.source in vpos and g.target in vpos and all(k in pos for k in g.vector):
                gens.append(Generator(g.name, vpos[g.source], vpos[g.target],
                                      {pos[k]: c for k, c in g.vector.items()}))
        gr = [self.grading[i] for i in keep] if (grading and self.grading is not None) else None
        sub = FDAlgebra(self.field, [self.vertices[v] for v in vertex_indices], src, tgt, mult, idem,
                        gens, [self.labels[i] for i in keep], gr, name or self.name)
        return sub

    def corner(self, vertices) -> "FDAlgebra":
        vs = sorted(self.vertex(v) for v in vertices)
        vset = set(vs)
        keep = [i for i in range(self.dim) if self.src[i] in vset and self.tgt[i] in vset]
        sub = self.subalgebra_on(keep, vs, name=self.name + "_corner")
        return sub.with_radical_generators()

    def degree_zero(self) -> "FDAlgebra":
        if self.grading is None:
            return self
        keep = [i for i in range(self.dim) if self.grading[i] == 0]
        sub = self.subalgebra_on(keep, range(self.num_vertices), name=self.name + "_0")
        return sub.with_radical_generators()

    def element_label(self, v: dict) -> str:
        parts = []
        for k in sorted(v):
            parts.append(f"{self.field.format(v[k])}*{self.labels[k]}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        f = self.field
        consts = []
        for i in sorted(self.mult):
            for j in sorted(self.mult[i]):
                for k in sorted(self.mult[i][j]):
                    consts.append([i, j, k, f.format(self.mult[i][j][k])])
        if self.basis_paths is not None and self.quiver is not None:
            basis = [self.quiver.arrow_names(p) if p.arrows else [f"e_{self.quiver.vertices[p.source]}"]
                     for p in self.basis_paths]
        else:
            basis = [[lab] for lab in self.labels]
        out = {
            "name": self.name,
            "field": f.name,
            "dimension": self.dim,
            "vertices": list(self.vertices),
            "basis": basis,
            "basis_source": [self.vertices[s] for s in self.src],
            "basis_target": [self.vertices[t] for t in self.tgt],
            "structure_constants": consts,
        }
        if self.grading is not None:
            out["grading"] = list(self.grading)
            out["graded_dims"] = list(self.graded_dims())
        return out


def semisimple_algebra(n: int, field=QQ) -> FDAlgebra:
    one = field.one
    mult = {i: {i: {i: one}} for i in range(n)}
    return FDAlgebra(field, [str(i + 1) for i in range(n)], range(n), range(n), mult, range(n), [],
                     labels=[f"e_{i + 1}" for i in range(n)], grading=[0] * n, name=f"k^{n}")
