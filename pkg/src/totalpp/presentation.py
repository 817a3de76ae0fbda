"""Path algebra elements, Gröbner normal forms and quotient algebras."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field

from .algebra import AlgebraError, FDAlgebra, Generator
from .exactla import QQ, Echelon
from .quiver import Arrow, Path, Quiver


class PresentationError(ValueError):
    pass


class InfiniteDimensionalError(PresentationError):
    """Gröbner completion did not stabilize below the degree bound."""

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


class PathElement:
    """A finite linear combination of paths in a quiver."""

    __slots__ = ("quiver", "terms", "field")

    def __init__(self, quiver: Quiver, terms: dict | None = None, field=QQ):
        self.quiver = quiver
        self.field = field
        self.terms = {p: c for p, c in (terms or {}).items() if c}

    @classmethod
    def from_path(cls, quiver, path: Path, coeff=None, field=QQ):
        return cls(quiver, {path: field.one if coeff is None else field(coeff)}, field)

    @classmethod
    def arrow(cls, quiver, name: str, field=QQ):
        return cls.from_path(quiver, quiver.arrow_path(name), field=field)

    @classmethod
    def vertex(cls, quiver, v, field=QQ):
        return cls.from_path(quiver, quiver.trivial(v), field=field)

    @classmethod
    def from_words(cls, quiver, words, field=QQ):
        """Build from [(coeff, [arrow names in traversal order]), ...]."""
        terms: dict = {}
        for c, names in words:
            p = quiver.path(list(names))
            terms[p] = terms.get(p, field.zero) + field(c)
        return cls(quiver, terms, field)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, PathElement) and self.quiver == other.quiver and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t.get(p, self.field.zero) + c
        return PathElement(self.quiver, t, self.field)

    def __neg__(self):
        return PathElement(self.quiver, {p: -c for p, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return PathElement(self.quiver, {p: c * x for p, x in self.terms.items()}, self.field)

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        """Algebra product: ``x * y`` traverses y first, then x."""
        if not isinstance(other, PathElement):
            return self.scale(other)
        t: dict = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                r = q.then(p)
                if r is not None:
                    t[r] = t.get(r, self.field.zero) + a * b
        return PathElement(self.quiver, t, self.field)

    def is_uniform(self) -> bool:
        ends = {(p.source, p.target) for p in self.terms}
        return len(ends) <= 1

    def endpoints(self):
        if not self.terms:
            return None
        p = next(iter(self.terms))
        return (p.source, p.target)

    def leading_term(self) -> Path:
        return max(self.terms, key=Path.key)

    def leading_coefficient(self):
        return self.terms[self.leading_term()]

    def monic(self) -> "PathElement":
        return self.scale(self.field.one / self.leading_coefficient())

    def sorted_terms(self):
        """Terms from the largest monomial down."""
        return sorted(self.terms.items(), key=lambda t: t[0].key(), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = []
        f = self.field
        for n, (p, c) in enumerate(self.sorted_terms()):
            s = f.format(c)
            neg = s.startswith("-")
            mag = s[1:] if neg else s
            word = self.quiver.render_path(p)
            body = word if mag == "1" else f"{mag}*{word}"
            if n == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"PathElement({self.render()})"


@dataclass
class AlgebraPresentation:
    quiver: Quiver
    relations: list = dc_field(default_factory=list)
    field: object = QQ
    name: str = ""

    def __post_init__(self):
        rels = []
        for r in self.relations:
            if r.quiver != self.quiver:
                raise PresentationError("relation lives in a different quiver")
            if not r.terms:
                continue
            if not r.is_uniform():
                raise PresentationError(f"relation {r.render()} is not uniform")
            if any(p.length < 2 for p in r.terms):
                raise PresentationError(f"relation {r.render()} has a term of length < 2")
            rels.append(r)
        self.relations = rels
        if not self.name:
            self.name = self.quiver.name

    def __eq__(self, other):
        if not isinstance(other, AlgebraPresentation):
            return NotImplemented
        return (self.quiver == other.quiver and self.field == other.field
                and [r.terms for r in self.relations] == [r.terms for r in other.relations])

    def render(self) -> str:
        from .grammar import render_presentation
        return render_presentation(self)


def preprojective_relations(q: Quiver, pairing: dict, field=QQ):
    """Vertex components e_i (sum over arrows of a*a - a a*) e_i of the preprojective relation."""
    rels = []
    for v in range(q.num_vertices):
        terms: dict = {}
        for a, s in pairing.items():
            ia = q.arrow_index[a]
            if q.arrow_source(ia) == v:
                # a then a*: the product a* a at the source of a
                p = q.path([a, s])
                terms[p] = terms.get(p, field.zero) + field.one
            if q.arrow_target(ia) == v:
                p = q.path([s, a])
                terms[p] = terms.get(p, field.zero) - field.one
        el = PathElement(q, terms, field)
        if el:
            rels.append(el)
    return rels


# ---------------------------------------------------------------- Gröbner


def _mkey(m: tuple):
    return (len(m), m)


class GroebnerBasis:
    """Reduced Gröbner basis of an ideal generated by uniform relations.

    Elements are stored internally as ``{arrow tuple: coeff}`` (monic).
    The monomial order is length first, then lexicographic on arrow indices.
    """

    order = "deglex(length, arrow index)"

    def __init__(self, quiver: Quiver, elements: list, field=QQ, complete=True, certified_length=None):
        self.quiver = quiver
        self.field = field
        self.elements = elements
        self.complete = complete
        self.certified_length = certified_length
        self._index()
        self._nf_cache: dict = {}

    def _index(self):
        self.lead = {}
        for n, e in enumerate(self.elements):
            self.lead[max(e, key=_mkey)] = n
        self.lead_lengths = sorted({len(m) for m in self.lead})

    def as_path_elements(self):
        out = []
        q = self.quiver
        for e in self.elements:
            terms = {}
            for m, c in e.items():
                terms[Path(q.arrow_source(m[0]), q.arrow_target(m[-1]), m)] = c
            out.append(PathElement(q, terms, self.field))
        return out

    def find_divisor(self, m: tuple):
        lead = self.lead
        for ln in self.lead_lengths:
            if ln > len(m):
                break
            for i in range(len(m) - ln + 1):
                w = m[i:i + ln]
                if w in lead:
                    return i, w
        return None

    def is_normal(self, m: tuple) -> bool:
        return self.find_divisor(m) is None

    def normal_form_monomial(self, m: tuple) -> dict:
        cache = self._nf_cache
        if m in cache:
            return cache[m]
        res = _reduce({m: self.field.one}, self, cache)
        cache[m] = res
        return res

    def normal_form(self, el) -> dict:
        """Normal form of ``{arrow tuple: coeff}`` or a PathElement."""
        if isinstance(el, PathElement):
            terms = {p.arrows: c for p, c in el.terms.items() if p.arrows}
            trivial = {p: c for p, c in el.terms.items() if not p.arrows}
            if trivial:
                raise PresentationError("normal_form on internal tuples excludes trivial paths")
            el = terms
        out: dict = {}
        for m, c in el.items():
            for k, x in self.normal_form_monomial(m).items():
                v = out.get(k, 0) + c * x
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def normal_form_element(self, el: PathElement) -> PathElement:
        q = self.quiver
        terms = {}
        for p, c in el.terms.items():
            if not p.arrows:
                terms[p] = terms.get(p, self.field.zero) + c
        for m, c in self.normal_form({p.arrows: c for p, c in el.terms.items() if p.arrows}).items():
            terms[Path(q.arrow_source(m[0]), q.arrow_target(m[-1]), m)] = c
        return PathElement(q, terms, self.field)

    def normal_words(self, max_length=None):
        """All normal paths, sorted by the monomial order, by length layers."""
        q = self.quiver
        out = [q.trivial(v) for v in range(q.num_vertices)]
        layer = [(a,) for a in range(q.num_arrows) if self.is_normal((a,))]
        length = 1
        while layer:
            if max_length is not None and length > max_length:
                raise InfiniteDimensionalError(
                    f"normal words of length {length} still exist; possibly infinite-dimensional", self)
            layer.sort(key=_mkey)
            out.extend(Path(q.arrow_source(m[0]), q.arrow_target(m[-1]), m) for m in layer)
            nxt = []
            for m in layer:
                for a in q.out_arrows(q.arrow_target(m[-1])):
                    w = m + (a,)
                    # only suffixes can contain a new leading term
                    if not any(w[len(w) - ln:] in self.lead for ln in self.lead_lengths if ln <= len(w)):
                        nxt.append(w)
            layer = nxt
            length += 1
        return out


def _reduce(el: dict, gb: GroebnerBasis, cache=None) -> dict:
    """Fully reduce ``el`` modulo the basis, largest monomials first."""
    work = dict(el)
    heap = [(-len(m), _neg(m), m) for m in work]
    heapq.heapify(heap)
    out: dict = {}
    while heap:
        _, _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        if cache is not None and m in cache:
            for k, x in cache[m].items():
                v = out.get(k, 0) + c * x
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
            continue
        div = gb.find_divisor(m)
        if div is None:
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
            continue
        i, w = div
        pre, post = m[:i], m[i + len(w):]
        g = gb.elements[gb.lead[w]]
        for t, x in g.items():
            if t == w:
                continue
            mm = pre + t + post
            old = work.get(mm)
            if old is None:
                heapq.heappush(heap, (-len(mm), _neg(mm), mm))
                old = 0
            v = old - c * x
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return out


class _neg:
    """Reverse lexicographic comparison wrapper for heap ordering."""

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = m

    def __lt__(self, other):
        return self.m > other.m

    def __eq__(self, other):
        return self.m == other.m


def _monic(e: dict, field) -> dict:
    lt = max(e, key=_mkey)
    inv = field.one / e[lt]
    return {m: c * inv for m, c in e.items()}


def groebner_complete(p: AlgebraPresentation, degree_bound: int | None = None) -> GroebnerBasis:
    """Complete the relations of ``p`` to a reduced Gröbner basis.

    Raises InfiniteDimensionalError when a leading term longer than the bound
    appears, or when normal words survive beyond the bound.
    """
    q = p.quiver
    f = p.field
    if degree_bound is None:
        degree_bound = 2 * q.num_arrows + 2
    elements: list = []
    queue = []
    counter = 0
    for r in p.relations:
        e = {t.arrows: c for t, c in r.terms.items()}
        queue.append((len(max(e, key=_mkey)), counter, e))
        counter += 1
    heapq.heapify(queue)
    while queue:
        _, _, e = heapq.heappop(queue)
        gb = GroebnerBasis(q, elements, f, complete=False)
        r = _reduce(e, gb)
        if not r:
            continue
        r = _monic(r, f)
        lt = max(r, key=_mkey)
        if len(lt) > degree_bound:
            raise InfiniteDimensionalError(
                f"leading term of length {len(lt)} exceeds the degree bound {degree_bound}; "
                "possibly infinite-dimensional", gb)
        # drop elements whose leading term is divisible by the new one; requeue them
        keep = []
        for g in elements:
            glt = max(g, key=_mkey)
            if _divides(lt, glt):
                queue_item = (len(glt), counter, g)
                counter += 1
                heapq.heappush(queue, queue_item)
            else:
                keep.append(g)
        elements = keep + [r]
        for g in elements:
            for s in _overlaps(r, g) + (_overlaps(g, r) if g is not r else []):
                heapq.heappush(queue, (len(max(s, key=_mkey)) if s else 0, counter, s))
                counter += 1
    # tail-reduce every element
    gb = GroebnerBasis(q, elements, f, complete=False)
    final = []
    for n, g in enumerate(elements):
        lt = max(g, key=_mkey)
        others = GroebnerBasis(q, elements[:n] + elements[n + 1:], f, complete=False)
        tail = {m: c for m, c in g.items() if m != lt}
        red = _reduce(tail, others) if tail else {}
        red[lt] = f.one
        final.append(red)
    final.sort(key=lambda e: _mkey(max(e, key=_mkey)))
    gb = GroebnerBasis(q, final, f, complete=True)
    # certify finite dimension: some length has no normal words
    words = gb.normal_words(max_length=degree_bound + 1)
    gb.certified_length = max((w.length for w in words), default=0) + 1
    gb.words = words
    return gb


def _divides(small: tuple, big: tuple) -> bool:
    n = len(small)
    return any(big[i:i + n] == small for i in range(len(big) - n + 1))


def _overlaps(f: dict, g: dict):
    """S-elements from suffixes of LT(f) overlapping prefixes of LT(g)."""
    u = max(f, key=_mkey)
    v = max(g, key=_mkey)
    out = []
    for k in range(1, min(len(u), len(v))):
        if u[len(u) - k:] == v[:k]:
            post = v[k:]
            pre = u[:len(u) - k]
            s: dict = {}
            for m, c in f.items():
                mm = m + post
                s[mm] = s.get(mm, 0) + c
            for m, c in g.items():
                mm = pre + m
                s[mm] = s.get(mm, 0) - c
            s = {m: c for m, c in s.items() if c}
            if s:
                out.append(s)
    return out


# ---------------------------------------------------------------- quotient


def quotient_algebra(p: AlgebraPresentation, degree_bound: int | None = None,
                     gb: GroebnerBasis | None = None, grading=None) -> FDAlgebra:
    """Finite-dimensional algebra kQ/I with the normal paths as basis.

    ``grading`` optionally maps arrow names to degrees.
    """
    if gb is None:
        gb = groebner_complete(p, degree_bound)
    q = p.quiver
    f = p.field
    words = gb.words
    windex = {w.arrows: n for n, w in enumerate(words) if w.arrows}
    triv = {w.source: n for n, w in enumerate(words) if not w.arrows}
    by_target: dict = {}
    for n, w in enumerate(words):
        by_target.setdefault(w.target, []).append(n)
    one = f.one
    mult: dict = {}
    for i, x in enumerate(words):
        # x * y: traverse y, then x; needs target(y) == source(x)
        row = {}
        for j in by_target.get(x.source, ()):
            y = words[j]
            if not x.arrows:
                row[j] = {j: one}
                continue
            if not y.arrows:
                row[j] = {i: one}
                continue
            nf = gb.normal_form_monomial(y.arrows + x.arrows)
            if nf:
                row[j] = {windex[m]: c for m, c in nf.items()}
        if row:
            mult[i] = row
    gens = []
    for a in range(q.num_arrows):
        if (a,) not in windex:
            raise PresentationError(f"arrow {q.arrows[a].name} is not a normal word; ideal is not admissible")
        gens.append(Generator(q.arrows[a].name, q.arrow_source(a), q.arrow_target(a), {windex[(a,)]: one}))
    grad = None
    if grading is not None:
        grad = [sum(grading.get(q.arrows[a].name, 0) for a in w.arrows) for w in words]
    labels = [q.render_path(w) for w in words]
    alg = FDAlgebra(f, q.vertices, [w.source for w in words], [w.target for w in words], mult,
                    [triv[v] for v in range(q.num_vertices)], gens, labels=labels, grading=grad,
                    name=p.name or q.name, quiver=q, basis_paths=list(words), presentation=p)
    alg.groebner = gb
    return alg


def path_algebra(q: Quiver, field=QQ, degree_bound=None) -> FDAlgebra:
    return quotient_algebra(AlgebraPresentation(q, [], field), degree_bound)


# ---------------------------------------------------------------- recovery


def _rad_squared(alg: FDAlgebra, rad):
    """Span of products of radical elements, per block."""
    by_src: dict = {}
    for v in rad:
        i = next(iter(v))
        by_src.setdefault(alg.src[i], []).append(v)
    out = []
    for x in rad:
        i = next(iter(x))
        for y in by_src.get(alg.tgt[i], ()):
            pr = alg.product(y, x)
            if pr:
                out.append(pr)
    return out


def _block_of(alg, v: dict):
    i = next(iter(v))
    return (alg.src[i], alg.tgt[i])


def arrow_lifts(alg: FDAlgebra):
    """Radical elements lifting a basis of rad/rad^2, grouped by block.

    Within each block the echelon rows of the radical are scanned in pivot
    order and kept when independent modulo rad^2.
    """
    rad = alg.radical_basis()
    if alg.dim - len(rad) != alg.num_vertices:
        raise AlgebraError("algebra is not basic (or not split)")
    rad2 = _rad_squared(alg, rad)
    blocks_rad: dict = {}
    for v in rad:
        blocks_rad.setdefault(_block_of(alg, v), []).append(v)
    blocks_rad2: dict = {}
    for v in rad2:
        blocks_rad2.setdefault(_block_of(alg, v), []).append(v)
    lifts = []
    for blk in sorted(blocks_rad):
        e = Echelon(alg.field)
        for v in blocks_rad[blk]:
            e.add(v)
        full, _ = e.reduced_rows()
        sq = Echelon(alg.field)
        for v in blocks_rad2.get(blk, ()):
            sq.add(v)
        for p in sorted(full):
            if sq.add(full[p]):
                lifts.append((blk, full[p]))
    return lifts


def algebra_quiver(alg: FDAlgebra, arrow_names=None) -> Quiver:
    return _quiver_and_lifts(alg, arrow_names)[0]


def _quiver_and_lifts(alg: FDAlgebra, arrow_names=None):
    lifts = arrow_lifts(alg)
    arrows = []
    out_lifts = []
    for n, ((s, t), v) in enumerate(lifts):
        name = arrow_names(n, s, t) if callable(arrow_names) else f"g{n}"
        arrows.append(Arrow(name, alg.vertices[s], alg.vertices[t]))
        out_lifts.append((name, v))
    q = Quiver(alg.vertices, arrows, name=alg.name)
    lift_map = dict(out_lifts)
    return q, [lift_map[a.name] for a in q.arrows]


@dataclass
class RecoveredPresentation:
    presentation: AlgebraPresentation
    arrow_images: list
    loewy_length: int


def recover_presentation(alg: FDAlgebra, arrow_names=None, full=False):
    """Quiver with relations for a basic algebra.

    Arrow lifts come from :func:`arrow_lifts`; relations are a minimal
    generating set of the kernel of the induced map from paths, found
    degree by degree up to the Loewy length.  With ``full=True`` the lifts
    and Loewy length are returned as well.
    """
    f = alg.field
    q, lifts = _quiver_and_lifts(alg, arrow_names)
    # images of all paths of length >= 1, by layers, until everything vanishes
    images: dict = {}
    layer = []
    for a in range(q.num_arrows):
        m = (a,)
        images[m] = lifts[a]
        layer.append(m)
    length = 1
    while True:
        nxt = []
        for m in layer:
            for a in q.out_arrows(q.arrow_target(m[-1])):
                w = m + (a,)
                img = alg.product(lifts[a], images[m]) if images[m] else {}
                images[w] = img
                nxt.append(w)
        length += 1
        if not nxt or not any(images[w] for w in nxt):
            loewy = length
            break
        layer = nxt
        if length > alg.dim + 1:
            raise AlgebraError("radical does not vanish; inconsistent algebra")
    # kernel of the path map restricted to lengths 2..loewy, per block
    paths_by_block: dict = {}
    for m in images:
        if 2 <= len(m) <= loewy:
            blk = (q.arrow_source(m[0]), q.arrow_target(m[-1]))
            paths_by_block.setdefault(blk, []).append(m)
    kernel = []
    for blk in sorted(paths_by_block):
        ms = sorted(paths_by_block[blk], key=_mkey)
        e = Echelon(f, track=True)
        for m in ms:
            img = images[m]
            r, t = e.reduce(img, {m: f.one})
            if r:
                e.add(img, {m: f.one})
            else:
                kernel.append(t)
    # IJ + JI truncated at the Loewy length
    gen_space = Echelon(f)
    monos: dict = {}

    def mono_index(m):
        if m not in monos:
            monos[m] = len(monos)
        return monos[m]

    def vec(el):
        return {mono_index(m): c for m, c in el.items()}

    for r in kernel:
        for a in range(q.num_arrows):
            left = {}
            right = {}
            for m, c in r.items():
                if q.arrow_source(a) == q.arrow_target(m[-1]) and len(m) + 1 <= loewy:
                    left[m + (a,)] = c
                if q.arrow_target(a) == q.arrow_source(m[0]) and len(m) + 1 <= loewy:
                    right[(a,) + m] = c
            if left:
                gen_space.add(vec(left))
            if right:
                gen_space.add(vec(right))
    relations = []
    kernel.sort(key=lambda r: (_mkey(max(r, key=_mkey)), sorted(_mkey(m) for m in r)))
    for r in kernel:
        if gen_space.add(vec(r)):
            lt = max(r, key=_mkey)
            inv = f.one / r[lt]
            terms = {Path(q.arrow_source(m[0]), q.arrow_target(m[-1]), m): c * inv for m, c in r.items()}
            relations.append(PathElement(q, terms, f))
    relations.sort(key=lambda r: (r.endpoints(), r.leading_term().key()))
    pres = AlgebraPresentation(q, relations, f, name=alg.name)
    if full:
        return RecoveredPresentation(pres, lifts, loewy)
    return pres


class PathSection:
    """Writes elements of a basic algebra as combinations of paths in its arrow lifts."""

    def __init__(self, alg: FDAlgebra, quiver: Quiver, lifts):
        self.algebra = alg
        self.quiver = quiver
        f = alg.field
        self.ech: dict = {}
        self.paths: list = []
        frontier = []
        for v in range(quiver.num_vertices):
            p = quiver.trivial(v)
            frontier.append((p, {alg.idempotents[v]: f.one}))
        while frontier:
            nxt = []
            for p, img in frontier:
                if not img:
                    continue
                e = self.ech.setdefault((p.source, p.target), Echelon(f, track=True))
                if e.add(img, {len(self.paths): f.one}):
                    self.paths.append(p)
                    for a in quiver.out_arrows(p.target):
                        q = p.then(quiver.arrow_path(quiver.arrows[a].name))
                        nxt.append((q, alg.product(lifts[a], img)))
            frontier = nxt
            if len(self.paths) > alg.dim:
                raise AlgebraError("path images exceed the algebra dimension")

    def express(self, vec: dict) -> PathElement:
        f = self.algebra.field
        q = self.quiver
        if not vec:
            return PathElement(q, {}, f)
        i = next(iter(vec))
        blk = (self.algebra.src[i], self.algebra.tgt[i])
        e = self.ech.get(blk)
        c = e.express(vec) if e is not None else None
        if c is None:
            raise AlgebraError("element is not in the span of the path images")
        return PathElement(q, {self.paths[k]: x for k, x in c.items()}, f)
