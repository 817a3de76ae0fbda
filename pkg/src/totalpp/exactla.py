"""Exact scalars and matrices over the rationals and prime fields.

Dense :class:`ExactMatrix` objects cover the small matrices that describe
module actions.  The larger linear systems that appear when solving for
module homomorphisms are handled by :class:`Echelon`, which works on sparse
vectors stored as ``{index: coefficient}`` dictionaries.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq, is_prime


class DimensionMismatch(ValueError):
    pass


class RationalField:
    """The field of rational numbers, backed by gmpy2 ``mpq``."""

    name = "QQ"
    characteristic = 0

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def __call__(self, x):
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        if isinstance(x, str):
            return mpq(x.strip())
        return mpq(x)

    def format(self, x) -> str:
        return str(mpq(x))

    def random_element(self, rng, bound: int = 7):
        return mpq(rng.randint(-bound, bound))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class GF:
    """Residue class modulo a prime."""

    __slots__ = ("v", "p")

    def __init__(self, v, p: int):
        self.p = p
        self.v = v % p

    def _val(self, o):
        if isinstance(o, GF):
            return o.v
        if isinstance(o, int):
            return o % self.p
        if isinstance(o, (Fraction, type(mpq(0)))):
            num, den = int(o.numerator), int(o.denominator)
            return num * pow(den, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, o):
        w = self._val(o)
        return NotImplemented if w is NotImplemented else GF(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._val(o)
        return NotImplemented if w is NotImplemented else GF(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._val(o)
        return NotImplemented if w is NotImplemented else GF(w - self.v, self.p)

    def __mul__(self, o):
        w = self._val(o)
        return NotImplemented if w is NotImplemented else GF(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        w = self._val(o)
        if w is NotImplemented:
            return NotImplemented
        if w == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GF(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, o):
        w = self._val(o)
        if w is NotImplemented:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GF(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return GF(-self.v, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.v != 0

    def __eq__(self, o):
        w = self._val(o)
        if w is NotImplemented:
            return False
        return self.v == w

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"GF({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class PrimeField:
    characteristic: int

    def __init__(self, p: int):
        if p < 2 or not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"
        self.zero = GF(0, p)
        self.one = GF(1, p)

    def __call__(self, x):
        if isinstance(x, GF):
            return GF(x.v, self.p)
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, int):
            return GF(x, self.p)
        return GF(0, self.p) + x

    def format(self, x) -> str:
        return str(self(x).v)

    def random_element(self, rng, bound: int = 7):
        return GF(rng.randrange(self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


def parse_field(spec: str):
    """``"q"`` gives the rationals and ``"gf:p"`` gives GF(p)."""
    s = spec.strip().lower()
    if s in ("q", "qq"):
        return QQ
    if s.startswith("gf:"):
        return PrimeField(int(s[3:]))
    raise ValueError(f"unknown field {spec!r}")


# ---------------------------------------------------------------- dense


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    field: object
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field=QQ, cols: int | None = None):
        rows = [tuple(field(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int, field=QQ):
        z = field.zero
        return cls(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int, field=QQ):
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_lists(self):
        return [list(r) for r in self.entries]

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash((self.rows, self.cols))

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return ExactMatrix(self.field, self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {self.shape} and {other.shape}")
        return ExactMatrix(self.field, self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self):
        return self.scale(-self.field.one)

    def scale(self, c):
        return ExactMatrix(self.field, self.rows, self.cols,
                           tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        z = self.field.zero
        ob = other.entries
        out = []
        for r in self.entries:
            acc = [z] * other.cols
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(ob[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return ExactMatrix(self.field, self.rows, other.cols, tuple(out))

    def row_times(self, v: Sequence):
        """Row vector ``v`` times this matrix."""
        if len(v) != self.rows:
            raise DimensionMismatch("vector length does not match matrix rows")
        acc = [self.field.zero] * self.cols
        for a, r in zip(v, self.entries):
            if a:
                for j, b in enumerate(r):
                    if b:
                        acc[j] += a * b
        return acc

    def transpose(self):
        return ExactMatrix(self.field, self.cols, self.rows, tuple(zip(*self.entries)) if self.rows
                           else tuple(() for _ in range(self.cols)))

    def rank(self) -> int:
        return row_reduce(self)[1]

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.entries)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"


def row_reduce(m: ExactMatrix):
    """Reduced row echelon form, rank and pivot columns."""
    rows = [list(r) for r in m.entries]
    pivots = []
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = m.field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    rref = ExactMatrix(m.field, m.rows, m.cols, tuple(tuple(x) for x in rows))
    return rref, len(pivots), pivots


@dataclass(frozen=True)
class LinearSolution:
    consistent: bool
    particular: tuple | None
    kernel: tuple


def solve_linear(m: ExactMatrix, b: Sequence) -> LinearSolution:
    """Solve ``m x = b`` for a column vector ``b``.

    Free variables are set to zero in the particular solution; the kernel
    basis has one vector per free column.
    """
    if len(b) != m.rows:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {m.rows}")
    f = m.field
    aug = ExactMatrix(f, m.rows, m.cols + 1,
                      tuple(tuple(r) + (f(x),) for r, x in zip(m.entries, b)))
    rref, _, pivots = row_reduce(aug)
    kernel = _kernel_from_rref(rref, [p for p in pivots if p < m.cols], m.cols)
    if m.cols in pivots:
        return LinearSolution(False, None, kernel)
    x = [f.zero] * m.cols
    for i, p in enumerate(pivots):
        x[p] = rref.entries[i][m.cols]
    return LinearSolution(True, tuple(x), kernel)


def _kernel_from_rref(rref: ExactMatrix, pivots, ncols):
    f = rref.field
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for c in free:
        v = [f.zero] * ncols
        v[c] = f.one
        for i, p in enumerate(pivots):
            v[p] = -rref.entries[i][c]
        basis.append(tuple(v))
    return tuple(basis)


def kernel(m: ExactMatrix):
    rref, _, pivots = row_reduce(m)
    return _kernel_from_rref(rref, pivots, m.cols)


def kronecker(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    rows = []
    for ra in a.entries:
        for rb in b.entries:
            rows.append(tuple(x * y for x in ra for y in rb))
    return ExactMatrix(a.field, a.rows * b.rows, a.cols * b.cols, tuple(rows))


def block_diagonal(blocks: Sequence[ExactMatrix], field=QQ) -> ExactMatrix:
    R = sum(b.rows for b in blocks)
    C = sum(b.cols for b in blocks)
    out = [[field.zero] * C for _ in range(R)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b.entries):
            out[r0 + i][c0:c0 + b.cols] = row
        r0 += b.rows
        c0 += b.cols
    return ExactMatrix(field, R, C, tuple(tuple(r) for r in out))


def is_invertible(m: ExactMatrix) -> bool:
    return m.rows == m.cols and row_reduce(m)[1] == m.rows


def inverse(m: ExactMatrix) -> ExactMatrix:
    if m.rows != m.cols:
        raise DimensionMismatch("only square matrices can be inverted")
    n = m.rows
    f = m.field
    aug = ExactMatrix(f, n, 2 * n, tuple(
        tuple(r) + tuple(f.one if i == j else f.zero for j in range(n)) for i, r in enumerate(m.entries)))
    rref, _, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return ExactMatrix(f, n, n, tuple(r[n:] for r in rref.entries))


# ---------------------------------------------------------------- sparse


def sparse_add(u: dict, v: dict, c=1) -> dict:
    """Return ``u + c v`` as a new dict."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def sparse_scale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def dense_to_sparse(v: Sequence, offset: int = 0) -> dict:
    return {i + offset: x for i, x in enumerate(v) if x}


def sparse_to_dense(v: dict, n: int, field=QQ) -> list:
    out = [field.zero] * n
    for k, x in v.items():
        out[k] = x
    return out


class Echelon:
    """Incrementally grown echelon basis of a subspace of k^n.

    Each stored row is normalized so its pivot (smallest index) has
    coefficient 1.  When ``track`` is set, every row also remembers which
    combination of tagged input vectors produced it, so membership tests can
    return coordinates.
    """

    def __init__(self, field=QQ, track: bool = False):
        self.field = field
        self.track = track
        self.rows: dict = {}
        self.tags: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict, tag: dict | None = None):
        """Reduce ``v`` against the basis; returns (residual, tag of residual)."""
        v = dict(v)
        t = dict(tag) if (self.track and tag) else {}
        rows = self.rows
        heap = [k for k in v if k in rows]
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            c = v.get(k)
            if not c:
                continue
            for j, r in rows[k].items():
                old = v.get(j)
                nv = (old if old is not None else 0) - c * r
                if nv:
                    if old is None and j in rows:
                        heapq.heappush(heap, j)
                    v[j] = nv
                else:
                    v.pop(j, None)
            if self.track:
                for j, r in self.tags[k].items():
                    nt = t.get(j, 0) - c * r
                    if nt:
                        t[j] = nt
                    else:
                        t.pop(j, None)
        return v, t

    def add(self, v: dict, tag: dict | None = None) -> bool:
        """Add ``v``; returns False when it already lies in the span."""
        r, t = self.reduce(v, tag)
        if not r:
            return False
        p = min(r)
        inv = self.field.one / r[p]
        self.rows[p] = {k: x * inv for k, x in r.items()}
        if self.track:
            self.tags[p] = {k: x * inv for k, x in t.items()}
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)[0]

    def express(self, v: dict):
        """Coordinates of ``v`` in terms of the tagged inputs, or None."""
        r, t = self.reduce(v)
        if r:
            return None
        return {k: -x for k, x in t.items()}

    def pivots(self):
        return sorted(self.rows)

    def reduced_rows(self):
        """Fully reduced rows (RREF) keyed by pivot, with their tags."""
        piv = sorted(self.rows)
        full = {}
        ftags = {}
        for p in reversed(piv):
            row = dict(self.rows[p])
            tag = dict(self.tags.get(p, {}))
            for q in [k for k in row if k != p and k in full]:
                c = row.get(q)
                if not c:
                    continue
                row = sparse_add(row, full[q], -c)
                if self.track:
                    tag = sparse_add(tag, ftags[q], -c)
            full[p] = row
            ftags[p] = tag
        return full, ftags


def nullspace(equations: Iterable[dict], nvars: int, field=QQ) -> list:
    """Basis of solutions of the homogeneous sparse system.

    One basis vector per free variable, with the other free variables zero.
    """
    e = Echelon(field)
    for eq in equations:
        if eq:
            e.add(eq)
    full, _ = e.reduced_rows()
    free = [c for c in range(nvars) if c not in full]
    col_to_rows: dict = {}
    for p, row in full.items():
        for k, x in row.items():
            if k != p:
                col_to_rows.setdefault(k, []).append((p, x))
    basis = []
    one = field.one
    for c in free:
        v = {c: one}
        for p, x in col_to_rows.get(c, ()):
            v[p] = -x
        basis.append(v)
    return basis


def solve_sparse(equations: Sequence[dict], rhs: Sequence, nvars: int, field=QQ):
    """Particular solution (free variables zero) of a sparse system, or None."""
    e = Echelon(field)
    for eq, b in zip(equations, rhs):
        row = dict(eq)
        if b:
            row[nvars] = field(b)
        if row:
            e.add(row)
    if nvars in e.rows:
        return None
    full, _ = e.reduced_rows()
    x = {}
    for p, row in full.items():
        c = row.get(nvars)
        if c:
            x[p] = c
    return x


def rank_of_vectors(vectors: Iterable[dict], field=QQ) -> int:
    e = Echelon(field)
    for v in vectors:
        e.add(v)
    return len(e)


class QuotientSpace:
    """Coordinates on Z/B for subspaces B ⊆ Z of k^n.

    ``reps`` are chosen from the given spanning vectors of Z, in order,
    skipping those already in B + earlier reps.
    """

    def __init__(self, z_vectors: Sequence[dict], b_vectors: Sequence[dict], field=QQ):
        self.field = field
        self.ech = Echelon(field, track=True)
        for b in b_vectors:
            self.ech.add(b, None)
        self.reps = []
        for z in z_vectors:
            if self.ech.add(z, {len(self.reps): field.one}):
                self.reps.append(z)

    @property
    def dim(self):
        return len(self.reps)

    def coordinates(self, v: dict) -> dict:
        c = self.ech.express(v)
        if c is None:
            raise ValueError("vector does not lie in the ambient subspace")
        return c
