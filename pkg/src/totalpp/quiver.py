"""Finite quivers, paths and the standard quiver builders."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Path(NamedTuple):
    """A path stored in traversal order.

    ``source`` and ``target`` are vertex indices, ``arrows`` arrow indices.
    The path traversing ``a`` then ``b`` is the algebra element ``ba``.
    """

    source: int
    target: int
    arrows: tuple

    @property
    def length(self) -> int:
        return len(self.arrows)

    def key(self):
        # length first, then lexicographic on arrow indices
        return (len(self.arrows), self.arrows, self.source, self.target)

    def then(self, other: "Path") -> "Path | None":
        """Traverse self, then other; None when endpoints do not match."""
        if self.target != other.source:
            return None
        return Path(self.source, other.target, self.arrows + other.arrows)

    def contains_at(self, sub: "Path"):
        """Start positions where ``sub`` occurs as a subpath."""
        n, m = len(self.arrows), len(sub.arrows)
        if m == 0:
            return []
        a = self.arrows
        return [i for i in range(n - m + 1) if a[i:i + m] == sub.arrows]


class Quiver:
    """Finite quiver with canonically ordered arrows.

    Arrows are sorted by (source index, target index, name).
    """

    def __init__(self, vertices: Sequence, arrows: Sequence, name: str = "Q"):
        self.name = name
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("vertex labels must be unique")
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        arrs = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(str(a[0]), str(a[1]), str(a[2]))
            if a.source not in self.vertex_index or a.target not in self.vertex_index:
                raise QuiverError(f"arrow {a.name} uses an undeclared vertex")
            arrs.append(a)
        names = [a.name for a in arrs]
        if len(set(names)) != len(names):
            raise QuiverError("arrow names must be unique")
        vi = self.vertex_index
        arrs.sort(key=lambda a: (vi[a.source], vi[a.target], a.name))
        self.arrows = tuple(arrs)
        self.arrow_index = {a.name: i for i, a in enumerate(self.arrows)}
        self._src = tuple(vi[a.source] for a in self.arrows)
        self._tgt = tuple(vi[a.target] for a in self.arrows)
        self._out = [[] for _ in self.vertices]
        self._in = [[] for _ in self.vertices]
        for i, a in enumerate(self.arrows):
            self._out[self._src[i]].append(i)
            self._in[self._tgt[i]].append(i)

    # structural equality: same vertices in the same order and same arrows
    def __eq__(self, other):
        return isinstance(other, Quiver) and self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver({self.name}: {len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_arrows(self):
        return len(self.arrows)

    def arrow_source(self, i: int) -> int:
        return self._src[i]

    def arrow_target(self, i: int) -> int:
        return self._tgt[i]

    def out_arrows(self, v: int):
        return self._out[v]

    def in_arrows(self, v: int):
        return self._in[v]

    def trivial(self, v) -> Path:
        i = v if isinstance(v, int) else self.vertex_index[str(v)]
        return Path(i, i, ())

    def arrow_path(self, name: str) -> Path:
        i = self.arrow_index[name]
        return Path(self._src[i], self._tgt[i], (i,))

    def path(self, names: Sequence[str]) -> Path:
        """Path from arrow names in traversal order."""
        if not names:
            raise QuiverError("use trivial() for paths of length zero")
        p = self.arrow_path(names[0])
        for n in names[1:]:
            q = p.then(self.arrow_path(n))
            if q is None:
                raise QuiverError(f"arrows {list(names)} do not compose")
            p = q
        return p

    def render_path(self, p: Path) -> str:
        """Right-to-left product notation, so traversal [a, b] prints as ``b*a``."""
        if not p.arrows:
            return f"e_{self.vertices[p.source]}"
        return "*".join(self.arrows[i].name for i in reversed(p.arrows))

    def arrow_names(self, p: Path):
        return [self.arrows[i].name for i in p.arrows]

    def opposite(self, name: str | None = None) -> "Quiver":
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows],
                      name or self.name + "_op")

    def to_dot(self) -> str:
        lines = [f'digraph "{self.name}" {{']
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a in self.arrows:
            lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def enumerate_paths(q: Quiver, max_length: int):
    """All paths of length ≤ max_length, in length-then-lexicographic order."""
    if max_length < 0:
        raise QuiverError("max_length must be non-negative")
    layer = [q.trivial(v) for v in range(q.num_vertices)]
    out = list(layer)
    for _ in range(max_length):
        nxt = []
        for p in layer:
            for a in q.out_arrows(p.target):
                nxt.append(Path(p.source, q.arrow_target(a), p.arrows + (a,)))
        nxt.sort(key=Path.key)
        out.extend(nxt)
        layer = nxt
        if not layer:
            break
    return out


# ---------------------------------------------------------------- Dynkin

def dynkin_edges(kind: str, n: int):
    """Underlying graph of a Dynkin diagram on vertices 1..n."""
    kind = kind.upper()
    if kind == "A":
        if n < 1:
            raise QuiverError("A_n needs n >= 1")
        return [(i, i + 1) for i in range(1, n)]
    if kind == "D":
        if n < 4:
            raise QuiverError(f"D_{n} is not a Dynkin diagram (need n >= 4)")
        # hub n joined to the leaves 1, 2 and to the tail 3 - 4 - ... - (n-1)
        return [(1, n), (2, n)] + [(k, k + 1) for k in range(3, n)]
    if kind == "E":
        if n not in (6, 7, 8):
            raise QuiverError(f"E_{n} is not a Dynkin diagram")
        return [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    raise QuiverError(f"unknown Dynkin type {kind}")


def parse_dynkin_type(t: str):
    t = t.strip().replace("_", "")
    if len(t) < 2 or not t[1:].isdigit():
        raise QuiverError(f"cannot parse Dynkin type {t!r}")
    return t[0].upper(), int(t[1:])


def build_dynkin(type_: str, orientation=None) -> Quiver:
    """Dynkin quiver with vertices 1..n.

    Each edge (u, v) with u < v points u -> v unless flipped.  ``orientation``
    may be a string of '+'/'-' (one per edge, '-' flips), a sequence of
    booleans (True flips), or a mapping from edges to booleans.  For D_4 the
    default points every arrow into the hub 4.
    """
    kind, n = parse_dynkin_type(type_)
    edges = dynkin_edges(kind, n)
    flips = [False] * len(edges)
    if isinstance(orientation, str):
        if len(orientation) != len(edges) or set(orientation) - {"+", "-"}:
            raise QuiverError(f"orientation string needs {len(edges)} characters from '+-'")
        flips = [c == "-" for c in orientation]
    elif isinstance(orientation, dict):
        flips = [bool(orientation.get(e, False)) for e in edges]
    elif orientation is not None:
        flips = [bool(x) for x in orientation]
        if len(flips) != len(edges):
            raise QuiverError("orientation length does not match the number of edges")
    names = _arrow_letters(len(edges))
    arrows = []
    for (u, v), fl, nm in zip(edges, flips, names):
        s, t = (v, u) if fl else (u, v)
        arrows.append(Arrow(nm, str(s), str(t)))
    return Quiver([str(i) for i in range(1, n + 1)], arrows, name=f"{kind}{n}")


def _arrow_letters(k: int):
    letters = "abcdefghijklmnopqrstuvwxyz"
    if k <= len(letters):
        return list(letters[:k])
    return [f"a{i}" for i in range(1, k + 1)]


STAR = "_star"


def double_quiver(q: Quiver):
    """Add a reversed arrow ``a_star`` for every arrow ``a``.

    Returns the doubled quiver and the pairing {a: a_star}.
    """
    arrows = list(q.arrows)
    pairing = {}
    for a in q.arrows:
        s = a.name + STAR
        pairing[a.name] = s
        arrows.append(Arrow(s, a.target, a.source))
    return Quiver(q.vertices, arrows, name=q.name + "_double"), pairing


# ---------------------------------------------------------------- lattice


def lattice_points(d: int, n: int):
    """(d+1)-tuples of non-negative integers summing to n-1, lexicographically descending."""
    pts = [x for x in itertools.product(range(n), repeat=d + 1) if sum(x) == n - 1]
    pts.sort(reverse=True)
    return pts


def direction(d: int, i: int):
    """The vector f_i in Z^{d+1}, for 1 <= i <= d+1."""
    f = [0] * (d + 1)
    if i <= d:
        f[i - 1] = -1
        f[i] = 1
    else:
        f[0] = 1
        f[d] = -1
    return tuple(f)


def point_label(x) -> str:
    return "".join(str(c) for c in x)


def lattice_arrow_name(x, i: int) -> str:
    return f"a_{point_label(x)}_{i}"


def add(x, f):
    return tuple(a + b for a, b in zip(x, f))


def build_q_dn(d: int, n: int, include_last: bool = True) -> Quiver:
    """The lattice quiver with arrows a_{x,i}: x -> x + f_i.

    With ``include_last=False`` the arrows in direction d+1 are omitted.
    """
    if d < 1 or n < 1:
        raise QuiverError("d and n must be positive")
    pts = lattice_points(d, n)
    pset = set(pts)
    arrows = []
    top = d + 1 if include_last else d
    for x in pts:
        for i in range(1, top + 1):
            y = add(x, direction(d, i))
            if y in pset:
                arrows.append(Arrow(lattice_arrow_name(x, i), point_label(x), point_label(y)))
    return Quiver([point_label(x) for x in pts], arrows, name=f"Q{d}_{n}")
