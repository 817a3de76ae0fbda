"""Independent reference computations used by the tests.

Nothing here imports totalpp; everything is plain integers or sympy.
"""
import itertools

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


def dynkin_graph(kind, n):
    if kind == "A":
        return [(i, i + 1) for i in range(1, n)]
    if kind == "D":
        return [(1, n), (2, n)] + [(k, k + 1) for k in range(3, n)]
    raise ValueError(kind)


def positive_roots(n, edges, bound=4):
    """Positive integer vectors x with Tits form q(x) = 1."""
    out = []
    for x in itertools.product(range(bound), repeat=n):
        if not any(x):
            continue
        q = sum(c * c for c in x) - sum(x[u - 1] * x[v - 1] for u, v in edges)
        if q == 1:
            out.append(x)
    return out


class ARQuiverOracle:
    """AR quiver of a Dynkin quiver by knitting with covariant conventions.

    P_v has dimension vector (number of paths v -> u)_u, and P_w is a summand
    of rad P_v for each arrow v -> w.  Hom dimensions come from the hammock
    recursion along almost split sequences.
    """

    def __init__(self, n, arrows):
        self.n = n
        reach = [[int(u == v) for v in range(n)] for u in range(n)]
        changed = True
        while changed:
            changed = False
            new = [[int(u == v) for v in range(n)] for u in range(n)]
            for u in range(n):
                for s, t in arrows:
                    if s == u:
                        for v in range(n):
                            new[u][v] += reach[t][v]
            if new != reach:
                reach, changed = new, True
        self.paths = reach  # reach[u][v] = number of paths u -> v
        proj = {(0, v): tuple(reach[v][u] for u in range(n)) for v in range(n)}
        inj = {tuple(reach[u][v] for u in range(n)) for v in range(n)}
        self.dim = dict(proj)
        self.pred = {x: [] for x in proj}
        self.succ = {x: [] for x in proj}
        for s, t in arrows:
            # irreducible map P_t -> P_s
            self.succ[(0, t)].append((0, s))
            self.pred[(0, s)].append((0, t))
        self.order = []
        self.tau_minus = {}
        pending = [(0, v) for v in range(n)]
        done = set()
        while pending:
            x = next(y for y in pending if all(p in done for p in self.pred[y]))
            pending.remove(x)
            done.add(x)
            self.order.append(x)
            if self.dim[x] in inj:
                continue
            new = tuple(sum(self.dim[e][k] for e in self.succ[x]) - self.dim[x][k] for k in range(n))
            y = (x[0] + 1, x[1])
            self.dim[y] = new
            self.pred[y] = list(self.succ[x])
            self.succ[y] = []
            for e in self.succ[x]:
                self.succ[e].append(y)
            self.tau_minus[x] = y
            pending.append(y)
        self.tau = {y: x for x, y in self.tau_minus.items()}
        self.vertices = list(self.order)

    def hom_from(self, x):
        h = {}
        for y in self.order:
            if y == x:
                h[y] = 1
                continue
            val = sum(h.get(e, 0) for e in self.pred[y])
            if y in self.tau:
                val -= h[self.tau[y]]
            h[y] = val
        return h

    def hom(self, x, y):
        return self.hom_from(x).get(y, 0)

    def iterate(self, x, i):
        for _ in range(i):
            x = self.tau_minus.get(x)
            if x is None:
                return None
        return x

    def graded_hom_sum(self, sources, targets):
        out = []
        i = 0
        while True:
            tot = 0
            alive = False
            for y in targets:
                z = self.iterate(y, i)
                if z is None:
                    continue
                alive = True
                for x in sources:
                    tot += self.hom(x, z)
            if not alive:
                break
            out.append(tot)
            i += 1
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def psi_graded(self):
        return self.graded_hom_sum(self.vertices, self.vertices)

    def pi_graded(self):
        projs = [(0, v) for v in range(self.n)]
        return self.graded_hom_sum(projs, projs)

    def auslander_dim(self):
        return sum(self.hom(x, y) for x in self.vertices for y in self.vertices)


def dynkin_oracle(kind, n):
    """Orientation u -> v for every edge (u, v) with u < v, vertices 0-based."""
    arrows = [(u - 1, v - 1) for u, v in dynkin_graph(kind, n)]
    return ARQuiverOracle(n, arrows)


def quotient_dim_bruteforce(vertices, arrows, relations, max_len):
    """dim kQ/I for an acyclic quiver by spanning the ideal with sympy.

    ``arrows`` maps name -> (source, target); a relation is a list of
    (coefficient, [arrow names in traversal order]).
    """
    def paths_from(v, length):
        if length == 0:
            return [((), v)]
        out = []
        for p, end in paths_from(v, length - 1):
            for a, (s, t) in arrows.items():
                if s == end:
                    out.append((p + (a,), t))
        return out

    all_paths = []
    for v in vertices:
        for ell in range(max_len + 1):
            all_paths.extend((v, p) for p, _ in paths_from(v, ell))
    index = {p: k for k, p in enumerate(all_paths)}

    def end(v, p):
        return arrows[p[-1]][1] if p else v

    rows = {}
    for rel in relations:
        src = arrows[rel[0][1][0]][0]
        tgt = arrows[rel[0][1][-1]][1]
        room = max_len - min(len(w) for _, w in rel)
        for (u, left) in all_paths:
            if end(u, left) != src or len(left) > room:
                continue
            for (w, right) in all_paths:
                if w != tgt or len(left) + len(right) > room:
                    continue
                row = {}
                for c, word in rel:
                    key = (u, left + tuple(word) + right)
                    if key in index:
                        row[index[key]] = row.get(index[key], 0) + QQ(c)
                row = {k: x for k, x in row.items() if x}
                if row:
                    rows[len(rows)] = row
    if not rows:
        return len(all_paths)
    m = DomainMatrix(rows, (len(rows), len(all_paths)), QQ)
    return len(all_paths) - m.rank()


def sympy_rref(rows):
    m = sympy.Matrix(rows)
    r, piv = m.rref()
    return [[r[i, j] for j in range(m.cols)] for i in range(m.rows)], list(piv)
