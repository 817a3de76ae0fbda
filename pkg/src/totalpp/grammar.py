"""Text format for quivers with relations.

    quiver A2 { vertices: 1 2; arrows: a: 1 -> 2; }
    relations { b*a - 2*d*c; 1/2*f*e; }

A word ``b*a`` means a followed by b.  Lines starting with ``#`` are comments.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .exactla import QQ
from .presentation import AlgebraPresentation, PathElement, PresentationError
from .quiver import Quiver, QuiverError

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<punct>[{}:;*/+\-])
  | (?P<name>[A-Za-z0-9_.']+)
""", re.VERBOSE)

_SAFE = re.compile(r"^[A-Za-z0-9_.']+$")


class GrammarError(PresentationError):
    def __init__(self, msg, line, col):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str):
    out = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise GrammarError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line += 1
            col = 1
        else:
            if kind not in ("ws", "comment"):
                out.append(Token("punct" if kind == "arrow" else kind, s, line, col))
            col += len(s)
        pos = m.end()
    out.append(Token("eof", "", line, col))
    return out


class _Parser:
    def __init__(self, text, field):
        self.toks = tokenize(text)
        self.i = 0
        self.field = field

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise GrammarError(msg, tok.line, tok.col)

    def expect(self, text=None, kind=None):
        t = self.peek()
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            self.fail(f"expected {want}, found {t.text!r}" if t.kind != "eof" else f"expected {want}, found end of input")
        return self.next()

    def parse(self):
        self.expect("quiver")
        name = self.expect(kind="name").text
        self.expect("{")
        self.expect("vertices")
        self.expect(":")
        verts = []
        while self.peek().kind == "name":
            verts.append(self.next().text)
        self.expect(";")
        arrows = []
        arrow_tokens = {}
        if self.peek().text == "arrows":
            self.next()
            self.expect(":")
            while self.peek().kind == "name":
                at = self.next()
                if at.text[0].isdigit():
                    self.fail("arrow names must not start with a digit", at)
                self.expect(":")
                s = self.expect(kind="name")
                self.expect("->")
                t = self.expect(kind="name")
                for vt in (s, t):
                    if vt.text not in verts:
                        self.fail(f"unknown vertex {vt.text!r}", vt)
                self.expect(";")
                arrows.append((at.text, s.text, t.text))
                arrow_tokens[at.text] = at
        self.expect("}")
        try:
            q = Quiver(verts, arrows, name=name)
        except QuiverError as e:
            self.fail(str(e))
        rels = []
        if self.peek().text == "relations":
            self.next()
            self.expect("{")
            while self.peek().text != "}":
                start = self.peek()
                el = self.relation(q)
                try:
                    if not el.is_uniform():
                        raise PresentationError("relation is not uniform")
                    AlgebraPresentation(q, [el], self.field)
                except PresentationError as e:
                    self.fail(str(e), start)
                rels.append(el)
                self.expect(";")
            self.expect("}")
        self.expect(kind="eof")
        return AlgebraPresentation(q, rels, self.field, name=name)

    def relation(self, q):
        words = []
        sign = 1
        if self.peek().text in "+-" and self.peek().kind == "punct":
            sign = -1 if self.next().text == "-" else 1
        while True:
            c, names = self.term(q)
            words.append((c if sign > 0 else -c, names))
            t = self.peek()
            if t.kind == "punct" and t.text in ("+", "-"):
                self.next()
                sign = -1 if t.text == "-" else 1
                continue
            break
        return PathElement.from_words(q, words, self.field)

    def term(self, q):
        f = self.field
        coeff = f.one
        t = self.peek()
        if t.kind == "name" and t.text.isdigit():
            self.next()
            num = t.text
            if self.peek().text == "/":
                self.next()
                den = self.expect(kind="name")
                if not den.text.isdigit() or int(den.text) == 0:
                    self.fail("bad denominator", den)
                num = f"{num}/{den.text}"
            coeff = f(num)
            if self.peek().text != "*":
                self.fail("a coefficient must be followed by '*' and a path")
            self.next()
        names = []
        while True:
            at = self.expect(kind="name")
            if at.text not in q.arrow_index:
                self.fail(f"unknown arrow {at.text!r}", at)
            names.append(at.text)
            if self.peek().text == "*":
                self.next()
                continue
            break
        # written left to right as b*a, traversed right to left
        names.reverse()
        try:
            q.path(names)
        except QuiverError:
            self.fail(f"{'*'.join(reversed(names))} is not a path", at)
        return coeff, names


def parse_presentation(text: str, field=QQ) -> AlgebraPresentation:
    return _Parser(text, field).parse()


def _safe(name: str) -> str:
    if _SAFE.match(name):
        return name
    return re.sub(r"_+", "_", re.sub(r"[^A-Za-z0-9_.']", "_", name)).strip("_") or "Q"


def render_presentation(p: AlgebraPresentation) -> str:
    q = p.quiver
    lines = [f"quiver {_safe(p.name or q.name)} {{"]
    lines.append("  vertices: " + " ".join(q.vertices) + ";")
    if q.arrows:
        lines.append("  arrows:")
        for a in q.arrows:
            lines.append(f"    {a.name}: {a.source} -> {a.target};")
    lines.append("}")
    lines.append("relations {")
    for r in p.relations:
        lines.append(f"  {r.render()};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def presentation_to_json(p: AlgebraPresentation) -> dict:
    q = p.quiver
    f = p.field
    rels = []
    for r in p.relations:
        rels.append([[f.format(c), q.arrow_names(path)] for path, c in r.sorted_terms()])
    return {
        "name": p.name,
        "field": f.name,
        "vertices": list(q.vertices),
        "arrows": [[a.name, a.source, a.target] for a in q.arrows],
        "relations": rels,
        "relations_text": [r.render() for r in p.relations],
    }


def presentation_to_dot(p: AlgebraPresentation) -> str:
    dot = p.quiver.to_dot()
    if not p.relations:
        return dot
    notes = "\\l".join(r.render() for r in p.relations) + "\\l"
    return dot.rstrip().rstrip("}") + f'  relations [shape=note, label="{notes}"];\n}}\n'


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
