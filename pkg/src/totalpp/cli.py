"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource bound exceeded.
"""
from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import suites
from .bimodule import NotNilpotentError
from .exactla import QQ, parse_field
from .families import lambda_dn, pi_dn, psi_dn, verify_family_proposition
from .grammar import GrammarError, dumps, parse_presentation, presentation_to_dot, presentation_to_json, \
    render_presentation
from .homological import BoundExceeded, TauFunctor, dominant_dimension, global_dimension, knit_ar_quiver
from .preprojective import IterationBoundError, auslander_algebra, build_catalog, pi_combinatorial, pi_graded, \
    pi_tensor, psi_X
from .presentation import InfiniteDimensionalError, PresentationError, path_algebra, quotient_algebra, \
    recover_presentation
from .quiver import QuiverError, build_dynkin
from .total import end_of_pi_tensor_pi, total_presentation, verify_iso_via_surjection

OK, FAILED, BAD_INPUT, BOUND = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, msg, code=BAD_INPUT):
        super().__init__(msg)
        self.code = code


def _num(x):
    return "inf" if x == math.inf else x


class Out:
    """Collects text lines or a JSON object, then writes once."""

    def __init__(self, args):
        self.fmt = args.format
        self.lines = []
        self.data = {}
        self.dot = None

    def text(self, *lines):
        self.lines.extend(lines)

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if self.fmt == "json":
            stream.write(dumps(self.data))
        elif self.fmt == "dot":
            if self.dot is None:
                raise CliError("this command has no DOT output")
            stream.write(self.dot)
        else:
            stream.write("\n".join(self.lines) + ("\n" if self.lines else ""))


# ---------------------------------------------------------------- inputs


def _field(args):
    try:
        return parse_field(args.field)
    except ValueError as e:
        raise CliError(str(e))


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror}")


def load_algebra(args):
    """Λ from --type (a Dynkin path algebra) or --input (a presentation file)."""
    fld = _field(args)
    if bool(args.type) == bool(args.input):
        raise CliError("give exactly one of --type or --input")
    if args.type:
        alg = path_algebra(build_dynkin(args.type), fld, degree_bound=args.max_degree)
    else:
        alg = quotient_algebra(parse_presentation(_read(args.input), fld), args.max_degree)
    return alg


# ---------------------------------------------------------------- commands


def cmd_parse(args, out):
    p = parse_presentation(_read(args.file), _field(args))
    out.data = presentation_to_json(p)
    out.dot = presentation_to_dot(p)
    q = p.quiver
    out.text(render_presentation(p).rstrip("\n"),
             f"# {q.num_vertices} vertices, {q.num_arrows} arrows, {len(p.relations)} relations")
    if args.dim:
        alg = quotient_algebra(p, args.max_degree)
        out.data["dimension"] = alg.dim
        out.text(f"# dimension {alg.dim}")
    return OK


def _pi_mode(args, mode, H, td):
    if mode == "combinatorial":
        if not args.type:
            raise CliError("the combinatorial mode needs --type")
        return pi_combinatorial(args.type, _field(args), degree_bound=args.max_degree)
    if mode == "graded":
        return pi_graded(H, args.d, tau=td).algebra
    return pi_tensor(H, args.d, tau=td, bound=args.max_degree)


def cmd_pi(args, out):
    H = load_algebra(args)
    td = TauFunctor(H, args.d)
    modes = ["combinatorial", "graded", "tensor"] if args.mode == "all" else [args.mode]
    if args.mode == "all" and not args.type:
        modes = ["graded", "tensor"]
    algs = {m: _pi_mode(args, m, H, td) for m in modes}
    report = {}
    for m, a in algs.items():
        report[m] = {"dimension": a.dim, "graded_dims": list(a.graded_dims()),
                     "cartan": [[s, t, n] for (s, t), n in a.cartan().items()]}
        out.text(f"{m}: dim {a.dim}, graded dims {tuple(a.graded_dims())}")
    first = algs[modes[0]]
    out.data = {"algebra": H.name, "d": args.d, "modes": report}
    if len(modes) == 1:
        out.data["structure"] = first.to_json()
    out.dot = presentation_to_dot(first.presentation if first.presentation is not None
                                  else recover_presentation(first))
    status = OK
    if len(modes) > 1:
        dims = {a.dim for a in algs.values()}
        cartans = {tuple(sorted(a.cartan().items())) for a in algs.values()}
        graded = {tuple(a.graded_dims()) for a in algs.values()}
        agree = len(dims) == 1 and len(cartans) == 1 and len(graded) == 1
        out.data["agree"] = agree
        out.text(f"routes agree: {agree}")
        status = OK if agree else FAILED
    return status


def cmd_auslander(args, out):
    H = load_algebra(args)
    au = auslander_algebra(H, args.d, seed=args.seed)
    out.data = {"catalog": au.catalog.to_json(), "dimension": au.algebra.dim,
                "presentation": presentation_to_json(au.presentation)}
    out.dot = presentation_to_dot(au.presentation)
    out.text(f"# {len(au.catalog.entries)} summands, dim {au.algebra.dim}")
    for e in au.catalog.to_json()["entries"]:
        out.text(f"# {e['label']}: dims {e['dims']}{' injective' if e['injective'] else ''}"
                 f"{'' if e['tau_minus'] is None else ' -> ' + e['tau_minus']}")
    out.text(render_presentation(au.presentation).rstrip("\n"))
    return OK


def cmd_psi(args, out):
    H = load_algebra(args)
    td = TauFunctor(H, args.d)
    want = {"hom", "end", "presentation"} if args.mode == "all" else {args.mode}
    graded = {}
    cat = build_catalog(H, args.d, tau=td, seed=args.seed)
    hom = None
    if "hom" in want or args.check:
        hom = psi_X(H, cat.modules, args.d, tau=td, labels=cat.labels)
        graded["hom"] = hom.graded_dims()
    if "end" in want:
        graded["end"] = end_of_pi_tensor_pi(pi_tensor(H, args.d, tau=td, bound=args.max_degree)).graded_dims()
    tp = None
    if "presentation" in want or args.check:
        tp = total_presentation(H, args.d, tau=td, seed=args.seed)
        if "presentation" in want:
            graded["presentation"] = quotient_algebra(tp.presentation, args.max_degree,
                                                      grading=tp.grading()).graded_dims()
        out.dot = presentation_to_dot(tp.presentation)
        out.data["presentation"] = presentation_to_json(tp.presentation)
    out.data["graded_dims"] = {k: list(v) for k, v in sorted(graded.items())}
    for k, v in sorted(graded.items()):
        out.text(f"{k}: graded dims {tuple(v)}, total {sum(v)}")
    if tp is not None and "presentation" in want:
        out.text(render_presentation(tp.presentation).rstrip("\n"))
    status = OK
    if len({tuple(v) for v in graded.values()}) > 1:
        status = FAILED
    if args.check:
        iso = verify_iso_via_surjection(tp, psi=hom)
        gl, dom = global_dimension(hom.algebra), dominant_dimension(hom.algebra)
        bound_ok = gl <= args.d + 2 <= dom
        out.data["check"] = {"iso_via_surjection": iso.to_json(), "gldim": _num(gl), "domdim": _num(dom),
                             "bounds": bound_ok, "routes_agree": status == OK}
        out.text(f"iso via surjection: {iso.passed}", f"gldim {_num(gl)}, domdim {_num(dom)}: {bound_ok}",
                 f"routes agree: {status == OK}")
        if not (iso.passed and bound_ok):
            status = FAILED
    out.data["passed"] = status == OK
    return status


def cmd_family(args, out):
    build = {"lambda": lambda_dn, "pi": pi_dn, "psi": psi_dn}[args.which]
    fld = _field(args)
    p = build(args.d, args.n, fld)
    out.data = {"presentation": presentation_to_json(p)}
    out.dot = presentation_to_dot(p)
    out.text(render_presentation(p).rstrip("\n"))
    if args.verify:
        if fld != QQ:
            raise CliError("verification compares presentations over the rationals")
        rep = verify_family_proposition(args.d, args.n, seed=args.seed)
        out.data["verification"] = rep.to_json()
        for c in rep.checks:
            out.text(f"# {c.name}: {'pass' if c.passed else 'FAIL'}")
        return OK if rep.passed else FAILED
    return OK


def cmd_check(args, out):
    try:
        reps = suites.run_suite(args.suite, slow=args.slow)
    except KeyError:
        raise CliError(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(suites.SUITES))} or all")
    out.data = {"suite": args.suite, "results": [r.to_json() for r in reps],
                "passed": all(r.passed for r in reps)}
    for r in reps:
        out.text(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
    return OK if all(r.passed for r in reps) else FAILED


def cmd_export(args, out):
    """Write text, JSON and DOT files for one construction into --output-dir."""
    target = Path(args.output_dir or ".")
    target.mkdir(parents=True, exist_ok=True)
    written = []

    def save(name, text):
        path = target / name
        path.write_text(text)
        written.append(str(path))

    def save_presentation(stem, p):
        save(f"{stem}.txt", render_presentation(p))
        save(f"{stem}.json", dumps(presentation_to_json(p)))
        save(f"{stem}.dot", presentation_to_dot(p))

    if args.what == "family":
        for which, build in (("lambda", lambda_dn), ("pi", pi_dn), ("psi", psi_dn)):
            save_presentation(f"{which}_{args.d_family}_{args.n}", build(args.d_family, args.n, _field(args)))
    else:
        H = load_algebra(args)
        stem = H.name
        if args.what == "ar":
            ar = knit_ar_quiver(H)
            save(f"ar_{stem}.dot", ar.to_dot())
        elif args.what == "auslander":
            au = auslander_algebra(H, args.d, seed=args.seed)
            save_presentation(f"gamma_{stem}", au.presentation)
            save(f"catalog_{stem}.json", dumps(au.catalog.to_json()))
        elif args.what == "psi":
            tp = total_presentation(H, args.d, seed=args.seed)
            save_presentation(f"psi_{stem}", tp.presentation)
        elif args.what == "pi":
            pi = pi_graded(H, args.d).algebra
            save(f"pi_{stem}.json", dumps(pi.to_json()))
            save_presentation(f"pi_{stem}", recover_presentation(pi))
    out.data = {"written": written}
    out.dot = None
    out.text(*written)
    return OK


# ---------------------------------------------------------------- parser


def _positive(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q or gf:<p>")
    common.add_argument("--max-degree", type=_positive, default=None, help="degree bound for finiteness checks")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for generic-witness sampling")
    common.add_argument("--output-dir", default=None)
    common.add_argument("--slow", action="store_true", help="include slow instances")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--type", help="Dynkin type of a path algebra, e.g. A3 or D4")
    source.add_argument("--input", help="presentation file")
    source.add_argument("--d", type=_positive, default=1)

    ap = argparse.ArgumentParser(prog="totalpp", parents=[common],
                                 description="Preprojective and total preprojective algebras of quivers with relations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="validate and echo a presentation")
    p.add_argument("file")
    p.add_argument("--dim", action="store_true", help="also compute the dimension of kQ/I")
    p.set_defaults(run=cmd_parse)

    p = sub.add_parser("pi", parents=[common, source], help="(d+1)-preprojective algebra")
    p.add_argument("--mode", choices=("combinatorial", "graded", "tensor", "all"), default="graded")
    p.set_defaults(run=cmd_pi)

    p = sub.add_parser("auslander", parents=[common, source], help="d-Auslander algebra with its presentation")
    p.set_defaults(run=cmd_auslander)

    p = sub.add_parser("psi", parents=[common, source], help="total (d+1)-preprojective algebra")
    p.add_argument("--mode", choices=("hom", "end", "presentation", "all"), default="presentation")
    p.add_argument("--check", action="store_true", help="verify the presentation and the dimension bounds")
    p.set_defaults(run=cmd_psi)

    p = sub.add_parser("family", parents=[common], help="lattice family presentations")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--which", choices=("lambda", "pi", "psi"), default="psi")
    p.add_argument("--verify", action="store_true", help="check the Auslander, Π and Ψ descriptions")
    p.set_defaults(run=cmd_family)

    p = sub.add_parser("check", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=f"one of {', '.join(sorted(suites.SUITES))} or all")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("export", parents=[common, source], help="write artifacts to --output-dir")
    p.add_argument("what", choices=("ar", "auslander", "psi", "pi", "family"))
    p.add_argument("--n", type=_positive, default=3, help="family size")
    p.add_argument("--family-d", dest="d_family", type=_positive, default=1)
    p.set_defaults(run=cmd_export)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    out = Out(args)
    try:
        code = args.run(args, out)
        out.emit()
        return code
    except (BoundExceeded, IterationBoundError, InfiniteDimensionalError, NotNilpotentError) as e:
        print(f"error: resource bound exceeded: {e}", file=sys.stderr)
        return BOUND
    except GrammarError as e:
        print(f"error: {e}", file=sys.stderr)
        return BAD_INPUT
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (PresentationError, QuiverError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
