"""Command-line driver: ``gds <command> ...``.

Exit status is 0 on success, 1 for unreadable or invalid input and 2 when a
fusion is singular (``K`` numerically equal to 1).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .cplx import Complex
from .errors import ConflictSingularity, EvidenceError, MagnitudeWarning
from .evidence import decide, parse_evidence, serialize_evidence
from .fusion import SINGULAR_TOL, combine_all, conflict
from .mass import bel_c, focal_elements, pl_c
from .sweep import SweepSpec, default_m2, sweep, write_csv

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SINGULAR = 2

DEFAULT_FILE_TOL = 1e-3


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; 2 is reserved for singular fusion
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _fixed(v: float, digits: int = 4) -> str:
    s = f"{v:.{digits}f}"
    return s[1:] if s.startswith("-") and float(s) == 0.0 else s


def format_complex(z: Complex, digits: int = 4) -> str:
    re = _fixed(z.re, digits)
    im = _fixed(z.im, digits)
    if im.startswith("-"):
        return f"{re}-{im[1:]}i"
    return f"{re}+{im}i"


def _names(arg: str | None) -> list[str] | None:
    if arg is None:
        return None
    return [s.strip() for s in arg.split(",") if s.strip()]


def _select(bodies, names):
    if names is None:
        return list(bodies.values())
    missing = [n for n in names if n not in bodies]
    if missing:
        raise EvidenceError(f"unknown body name(s): {', '.join(missing)}; available: {', '.join(bodies)}")
    return [bodies[n] for n in names]


def _load(args):
    return parse_evidence(args.file, tol=args.tol)


def cmd_validate(args, out):
    _, bodies = _load(args)
    for name, m in bodies.items():
        print(f"{name}: valid, {len(focal_elements(m))} focal element(s), sum = {format_complex(m.total())}", file=out)


def _fuse(args):
    frame, bodies = _load(args)
    ms = _select(bodies, _names(args.bodies))
    return frame, combine_all(ms, args.singular_tol)


def cmd_fuse(args, out):
    frame, fused = _fuse(args)
    if args.json:
        out.write(serialize_evidence(frame, {"fused": fused}))
        return
    for p, v in focal_elements(fused):
        print(f"M({p}) = {format_complex(v)}", file=out)


def _belief(args, out, fn, name):
    frame, bodies = _load(args)
    (m,) = _select(bodies, [args.body])
    p = frame.proposition(args.prop)
    print(f"{name}({p}) = {_fixed(fn(m, p))}", file=out)


def cmd_bel(args, out):
    _belief(args, out, bel_c, "Bel_c")


def cmd_pl(args, out):
    _belief(args, out, pl_c, "Pl_c")


def cmd_conflict(args, out):
    _, bodies = _load(args)
    names = _names(args.bodies) or list(bodies)
    if len(names) != 2:
        raise EvidenceError(f"conflict needs exactly two bodies, got {len(names)}")
    m1, m2 = _select(bodies, names)
    report = conflict(m1, m2, args.singular_tol)
    if args.json:
        doc = {"k": {"re": report.k.re, "im": report.k.im}, "k_magnitude": report.k_magnitude, "singular": report.singular}
        print(json.dumps(doc), file=out)
        return
    print(f"K = {format_complex(report.k)}", file=out)
    print(f"|K| = {_fixed(report.k_magnitude)}", file=out)
    if report.singular:
        print("singular: combination is undefined (K = 1)", file=out)


def cmd_sweep(args, out):
    if args.m2 is not None:
        _, bodies = parse_evidence(args.m2, tol=args.tol)
        m2 = _select(bodies, [args.body])[0] if args.body else next(iter(bodies.values()))
    else:
        m2 = default_m2()
    cells = sweep(SweepSpec(args.xsteps, args.ysteps, m2))
    if args.out == "-":
        write_csv(cells, out)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_csv(cells, fh)
        n = sum(c.feasible for c in cells)
        print(f"wrote {len(cells)} cells ({n} feasible) to {args.out}", file=sys.stderr)


def cmd_decide(args, out):
    _, fused = _fuse(args)
    result = decide(fused)
    for p, v in result.scores.items():
        print(f"Bel_c({p}) = {_fixed(v)}", file=out)
    tie = " (tie)" if result.tie else ""
    print(f"winner: {result.winner} (score {_fixed(result.scores[result.winner])}){tie}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gds", description="Generalized Dempster-Shafer evidence tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_file(p):
        p.add_argument("file", help="evidence JSON file")
        p.add_argument("--tol", type=float, default=DEFAULT_FILE_TOL,
                       help="normalization tolerance for input masses (default %(default)g)")
        return p

    def with_singular(p):
        p.add_argument("--singular-tol", type=float, default=SINGULAR_TOL,
                       help="reject fusion when |1 - K| is below this (default %(default)g)")
        return p

    p = with_file(sub.add_parser("validate", help="check every body in a file"))
    p.set_defaults(func=cmd_validate)

    p = with_singular(with_file(sub.add_parser("fuse", help="combine bodies with the generalized rule")))
    p.add_argument("--bodies", help="comma-separated body names, fused left to right (default: all)")
    p.add_argument("--json", action="store_true", help="emit the fused CBBA as evidence JSON at full precision")
    p.set_defaults(func=cmd_fuse)

    for name, func, what in (("bel", cmd_bel, "complex belief"), ("pl", cmd_pl, "complex plausibility")):
        p = with_file(sub.add_parser(name, help=f"{what} of a proposition"))
        p.add_argument("--body", required=True)
        p.add_argument("--prop", required=True, help="comma-separated element labels, e.g. A,B")
        p.set_defaults(func=func)

    p = with_singular(with_file(sub.add_parser("conflict", help="conflict coefficient between two bodies")))
    p.add_argument("--bodies", help="two comma-separated body names (default: the file's two bodies)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_conflict)

    p = sub.add_parser("sweep", help="tabulate |K| over the (x, y) CBBA family")
    p.add_argument("--xsteps", type=int, default=201)
    p.add_argument("--ysteps", type=int, default=401)
    p.add_argument("--out", required=True, help="CSV path, or - for stdout")
    p.add_argument("--m2", help="evidence file holding the fixed second CBBA (default: 0.5+0.5i / 0.5-0.5i)")
    p.add_argument("--body", help="body of --m2 to use (default: first)")
    p.add_argument("--tol", type=float, default=DEFAULT_FILE_TOL)
    p.set_defaults(func=cmd_sweep)

    p = with_singular(with_file(sub.add_parser("decide", help="fuse bodies, then pick the max-Bel_c singleton")))
    p.add_argument("--bodies", help="comma-separated body names (default: all)")
    p.set_defaults(func=cmd_decide)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", MagnitudeWarning)
        try:
            args.func(args, out)
        except ConflictSingularity as exc:
            print(f"gds: singular fusion: {exc}", file=sys.stderr)
            return EXIT_SINGULAR
        except (EvidenceError, OSError, ValueError) as exc:
            print(f"gds: {exc}", file=sys.stderr)
            return EXIT_INPUT
        finally:
            for w in caught:
                print(f"gds: warning: {w.message}", file=sys.stderr)
    return EXIT_OK
