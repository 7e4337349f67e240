"""Command-line interface.

Exit status: 0 when every verdict is confirmed, 1 for usage errors, 2 when a
check reports a counterexample or a disagreement with the published claims.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import bijections as bj
from .conjectures import METHODS, MODES, SCAN_IDS, probe_buildable_example, scan
from .enumeration import (
    Distribution,
    Q_set,
    distribution,
    gf_abs_signed,
    quarter_planar_loops,
    shuffles,
)
from .paths import ClassParams, WordParseError, complement, is_horizontal, is_vertical, parse_word
from .polynomials import IntPoly, is_toggle_buildable, to_shifted_basis, toggle_basis_decompose
from .report import CONFIRMED, emit_report, jsonable
from .stats import STATISTICS, absolute_even_count, even_count, shifted_even_count, signed_peak_count
from .verify import DEFAULT_SIZE, VERIFIERS

EXIT_OK, EXIT_USAGE, EXIT_SURPRISE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _class_arg(text: str) -> ClassParams:
    try:
        return ClassParams.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bounded_int(low: int):
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if value < low:
            raise argparse.ArgumentTypeError(f"must be >= {low}")
        return value

    return convert


_positive_int = _bounded_int(1)
_count_int = _bounded_int(0)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    parser = _Parser(prog="shufflepeak", description="Exact corner statistics of lattice-path shuffles.")
    sub = parser.add_subparsers(dest="command", required=True)

    walks = _Parser(add_help=False)
    walks.add_argument("--vpath", help="vertical word over N/S (or U/D)")
    walks.add_argument("--hpath", help="horizontal word over E/W (or R/L)")
    walks.add_argument("--class", dest="klass", type=_class_arg, metavar="r,l,u,d")
    walks.add_argument("--loops", type=int, metavar="LEN", help="quarter-plane loops of this even length")
    walks.add_argument("--mode", choices=MODES, default="quarter")
    walks.add_argument("--stat", choices=sorted(STATISTICS), default="peak")

    sub.add_parser("enumerate", parents=[common, walks], help="distribution of a statistic over a path set")
    sub.add_parser("gf", parents=[common, walks], help="generating function, its (x+1) expansion and toggle basis")

    bij = sub.add_parser("bijection", parents=[common], help="apply flip, complement, colorings or toggling")
    bij.add_argument("op", choices=("flip", "complement", "coloring", "toggle", "toggle-class",
                                    "word-to-shuffle", "shuffle-to-word"))
    bij.add_argument("--word", required=True)
    bij.add_argument("--index", type=int)
    bij.add_argument("--vpath")
    bij.add_argument("--hpath")

    ver = sub.add_parser("verify", parents=[common], help="re-derive a proven identity by brute force")
    ver.add_argument("id", choices=sorted(VERIFIERS) + ["buildprobe"])
    ver.add_argument("--max", type=_count_int, help="size bound (defaults per identity)")
    ver.add_argument("--timing", action="store_true", help="include per-report runtime")

    sc = sub.add_parser("scan", parents=[common], help="search parameter grids for counterexamples")
    sc.add_argument("ids", nargs="+", choices=list(SCAN_IDS) + ["all"])
    sc.add_argument("--max", type=_count_int, default=3, help="grid bound on r, l, u, d (default 3)")
    sc.add_argument("--max-len", type=_count_int, default=10, help="largest loop length for conj10 (default 10)")
    sc.add_argument("--mode", choices=MODES, default="quarter")
    sc.add_argument("--method", choices=METHODS, default="transfer")
    sc.add_argument("--jobs", type=_positive_int, default=1)
    sc.add_argument("--timing", action="store_true", help="include per-report runtime")
    return parser


# -- subcommands -------------------------------------------------------------


def _word(text: Optional[str], kind: str) -> str:
    if text is None:
        raise UsageError(f"--{kind[0]}path is required here")
    w = parse_word(text)
    if kind == "vertical" and not is_vertical(w):
        raise UsageError(f"--vpath must contain only N/S steps: {text!r}")
    if kind == "horizontal" and not is_horizontal(w):
        raise UsageError(f"--hpath must contain only E/W steps: {text!r}")
    return w


def _path_set(args):
    """Resolve the walk-set flags to (iterable of words, description)."""
    if args.loops is not None:
        if args.loops < 0 or args.loops % 2:
            raise UsageError(f"loop length must be even and non-negative, got {args.loops}")
        return quarter_planar_loops(args.loops)
    v = _word(args.vpath, "vertical")
    if args.hpath is not None:
        return shuffles(v, _word(args.hpath, "horizontal"))
    if args.klass is None:
        raise UsageError("give --hpath, --class or --loops")
    p = args.klass
    if (v.count("N"), v.count("S")) != (p.u, p.d):
        raise UsageError(f"--vpath {v!r} does not have u={p.u}, d={p.d}")
    try:
        return Q_set(v, p.r, p.l, args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args):
    return distribution(_path_set(args), args.stat), EXIT_OK


def _gf_record(gf: IntPoly) -> dict:
    return {
        "coeffs": gf,
        "shifted": to_shifted_basis(gf),
        "positive": to_shifted_basis(gf).is_nonnegative(),
        "toggle_basis": toggle_basis_decompose(gf),
        "toggle_buildable": is_toggle_buildable(gf),
    }


def cmd_gf(args):
    if args.stat == "signed-peak":
        raise UsageError("signed-peak takes negative values; use abs-signed-peak for a polynomial")
    if args.klass is not None and args.vpath is None and args.loops is None:
        if args.stat != "abs-signed-peak":
            raise UsageError("--class alone gives the closed-form GF, which needs --stat abs-signed-peak")
        return _gf_record(gf_abs_signed(args.klass)), EXIT_OK
    dist = distribution(_path_set(args), args.stat)
    return _gf_record(Distribution(dist).to_poly()), EXIT_OK


def cmd_bijection(args):
    op = args.op
    if op in ("toggle", "toggle-class", "word-to-shuffle"):
        w = args.word
        if set(w) - {"0", "1"}:
            raise UsageError(f"binary word expected, got {w!r}")
        if op == "toggle":
            if args.index is None:
                raise UsageError("toggle needs --index")
            try:
                out = bj.toggle(w, args.index)
            except (IndexError, ValueError) as exc:
                raise UsageError(str(exc)) from None
            return {"input": w, "index": args.index, "output": out}, EXIT_OK
        if op == "toggle-class":
            if len(w) % 2:
                raise UsageError("toggle classes need an even-length word")
            tc = bj.toggle_class(w)
            return {"input": w, "anchor": sorted(tc.anchor), "base": sorted(tc.base),
                    "size": tc.size, "members": list(tc.members())}, EXIT_OK
        v, h = _word(args.vpath, "vertical"), _word(args.hpath, "horizontal")
        try:
            s = bj.word_to_shuffle(w, v, h)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return {"input": w, "shuffle": s, "signed_peak": signed_peak_count(s),
                "shifted_even_count": shifted_even_count(w), "even_count": even_count(w),
                "absolute_even_count": absolute_even_count(w)}, EXIT_OK
    w = parse_word(args.word)
    if op == "flip":
        return {"input": w, "output": bj.flip(w)}, EXIT_OK
    if op == "complement":
        return {"input": w, "output": complement(w), "signed_peak": signed_peak_count(w),
                "output_signed_peak": signed_peak_count(complement(w))}, EXIT_OK
    if op == "shuffle-to-word":
        try:
            return {"input": w, "output": bj.shuffle_to_word(w)}, EXIT_OK
        except (ValueError, bj.ColoringError) as exc:
            raise UsageError(str(exc)) from None
    from .paths import projections

    c = bj.coloring_encode(w)
    v, h = projections(w)
    return {"input": w, "blue_vertical": sorted(c.blue_vertical), "blue_horizontal": sorted(c.blue_horizontal),
            "origin_blue": c.origin_blue, "in_vert": c.inward_blue(v, h),
            "decoded": bj.coloring_decode(c, v, h)}, EXIT_OK


def _status(reports) -> int:
    return EXIT_OK if all(r.verdict == CONFIRMED for r in reports) else EXIT_SURPRISE


def cmd_verify(args):
    if args.id == "buildprobe":
        reports = probe_buildable_example(args.max if args.max is not None else 4)
    else:
        size = args.max if args.max is not None else DEFAULT_SIZE[args.id]
        reports = VERIFIERS[args.id](size)
    return reports, _status(reports)


def cmd_scan(args):
    ids = list(SCAN_IDS) if "all" in args.ids else list(dict.fromkeys(args.ids))
    reports = scan(ids, max_entry=args.max, mode=args.mode, jobs=args.jobs, method=args.method, max_len=args.max_len)
    return reports, _status(reports)


COMMANDS = {
    "enumerate": cmd_enumerate,
    "gf": cmd_gf,
    "bijection": cmd_bijection,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    """Parse ``argv``, run the subcommand and write its report; return the exit code."""
    stdout = stdout if stdout is not None else sys.stdout.buffer
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, status = COMMANDS[args.command](args)
    except (UsageError, WordParseError) as exc:
        print(f"shufflepeak: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if type(result) is dict:
        result = jsonable(result)
    data = emit_report(result, args.format, timing=getattr(args, "timing", False))
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        stdout.write(data)
        stdout.flush()
    return status


def main() -> None:
    sys.exit(run())
