"""Command-line front end.

Exit codes: 0 success / valid / all checks pass, 1 model violation or failed
check, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import itertools
import sys
from typing import Sequence

from . import automaton as fa
from .language import count_Ln, enumerate_Ln, format_word
from .model import InvalidModel, ModelParseError, hilbert_series, load_model, reduce, validate
from .oracle import check_roots_of_unity, check_series
from .ratfunc import series_expand


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError("values must be non-negative")
    return vals


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="equivhilb", description="Equivariant Hilbert series of hierarchical models.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="list violated hypotheses")
    s.add_argument("model")

    s = sub.add_parser("reduce", help="show the reduced two-element-facet data")
    s.add_argument("model")

    s = sub.add_parser("automaton", help="print the automaton for the reduced model")
    s.add_argument("model")
    s.add_argument("--minimize", action="store_true")
    s.add_argument("--format", choices=("dot", "table"), default="dot")

    s = sub.add_parser("series", help="print the equivariant Hilbert series")
    s.add_argument("model")
    s.add_argument("--minimize", action="store_true", help="accepted for symmetry; the pipeline always minimizes")

    for name, helptext in (("expand", "coefficient table of the series"), ("check", "oracle checks of the series")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("model")
        s.add_argument("--nmax", type=_int_list, required=True)
        s.add_argument("--dmax", type=int, required=True)
        if name == "check":
            s.add_argument("--tol", type=float, default=1e-9)
            s.add_argument("--trials", type=int, default=20)

    s = sub.add_parser("words", help="count (or list) words with given tau and zeta counts")
    s.add_argument("model")
    s.add_argument("--n", type=_int_list, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--list", action="store_true")
    return p


def _reduced(args, err):
    spec = load_model(args.model)
    return spec, reduce(spec)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        return _dispatch(args, out, err)
    except (ModelParseError, OSError) as e:
        err.write(f"error: {e}\n")
        return 2
    except InvalidModel as e:
        for v in e.violations:
            err.write(f"violation: {v}\n")
        return 1
    except ValueError as e:
        err.write(f"error: {e}\n")
        return 2


def _dispatch(args, out, err) -> int:
    cmd = args.command
    if cmd == "validate":
        spec = load_model(args.model)
        problems = validate(spec)
        for v in problems:
            out.write(f"violation: {v}\n")
        if not problems:
            out.write("valid\n")
        return 1 if problems else 0

    spec, red = _reduced(args, err)

    if cmd == "reduce":
        out.write(red.describe())
        return 0

    if cmd == "automaton":
        if red.q == 0:
            err.write("error: no facet meets T; there is no automaton to show\n")
            return 1
        dfa = fa.build_automaton(red.q, red.cprime)
        if args.minimize:
            dfa = fa.minimize(dfa)
        out.write(fa.to_dot(dfa) if args.format == "dot" else fa.to_table(dfa))
        return 0

    if cmd == "series":
        out.write(f"{hilbert_series(spec)}\n")
        return 0

    if cmd in ("expand", "check"):
        if len(args.nmax) != red.q:
            err.write(f"error: --nmax needs {red.q} entries\n")
            return 2
        H = hilbert_series(spec)
        if cmd == "expand":
            table = series_expand(H, args.nmax + (args.dmax,))
            names = H.varset.names
            out.write("\t".join(names) + "\tcoeff\n")
            for n in itertools.product(*(range(b + 1) for b in args.nmax)):
                for d in range(args.dmax + 1):
                    out.write("\t".join(map(str, n + (d,))) + f"\t{table[n + (d,)]}\n")
            return 0
        report = check_series(red, H, args.nmax, args.dmax)
        out.write(report.text())
        ok = report.passed
        if not red.nu_fixed and red.q:
            roots = check_roots_of_unity(red, H, trials=args.trials, tol=args.tol)
            out.write(roots.text())
            ok = ok and roots.passed
        return 0 if ok else 1

    if cmd == "words":
        if len(args.n) != red.q:
            err.write(f"error: --n needs {red.q} entries\n")
            return 2
        if args.list:
            words = enumerate_Ln(args.n, args.d, red.cprime)
            out.write(f"{len(words)}\n")
            for w in words:
                out.write(format_word(w) + "\n")
        else:
            out.write(f"{count_Ln(args.n, args.d, red.cprime)}\n")
        return 0

    raise AssertionError(cmd)


def main() -> None:
    sys.exit(run())
