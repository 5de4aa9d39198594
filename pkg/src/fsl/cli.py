"""Command-line front end: gen, detect, classify, color, verify.

Exit status: 0 on success, 1 on a violation, rejection or parse error, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import graph as G
from .corpus import HARD_MAX_N, CorpusError, graph6_stream
from .divisibility import NotDivisible, divisible_coloring
from .oracles import exact_coloring
from .patterns import find_violation
from .structure import (
    ClassViolation,
    LabelingError,
    certificate_text,
    classify,
    color_le4,
    require_class,
    verify_certificate,
)
from .suites import SUITES, SuiteOptions, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rejected(exc: ClassViolation) -> str:
    if exc.pattern:
        return f"rejected: {exc.pattern} {list(exc.witness)}"
    return f"rejected: {exc}"


def cmd_gen(args, out: TextIO, _inp: TextIO) -> int:
    try:
        g = G.generate(args.name, args.n, args.parts)
    except G.GraphError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "graph6":
        out.write(G.to_graph6(g) + "\n")
    elif args.format == "edges":
        out.write(G.to_edge_list(g))
    else:
        out.write(G.to_dot(g, args.name.replace("-", "_")))
    return EXIT_OK


def cmd_detect(args, out: TextIO, inp: TextIO) -> int:
    try:
        patterns = [G.generate(p) for p in args.patterns]
    except G.GraphError as exc:
        raise UsageError(str(exc)) from exc
    for _, g in graph6_stream(inp):
        hit = find_violation(g, patterns)
        if hit is None:
            out.write("free\n")
        else:
            idx, emb = hit
            out.write(f"contains {args.patterns[idx]}: {list(emb)}\n")
    return EXIT_OK


def cmd_classify(args, out: TextIO, inp: TextIO) -> int:
    status = EXIT_OK
    for no, g in graph6_stream(inp):
        try:
            cert = classify(g)
        except ClassViolation as exc:
            out.write(_rejected(exc) + "\n")
            status = EXIT_FAIL
            continue
        except LabelingError as exc:
            out.write(f"error line {no}: {exc}\n")
            status = EXIT_FAIL
            continue
        if not verify_certificate(g, cert):
            out.write(f"error line {no}: certificate failed verification\n")
            status = EXIT_FAIL
            continue
        out.write(certificate_text(cert) + "\n")
    return status


def cmd_color(args, out: TextIO, inp: TextIO) -> int:
    status = EXIT_OK
    for no, g in graph6_stream(inp):
        try:
            if args.mode == "le4":
                col = color_le4(g)
                suffix = ""
            elif args.mode == "exact":
                col = exact_coloring(g)
                suffix = ""
            else:
                require_class(g, ("p2p4", "bull"))
                dc = divisible_coloring(g)
                col = dc.coloring
                suffix = f" bound={dc.layer_bound}"
        except ClassViolation as exc:
            out.write(_rejected(exc) + "\n")
            status = EXIT_FAIL
            continue
        except (LabelingError, NotDivisible) as exc:
            out.write(f"error line {no}: {exc}\n")
            status = EXIT_FAIL
            continue
        out.write(f"{col.count} colors{suffix}: {list(col.colors)}\n")
    return status


def cmd_verify(args, out: TextIO, inp: TextIO) -> int:
    if args.max_n is not None and not 0 < args.max_n <= HARD_MAX_N:
        raise UsageError(f"--max-n must lie in 1..{HARD_MAX_N}")
    extra: Sequence[str] = inp.readlines() if args.stdin else ()
    opts = SuiteOptions(max_n=args.max_n, clebsch=not args.no_clebsch, unique=args.unique, extra=extra)
    rep = run_suite(args.suite, opts)
    out.write("\n".join(rep.lines()) + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fsl", description="Structure and coloring tools for "
                                "(P2 u P4, C3)-free and (P2 u P4, bull)-free graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a named graph")
    gen.add_argument("name")
    gen.add_argument("--n", type=int, help="size for path, cycle, complete, empty")
    gen.add_argument("--parts", type=int, nargs="+", help="part sizes for complete-multipartite")
    gen.add_argument("--format", choices=("graph6", "edges", "dot"), default="graph6")
    gen.set_defaults(func=cmd_gen)

    det = sub.add_parser("detect", help="find forbidden induced subgraphs in graph6 from stdin")
    det.add_argument("patterns", nargs="+")
    det.set_defaults(func=cmd_detect)

    cls = sub.add_parser("classify", help="structure certificate per graph6 line")
    cls.set_defaults(func=cmd_classify)

    col = sub.add_parser("color", help="color each graph6 line")
    col.add_argument("--mode", choices=("le4", "exact", "divisible"), default="le4")
    col.set_defaults(func=cmd_color)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=sorted(SUITES))
    ver.add_argument("--max-n", type=int, help="exhaustive enumeration cap (default FSL_MAX_N or 7)")
    ver.add_argument("--no-clebsch", action="store_true", help="skip Clebsch induced subgraphs")
    grp = ver.add_mutually_exclusive_group()
    grp.add_argument("--unique", dest="unique", action="store_true", default=None,
                     help="one graph per isomorphism class")
    grp.add_argument("--labeled", dest="unique", action="store_false",
                     help="every labelled graph")
    ver.add_argument("--stdin", action="store_true", help="append graph6 lines from stdin to the corpus")
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, inp: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    inp = sys.stdin if inp is None else inp
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out, inp)
    except UsageError as exc:
        sys.stderr.write(f"fsl: {exc}\n")
        return EXIT_USAGE
    except CorpusError as exc:
        sys.stderr.write(f"fsl: {exc}\n")
        return EXIT_FAIL


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
