"""``length-lab`` command line interface."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import series as S
from .corpus import elaborate, load_corpus
from .errors import CertificateError, CorpusSyntaxError, LengthLabError
from .group import DEFAULT_ENUMERATION_LIMIT, DEFAULT_QUOTIENT_LIMIT, PermGroup, limits
from .perm import Permutation
from .records import SEMISIMPLE, SOLUBLE
from .report import FORMATS, emit_report
from .runner import CHECKERS, SuiteOptions, run_suite, suite_passed

SERIES = {
    "fitting": S.fitting_series,
    "gfitting": S.generalized_fitting_series,
    "nonsoluble": S.upper_nonsoluble_series,
}

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARTIAL = 0, 1, 2, 3


def parse_certificate(text: str, G: PermGroup, source: str = "<certificate>") -> list[tuple[str, PermGroup]]:
    """``TAG: gen, gen, ...`` per line; ``#`` starts a comment."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, sep, rest = line.partition(":")
        tag = tag.strip()
        if not sep or tag not in (SOLUBLE, SEMISIMPLE):
            raise CorpusSyntaxError("expected 'soluble:' or 'semisimple:'", lineno, 1, source)
        gens = []
        for chunk in rest.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                gens.append(Permutation.parse(chunk, G.degree))
            except (ValueError, LengthLabError) as exc:
                col = raw.find(chunk) + 1
                raise CorpusSyntaxError(f"bad permutation {chunk!r}: {exc}", lineno, col, source) from None
        out.append((tag, PermGroup(gens, G.degree)))
    return out


def _find(path, name):
    for entry in load_corpus(path):
        if entry.name == name:
            return entry
    raise LengthLabError(f"no group named {name!r} in {path}")


def cmd_info(args) -> int:
    G, act = elaborate(_find(args.corpus, args.group))
    print(f"group      {args.group}")
    print(f"degree     {G.degree}")
    print(f"generators {', '.join(str(g) for g in G.generators)}")
    print(f"order      {G.order()}")
    if act is not None:
        print(f"|A|        {act.a_order}")
        print(f"coprime    {'yes' if act.coprime else 'no'}")
    try:
        print(f"|S(G)|     {S.soluble_radical(G).order()}")
        print(f"|F(G)|     {S.fitting_subgroup(G).order()}")
        rep = S.generalized_fitting_subgroup(G)
        print(f"|F*(G)|    {rep.fstar.order()}")
        print(f"components {sorted(Q.order() for Q in rep.components)}")
        print(f"h*(G)      {S.h_star(G)}")
        print(f"lambda(G)  {S.nonsoluble_length(G)}")
    except LengthLabError as exc:
        print(f"(invariants unavailable: {exc})")
    return EXIT_OK


def cmd_series(args) -> int:
    G, _ = elaborate(_find(args.corpus, args.group))
    rec = SERIES[args.series](G)
    if args.format == "json":
        import json

        print(json.dumps(rec.to_dict(), indent=2))
    else:
        print(f"{rec.kind} series of {args.group}: length {rec.length}")
        for i, T in enumerate(rec.terms):
            tag = f"  [{rec.factor_tags[i - 1]}]" if i and i - 1 < len(rec.factor_tags) else ""
            print(f"  {i}: order {T.order()}{tag}")
    return EXIT_OK


def cmd_check(args) -> int:
    entries = load_corpus(args.corpus)
    opts = SuiteOptions(only=tuple(args.only) if args.only else None,
                        enumeration_limit=args.enumeration_limit,
                        quotient_limit=args.quotient_limit, jobs=args.jobs)
    reports = run_suite(entries, opts)
    sys.stdout.write(emit_report(reports, args.format, include_timing=not args.no_timing))
    return EXIT_OK if suite_passed(reports) else EXIT_FAIL


def cmd_certify(args) -> int:
    G, _ = elaborate(_find(args.corpus, args.group))
    path = Path(args.certificate)
    claimed = parse_certificate(path.read_text(encoding="utf-8"), G, str(path))
    try:
        verdict = S.verify_series_certificate(G, claimed)
    except CertificateError as exc:
        print(f"rejected: term {exc.index}: {exc}")
        return EXIT_FAIL
    for c in verdict.factors:
        print(f"  factor {c.index}: {c.tag:<10} order {c.order:<12} {c.status} ({c.method})")
    print(f"{verdict.status}: {verdict.message}")
    return {"verified": EXIT_OK, "partial": EXIT_PARTIAL}.get(verdict.status, EXIT_FAIL)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="length-lab", description="Nonsoluble length and generalized Fitting height "
                                                               "of finite permutation groups.")
    p.add_argument("--enumeration-limit", type=int, default=DEFAULT_ENUMERATION_LIMIT, metavar="N")
    p.add_argument("--quotient-limit", type=int, default=DEFAULT_QUOTIENT_LIMIT, metavar="N")
    sub = p.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="order and basic invariants of one group")
    info.add_argument("corpus")
    info.add_argument("--group", required=True)
    info.set_defaults(func=cmd_info)

    ser = sub.add_parser("series", help="print a characteristic series")
    ser.add_argument("corpus")
    ser.add_argument("--group", required=True)
    ser.add_argument("--series", choices=sorted(SERIES), required=True)
    ser.add_argument("--format", choices=("text", "json"), default="text")
    ser.set_defaults(func=cmd_series)

    chk = sub.add_parser("check", help="run the checkers over a corpus")
    chk.add_argument("corpus")
    chk.add_argument("--only", action="append", choices=CHECKERS, metavar="CHECKER",
                     help=f"restrict to a checker (repeatable): {', '.join(CHECKERS)}")
    chk.add_argument("--format", choices=FORMATS, default="text")
    chk.add_argument("--jobs", type=int, default=1)
    chk.add_argument("--no-timing", action="store_true", help="zero the timing field in json/csv")
    chk.set_defaults(func=cmd_check)

    cert = sub.add_parser("certify", help="verify a normal-series certificate")
    cert.add_argument("corpus")
    cert.add_argument("--group", required=True)
    cert.add_argument("--certificate", required=True)
    cert.set_defaults(func=cmd_certify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with limits(args.enumeration_limit, args.quotient_limit):
            return args.func(args)
    except (LengthLabError, OSError) as exc:
        print(f"length-lab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
