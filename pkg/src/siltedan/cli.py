"""Command line: enumerate, classify, count, verify, export.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 when a rank
exceeds the size guard (default 10, never above 14; set SILTEDAN_N_MAX or
pass --guard).  Output files of ``export`` go to --out-dir, else to
$SILTEDAN_OUTPUT_DIR, else to the current directory.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import classify as ce
from . import config
from . import derived as dm
from . import modules as mc
from . import surface as sm

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _enumerator(n, what):
    if what == "triangulations":
        return sm.iter_triangulations(n)
    if what == "tilting-triangulations":
        return (t for t in sm.iter_triangulations(n) if t.contains_cp1())
    if what == "stt":
        return mc.iter_stt(n)
    return dm.iter_2term_silting(n)


def cmd_enumerate(args, out):
    items = _enumerator(args.n, args.what)
    if args.count_only:
        out.write(f"{sum(1 for _ in items)}\n")
        return EXIT_OK
    for i, item in enumerate(items):
        body = item.to_json() if isinstance(item, mc.STTPair) else item.to_dict()
        out.write(_dump({"id": i, "object": body}) + "\n")
    return EXIT_OK


def cmd_classify(args, out):
    n = args.n
    if args.non_connected_only and args.what != "silted":
        raise UsageError("--non-connected-only applies to --what silted")
    if args.what == "tilted":
        sources = sm.tilting_triangulations(n)
        algebra_of = sm.induced_algebra
    else:
        sources = list(ce.non_tilting_systems(n) if args.non_connected_only else ce.silting_systems(n))
        algebra_of = ce.silted_algebra
    if not args.dedup:
        for i, src in enumerate(sources):
            out.write(_dump({"id": i, "source": src.to_dict(),
                             "algebra": algebra_of(src).to_dict()}) + "\n")
        return EXIT_OK
    if args.what == "tilted":
        classes = ce.tilted_catalog(n)
    else:
        classes = ce.silted_catalog(n, args.non_connected_only)
    for k, c in enumerate(classes):
        out.write(_dump({"class": k, "multiplicity": c.multiplicity,
                         "algebra": c.representative.to_dict()}) + "\n")
    return EXIT_OK


def cmd_count(args, out):
    reports = ce.count_table(args.n_max, silted_max=min(args.silted_max, args.n_max),
                             derived_max=args.derived_max)
    out.write(ce.counts_to_csv(reports) if args.format == "csv" else ce.counts_to_json(reports) + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY


def cmd_verify(args, out):
    report = ce.full_verify(args.n_max)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        for c in report.checks:
            out.write(f"{'PASS' if c.passed else 'FAIL'}  n={c.n:<2} {c.name}: {c.detail}\n")
        out.write(f"{'all checks passed' if report.passed else 'VERIFICATION FAILED'}\n")
    return EXIT_OK if report.passed else EXIT_VERIFY


def _triangulation_dot(t: sm.Triangulation) -> str:
    disk = sm.MarkedDisk(t.n)
    N = disk.npoints
    lines = ["graph triangulation {", "  layout=circo;"]
    for q in range(N):
        lines.append(f'  {q} [label="{disk.name(q)}"];')
    for q in range(N):
        lines.append(f"  {q} -- {(q + 1) % N} [color=gray];")
    for c in t.chords:
        colour = "orange" if c == sm.c_p1(t.n) else "blue"
        lines.append(f"  {c[0]} -- {c[1]} [color={colour}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export(args, out):
    n = args.n
    items = list(_enumerator(n, args.what))
    if not 0 <= args.id < len(items):
        raise UsageError(f"--id must lie in 0..{len(items) - 1}")
    obj = items[args.id]
    if args.format == "json":
        text = (_dump(obj.to_json()) if isinstance(obj, mc.STTPair) else obj.to_json()) + "\n"
    elif args.format == "tikz":
        if isinstance(obj, sm.Triangulation):
            text = sm.to_tikz(obj)
        elif isinstance(obj, dm.GradedArcSystem):
            text = dm.to_tikz(obj)
        else:
            raise UsageError("tikz export covers triangulations and arc systems")
    else:
        if isinstance(obj, sm.Triangulation):
            text = _triangulation_dot(obj)
        elif isinstance(obj, dm.GradedArcSystem):
            text = dm.induced_graded_algebra(obj).to_dot("A_S")
        else:
            raise UsageError("dot export covers triangulations and arc systems")
    outdir = Path(args.out_dir or os.environ.get("SILTEDAN_OUTPUT_DIR") or ".")
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        ext = {"json": "json", "tikz": "tex", "dot": "dot"}[args.format]
        path = outdir / f"{args.kind}-n{n}-id{args.id}.{ext}"
        path.write_text(text)
    except OSError as exc:
        sys.stderr.write(f"cannot write to {outdir}: {exc}\n")
        return EXIT_USAGE
    out.write(f"{path}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="siltedan", description="Tilted and silted algebras of linearly oriented A_n.")
    p.add_argument("--guard", type=int, default=None,
                   help=f"largest rank allowed (default {config.DEFAULT_N_MAX}, at most {config.HARD_CEILING})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="dump geometric or module-theoretic objects")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--what", required=True,
                   choices=["triangulations", "tilting-triangulations", "stt", "two-term-silting"])
    e.add_argument("--count-only", action="store_true")
    e.set_defaults(func=cmd_enumerate, ranks=lambda a: [a.n])

    c = sub.add_parser("classify", help="list tilted or silted algebras")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--what", required=True, choices=["tilted", "silted"])
    c.add_argument("--dedup", action="store_true")
    c.add_argument("--non-connected-only", action="store_true")
    c.set_defaults(func=cmd_classify, ranks=lambda a: [a.n])

    k = sub.add_parser("count", help="table of counts against closed forms")
    k.add_argument("--n-max", type=int, required=True)
    k.add_argument("--format", choices=["csv", "json"], default="csv")
    k.add_argument("--silted-max", type=int, default=6,
                   help="largest n for which silted algebras are enumerated")
    k.add_argument("--derived-max", type=int, default=8,
                   help="largest n for which arc systems are counted")
    k.set_defaults(func=cmd_count, ranks=lambda a: [a.n_max])

    v = sub.add_parser("verify", help="run every cross-check for n = 1..n_max")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=cmd_verify, ranks=lambda a: [a.n_max])

    x = sub.add_parser("export", help="write one object as DOT, JSON or TikZ")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--what", required=True,
                   choices=["triangulation", "tilting-triangulation", "stt", "two-term-silting"])
    x.add_argument("--id", type=int, required=True)
    x.add_argument("--format", choices=["dot", "json", "tikz"], default="json")
    x.add_argument("--out-dir", default=None)
    x.set_defaults(func=cmd_export, ranks=lambda a: [a.n])
    return p


_EXPORT_KINDS = {"triangulation": "triangulations", "tilting-triangulation": "tilting-triangulations"}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "export":
        args.kind, args.what = args.what, _EXPORT_KINDS.get(args.what, args.what)
    limit = config.n_max() if args.guard is None else args.guard
    if limit > config.HARD_CEILING:
        sys.stderr.write(f"guard cannot exceed {config.HARD_CEILING}\n")
        return EXIT_USAGE
    try:
        for r in args.ranks(args):
            if r < 1:
                raise UsageError("ranks start at 1")
            config.check_n(r, limit)
        with config.guard(limit):
            return args.func(args, out)
    except config.ResourceGuardError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_GUARD
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ce.VerificationError as exc:
        sys.stderr.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
