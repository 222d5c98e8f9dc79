"""Command-line front end: ``quasirigid <command> ...``.

Table arguments are file paths, or ``@name`` for a bundled fixture.
Exit codes: 0 success, 1 usage or I/O error, 2 invalid table, 3 oracle
disagreement.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import fixtures
from .perm import PermutationError, format_cycles, parse_cycles
from .quasigroup import (
    Isotopy,
    LatinSquareError,
    Quasigroup,
    TableFormatError,
    apply_isotopy,
    dual,
    format_table,
    parse_table,
    special_tracks,
)
from .rigidity import (
    DEFAULT_ATP_ORACLE_LIMIT,
    DEFAULT_AUT_ORACLE_LIMIT,
    MAX_ENUM_ORDER,
    autotopisms,
    autotopisms_bruteforce,
    automorphisms,
    automorphisms_bruteforce,
    census,
    oracle_limit,
)
from .spins import SpinTable, spin_report

EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_ORACLE = 3


class UsageError(Exception):
    pass


class OracleMismatch(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_table(arg: str) -> Quasigroup:
    if arg.startswith("@"):
        try:
            return parse_table(fixtures.text(arg[1:]))
        except KeyError as e:
            raise UsageError(e.args[0]) from None
    return parse_table(Path(arg).read_text())


def _emit_table(q: Quasigroup, out) -> None:
    if out:
        Path(out).write_text(format_table(q))
    else:
        sys.stdout.write(format_table(q))


def _parse_legend(text):
    if not text:
        return None
    return [tuple(int(v) for v in part.split(",")) for part in text.split(";")]


def analyze(q: Quasigroup, atp: bool = True, oracle: bool = False, jobs: int = 1,
            legend=None) -> dict:
    """Full analysis report as a JSON-ready dict (timings in seconds)."""
    timings = {}
    t0 = time.perf_counter()
    table = SpinTable(q)
    report = spin_report(q, legend=legend, table=table)
    timings["spins"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    auts = automorphisms(q)
    timings["automorphisms"] = time.perf_counter() - t0
    rigid = len(auts) == 1

    atp_count = super_rigid = None
    atps = None
    if atp:
        t0 = time.perf_counter()
        atps = autotopisms(q, jobs=jobs)
        timings["autotopisms"] = time.perf_counter() - t0
        atp_count = len(atps)
        super_rigid = atp_count == 1

    if oracle:
        t0 = time.perf_counter()
        _check_oracles(q, auts, atps)
        timings["oracles"] = time.perf_counter() - t0

    return {
        "order": q.order,
        "tracks": [
            {"index": i, "cycles": format_cycles(p), "type": list(p.cycle_type())}
            for i, p in enumerate(q.tracks(), 1)
        ],
        "special_tracks": sorted(special_tracks(q)),
        "spin_parts": report.to_dict(),
        "automorphisms": [format_cycles(a) for a in auts],
        "rigid": rigid,
        "autotopism_count": atp_count,
        "super_rigid": super_rigid,
        "timings": timings,
    }


def _check_oracles(q, auts, atps) -> None:
    if q.order <= oracle_limit(DEFAULT_AUT_ORACLE_LIMIT):
        if automorphisms_bruteforce(q) != auts:
            raise OracleMismatch("automorphism search disagrees with brute force")
        print("oracle: automorphisms agree", file=sys.stderr)
    else:
        print("oracle: automorphism oracle skipped (order above limit)", file=sys.stderr)
    if atps is None:
        return
    if q.order <= oracle_limit(DEFAULT_ATP_ORACLE_LIMIT):
        if autotopisms_bruteforce(q) != atps:
            raise OracleMismatch("autotopism search disagrees with brute force")
        print("oracle: autotopisms agree", file=sys.stderr)
    else:
        print("oracle: autotopism oracle skipped (order above limit)", file=sys.stderr)


def _format_report(r: dict) -> str:
    lines = [f"order: {r['order']}", "tracks:"]
    for t in r["tracks"]:
        lines.append(f"  phi_{t['index']} = {t['cycles']}  Z = {t['type']}")
    lines.append(f"special tracks: {r['special_tracks']}")
    lines.append("spin spectra:")
    for p in r["spin_parts"]:
        mark = "  special" if p["special"] else ""
        lines.append(f"  Sp(Phi_{p['index']}) = {p['letters'] or '-'}{mark}")
    lines.append(f"automorphisms: {' '.join(r['automorphisms'])}")
    lines.append(f"rigid: {r['rigid']}")
    if r["autotopism_count"] is not None:
        lines.append(f"autotopisms: {r['autotopism_count']}")
        lines.append(f"super rigid: {r['super_rigid']}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    q = load_table(args.table)
    r = analyze(q, atp=not args.no_atp, oracle=args.oracle, jobs=args.jobs,
                legend=_parse_legend(args.legend))
    if not args.timings:
        r["timings"] = {}
    if args.json:
        print(json.dumps(r, sort_keys=True, indent=2))
    else:
        print(_format_report(r))
    return 0


def cmd_tracks(args) -> int:
    q = load_table(args.table)
    for p in q.tracks():
        print(f"{format_cycles(p)} {list(p.cycle_type())}" if args.types else format_cycles(p))
    return 0


def cmd_spins(args) -> int:
    q = load_table(args.table)
    report = spin_report(q, legend=_parse_legend(args.legend))
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        print(report.format())
    return 0


def cmd_aut(args) -> int:
    q = load_table(args.table)
    auts = automorphisms(q)
    for a in auts:
        print(format_cycles(a))
    print(f"# {len(auts)} automorphism(s), rigid: {len(auts) == 1}")
    return 0


def cmd_atp(args) -> int:
    q = load_table(args.table)
    atps = autotopisms(q, jobs=args.jobs)
    if not args.count_only:
        for t in atps:
            print(format_cycles(t.alpha), format_cycles(t.beta), format_cycles(t.gamma))
    print(f"# {len(atps)} autotopism(s), super rigid: {len(atps) == 1}")
    return 0


def cmd_dual(args) -> int:
    _emit_table(dual(load_table(args.table)), args.output)
    return 0


def cmd_isotope(args) -> int:
    q = load_table(args.table)
    try:
        t = Isotopy(*(parse_cycles(s, q.order) for s in (args.alpha, args.beta, args.gamma)))
    except PermutationError as e:
        raise UsageError(f"bad isotopy component: {e}") from None
    _emit_table(apply_isotopy(q, t), args.output)
    return 0


def cmd_scan(args) -> int:
    if not 1 <= args.order <= MAX_ENUM_ORDER:
        raise UsageError(
            f"scan supports orders 1..{MAX_ENUM_ORDER}; order 6 has about 8.1e8 Latin "
            "squares, beyond exhaustive reach here"
        )
    listing = (args.rigid or args.super_rigid) and not args.count_only
    c = census(args.order, jobs=args.jobs, keep_tables=listing)
    if listing:
        picked = c.super_rigid_tables if args.super_rigid else c.rigid_tables
        for q in picked:
            sys.stdout.write(format_table(q) + "\n")
    if args.json:
        print(json.dumps(c.summary(), sort_keys=True))
    else:
        s = c.summary()
        print(f"order={s['order']} total={s['total']} rigid={s['rigid']} "
              f"super_rigid={s['super_rigid']}")
    return 0


def cmd_fixtures(args) -> int:
    for name in fixtures.NAMES:
        if args.export:
            out = Path(args.export)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{name}.txt").write_text(fixtures.text(name))
        print(name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quasirigid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def table_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("table", help="table file, or @name for a bundled fixture")
        sp.set_defaults(func=func)
        return sp

    sp = table_cmd("analyze", cmd_analyze, "full rigidity report")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--no-atp", action="store_true", help="skip the autotopism search")
    sp.add_argument("--oracle", action="store_true",
                    help="cross-check against brute force (exit 3 on mismatch)")
    sp.add_argument("--timings", action="store_true", help="fill in the timings field")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--legend", help="cycle types for letters A, B, ..., e.g. '7;3,4'")

    sp = table_cmd("tracks", cmd_tracks, "print tracks phi_1..phi_n")
    sp.add_argument("--types", action="store_true", help="append cycle types")

    sp = table_cmd("spins", cmd_spins, "spin spectra per part")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--legend", help="cycle types for letters A, B, ..., e.g. '7;3,4'")

    table_cmd("aut", cmd_aut, "list automorphisms")

    sp = table_cmd("atp", cmd_atp, "list autotopisms as 'alpha beta gamma'")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)

    sp = table_cmd("dual", cmd_dual, "write the dual (transposed) table")
    sp.add_argument("-o", "--output")

    sp = table_cmd("isotope", cmd_isotope, "write the isotope x o y = gamma^-1(alpha(x) . beta(y))")
    sp.add_argument("alpha")
    sp.add_argument("beta")
    sp.add_argument("gamma")
    sp.add_argument("-o", "--output")

    sp = sub.add_parser("scan", help=f"exhaustive census of Latin squares of order <= {MAX_ENUM_ORDER}")
    sp.add_argument("order", type=int)
    sp.add_argument("--rigid", action="store_true", help="list rigid squares")
    sp.add_argument("--super-rigid", action="store_true", help="list super rigid squares")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("fixtures", help="list bundled fixtures")
    sp.add_argument("--export", metavar="DIR", help="also write them to DIR")
    sp.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (TableFormatError, LatinSquareError) as e:
        print(f"invalid table: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OracleMismatch as e:
        print(f"oracle disagreement: {e}", file=sys.stderr)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
