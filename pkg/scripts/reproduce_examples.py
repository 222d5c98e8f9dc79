"""Print tracks, special tracks, spin spectra and rigidity for every bundled table.

Brute-force oracles run alongside the pruned searches wherever the order allows,
and any disagreement is reported.
"""
import argparse
import time
from dataclasses import dataclass

from quasirigid import fixtures
from quasirigid.perm import cycle_type
from quasirigid.quasigroup import special_tracks, tracks
from quasirigid.rigidity import (
    OracleLimitError,
    automorphisms,
    automorphisms_bruteforce,
    autotopisms,
    autotopisms_bruteforce,
)
from quasirigid.spins import spin_report

# letter legends matching the published letter coding
LEGENDS = {
    "fig1": [(4,), (2, 2)],
    "ex8": [(7,), (3, 4), (2, 2, 3), (2, 5)],
}


@dataclass
class Options:
    names: tuple = fixtures.NAMES
    oracle: bool = True


def check(label, pruned, oracle):
    try:
        expected = oracle()
    except OracleLimitError:
        return f"{label}: oracle skipped (order too large)"
    verdict = "agree" if expected == pruned else "DISAGREE"
    return f"{label}: oracle {verdict}"


def report(name, opts: Options):
    q = fixtures.load(name)
    print(f"== {name} (order {q.order})")
    for i, p in enumerate(tracks(q), 1):
        print(f"  phi_{i} = {p}  {list(cycle_type(p))}")
    print(f"  special tracks: {sorted(special_tracks(q))}")
    r = spin_report(q, legend=LEGENDS.get(name))
    for i in range(1, q.order + 1):
        print(f"  Sp(Phi_{i}) = {r.letters(i)}")
    print(f"  special parts: {sorted(r.special)}")
    t0 = time.perf_counter()
    auts = automorphisms(q)
    atps = autotopisms(q)
    took = time.perf_counter() - t0
    print(f"  |Aut| = {len(auts)}  |Atp| = {len(atps)}  ({took:.2f}s)")
    print(f"  rigid: {len(auts) == 1}  super rigid: {len(atps) == 1}")
    if opts.oracle:
        print("  " + check("automorphisms", auts, lambda: automorphisms_bruteforce(q)))
        print("  " + check("autotopisms", atps, lambda: autotopisms_bruteforce(q)))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", metavar="name", help=", ".join(fixtures.NAMES))
    ap.add_argument("--no-oracle", action="store_true")
    args = ap.parse_args()
    unknown = set(args.names) - set(fixtures.NAMES)
    if unknown:
        ap.error(f"unknown table(s): {', '.join(sorted(unknown))}")
    opts = Options(tuple(args.names) or fixtures.NAMES, not args.no_oracle)
    for name in opts.names:
        report(name, opts)


if __name__ == "__main__":
    main()
