"""Count rigid and super rigid Latin squares of a small order.

    python scripts/census.py 4
    python scripts/census.py 5 --jobs 4 --out census5.json
"""
import argparse
import json
import os
import time
from dataclasses import asdict, dataclass
from typing import Optional

from quasirigid.quasigroup import format_table
from quasirigid.rigidity import MAX_ENUM_ORDER, census


@dataclass
class CensusConfig:
    order: int = 4
    jobs: int = 1
    show_rigid: bool = False
    out: Optional[str] = None


def run(cfg: CensusConfig) -> dict:
    start = time.perf_counter()
    c = census(cfg.order, jobs=cfg.jobs, keep_tables=cfg.show_rigid)
    result = {**c.summary(), "seconds": round(time.perf_counter() - start, 2),
              "config": asdict(cfg)}
    if cfg.show_rigid:
        for q in c.rigid_tables:
            print(format_table(q))
    return result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("order", type=int, choices=range(1, MAX_ENUM_ORDER + 1))
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--show-rigid", action="store_true", help="print every rigid table")
    ap.add_argument("--out", help="also write the summary as JSON here")
    cfg = CensusConfig(**vars(ap.parse_args()))
    result = run(cfg)
    print(json.dumps(result, indent=2))
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(result, fh, indent=2)


if __name__ == "__main__":
    main()
