"""Run the whole pipeline and print the claim ledger.

    python3 scripts/reproduce.py --out out --restarts 200
"""

import argparse
from pathlib import Path

from qorbits.report import RunConfig, report_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("out"))
    ap.add_argument("--restarts", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    rep = report_all(RunConfig(out=args.out, restarts=args.restarts, seed=args.seed, threads=args.threads))
    for claim in rep.claims:
        print(claim.line())
    print(f"\n{len(rep.failed)} asserted claim(s) failed")
    return 1 if rep.failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
