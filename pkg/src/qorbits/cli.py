"""Command-line entry point: ``qorbits <command> [flags]``."""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from . import report as rp
from .groebner import verify_theorem1_all_cases
from .orbits import partition_group
from .states import enumerate_group
from .transitions import TOPOLOGIES, full_transition_report

log = logging.getLogger("qorbits")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", type=Path, default=Path("out"), help="output directory (default: out)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qorbits", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, hlp in [
        ("groups", "single-qubit group orders and local-group sizes"),
        ("states", "enumerate the reachable 3-qubit states"),
        ("orbits", "partition states into local-gate orbits"),
    ]:
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--group", choices=rp.GROUPS, default="clifford")
        _common(p)

    for name, hlp in [
        ("transitions", "CNOT orbit-transition tables and the orbit graph"),
        ("diameter", "maximum CNOT distance between orbits"),
    ]:
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--group", choices=rp.GROUPS, default="clifford")
        p.add_argument("--topology", choices=tuple(TOPOLOGIES), default="all")
        _common(p)

    for name, hlp in [
        ("verify-theorem1", "Groebner and numeric infeasibility check for orthogonal local gates"),
        ("report-all", "run everything and write REPORT.md"),
    ]:
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
        p.add_argument("--restarts", type=int, default=200)
        _common(p)
    return parser


def _prepare_out(path: Path) -> Path:
    try:
        path.mkdir(parents=True, exist_ok=True)
        probe = path / ".write-test"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise SystemExit(f"qorbits: cannot write to {path}: {exc}") from exc
    return path


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    out = _prepare_out(args.out)
    t0 = time.perf_counter()
    status = 0

    if args.command == "groups":
        payload = rp.groups_payload((args.group,))
        rp.dump_json(payload, out / "groups.json")
        g = payload[args.group]
        print(f"{args.group}: |G| = {g['order']}")
        for n, v in g["local"].items():
            print(f"  n={n}: |L(G)| = {v['elements']} ({v['tensor_products']} tensor products)")

    elif args.command == "states":
        s = enumerate_group(args.group)
        rp.dump_json(rp.states_payload(s), out / "states.json")
        print(f"{args.group}: {len(s)} states")
        if args.group == "clifford":
            match = "matches" if len(s) == rp.HEADLINE_STATE_COUNT else "does not match"
            print(f"  headline figure {rp.HEADLINE_STATE_COUNT} {match}; published theorem figure "
                  f"{rp.PUBLISHED_STATE_COUNTS['clifford']} {'matches' if len(s) == 8640 else 'does not match'}")

    elif args.command == "orbits":
        p = partition_group(args.group)
        rp.dump_json(rp.orbits_payload(args.group, p), out / "orbits.json")
        print(f"{args.group}: {len(p.orbits)} orbits")
        for o in p.orbits:
            print(f"  {o.label:10s} size {len(o):5d}  entropy {rp.frac(o.entropy)}")

    elif args.command in ("transitions", "diameter"):
        p = partition_group(args.group)
        tables = full_transition_report(p)
        if args.command == "transitions":
            rp.dump_json(rp.transitions_payload(args.group, tables), out / "transitions.json")
            (out / "transitions.csv").write_text(rp.transitions_csv(tables), encoding="utf-8")
            (out / "orbitgraph.dot").write_text(rp.orbit_dot(args.group, p, tables, args.topology), encoding="utf-8")
            allowed = TOPOLOGIES[args.topology]
            for t in tables:
                if t.gate not in allowed:
                    continue
                print(f"CNOT{t.gate}:")
                for a, row in zip(t.labels, t.as_matrix()):
                    print(f"  {a:10s} " + " ".join(f"{n:5d}" for n in row))
        else:
            d = rp.diameter_payload(args.group, tables, args.topology)
            rp.dump_json(d, out / "diameter.json")
            print(f"{args.group}, {args.topology}: diameter {d['diameter']}, witness {d['witnesses'][0]}")

    elif args.command == "verify-theorem1":
        rep = verify_theorem1_all_cases(args.order, args.restarts, args.seed, args.threads)
        rp.dump_json(rp.theorem1_payload(rep), out / "theorem1.json")
        for c in rep.cases:
            floor = f", numeric floor {c.numeric.floor:.6f}" if c.numeric else ""
            print(f"signs {c.case}: basis {c.basis} -> {c.verdict}{floor}")
        print(f"explicit gate: {rep.explicit_gate.direction}")
        status = 0 if rep.cases[0].unit_ideal and rep.explicit_gate.ok else 1

    elif args.command == "report-all":
        cfg = rp.RunConfig(out=out, order=args.order, restarts=args.restarts, seed=args.seed, threads=args.threads)
        rep = rp.report_all(cfg)
        for c in rep.claims:
            print(c.line())
        failed = rep.failed
        print(f"\n{len(failed)} asserted claim(s) failed; report at {out / 'REPORT.md'}")
        status = 1 if failed else 0

    log.info("done in %.1f s", time.perf_counter() - t0)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
