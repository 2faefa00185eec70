"""Acceptance criteria 1-9, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` or ``python3 tests/test_acceptance.py``.
"""

import filecmp
import json
import math
import random
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from qorbits.entropy import entropy_exact, entropy_float_many, entropy_formula_2q
from qorbits.gates import clifford_1q, local_group, real_clifford_1q
from qorbits.groebner import SIGN_CASES, groebner_case, verify_explicit_gate
from qorbits.orbits import representatives
from qorbits.states import apply_gate, real_subset
from qorbits.transitions import check_claims, diameter, full_transition_report, orbit_graph

SEED = 0


@pytest.fixture
def verdict(capsys):
    def emit(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def report_runs(tmp_path_factory):
    dirs = []
    for i in range(2):
        out = tmp_path_factory.mktemp(f"report{i}")
        proc = subprocess.run(
            [sys.executable, "-m", "qorbits", "report-all", "--seed", str(SEED), "--out", str(out)],
            capture_output=True, text=True, timeout=900,
        )
        assert proc.returncode == 0, proc.stdout + proc.stderr
        dirs.append(out)
    return dirs


def test_criterion_1_group_orders(verdict):
    c, r = clifford_1q(), real_clifford_1q()
    lc3 = local_group(c, 3)
    lr = [len(local_group(r, n)) for n in (1, 2, 3)]
    ok = len(c) == 192 and len(r) == 16 and len(lc3) == 110592 and lr == [2 ** (3 * n + 1) for n in (1, 2, 3)]
    verdict(1, ok, f"|<H,P>|={len(c)}, |<H,Z>|={len(r)}, |L(C)|_3={len(lc3)}, |L(RC)|_n={lr}")


def test_criterion_2_state_counts(verdict, qc, qrc, report_runs):
    same = real_subset(qc).as_set() == qrc.as_set()
    report = (report_runs[0] / "REPORT.md").read_text()
    flagged = any("8460" in line and "inconsistent" in line for line in report.splitlines())
    ok = len(qc) == 8640 and len(qrc) == 480 and same and flagged
    verdict(2, ok, f"|QC|={len(qc)}, |QRC|={len(qrc)}, real subset equal={same}, 8460 flagged={flagged}")


def test_criterion_3_orbits(verdict, cliff_partition, real_partition):
    want = {
        "clifford": ([1728, 1152, 1152, 1152, 3456], [0, Fraction(2, 3), Fraction(2, 3), Fraction(2, 3), 1]),
        "real": ([128, 64, 64, 64, 128, 32], [0, Fraction(2, 3), Fraction(2, 3), Fraction(2, 3), 1, 1]),
    }
    ok = True
    parts = []
    for group, p in (("clifford", cliff_partition), ("real", real_partition)):
        sizes = [len(o) for o in p.orbits]
        ents = [o.entropy for o in p.orbits]
        members = all(p.orbit_of(r.state) == r.label for r in representatives(group))
        ok &= (sizes, ents) == want[group] and members
        parts.append(f"{group} sizes={sizes} reps-in-orbit={members}")
    verdict(3, ok, "; ".join(parts))


def test_criterion_4_transitions(verdict, cliff_partition, real_partition):
    bad, n_claims, rows_ok = [], 0, True
    for group, p in (("clifford", cliff_partition), ("real", real_partition)):
        tables = full_transition_report(p)
        checks = check_claims(group, tables)
        n_claims += len(checks)
        bad += [c for c in checks if not c.ok]
        rows_ok &= all(t.row_sum(o.label) == len(o) for t in tables for o in p.orbits)
    verdict(4, not bad and rows_ok, f"{n_claims - len(bad)}/{n_claims} quoted counts reproduced, row sums ok={rows_ok}")


def test_criterion_5_diameters(verdict, cliff_partition, real_partition):
    want = {("clifford", "line"): 3, ("clifford", "all"): 2, ("real", "line"): 3, ("real", "all"): 3}
    got, wit = {}, {}
    for group, p in (("clifford", cliff_partition), ("real", real_partition)):
        tables = full_transition_report(p)
        for topo in ("line", "all"):
            d = diameter(orbit_graph(tables, topo))
            got[(group, topo)] = d.value
            wit[(group, topo)] = d.witnesses[0]
    ok = got == want and all(wit.values())
    verdict(5, ok, ", ".join(f"{g}/{t}={got[(g, t)]} via {wit[(g, t)]}" for g, t in want))


def test_criterion_6_groebner(verdict):
    per_case = []
    for case in SIGN_CASES:
        g = groebner_case(case, "grevlex")
        lx = groebner_case(case, "lex")
        per_case.append((case, g.unit_ideal, lx.unit_ideal))
    ok = all(a and b for _, a, b in per_case)
    verdict(6, ok, f"basis {{1}} under grevlex and lex for {sum(a and b for _, a, b in per_case)}/8 sign cases")


def test_criterion_7_numeric(verdict, report_runs):
    chk = verify_explicit_gate()
    data = json.loads((report_runs[0] / "theorem1.json").read_text())
    floors = [c["numeric"]["floor"] for c in data["cases"]]
    unit = max(chk.unitarity_errors)
    resid = min(chk.residual_xi1_to_xi2, chk.residual_xi2_to_xi1)
    ok = unit <= 1e-12 and resid <= 1e-10 and len(floors) == 8 and min(floors) > 0.1
    verdict(7, ok, f"max unitarity error {unit:.1e}, best direction {chk.direction} residual {resid:.1e}, "
                   f"min residual floor {min(floors):.4f}")


def test_criterion_8_entropy(verdict, qc, local_cliff3):
    rng = random.Random(SEED)
    states = qc.states
    invariant = True
    for _ in range(1000):
        s = states[rng.randrange(len(states))]
        u = local_cliff3.element(rng.randrange(len(local_cliff3)))
        invariant &= entropy_exact(apply_gate(u, s)) == entropy_exact(s)

    per = entropy_float_many(qc.to_numpy())
    exact = np.array([[float(e) for e in entropy_exact(s).per_qubit] for s in qc])
    float_dev = float(np.max(np.abs(per.mean(axis=1) - exact.mean(axis=1))))

    grid_dev = 0.0
    for d in np.linspace(0, math.pi / 4, 100):
        lam = np.array([1 + math.sin(2 * d), 1 - math.sin(2 * d)]) / 2
        lam = lam[lam > 0]
        grid_dev = max(grid_dev, abs(entropy_formula_2q(d) - float(-np.sum(lam * np.log2(lam)))))
    ends = (entropy_formula_2q(0.0), entropy_formula_2q(math.pi / 4))
    ends_ok = abs(ends[0] - 1) <= 1e-12 and abs(ends[1]) <= 1e-12

    ok = invariant and float_dev <= 1e-12 and grid_dev <= 1e-12 and ends_ok
    verdict(8, ok, f"local invariance={invariant}, float-vs-exact {float_dev:.1e}, "
                   f"formula-vs-Schmidt {grid_dev:.1e}, endpoints {ends[0]:.12f}/{ends[1]:.12f}")


def test_criterion_9_determinism(verdict, report_runs):
    a, b = report_runs
    names = sorted(p.relative_to(a) for p in a.rglob("*.json"))
    mismatched = [str(n) for n in names if not filecmp.cmp(a / n, b / n, shallow=False)]
    ok = len(names) > 0 and not mismatched and sorted(p.relative_to(b) for p in b.rglob("*.json")) == names
    verdict(9, ok, f"{len(names)} JSON artifacts compared, {len(mismatched)} differ {mismatched}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
