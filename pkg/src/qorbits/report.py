"""Artifact builders: JSON/CSV/DOT payloads and the claim-by-claim reproduction report."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import entropy as ent
from .gates import factor_group, local_group
from .groebner import SIGN_CASES, Theorem1Report, verify_theorem1_all_cases
from .orbits import PUBLISHED_SIZES, OrbitPartition, disentangled_qubits, partition_group, representatives
from .states import StateSet, enumerate_group, real_subset
from .transitions import (
    TOPOLOGIES,
    TransitionTable,
    check_claims,
    diameter,
    distances,
    full_transition_report,
    orbit_graph,
    unquoted_cells,
)

GROUPS = ("clifford", "real")
PUBLISHED_STATE_COUNTS = {"clifford": 8640, "real": 480}
HEADLINE_STATE_COUNT = 8460
PUBLISHED_DIAMETERS = {("clifford", "line"): 3, ("clifford", "all"): 2, ("real", "line"): 3, ("real", "all"): 3}
GROUP_SYMBOL = {"clifford": "C", "real": "RC"}


def rnd(x: float) -> float:
    return round(float(x), 12) + 0.0


def frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def dump_json(obj: object, path: Path) -> None:
    path.write_text(json.dumps(obj, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


# -- payloads -------------------------------------------------------------------


def groups_payload(groups: tuple[str, ...] = GROUPS) -> dict:
    out: dict = {}
    for g in groups:
        fg = factor_group(g)
        entry = {"generators": list(fg.generator_names), "order": len(fg), "local": {}}
        for n in (1, 2, 3):
            lg = local_group(fg, n)
            entry["local"][str(n)] = {"elements": len(lg), "tensor_products": lg.raw_products}
        out[g] = entry
    return out


def states_payload(states: StateSet) -> dict:
    arr = states.to_numpy()
    return {
        "group": states.provenance.get("group"),
        "provenance": states.provenance,
        "count": len(states),
        "states": [
            {"amps": [a.encode() for a in s.amps], "decimal": [[rnd(z.real), rnd(z.imag)] for z in row]}
            for s, row in zip(states, arr)
        ],
    }


def _digest(key: str) -> str:
    return hashlib.sha256(key.encode()).hexdigest()[:16]


def orbits_payload(group: str, p: OrbitPartition) -> dict:
    return {
        "group": group,
        "orbits": [
            {
                "label": o.label,
                "size": len(o),
                "entropy": frac(o.entropy),
                "per_qubit_entropy": [frac(e) for e in o.per_qubit],
                "disentangled_qubits": disentangled_qubits(o),
                "representative": [a.encode() for a in o.representative.amps],
                "members": [_digest(s.key) for s in o.members],
            }
            for o in p.orbits
        ],
    }


def transitions_payload(group: str, tables: list[TransitionTable]) -> dict:
    return {
        "group": group,
        "labels": tables[0].labels,
        "tables": [{"gate": list(t.gate), "matrix": t.as_matrix()} for t in tables],
        "published": [
            {"gate": list(c.gate), "source": c.src, "target": c.dst, "expected": c.expected, "observed": c.observed}
            for c in check_claims(group, tables)
        ],
        "derived": [
            {"gate": list(g), "source": a, "target": b, "count": n} for g, a, b, n in unquoted_cells(group, tables)
        ],
    }


def transitions_csv(tables: list[TransitionTable]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["control", "target", "source_orbit", "target_orbit", "count"])
    for t in tables:
        for a in t.labels:
            for b in t.labels:
                w.writerow([t.gate[0], t.gate[1], a, b, t.count(a, b)])
    return buf.getvalue()


def orbit_dot(group: str, p: OrbitPartition, tables: list[TransitionTable], topology: str) -> str:
    allowed = TOPOLOGIES[topology]
    lines = [f'digraph "{group}_{topology}" {{', "  rankdir=LR;"]
    for o in p.orbits:
        lines.append(f'  "{o.label}" [label="{o.label}\\n|{len(o)}|, E={frac(o.entropy)}"];')
    for t in tables:
        if t.gate not in allowed:
            continue
        for a in t.labels:
            for b in t.labels:
                n = t.count(a, b)
                if n:
                    lines.append(f'  "{a}" -> "{b}" [label="cn({t.gate[0]},{t.gate[1]}): {n}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def diameter_payload(group: str, tables: list[TransitionTable], topology: str) -> dict:
    g = orbit_graph(tables, topology)
    d = diameter(g)
    dist = distances(g)
    return {
        "group": group,
        "topology": topology,
        "diameter": d.value,
        "witnesses": [list(w) for w in d.witnesses],
        "distances": {f"{a} -> {b}": v for (a, b), v in dist.items()},
    }


def _floor_dict(nf) -> dict | None:
    if nf is None:
        return None
    return {
        "grid_step_deg": nf.grid_step_deg,
        "grid_min": rnd(nf.grid_min),
        "grid_argmin": [rnd(x) for x in nf.grid_argmin],
        "multistart_min": rnd(nf.local_min),
        "multistart_argmin": [rnd(x) for x in nf.local_argmin],
        "restarts": nf.restarts,
        "floor": rnd(nf.floor),
    }


def theorem1_payload(rep: Theorem1Report) -> dict:
    eg = rep.explicit_gate
    return {
        "cases": [
            {
                "signs": list(c.case),
                "amplitude_equations": c.n_amplitude_equations,
                "order": c.order,
                "basis": c.basis,
                "basis_size": len(c.basis),
                "verdict": c.verdict,
                "other_order_agrees": rep.orders_agree[str(c.case)],
                "numeric": _floor_dict(c.numeric),
            }
            for c in rep.cases
        ],
        "explicit_gate": {
            "unitarity_errors": [rnd(e) for e in eg.unitarity_errors],
            "residual_xi1_to_xi2": rnd(eg.residual_xi1_to_xi2),
            "residual_xi2_to_xi1": rnd(eg.residual_xi2_to_xi1),
            "phase_free_residual_xi1_to_xi2": rnd(eg.phase_free_xi1_to_xi2),
            "phase_free_residual_xi2_to_xi1": rnd(eg.phase_free_xi2_to_xi1),
            "direction": eg.direction,
            "tolerance": eg.tolerance,
        },
    }


# -- claim ledger for REPORT.md ---------------------------------------------------


@dataclass
class Claim:
    cid: str
    statement: str
    ok: bool
    detail: str = ""
    asserted: bool = True

    def line(self) -> str:
        status = ("PASS" if self.ok else "FAIL") if self.asserted else ("AGREES" if self.ok else "FINDING")
        tail = f" ({self.detail})" if self.detail else ""
        return f"- {status} [{self.cid}] {self.statement}{tail}"


@dataclass
class Report:
    claims: list[Claim] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, cid: str, statement: str, ok: bool, detail: str = "", asserted: bool = True) -> None:
        self.claims.append(Claim(cid, statement, bool(ok), detail, asserted))

    @property
    def failed(self) -> list[Claim]:
        return [c for c in self.claims if c.asserted and not c.ok]

    def markdown(self) -> str:
        n_ok = sum(c.ok for c in self.claims if c.asserted)
        n = sum(c.asserted for c in self.claims)
        out = ["# Reproduction report", "", f"Asserted claims passing: {n_ok}/{n}", ""]
        section = None
        for c in self.claims:
            head = c.cid.split(".")[0]
            if head != section:
                section = head
                out += ["", f"## {head}", ""]
            out.append(c.line())
        if self.notes:
            out += ["", "## Derived findings", ""] + [f"- {n}" for n in self.notes]
        return "\n".join(out) + "\n"


def _check_groups(rep: Report, payload: dict) -> None:
    c, r = payload["clifford"], payload["real"]
    rep.add("groups.clifford_order", "|<H,P>| = 192", c["order"] == 192, f"observed {c['order']}")
    rep.add("groups.real_order", "|<H,Z>| = 16", r["order"] == 16, f"observed {r['order']}")
    lc3 = c["local"]["3"]
    rep.add("groups.local_clifford_3", "|L(C)| = 110592 on 3 qubits", lc3["elements"] == 110592,
            f"observed {lc3['elements']} from {lc3['tensor_products']} tensor products, ratio "
            f"{lc3['tensor_products'] // max(lc3['elements'], 1)}")
    for n in (1, 2, 3):
        got = r["local"][str(n)]["elements"]
        rep.add(f"groups.local_real_{n}", f"|L(RC)| = 2^(3n+1) = {2 ** (3 * n + 1)} for n = {n}",
                got == 2 ** (3 * n + 1), f"observed {got}")


def _check_states(rep: Report, sets: dict[str, StateSet]) -> None:
    for g in GROUPS:
        want = PUBLISHED_STATE_COUNTS[g]
        rep.add(f"states.{g}_count", f"|Q{GROUP_SYMBOL[g]}| = {want}", len(sets[g]) == want, f"observed {len(sets[g])}")
    rs = real_subset(sets["clifford"])
    rep.add("states.real_subset", "Q(RC) is exactly the real-amplitude subset of Q(C)",
            rs.as_set() == sets["real"].as_set(), f"real subset has {len(rs)} states")
    rep.add("states.headline_count", f"headline figure |QC| = {HEADLINE_STATE_COUNT}",
            len(sets["clifford"]) == HEADLINE_STATE_COUNT,
            f"enumeration gives {len(sets['clifford'])}; the headline figure is inconsistent", asserted=False)


def _check_orbits(rep: Report, parts: dict[str, OrbitPartition], sets: dict[str, StateSet]) -> None:
    for g in GROUPS:
        p = parts[g]
        sizes = p.sizes()
        want = PUBLISHED_SIZES[g]
        rep.add(f"orbits.{g}_count", f"{len(want)} orbits", len(p.orbits) == len(want), f"observed {p.labels}")
        rep.add(f"orbits.{g}_sizes", "orbit sizes " + ", ".join(f"{k}={v}" for k, v in want.items()),
                sizes == want, "observed " + ", ".join(f"{k}={v}" for k, v in sizes.items()))
        disjoint = sum(sizes.values()) == len(sets[g]) and set(p.index_of) == sets[g].as_set()
        rep.add(f"orbits.{g}_cover", "orbits are disjoint and cover the state set", disjoint)
        for r in representatives(g):
            o = p[r.label]
            rep.add(f"orbits.{g}_{r.label}", f"representative of {r.label} is a member with entropy {frac(r.entropy)}",
                    p.orbit_of(r.state) == r.label and o.entropy == r.entropy,
                    f"entropy {frac(o.entropy)}, disentangled qubits {disentangled_qubits(o)}")
        for o in p.orbits:
            if o.label.startswith("EXTRA"):
                rep.notes.append(f"{g}: unlabelled orbit {o.label} of size {len(o)}")
        sub = {o.label: disentangled_qubits(o) for o in p.orbits if o.entropy == Fraction(2, 3)}
        rep.notes.append(
            f"{g}: orbit subscript k in the 2/3 orbits matches the product qubit: "
            + ", ".join(f"{k} -> qubit {v}" for k, v in sub.items())
        )


def _check_entropy(rep: Report, parts: dict[str, OrbitPartition], sets: dict[str, StateSet]) -> None:
    q = sets["clifford"]
    arr = q.to_numpy()
    per = ent.entropy_float_many(arr)
    exact = np.array([[float(e) for e in ent.entropy_exact(s).per_qubit] for s in q])
    err = float(np.max(np.abs(per.mean(axis=1) - exact.mean(axis=1))))
    rep.add("entropy.float_vs_exact", "float entropy agrees with exact labels on all Clifford states to 1e-12",
            err <= 1e-12, f"max deviation {err:.2e}")
    mw_hits = [ent.meyer_wallach(row) for row in arr]
    mismatch = sum((abs(m - 1) < 1e-12) != (exact[i].mean() == 1) for i, m in enumerate(mw_hits))
    rep.notes.append(f"Meyer-Wallach = 1 exactly on the entropy-1 states: {mismatch} counterexamples")
    grid = np.linspace(0, np.pi / 4, 100)
    dev = max(abs(ent.entropy_formula_2q(d) - ent.binary_entropy((1 + np.sin(2 * d)) / 2)) for d in grid)
    rep.add("entropy.two_qubit_formula", "closed-form 2-qubit orbit entropy matches the Schmidt spectrum to 1e-12",
            dev <= 1e-12, f"max deviation {dev:.2e} on 100 points")
    ends = (ent.entropy_formula_2q(0.0), ent.entropy_formula_2q(np.pi / 4))
    rep.add("entropy.two_qubit_endpoints", "formula gives 1 at d=0 and 0 at d=pi/4",
            abs(ends[0] - 1) <= 1e-12 and abs(ends[1]) <= 1e-12, f"observed {ends[0]:.12f}, {ends[1]:.12f}")


def _check_transitions(rep: Report, tables: dict[str, list[TransitionTable]], parts: dict[str, OrbitPartition]) -> None:
    for g in GROUPS:
        for c in check_claims(g, tables[g]):
            rep.add(f"transitions.{g}", f"|cn{c.gate[0]}{c.gate[1]} {c.src} ∩ {c.dst}| = {c.expected}",
                    c.ok, f"observed {c.observed}")
        sizes = parts[g].sizes()
        rows_ok = all(t.row_sum(a) == n for t in tables[g] for a, n in sizes.items())
        rep.add(f"transitions.{g}_rows", "every table row sums to its source orbit size", rows_ok)
        sym = all(t.count(a, b) == t.count(b, a) for t in tables[g] for a in t.labels for b in t.labels)
        rep.add(f"transitions.{g}_symmetry", "each table is symmetric (CNOT is an involution)", sym)
        for gate, a, b, n in unquoted_cells(g, tables[g]):
            rep.notes.append(f"{g}: |cn{gate[0]}{gate[1]} {a} ∩ {b}| = {n} (not quoted)")
    t12 = {t.gate: t for t in tables["clifford"]}[(1, 2)]
    n1 = t12.count("S_0", "S_2/3,1")
    n3 = t12.count("S_0", "S_2/3,3")
    rep.add("transitions.headline_cn12", "headline claim: CNOT(1,2) sends 768 states of S_0 to S_2/3,1", n1 == 768,
            f"observed S_0 -> S_2/3,1: {n1}, S_0 -> S_2/3,3: {n3}; the theorem's item with S_2/3,3 is the one that holds",
            asserted=False)


def _check_diameters(rep: Report, diam: dict[tuple[str, str], dict]) -> None:
    for (g, top), want in PUBLISHED_DIAMETERS.items():
        d = diam[(g, top)]
        rep.add(f"diameter.{g}_{top}", f"maximum CNOT distance in Q{GROUP_SYMBOL[g]}, {top} topology, is {want}",
                d["diameter"] == want, f"observed {d['diameter']}, witness {d['witnesses'][0]}")


def _check_theorem1(rep: Report, t1: Theorem1Report) -> None:
    for c in t1.cases:
        asserted = c.case == (1, 1, 1)
        rep.add(f"theorem1.signs{c.case}", f"Groebner basis is {{1}} for determinant signs {c.case}",
                c.unit_ideal, f"{c.n_amplitude_equations} amplitude equations, {c.order}", asserted=asserted)
    rep.add("theorem1.order_independence", "verdict identical under lex and grevlex", all(t1.orders_agree.values()))
    eg = t1.explicit_gate
    rep.add("theorem1.explicit_unitary", "each displayed complex block is unitary to 1e-12",
            max(eg.unitarity_errors) <= 1e-12, f"max error {max(eg.unitarity_errors):.2e}")
    rep.add("theorem1.explicit_gate", "the displayed local gate connects xi1 and xi2 to 1e-10", eg.ok,
            f"direction {eg.direction}; residuals xi2->xi1 {eg.residual_xi2_to_xi1:.2e}, "
            f"xi1->xi2 {eg.residual_xi1_to_xi2:.2e}")
    for c in t1.cases:
        if c.numeric is not None:
            rep.add(f"theorem1.numeric{c.case}", f"orthogonal residual floor exceeds 0.1 for signs {c.case}",
                    c.numeric.floor > 0.1, f"floor {c.numeric.floor:.6f}")


# -- orchestration ------------------------------------------------------------------


@dataclass
class RunConfig:
    out: Path = Path("out")
    group: str = "clifford"
    topology: str = "all"
    order: str = "grevlex"
    restarts: int = 200
    seed: int = 0
    threads: int = 1


def report_all(cfg: RunConfig) -> Report:
    out = cfg.out
    out.mkdir(parents=True, exist_ok=True)
    rep = Report()

    gp = groups_payload()
    dump_json(gp, out / "groups.json")
    _check_groups(rep, gp)

    sets = {g: enumerate_group(g) for g in GROUPS}
    parts = {g: partition_group(g) for g in GROUPS}
    tables = {g: full_transition_report(parts[g]) for g in GROUPS}
    diam = {}
    for g in GROUPS:
        d = out / g
        d.mkdir(exist_ok=True)
        dump_json(states_payload(sets[g]), d / "states.json")
        dump_json(orbits_payload(g, parts[g]), d / "orbits.json")
        dump_json(transitions_payload(g, tables[g]), d / "transitions.json")
        (d / "transitions.csv").write_text(transitions_csv(tables[g]), encoding="utf-8")
        for top in TOPOLOGIES:
            diam[(g, top)] = diameter_payload(g, tables[g], top)
            suffix = "" if top == "all" else f"-{top}"
            (d / f"orbitgraph{suffix}.dot").write_text(orbit_dot(g, parts[g], tables[g], top), encoding="utf-8")
        dump_json({top: diam[(g, top)] for top in TOPOLOGIES}, d / "diameter.json")

    _check_states(rep, sets)
    _check_orbits(rep, parts, sets)
    _check_entropy(rep, parts, sets)
    _check_transitions(rep, tables, parts)
    _check_diameters(rep, diam)

    t1 = verify_theorem1_all_cases(cfg.order, cfg.restarts, cfg.seed, cfg.threads)
    dump_json(theorem1_payload(t1), out / "theorem1.json")
    _check_theorem1(rep, t1)

    (out / "REPORT.md").write_text(rep.markdown(), encoding="utf-8")
    return rep


__all__ = [
    "GROUPS",
    "Report",
    "RunConfig",
    "SIGN_CASES",
    "diameter_payload",
    "dump_json",
    "groups_payload",
    "orbit_dot",
    "orbits_payload",
    "report_all",
    "states_payload",
    "theorem1_payload",
    "transitions_csv",
    "transitions_payload",
]
