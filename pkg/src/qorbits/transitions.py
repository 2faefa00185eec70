"""CNOT orbit-transition tables, orbit graphs and CNOT distances."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .gates import CNOT_PAIRS, cnot
from .orbits import OrbitPartition
from .states import PureState3, apply_gate

TOPOLOGIES: dict[str, tuple[tuple[int, int], ...]] = {
    "line": ((1, 2), (2, 3)),
    "all": CNOT_PAIRS,
}


class DisconnectedGraph(RuntimeError):
    pass


@dataclass
class TransitionTable:
    gate: tuple[int, int]
    counts: dict[tuple[str, str], int]
    labels: list[str] = field(default_factory=list)

    def count(self, src: str, dst: str) -> int:
        return self.counts.get((src, dst), 0)

    def row_sum(self, src: str) -> int:
        return sum(v for (a, _), v in self.counts.items() if a == src)

    def total(self) -> int:
        return sum(self.counts.values())

    def as_matrix(self) -> list[list[int]]:
        return [[self.count(a, b) for b in self.labels] for a in self.labels]


def transition_table(p: OrbitPartition, gate: tuple[int, int]) -> TransitionTable:
    """|cn_gate(A) ∩ B| for every ordered pair of orbits (A, B)."""
    g = cnot(*gate)
    counts: dict[tuple[str, str], int] = {}
    for orbit in p.orbits:
        for s in orbit.members:
            dst = p.index_of.get(apply_gate(g, s))
            if dst is None:
                raise ValueError(f"CNOT{gate} maps a state of {orbit.label} outside the set")
            key = (orbit.label, dst)
            counts[key] = counts.get(key, 0) + 1
    return TransitionTable(tuple(gate), counts, p.labels)  # type: ignore[arg-type]


def full_transition_report(
    p: OrbitPartition, gates: Sequence[tuple[int, int]] = CNOT_PAIRS
) -> list[TransitionTable]:
    return [transition_table(p, g) for g in gates]


# Published intersection counts: (gate, source orbit, target orbit, count).
def _diag(labels: Iterable[str], count: int) -> list[tuple[tuple[int, int], str, str, int]]:
    return [(g, lab, lab, count) for g in CNOT_PAIRS for lab in labels]


PUBLISHED_COUNTS: dict[str, list[tuple[tuple[int, int], str, str, int]]] = {
    "clifford": (
        _diag(["S_0"], 960)
        + _diag(["S_2/3,1", "S_2/3,2", "S_2/3,3"], 384)
        + _diag(["S_1"], 1920)
        + [
            ((2, 3), "S_0", "S_2/3,1", 768),
            ((1, 2), "S_0", "S_2/3,3", 768),
            ((1, 3), "S_0", "S_2/3,2", 768),
            ((1, 2), "S_2/3,1", "S_1", 768),
            ((1, 3), "S_2/3,1", "S_1", 768),
            ((2, 3), "S_2/3,2", "S_1", 768),
            ((1, 2), "S_2/3,2", "S_1", 768),
            ((2, 3), "S_2/3,3", "S_1", 768),
            ((1, 3), "S_2/3,3", "S_1", 768),
        ]
    ),
    "real": (
        _diag(["R_0"], 96)
        + _diag(["R_2/3,1", "R_2/3,2", "R_2/3,3"], 32)
        + _diag(["R_1,1"], 32)
        + [(g, "R_1,1", "R_1,2", 32) for g in CNOT_PAIRS]
        + [
            ((1, 2), "R_0", "R_2/3,3", 32),
            ((2, 3), "R_0", "R_2/3,1", 32),
            ((1, 3), "R_0", "R_2/3,2", 32),
            ((1, 2), "R_2/3,1", "R_1,1", 32),
            ((1, 3), "R_2/3,1", "R_1,1", 32),
            ((2, 3), "R_2/3,2", "R_1,1", 32),
            ((1, 2), "R_2/3,2", "R_1,1", 32),
            ((2, 3), "R_2/3,3", "R_1,1", 32),
            ((1, 3), "R_2/3,3", "R_1,1", 32),
        ]
    ),
}


@dataclass
class ClaimCheck:
    gate: tuple[int, int]
    src: str
    dst: str
    expected: int
    observed: int

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


def check_claims(group: str, tables: Sequence[TransitionTable]) -> list[ClaimCheck]:
    by_gate = {t.gate: t for t in tables}
    return [
        ClaimCheck(g, a, b, n, by_gate[g].count(a, b)) for g, a, b, n in PUBLISHED_COUNTS[group]
    ]


def unquoted_cells(group: str, tables: Sequence[TransitionTable]) -> list[tuple[tuple[int, int], str, str, int]]:
    """Nonzero cells that no published count covers."""
    quoted = {(g, a, b) for g, a, b, _ in PUBLISHED_COUNTS[group]}
    out = []
    for t in tables:
        for (a, b), n in sorted(t.counts.items()):
            if (t.gate, a, b) not in quoted:
                out.append((t.gate, a, b, n))
    return out


@dataclass
class OrbitGraph:
    nodes: list[str]
    edges: dict[tuple[str, str], dict[tuple[int, int], int]]
    topology: str

    def neighbours(self, node: str) -> list[str]:
        return sorted({b for (a, b) in self.edges if a == node and b != node})


def orbit_graph(tables: Sequence[TransitionTable], topology: str) -> OrbitGraph:
    allowed = TOPOLOGIES[topology]
    nodes = list(tables[0].labels)
    edges: dict[tuple[str, str], dict[tuple[int, int], int]] = {}
    for t in tables:
        if t.gate not in allowed:
            continue
        for (a, b), n in t.counts.items():
            if n > 0:
                edges.setdefault((a, b), {})[t.gate] = n
    return OrbitGraph(nodes, edges, topology)


def _bfs(g: OrbitGraph, src: str) -> dict[str, int]:
    dist = {src: 0}
    q = deque([src])
    while q:
        a = q.popleft()
        for b in g.neighbours(a):
            if b not in dist:
                dist[b] = dist[a] + 1
                q.append(b)
    return dist


def distances(g: OrbitGraph) -> dict[tuple[str, str], int]:
    out = {}
    for a in g.nodes:
        d = _bfs(g, a)
        for b in g.nodes:
            if b not in d:
                raise DisconnectedGraph(f"{b} is unreachable from {a} in the {g.topology} topology")
            out[(a, b)] = d[b]
    return out


@dataclass
class Diameter:
    value: int
    witnesses: list[tuple[str, str]]


def diameter(g: OrbitGraph) -> Diameter:
    d = distances(g)
    best = max(d.values())
    return Diameter(best, [pair for pair, v in d.items() if v == best])


def state_distance(p: OrbitPartition, g: OrbitGraph, u: PureState3, v: PureState3) -> int:
    """Number of CNOTs needed between two states when local gates are free."""
    a = p.orbit_of(u)
    b = p.orbit_of(v)
    return distances(g)[(a, b)]
