"""Orbits of a state set under the local-gate group.

Orbits are the connected components of the graph whose edges are single
applications of the local generators.  The generators generate the whole
local group, and the group is finite, so forward reachability from a
representative is exactly its orbit.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .entropy import entropy_exact
from .gates import GateMatrix, local_generators
from .states import PureState3, StateSet, apply_gate, enumerate_group

# Orbit representatives as amplitude vectors in units of 1/2.  S_0 / R_0 is |000>.
_REPS_HALVES: dict[str, list[tuple[str, Fraction, tuple[int, ...]]]] = {
    "clifford": [
        ("S_0", Fraction(0), (2, 0, 0, 0, 0, 0, 0, 0)),
        ("S_2/3,1", Fraction(2, 3), (-1, -1, -1, 1, 0, 0, 0, 0)),
        ("S_2/3,2", Fraction(2, 3), (-1, -1, 0, 0, -1, 1, 0, 0)),
        ("S_2/3,3", Fraction(2, 3), (-1, -1, 0, 0, 0, 0, -1, -1)),
        ("S_1", Fraction(1), (-1, -1, 0, 0, 0, 0, -1, 1)),
    ],
    "real": [
        ("R_0", Fraction(0), (2, 0, 0, 0, 0, 0, 0, 0)),
        ("R_2/3,1", Fraction(2, 3), (-1, -1, -1, 1, 0, 0, 0, 0)),
        ("R_2/3,2", Fraction(2, 3), (-1, -1, 0, 0, -1, 1, 0, 0)),
        ("R_2/3,3", Fraction(2, 3), (-1, -1, 0, 0, 0, 0, -1, -1)),
        ("R_1,1", Fraction(1), (-1, -1, 0, 0, 0, 0, -1, 1)),
        ("R_1,2", Fraction(1), (-1, 0, 0, -1, 0, -1, 1, 0)),
    ],
}

# orbit sizes as published
PUBLISHED_SIZES: dict[str, dict[str, int]] = {
    "clifford": {"S_0": 1728, "S_2/3,1": 1152, "S_2/3,2": 1152, "S_2/3,3": 1152, "S_1": 3456},
    "real": {"R_0": 128, "R_2/3,1": 64, "R_2/3,2": 64, "R_2/3,3": 64, "R_1,1": 128, "R_1,2": 32},
}


@dataclass(frozen=True)
class Representative:
    label: str
    entropy: Fraction
    state: PureState3


def representatives(group: str) -> list[Representative]:
    return [Representative(lab, ent, PureState3.from_halves(v)) for lab, ent, v in _REPS_HALVES[group]]


@dataclass
class Orbit:
    label: str
    representative: PureState3
    members: tuple[PureState3, ...]
    entropy: Fraction
    per_qubit: tuple[Fraction, Fraction, Fraction]

    def __len__(self) -> int:
        return len(self.members)


@dataclass
class OrbitPartition:
    orbits: list[Orbit]
    index_of: dict[PureState3, str]
    generators: list[tuple[str, GateMatrix]]
    _parent: dict[PureState3, tuple[PureState3, str] | None] = field(repr=False, default_factory=dict)

    def __getitem__(self, label: str) -> Orbit:
        for o in self.orbits:
            if o.label == label:
                return o
        raise KeyError(label)

    @property
    def labels(self) -> list[str]:
        return [o.label for o in self.orbits]

    def sizes(self) -> dict[str, int]:
        return {o.label: len(o) for o in self.orbits}

    def orbit_of(self, s: PureState3) -> str:
        try:
            return self.index_of[s]
        except KeyError:
            raise KeyError("state is not in the partitioned set") from None

    def witness(self, s: PureState3) -> list[str]:
        """Generator names, in application order, taking the orbit representative to s."""
        word = []
        cur = s
        while (step := self._parent[cur]) is not None:
            cur, name = step
            word.append(name)
        return word[::-1]

    def witness_gate(self, s: PureState3) -> GateMatrix:
        by_name = dict(self.generators)
        u = GateMatrix.identity(8)
        for name in self.witness(s):
            u = by_name[name] @ u
        return u


def _normalize_gens(gens: Sequence[GateMatrix] | Sequence[tuple[str, GateMatrix]]) -> list[tuple[str, GateMatrix]]:
    out = []
    for i, g in enumerate(gens):
        out.append(g if isinstance(g, tuple) else (f"g{i}", g))
    return out


def partition(
    states: StateSet,
    local_gens: Sequence[GateMatrix] | Sequence[tuple[str, GateMatrix]],
    reps: Sequence[Representative] = (),
) -> OrbitPartition:
    """Split `states` into local-gate orbits.

    Orbits containing one of `reps` take its label; any other component is
    labelled EXTRA-k and seeded from its smallest member.
    """
    gens = _normalize_gens(local_gens)
    parent: dict[PureState3, tuple[PureState3, str] | None] = {}
    index_of: dict[PureState3, str] = {}
    orbits: list[Orbit] = []

    def grow(seed: PureState3, label: str) -> list[PureState3]:
        parent[seed] = None
        index_of[seed] = label
        members = [seed]
        frontier = [seed]
        while frontier:
            nxt = []
            for s in frontier:
                for name, g in gens:
                    t = apply_gate(g, s)
                    if t not in states:
                        raise ValueError("state set is not closed under the local generators")
                    if t not in parent:
                        parent[t] = (s, name)
                        index_of[t] = label
                        members.append(t)
                        nxt.append(t)
            frontier = nxt
        return members

    def add(label: str, seed: PureState3) -> None:
        members = grow(seed, label)
        ent = entropy_exact(seed)
        orbits.append(
            Orbit(label, seed, tuple(sorted(members, key=lambda s: s.key)), ent.value, ent.per_qubit)  # type: ignore[arg-type]
        )

    for rep in reps:
        if rep.state not in states:
            raise ValueError(f"representative {rep.label} is not in the state set")
        if rep.state in index_of:
            raise ValueError(f"representative {rep.label} lies in orbit {index_of[rep.state]}")
        add(rep.label, rep.state)
    extra = 0
    for s in states:
        if s not in index_of:
            extra += 1
            add(f"EXTRA-{extra}", s)
    return OrbitPartition(orbits, index_of, gens, parent)


_CACHE: dict[str, OrbitPartition] = {}


def partition_group(group: str) -> OrbitPartition:
    """Orbit partition of Q(C) or Q(RC) with the published labels, cached."""
    if group not in _CACHE:
        _CACHE[group] = partition(enumerate_group(group), local_generators(group), representatives(group))
    return _CACHE[group]


def disentangled_qubits(orbit: Orbit) -> list[int]:
    """Qubits whose single-qubit entropy is zero on this orbit."""
    return [q for q, e in zip((1, 2, 3), orbit.per_qubit) if e == 0]
