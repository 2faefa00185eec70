"""Enumeration of the 3-qubit states reachable from |000> under a gate set."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .gates import CNOT_PAIRS, GateMatrix, cnot_generators, local_generators
from .ring import HALF, INV_SQRT2, ONE, ZERO, CycAmp


class StateCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PureState3:
    amps: tuple[CycAmp, ...]

    def __post_init__(self) -> None:
        if len(self.amps) != 8:
            raise ValueError("a 3-qubit state has 8 amplitudes")

    @classmethod
    def basis(cls, index: int) -> PureState3:
        return cls(tuple(ONE if i == index else ZERO for i in range(8)))

    @classmethod
    def from_halves(cls, values: Sequence[int]) -> PureState3:
        """State with amplitudes values[i] / 2 (used for the listed orbit representatives)."""
        return cls(tuple(CycAmp.from_int(v) * HALF for v in values))

    def norm2(self) -> CycAmp:
        acc = ZERO
        for a in self.amps:
            acc = acc + a.abs2()
        return acc

    def is_real(self) -> bool:
        return all(a.is_real() for a in self.amps)

    @cached_property
    def key(self) -> str:
        return "[" + ",".join(a.encode() for a in self.amps) + "]"

    def to_numpy(self) -> np.ndarray:
        return np.array([complex(a) for a in self.amps])

    def __lt__(self, other: PureState3) -> bool:
        return self.key < other.key


KET000 = PureState3.basis(0)
GHZ = PureState3(tuple(INV_SQRT2 if i in (0, 7) else ZERO for i in range(8)))


def apply_gate(g: GateMatrix, s: PureState3) -> PureState3:
    if g.dim != 8:
        raise ValueError("expected an 8x8 gate")
    return PureState3(g.apply(s.amps))


@dataclass
class StateSet:
    """A set of states held in canonical-encoding order."""

    states: tuple[PureState3, ...]
    provenance: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.states = tuple(sorted(set(self.states), key=lambda s: s.key))
        self._index = {s: i for i, s in enumerate(self.states)}

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[PureState3]:
        return iter(self.states)

    def __contains__(self, s: object) -> bool:
        return s in self._index

    def index(self, s: PureState3) -> int:
        return self._index[s]

    def as_set(self) -> frozenset[PureState3]:
        return frozenset(self.states)

    def to_numpy(self) -> np.ndarray:
        return np.array([s.to_numpy() for s in self.states])


def enumerate_states(
    local_gens: Iterable[GateMatrix],
    cnots: Iterable[GateMatrix],
    start: PureState3 = KET000,
    cap: int = 10**6,
    provenance: dict | None = None,
) -> StateSet:
    """Smallest set containing `start` and closed under every given gate (BFS)."""
    gens = list(local_gens) + list(cnots)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = apply_gate(g, s)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
                    if len(seen) > cap:
                        raise StateCapExceeded(f"state enumeration exceeded cap of {cap} states")
        frontier = nxt
    return StateSet(tuple(seen), dict(provenance or {}))


def real_subset(s: StateSet) -> StateSet:
    prov = dict(s.provenance)
    prov["filter"] = "real amplitudes"
    return StateSet(tuple(x for x in s if x.is_real()), prov)


_CACHE: dict[str, StateSet] = {}


def enumerate_group(group: str) -> StateSet:
    """Q(C) for group='clifford' or Q(RC) for group='real', all three CNOTs, cached."""
    if group not in _CACHE:
        local = local_generators(group)
        cn = cnot_generators(CNOT_PAIRS)
        _CACHE[group] = enumerate_states(
            [g for _, g in local],
            [g for _, g in cn],
            provenance={"group": group, "local": [n for n, _ in local], "cnots": [n for n, _ in cn]},
        )
    return _CACHE[group]
