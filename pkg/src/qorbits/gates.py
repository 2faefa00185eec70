"""Exact gate matrices, single-qubit group closure and local-gate groups.

Qubit 1 is the most significant bit: basis index 4 is |100>.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from .ring import I, INV_SQRT2, ONE, ZERO, CycAmp

Row = tuple[CycAmp, ...]


class GroupCapExceeded(RuntimeError):
    pass


class GateMatrix:
    """A square matrix over CycAmp.  Equality is exact (global phase matters)."""

    __slots__ = ("entries", "dim", "_hash", "_sparse")

    def __init__(self, entries: Iterable[Iterable[CycAmp]]) -> None:
        rows = tuple(tuple(r) for r in entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        self.entries: tuple[Row, ...] = rows
        self.dim = len(rows)
        self._hash = hash(rows)
        self._sparse: tuple[tuple[tuple[int, CycAmp], ...], ...] | None = None

    @classmethod
    def identity(cls, dim: int) -> GateMatrix:
        return cls([[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)])

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> GateMatrix:
        """Matrix sending basis state j to basis state perm[j]."""
        n = len(perm)
        rows = [[ZERO] * n for _ in range(n)]
        for j, i in enumerate(perm):
            rows[i][j] = ONE
        return cls(rows)

    @property
    def sparse_rows(self) -> tuple[tuple[tuple[int, CycAmp], ...], ...]:
        if self._sparse is None:
            self._sparse = tuple(
                tuple((j, v) for j, v in enumerate(row) if not v.is_zero()) for row in self.entries
            )
        return self._sparse

    def __matmul__(self, other: GateMatrix) -> GateMatrix:
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        n = self.dim
        cols = other.sparse_rows
        out = []
        for row in self.sparse_rows:
            acc = [ZERO] * n
            for k, a in row:
                for j, b in cols[k]:
                    acc[j] = acc[j] + a * b
            out.append(acc)
        return GateMatrix(out)

    def apply(self, vec: Sequence[CycAmp]) -> tuple[CycAmp, ...]:
        out = []
        for row in self.sparse_rows:
            acc = ZERO
            for j, a in row:
                acc = acc + a * vec[j]
            out.append(acc)
        return tuple(out)

    def dagger(self) -> GateMatrix:
        n = self.dim
        return GateMatrix([[self.entries[j][i].conj() for j in range(n)] for i in range(n)])

    def kron(self, other: GateMatrix) -> GateMatrix:
        m = other.dim
        n = self.dim * m
        return GateMatrix(
            [
                [self.entries[i // m][j // m] * other.entries[i % m][j % m] for j in range(n)]
                for i in range(n)
            ]
        )

    def is_unitary(self) -> bool:
        return self @ self.dagger() == GateMatrix.identity(self.dim)

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(v) for v in row] for row in self.entries])

    def monomial_codes(self) -> np.ndarray | None:
        """Entry codes for the fast tensor path: 255 for zero, a + 8k for z**a / sqrt(2)**k."""
        codes = np.empty(self.dim * self.dim, dtype=np.uint8)
        for idx, v in enumerate(itertools.chain.from_iterable(self.entries)):
            if v.is_zero():
                codes[idx] = 255
                continue
            mono = v.as_monomial()
            if mono is None or mono[1] > 31:
                return None
            codes[idx] = mono[0] + 8 * mono[1]
        return codes

    @classmethod
    def from_monomial_codes(cls, codes: np.ndarray) -> GateMatrix:
        dim = int(round(len(codes) ** 0.5))
        vals = [ZERO if int(c) == 255 else CycAmp.zeta_power(int(c) % 8, int(c) // 8) for c in codes]
        return cls([vals[r * dim : (r + 1) * dim] for r in range(dim)])

    def encode(self) -> str:
        return "[" + ",".join("[" + ",".join(v.encode() for v in r) + "]" for r in self.entries) + "]"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GateMatrix):
            return NotImplemented
        return self._hash == other._hash and self.entries == other.entries

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"GateMatrix(dim={self.dim})"


# -- standard gates -----------------------------------------------------------

I2 = GateMatrix.identity(2)
H = GateMatrix([[INV_SQRT2, INV_SQRT2], [INV_SQRT2, -INV_SQRT2]])
Z = GateMatrix([[ONE, ZERO], [ZERO, -ONE]])
P = GateMatrix([[ONE, ZERO], [ZERO, I]])
X = GateMatrix([[ZERO, ONE], [ONE, ZERO]])

SINGLE_QUBIT_GATES = {"I": I2, "H": H, "Z": Z, "P": P, "X": X}


def tensor(*mats: GateMatrix) -> GateMatrix:
    out = mats[0]
    for m in mats[1:]:
        out = out.kron(m)
    return out


def tensor3(u1: GateMatrix, u2: GateMatrix, u3: GateMatrix) -> GateMatrix:
    for u in (u1, u2, u3):
        if u.dim != 2:
            raise ValueError("tensor3 expects 2x2 factors")
    return tensor(u1, u2, u3)


def on_wire(u: GateMatrix, wire: int, n: int = 3) -> GateMatrix:
    """u acting on qubit `wire` (1-based) of an n-qubit register."""
    if not 1 <= wire <= n:
        raise ValueError(f"wire {wire} out of range for {n} qubits")
    return tensor(*(u if q == wire else I2 for q in range(1, n + 1)))


def cnot(control: int, target: int, n: int = 3) -> GateMatrix:
    if control == target or not (1 <= control <= n and 1 <= target <= n):
        raise ValueError(f"invalid CNOT({control},{target}) on {n} qubits")
    cbit = 1 << (n - control)
    tbit = 1 << (n - target)
    return GateMatrix.permutation([j ^ tbit if j & cbit else j for j in range(1 << n)])


# -- groups -------------------------------------------------------------------


@dataclass
class GateGroup:
    elements: dict[GateMatrix, None]
    generator_names: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GateMatrix]:
        return iter(self.elements)

    def __contains__(self, m: object) -> bool:
        return m in self.elements

    @property
    def dim(self) -> int:
        return next(iter(self.elements)).dim


def close_group(
    generators: Sequence[GateMatrix],
    names: Sequence[str] | None = None,
    cap: int = 10**7,
) -> GateGroup:
    """Breadth-first closure of the generators under left multiplication."""
    if not generators:
        raise ValueError("need at least one generator")
    dim = generators[0].dim
    if any(g.dim != dim for g in generators):
        raise ValueError("generators must share a dimension")
    ident = GateMatrix.identity(dim)
    seen: dict[GateMatrix, None] = {ident: None}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                prod = g @ m
                if prod not in seen:
                    seen[prod] = None
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise GroupCapExceeded(f"group closure exceeded cap of {cap} elements")
        frontier = nxt
    return GateGroup(seen, tuple(names) if names else ())


def clifford_1q() -> GateGroup:
    return close_group([H, P], ["H", "P"])


def real_clifford_1q() -> GateGroup:
    return close_group([H, Z], ["H", "Z"])


@dataclass
class LocalGroup:
    """All distinct n-fold tensor products of a single-qubit group.

    Elements are held as rows of monomial entry codes (see
    GateMatrix.monomial_codes) and materialized on demand.
    """

    factor: GateGroup
    n: int
    codes: np.ndarray
    raw_products: int
    _index: dict[bytes, int] | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.codes)

    def element(self, i: int) -> GateMatrix:
        return GateMatrix.from_monomial_codes(self.codes[i])

    def __iter__(self) -> Iterator[GateMatrix]:
        return (self.element(i) for i in range(len(self)))

    def _lookup(self) -> dict[bytes, int]:
        if self._index is None:
            self._index = {row.tobytes(): i for i, row in enumerate(self.codes)}
        return self._index

    def __contains__(self, m: object) -> bool:
        if not isinstance(m, GateMatrix) or m.dim != 1 << self.n:
            return False
        codes = m.monomial_codes()
        return codes is not None and codes.tobytes() in self._lookup()

    def code_set(self) -> set[bytes]:
        return set(self._lookup())


def _kron_codes(a: np.ndarray, b: np.ndarray, da: int, db: int) -> np.ndarray:
    """Batched Kronecker products of monomial-coded matrices.

    a: (ma, da*da) codes, b: (mb, db*db) codes -> (ma*mb, (da*db)**2).
    """
    ma, mb = len(a), len(b)
    a4 = a.reshape(ma, 1, da, 1, da, 1).astype(np.int16)
    b4 = b.reshape(1, mb, 1, db, 1, db).astype(np.int16)
    zero = (a4 == 255) | (b4 == 255)
    phase = (a4 % 8 + b4 % 8) % 8
    k = a4 // 8 + b4 // 8
    out = np.where(zero, 255, phase + 8 * k).astype(np.uint8)
    d = da * db
    return out.reshape(ma * mb, d * d)


def _unique_rows(rows: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(rows)
    width = rows.shape[1]
    packed = rows.view(np.dtype((np.void, width))).ravel()
    return np.unique(packed).view(np.uint8).reshape(-1, width)


def local_group(g: GateGroup, n: int) -> LocalGroup:
    """Distinct n-fold tensor products of elements of a 2x2 group, deduplicated exactly.

    Every element of the single-qubit Clifford groups has monomial entries
    (0 or z**a / sqrt(2)**k), so products are computed on integer codes.
    """
    if n < 1:
        raise ValueError("n must be positive")
    factors = list(g)
    if any(m.dim != 2 for m in factors):
        raise ValueError("local_group expects a group of 2x2 matrices")
    codes = [m.monomial_codes() for m in factors]
    if any(c is None for c in codes):
        raise ValueError("factor group has non-monomial entries; use local_group_exact")
    base = np.stack(codes)  # type: ignore[arg-type]
    if n == 1:
        return LocalGroup(g, 1, _unique_rows(base), len(base))
    # trailing n-1 factors first, then sweep the leading factor in chunks
    tail = base
    dtail = 2
    for _ in range(n - 2):
        tail = _kron_codes(tail, base, dtail, 2)
        dtail *= 2
    parts = [_unique_rows(_kron_codes(base[i : i + 1], tail, 2, dtail)) for i in range(len(base))]
    merged = _unique_rows(np.concatenate(parts))
    return LocalGroup(g, n, merged, len(base) ** n)


def local_group_exact(g: GateGroup, n: int) -> set[GateMatrix]:
    """Reference construction with exact Kronecker products; only for small groups."""
    return {tensor(*combo) for combo in itertools.product(list(g), repeat=n)}


def local_generators(group: str, n: int = 3) -> list[tuple[str, GateMatrix]]:
    """Named single-wire generators: H and P (clifford) or H and Z (real) on each wire."""
    names = {"clifford": ("H", "P"), "real": ("H", "Z")}[group]
    return [
        (f"{name}{w}", on_wire(SINGLE_QUBIT_GATES[name], w, n)) for w in range(1, n + 1) for name in names
    ]


def factor_group(group: str) -> GateGroup:
    return {"clifford": clifford_1q, "real": real_clifford_1q}[group]()


CNOT_PAIRS: tuple[tuple[int, int], ...] = ((1, 2), (2, 3), (1, 3))


def cnot_generators(pairs: Sequence[tuple[int, int]] = CNOT_PAIRS) -> list[tuple[str, GateMatrix]]:
    return [(f"CNOT{i}{j}", cnot(i, j)) for i, j in pairs]


__all__ = [
    "CNOT_PAIRS",
    "GateGroup",
    "GateMatrix",
    "GroupCapExceeded",
    "H",
    "I2",
    "LocalGroup",
    "P",
    "X",
    "Z",
    "clifford_1q",
    "close_group",
    "cnot",
    "cnot_generators",
    "factor_group",
    "local_generators",
    "local_group",
    "local_group_exact",
    "on_wire",
    "real_clifford_1q",
    "tensor",
    "tensor3",
]
