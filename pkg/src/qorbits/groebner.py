"""Buchberger's algorithm over Q, and the infeasibility check for orthogonal local gates.

The question is whether some A1 (x) A2 (x) A3, each A_i a real orthogonal
2x2 matrix, maps (|001> - |010> + |100> + |111>)/2 to the GHZ state.  For
each choice of determinant signs the amplitude equations plus the three
circle constraints are collected and the reduced Groebner basis is
computed; {1} means there is no complex, hence no real, solution.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.optimize import minimize

Monomial = tuple[int, ...]

ORDERS: dict[str, Callable[[Monomial], tuple]] = {
    "lex": lambda m: m,
    "grevlex": lambda m: (sum(m), tuple(-e for e in reversed(m))),
}


class GroebnerCapExceeded(RuntimeError):
    pass


class Poly:
    """Sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None, nvars: int = 6) -> None:
        self.nvars = nvars
        self.terms: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            if len(m) != nvars:
                raise ValueError("monomial length does not match nvars")
            if c:
                self.terms[tuple(m)] = Fraction(c)

    @classmethod
    def var(cls, i: int, nvars: int = 6) -> Poly:
        """The i-th variable, 0-based."""
        m = [0] * nvars
        m[i] = 1
        return cls({tuple(m): 1}, nvars)

    @classmethod
    def const(cls, c: Fraction | int, nvars: int = 6) -> Poly:
        return cls({(0,) * nvars: c}, nvars)

    def _coerce(self, other: Poly | int | Fraction) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly.const(other, self.nvars)

    def __add__(self, other: Poly | int | Fraction) -> Poly:
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: Poly | int | Fraction) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int | Fraction) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other: Poly | int | Fraction) -> Poly:
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly({m: v * c for m, v in self.terms.items()}, self.nvars) if c else Poly(None, self.nvars)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly({m: c for m, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def mul_term(self, mono: Monomial, coeff: Fraction) -> Poly:
        return Poly(
            {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self.terms.items()}, self.nvars
        )

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def leading(self, order: str = "grevlex") -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = ORDERS[order]
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def monic(self, order: str = "grevlex") -> Poly:
        _, c = self.leading(order)
        return self * (1 / c)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def evaluate(self, point: Sequence[float | Fraction]) -> float | Fraction:
        total: float | Fraction = 0
        for m, c in self.terms.items():
            t: float | Fraction = c
            for x, e in zip(point, m):
                if e:
                    t = t * x**e
            total = total + t
        return total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def to_str(self, names: Sequence[str] | None = None, order: str = "grevlex") -> str:
        if not self.terms:
            return "0"
        names = names or [f"a{i + 1}" for i in range(self.nvars)]
        parts = []
        for m in sorted(self.terms, key=ORDERS[order], reverse=True):
            c = self.terms[m]
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
            mag = abs(c)
            body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
            parts.append(("-" if c < 0 else "+") + " " + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"Poly({self.to_str()})"


# -- Buchberger -----------------------------------------------------------------


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _quot(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def reduce(f: Poly, basis: Sequence[Poly], order: str = "grevlex") -> Poly:
    """Full remainder of f on division by `basis`."""
    key = ORDERS[order]
    leads = [(g.leading(order), g) for g in basis if not g.is_zero()]
    rem: dict[Monomial, Fraction] = {}
    p = dict(f.terms)
    nv = f.nvars
    while p:
        m = max(p, key=key)
        c = p[m]
        for (lm, lc), g in leads:
            if _divides(lm, m):
                q = _quot(m, lm)
                factor = c / lc
                for gm, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(gm, q))
                    v = p.get(t, 0) - factor * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    return Poly(rem, nv)


def s_polynomial(f: Poly, g: Poly, order: str = "grevlex") -> Poly:
    (mf, cf), (mg, cg) = f.leading(order), g.leading(order)
    lcm = _lcm(mf, mg)
    return f.mul_term(_quot(lcm, mf), 1 / cf) - g.mul_term(_quot(lcm, mg), 1 / cg)


def reduced_basis(gens: Iterable[Poly], order: str = "grevlex") -> list[Poly]:
    """Minimal, interreduced, monic basis sorted by decreasing leading monomial."""
    polys = [g.monic(order) for g in gens if not g.is_zero()]
    minimal: list[Poly] = []
    for i, g in enumerate(polys):
        lm = g.leading(order)[0]
        dominated = False
        for j, h in enumerate(polys):
            if i == j:
                continue
            hm = h.leading(order)[0]
            if _divides(hm, lm) and (hm != lm or j < i):
                dominated = True
                break
        if not dominated:
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        lm, lc = g.leading(order)
        tail = Poly({m: c for m, c in g.terms.items() if m != lm}, g.nvars)
        out.append((Poly({lm: lc}, g.nvars) + reduce(tail, others, order)).monic(order))
    key = ORDERS[order]
    return sorted(out, key=lambda p: key(p.leading(order)[0]), reverse=True)


def buchberger(gens: Sequence[Poly], order: str = "grevlex", max_pairs: int = 200_000) -> list[Poly]:
    """Reduced Groebner basis of the ideal generated by `gens`.

    Pairs are pruned by the coprime-leading-monomial criterion and by the
    chain criterion.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    nv = gens[0].nvars
    key = ORDERS[order]
    basis: list[Poly] = []
    leads: list[Monomial] = []
    pairs: set[tuple[int, int]] = set()

    def add(p: Poly) -> None:
        basis.append(p.monic(order))
        leads.append(p.leading(order)[0])
        j = len(basis) - 1
        pairs.update((i, j) for i in range(j))

    for g in gens:
        r = reduce(g, basis, order)
        if not r.is_zero():
            add(r)
            if r.is_constant():
                return [Poly.const(1, nv)]

    processed = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.discard((i, j))
        processed += 1
        if processed > max_pairs:
            raise GroebnerCapExceeded(f"Buchberger exceeded {max_pairs} pairs")
        lcm = _lcm(leads[i], leads[j])
        if lcm == tuple(a + b for a, b in zip(leads[i], leads[j])):
            continue
        if any(
            k not in (i, j)
            and _divides(leads[k], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        r = reduce(s_polynomial(basis[i], basis[j], order), basis, order)
        if not r.is_zero():
            if r.is_constant():
                return [Poly.const(1, nv)]
            add(r)
    return reduced_basis(basis, order)


def is_unit_ideal(basis: Sequence[Poly]) -> bool:
    return len(basis) == 1 and basis[0] == 1


# -- the orthogonal local-gate system --------------------------------------------

SignCase = tuple[int, int, int]
SIGN_CASES: list[SignCase] = list(itertools.product((1, -1), repeat=3))

# (|001> - |010> + |100> + |111>) scaled by 2; target is (|000> + |111>)/sqrt(2)
SOURCE_TIMES_2 = (0, 1, -1, 0, 1, 0, 0, 1)


def _block(x: Poly, y: Poly, det: int) -> list[list[Poly]]:
    if det == 1:
        return [[x, y], [-y, x]]
    if det == -1:
        return [[x, y], [y, -x]]
    raise ValueError("determinant sign must be +1 or -1")


def amplitude_polys(case: SignCase) -> list[Poly]:
    """2 * (U psi)_j for j = 0..7, with U the symbolic orthogonal tensor product."""
    a = [Poly.var(i) for i in range(6)]
    blocks = [_block(a[2 * q], a[2 * q + 1], case[q]) for q in range(3)]
    amps = []
    for row in range(8):
        r = ((row >> 2) & 1, (row >> 1) & 1, row & 1)
        acc = Poly()
        for col, w in enumerate(SOURCE_TIMES_2):
            if not w:
                continue
            c = ((col >> 2) & 1, (col >> 1) & 1, col & 1)
            acc = acc + blocks[0][r[0]][c[0]] * blocks[1][r[1]][c[1]] * blocks[2][r[2]][c[2]] * w
        amps.append(acc)
    return amps


def amplitude_equations(case: SignCase) -> list[Poly]:
    """amp0 - amp7 and amp1..amp6, zero polynomials and exact duplicates dropped."""
    amps = amplitude_polys(case)
    eqs = [amps[0] - amps[7]] + amps[1:7]
    out: list[Poly] = []
    for e in eqs:
        if not e.is_zero() and e not in out:
            out.append(e)
    return out


def circle_constraints() -> list[Poly]:
    a = [Poly.var(i) for i in range(6)]
    return [a[2 * q] * a[2 * q] + a[2 * q + 1] * a[2 * q + 1] - 1 for q in range(3)]


def build_system(case: SignCase) -> list[Poly]:
    return circle_constraints() + amplitude_equations(case)


# -- numeric cross-checks ----------------------------------------------------------

GHZ = np.zeros(8)
GHZ[[0, 7]] = 1 / np.sqrt(2)
XI2 = np.array(SOURCE_TIMES_2, dtype=float) / 2


def _orth_blocks(theta: np.ndarray, det: int) -> np.ndarray:
    """(..., 2, 2) rotation (det=+1) or reflection (det=-1) blocks."""
    c, s = np.cos(theta), np.sin(theta)
    if det == 1:
        rows = [np.stack([c, s], -1), np.stack([-s, c], -1)]
    else:
        rows = [np.stack([c, s], -1), np.stack([s, -c], -1)]
    return np.stack(rows, -2)


def orthogonal_residual(angles: Sequence[float], case: SignCase) -> float:
    """||(A1 x A2 x A3) xi1 - xi2||^2 with xi1 = GHZ."""
    mats = [_orth_blocks(np.asarray(t), d) for t, d in zip(angles, case)]
    u = np.kron(np.kron(mats[0], mats[1]), mats[2])
    return float(np.sum((u @ GHZ - XI2) ** 2))


def _grid_overlap_max(case: SignCase, step_deg: float) -> tuple[float, tuple[float, float, float]]:
    # residual = 2 - 2 <xi2 | U xi1>, and U xi1 = sum_k col_k(A1) x col_k(A2) x col_k(A3) / sqrt(2)
    th = np.deg2rad(np.arange(0.0, 360.0, step_deg))
    blocks = [_orth_blocks(th, d) for d in case]
    src = XI2.reshape(2, 2, 2)
    best, arg = -np.inf, (0.0, 0.0, 0.0)
    chunk = 32
    for start in range(0, len(th), chunk):
        ov = 0.0
        for k in (0, 1):
            m = np.einsum("abc,na->nbc", src, blocks[0][start : start + chunk, :, k])
            ov = ov + np.einsum("mb,nbc->nmc", blocks[1][:, :, k], m) @ blocks[2][:, :, k].T
        ov = ov / np.sqrt(2)
        idx = np.unravel_index(np.argmax(ov), ov.shape)
        if ov[idx] > best:
            best = float(ov[idx])
            arg = (float(th[start + idx[0]]), float(th[idx[1]]), float(th[idx[2]]))
    return best, arg


@dataclass
class NumericFloor:
    case: SignCase
    grid_step_deg: float
    grid_min: float
    grid_argmin: tuple[float, float, float]
    local_min: float
    local_argmin: tuple[float, float, float]
    restarts: int

    @property
    def floor(self) -> float:
        return min(self.grid_min, self.local_min)


def numeric_residual_search(
    case: SignCase, restarts: int = 200, seed: int = 0, grid_step_deg: float = 1.0
) -> NumericFloor:
    """Grid scan plus multistart BFGS over the three block angles."""
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    best_ov, grid_arg = _grid_overlap_max(case, grid_step_deg)
    grid_min = 2.0 - 2.0 * best_ov
    rng = np.random.default_rng(seed)
    starts = [np.array(grid_arg)] + [rng.uniform(0, 2 * np.pi, 3) for _ in range(restarts - 1)]
    local_min, local_arg = np.inf, grid_arg
    for x0 in starts:
        res = minimize(orthogonal_residual, x0, args=(case,), method="BFGS")
        if res.fun < local_min:
            local_min = float(res.fun)
            local_arg = tuple(float(t) % (2 * np.pi) for t in res.x)
    return NumericFloor(case, grid_step_deg, grid_min, grid_arg, local_min, local_arg, restarts)  # type: ignore[arg-type]


# -- the explicit complex local gate -------------------------------------------------


def explicit_blocks() -> list[np.ndarray]:
    """The three unitary 2x2 factors of the published local gate."""
    e = np.exp
    r = 1 / np.sqrt(2)
    a1 = r * np.array([[e(-341j / 130), -1j * e(-341j / 130)], [e(341j / 130), 1j * e(341j / 130)]])
    a2 = r * np.array([[1j * e(-18j / 65), -e(-18j / 65)], [e(18j / 65), -1j * e(18j / 65)]])
    a3 = r * np.array([[e(29j / 10), -1j * e(29j / 10)], [-1j * e(-29j / 10), e(-29j / 10)]])
    return [a1, a2, a3]


def _phase_free_residual(w: np.ndarray, target: np.ndarray) -> float:
    ov = np.vdot(target, w)
    phase = ov / abs(ov) if abs(ov) > 0 else 1.0
    return float(np.linalg.norm(w / phase - target))


@dataclass
class ExplicitGateCheck:
    unitarity_errors: list[float]
    residual_xi1_to_xi2: float
    residual_xi2_to_xi1: float
    phase_free_xi1_to_xi2: float
    phase_free_xi2_to_xi1: float
    tolerance: float = 1e-10

    @property
    def direction(self) -> str | None:
        if self.residual_xi2_to_xi1 <= self.tolerance:
            return "xi2->xi1"
        if self.residual_xi1_to_xi2 <= self.tolerance:
            return "xi1->xi2"
        return None

    @property
    def ok(self) -> bool:
        return self.direction is not None


def verify_explicit_gate(tolerance: float = 1e-10) -> ExplicitGateCheck:
    blocks = explicit_blocks()
    errs = [float(np.max(np.abs(a @ a.conj().T - np.eye(2)))) for a in blocks]
    u = np.kron(np.kron(blocks[0], blocks[1]), blocks[2])
    fwd = u @ GHZ
    back = u @ XI2
    return ExplicitGateCheck(
        errs,
        float(np.linalg.norm(fwd - XI2)),
        float(np.linalg.norm(back - GHZ)),
        _phase_free_residual(fwd, XI2),
        _phase_free_residual(back, GHZ),
        tolerance,
    )


# -- full verification ---------------------------------------------------------------


@dataclass
class CaseResult:
    case: SignCase
    n_amplitude_equations: int
    order: str
    basis: list[str]
    unit_ideal: bool
    numeric: NumericFloor | None = None

    @property
    def verdict(self) -> str:
        return "PASS" if self.unit_ideal else "FINDING"


@dataclass
class Theorem1Report:
    cases: list[CaseResult]
    explicit_gate: ExplicitGateCheck
    orders_agree: dict[str, bool] = field(default_factory=dict)

    @property
    def all_unit(self) -> bool:
        return all(c.unit_ideal for c in self.cases)


def groebner_case(case: SignCase, order: str = "grevlex") -> CaseResult:
    system = build_system(case)
    basis = buchberger(system, order)
    return CaseResult(
        case, len(system) - 3, order, [b.to_str(order=order) for b in basis], is_unit_ideal(basis)
    )


def _case_job(args: tuple[SignCase, str, int, int]) -> CaseResult:
    case, order, restarts, seed = args
    res = groebner_case(case, order)
    if restarts:
        res.numeric = numeric_residual_search(case, restarts, seed)
    return res


def verify_theorem1_all_cases(
    order: str = "grevlex", restarts: int = 200, seed: int = 0, threads: int = 1
) -> Theorem1Report:
    """Groebner verdict for all 8 sign cases, the numeric floor, and the explicit gate."""
    other = "lex" if order == "grevlex" else "grevlex"
    jobs = [(c, order, restarts, seed + i) for i, c in enumerate(SIGN_CASES)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_case_job, jobs))
            alt = list(pool.map(groebner_case, SIGN_CASES, [other] * len(SIGN_CASES)))
    else:
        results = [_case_job(j) for j in jobs]
        alt = [groebner_case(c, other) for c in SIGN_CASES]
    agree = {str(r.case): r.unit_ideal == a.unit_ideal for r, a in zip(results, alt)}
    return Theorem1Report(results, verify_explicit_gate(), agree)
