"""Entanglement measures for 3-qubit pure states.

The entropy used throughout is the average over the three qubits of the
base-2 von Neumann entropy of each single-qubit reduced density matrix.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import xlogy

from .ring import ZERO, CycAmp
from .states import PureState3

_LN2 = np.log(2.0)


@dataclass(frozen=True)
class EntropyValue:
    value: Fraction | float
    per_qubit: tuple[Fraction, Fraction, Fraction] | tuple[float, float, float]

    @property
    def is_exact(self) -> bool:
        return isinstance(self.value, Fraction)


def _bit(q: int) -> int:
    if q not in (1, 2, 3):
        raise ValueError(f"qubit index must be 1, 2 or 3, got {q}")
    return 1 << (3 - q)


def reduced_density_exact(s: PureState3, q: int) -> tuple[tuple[CycAmp, CycAmp], tuple[CycAmp, CycAmp]]:
    bit = _bit(q)
    rho = [[ZERO, ZERO], [ZERO, ZERO]]
    for i in range(8):
        if i & bit:
            continue
        j = i | bit
        pair = (s.amps[i], s.amps[j])
        for a in (0, 1):
            for b in (0, 1):
                rho[a][b] = rho[a][b] + pair[a] * pair[b].conj()
    return (rho[0][0], rho[0][1]), (rho[1][0], rho[1][1])


def purity_one_qubit(s: PureState3, q: int) -> Fraction:
    """tr(rho_q^2), exactly."""
    (r00, r01), (_, r11) = reduced_density_exact(s, q)
    tr = r00 * r00 + r11 * r11 + r01.abs2() + r01.abs2()
    return tr.to_fraction()


def entropy_exact(s: PureState3) -> EntropyValue:
    per = []
    for q in (1, 2, 3):
        p = purity_one_qubit(s, q)
        if p == 1:
            per.append(Fraction(0))
        elif p == Fraction(1, 2):
            per.append(Fraction(1))
        else:
            raise ValueError(f"purity {p} on qubit {q} is not 1 or 1/2; use entropy_float")
    return EntropyValue(sum(per, Fraction(0)) / 3, tuple(per))  # type: ignore[arg-type]


def _as_array(amps: Sequence[complex] | np.ndarray | PureState3) -> np.ndarray:
    if isinstance(amps, PureState3):
        return amps.to_numpy()
    return np.asarray(amps, dtype=complex)


def _single_qubit_rdms(psi: np.ndarray) -> np.ndarray:
    """(..., 8) amplitudes -> (..., 3, 2, 2) reduced density matrices."""
    t = psi.reshape(psi.shape[:-1] + (2, 2, 2))
    r1 = np.einsum("...abc,...dbc->...ad", t, t.conj())
    r2 = np.einsum("...bac,...bdc->...ad", t, t.conj())
    r3 = np.einsum("...bca,...bcd->...ad", t, t.conj())
    return np.stack([r1, r2, r3], axis=-3)


def _check_norm(psi: np.ndarray, tol: float = 1e-12) -> None:
    norms = np.sum(np.abs(psi) ** 2, axis=-1)
    if np.any(np.abs(norms - 1.0) > tol):
        raise ValueError("state is not normalized")


def von_neumann(eigs: np.ndarray) -> np.ndarray:
    p = np.clip(eigs, 0.0, 1.0)
    return -np.sum(xlogy(p, p), axis=-1) / _LN2


def entropy_float_many(psi: np.ndarray) -> np.ndarray:
    """Per-qubit entropies for a batch, shape (N, 3)."""
    psi = np.asarray(psi, dtype=complex)
    _check_norm(psi)
    eigs = np.linalg.eigvalsh(_single_qubit_rdms(psi))
    return von_neumann(eigs)


def entropy_float(amps: Sequence[complex] | np.ndarray | PureState3) -> EntropyValue:
    per = entropy_float_many(_as_array(amps)[None, :])[0]
    return EntropyValue(float(per.mean()), tuple(float(x) for x in per))  # type: ignore[arg-type]


def meyer_wallach(amps: Sequence[complex] | np.ndarray | PureState3) -> float:
    psi = _as_array(amps)
    _check_norm(psi)
    rdms = _single_qubit_rdms(psi)
    purities = np.einsum("qab,qba->q", rdms, rdms).real
    return float(2.0 * (1.0 - purities.mean()))


def entropy_formula_2q(d: float) -> float:
    """Entropy of a 2-qubit real orbit labelled by d in [0, pi/4], as a closed form.

    1 - log2 sqrt((1 + s)^(1 + s) / (1 - s)^(-1 + s)) with s = sin(2d), 0^0 = 1.
    """
    if not -1e-15 <= d <= np.pi / 4 + 1e-15:
        raise ValueError("d must lie in [0, pi/4]")
    s = min(1.0, np.sin(2.0 * d))
    log_ratio = (xlogy(1.0 + s, 1.0 + s) - xlogy(-1.0 + s, 1.0 - s)) / _LN2
    return float(1.0 - 0.5 * log_ratio)


def binary_entropy(p: float) -> float:
    return float(von_neumann(np.array([p, 1.0 - p])))
