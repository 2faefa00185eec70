import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from qorbits.groebner import (
    SIGN_CASES,
    Poly,
    amplitude_equations,
    buchberger,
    build_system,
    groebner_case,
    is_unit_ideal,
    numeric_residual_search,
    orthogonal_residual,
    reduce,
    s_polynomial,
    verify_explicit_gate,
)

A = sp.symbols("a1:7")


def to_sympy(p: Poly, gens=A):
    return sum(sp.Rational(c.numerator, c.denominator) * sp.Mul(*[g**e for g, e in zip(gens, m)]) for m, c in p.terms.items())


def from_sympy(expr, gens) -> Poly:
    poly = sp.Poly(expr, *gens)
    return Poly({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()}, len(gens))


# -- Poly basics -----------------------------------------------------------------


def test_single_variable_examples():
    x = Poly.var(0, 1)
    assert buchberger([x]) == [x]
    assert is_unit_ideal(buchberger([x, x * x + 1]))


def test_poly_arithmetic_matches_sympy():
    rng = random.Random(1)
    for _ in range(20):
        p = Poly({tuple(rng.randint(0, 2) for _ in range(6)): rng.randint(-3, 3) for _ in range(4)})
        q = Poly({tuple(rng.randint(0, 2) for _ in range(6)): rng.randint(-3, 3) for _ in range(4)})
        assert sp.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
        assert sp.expand(to_sympy(p - q) - (to_sympy(p) - to_sympy(q))) == 0


@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_leading_term_orders(order):
    x, y, z = (Poly.var(i, 3) for i in range(3))
    f = x * y * y + x * x * z + z * z * z * z
    lead = f.leading(order)[0]
    want = {"lex": (2, 0, 1), "grevlex": (0, 0, 4)}[order]
    assert lead == want


# -- Buchberger against an independent implementation ----------------------------


def random_system(rng: random.Random, nvars: int = 3, npolys: int = 3) -> list[Poly]:
    polys = []
    for _ in range(npolys):
        terms = {}
        for _ in range(rng.randint(2, 4)):
            m = tuple(rng.randint(0, 2) for _ in range(nvars))
            terms[m] = rng.choice([-2, -1, 1, 2, 3])
        polys.append(Poly(terms, nvars))
    return polys


@pytest.mark.parametrize("order", ["grevlex", "lex"])
@pytest.mark.parametrize("seed", range(12))
def test_reduced_basis_matches_sympy(order, seed):
    rng = random.Random(seed)
    gens = sp.symbols("x y z")
    system = [p for p in random_system(rng) if not p.is_zero()]
    ours = buchberger(system, order)
    theirs = sp.groebner([to_sympy(p, gens) for p in system], *gens, order=order)
    theirs = [from_sympy(e, gens).monic(order) for e in theirs.exprs]
    assert sorted(map(repr, ours)) == sorted(map(repr, theirs))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_basis_properties(seed):
    rng = random.Random(seed)
    system = [p for p in random_system(rng) if not p.is_zero()]
    basis = buchberger(system, "grevlex")
    # every S-polynomial reduces to zero, and every generator lies in the ideal
    for f, g in itertools.combinations(basis, 2):
        assert reduce(s_polynomial(f, g), basis).is_zero()
    for p in system:
        assert reduce(p, basis).is_zero()


# -- the orthogonal system --------------------------------------------------------


PUBLISHED_FIVE = [
    "-1/2*a1*a3*a5 - 1/2*a2*a4*a5 + 1/2*a2*a3*a6 - 1/2*a1*a4*a6",
    "1/2*a1*a3*a5 + 1/2*a2*a4*a5 - 1/2*a2*a3*a6 + 1/2*a1*a4*a6",
    "-1/2*a2*a3*a5 + 1/2*a1*a4*a5 - 1/2*a1*a3*a6 - 1/2*a2*a4*a6",
    "1/2*a2*a3*a5 - 1/2*a1*a4*a5 + 1/2*a1*a3*a6 + 1/2*a2*a4*a6",
    "-1/2*a1*a3*a5 + 1/2*a2*a3*a5 - 1/2*a1*a4*a5 - 1/2*a2*a4*a5 + 1/2*a1*a3*a6"
    " + 1/2*a2*a3*a6 - 1/2*a1*a4*a6 + 1/2*a2*a4*a6",
]


def test_all_rotation_case_reproduces_listed_equations():
    ours = amplitude_equations((1, 1, 1))
    assert len(ours) == 5
    assert len(build_system((1, 1, 1))) == 8
    listed = [from_sympy(sp.sympify(s) * 2, A) for s in PUBLISHED_FIVE]
    assert sorted(map(repr, ours)) == sorted(map(repr, listed))


def test_identity_substitution_gives_amplitude_mismatch():
    point = [1, 0, 1, 0, 1, 0]
    system = build_system((1, 1, 1))
    circles, eqs = system[:3], system[3:]
    assert [c.evaluate(point) for c in circles] == [0, 0, 0]
    # U = identity: 2*U*psi2 = (0, 1, -1, 0, 1, 0, 0, 1)
    raw = [0 - 1, 1, -1, 0, 1, 0, 0]
    kept = [v for v in raw]
    values = [e.evaluate(point) for e in eqs]
    assert all(v in kept for v in values)
    assert values[0] == -1


def test_system_against_sympy_kronecker():
    for case in SIGN_CASES:
        blocks = [
            sp.Matrix([[A[2 * q], A[2 * q + 1]], [-A[2 * q + 1], A[2 * q]]])
            if case[q] == 1
            else sp.Matrix([[A[2 * q], A[2 * q + 1]], [A[2 * q + 1], -A[2 * q]]])
            for q in range(3)
        ]
        v = (sp.kronecker_product(*blocks) * sp.Matrix([0, 1, -1, 0, 1, 0, 0, 1])).expand()
        raw = [sp.expand(v[0] - v[7])] + [v[j] for j in range(1, 7)]
        want = {repr(from_sympy(e, A)) for e in raw if e != 0}
        assert {repr(p) for p in amplitude_equations(case)} == want


def test_unit_ideal_for_every_sign_case_both_orders():
    for case in SIGN_CASES:
        assert groebner_case(case, "grevlex").unit_ideal
        assert groebner_case(case, "lex").unit_ideal


def test_sympy_agrees_on_unit_ideal():
    for case in SIGN_CASES:
        g = sp.groebner([to_sympy(p) for p in build_system(case)], *A, order="grevlex")
        assert list(g.exprs) == [1]


# -- numeric side ---------------------------------------------------------------------


def test_residual_at_identity():
    want = 2 - 2 * (1 / (2 * math.sqrt(2)))
    assert orthogonal_residual([0.0, 0.0, 0.0], (1, 1, 1)) == pytest.approx(want, abs=1e-14)


def test_numeric_floor_matches_brute_grid():
    # brute force over a coarse grid with full 8x8 matrices
    th = np.deg2rad(np.arange(0, 360, 15))
    brute = min(orthogonal_residual(t, (1, -1, 1)) for t in itertools.product(th, repeat=3))
    nf = numeric_residual_search((1, -1, 1), restarts=3, grid_step_deg=15.0)
    assert nf.grid_min == pytest.approx(brute, abs=1e-12)


def test_numeric_floor_bounded_away_from_zero():
    for i, case in enumerate(SIGN_CASES):
        nf = numeric_residual_search(case, restarts=20, seed=i)
        assert nf.floor > 0.1
        assert orthogonal_residual(nf.local_argmin, case) == pytest.approx(nf.local_min, abs=1e-12)


def test_numeric_search_rejects_zero_restarts():
    with pytest.raises(ValueError):
        numeric_residual_search((1, 1, 1), restarts=0)


def test_explicit_gate():
    chk = verify_explicit_gate()
    assert max(chk.unitarity_errors) <= 1e-12
    assert chk.direction == "xi2->xi1"
    assert chk.residual_xi2_to_xi1 <= 1e-10
    assert chk.phase_free_xi2_to_xi1 <= chk.residual_xi2_to_xi1 + 1e-15
    assert chk.residual_xi1_to_xi2 > 0.1
