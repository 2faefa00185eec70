import random
from fractions import Fraction

import pytest

from qorbits.entropy import entropy_exact
from qorbits.gates import GateMatrix, local_generators
from qorbits.orbits import PUBLISHED_SIZES, partition, representatives
from qorbits.states import KET000, StateSet, apply_gate


def test_trivial_partition():
    p = partition(StateSet((KET000,)), [GateMatrix.identity(8)])
    assert len(p.orbits) == 1 and len(p.orbits[0]) == 1
    assert p.orbits[0].label == "EXTRA-1"


def test_clifford_orbits(cliff_partition):
    assert cliff_partition.sizes() == PUBLISHED_SIZES["clifford"]
    assert [o.entropy for o in cliff_partition.orbits] == [0, Fraction(2, 3), Fraction(2, 3), Fraction(2, 3), 1]


def test_real_orbits(real_partition):
    assert real_partition.sizes() == PUBLISHED_SIZES["real"]
    assert sorted(real_partition.sizes().values()) == sorted([128, 64, 64, 64, 128, 32])
    assert [o.entropy for o in real_partition.orbits] == [0] + [Fraction(2, 3)] * 3 + [1, 1]


@pytest.mark.parametrize("group", ["clifford", "real"])
def test_disjoint_cover(group, qc, qrc, cliff_partition, real_partition):
    states = qc if group == "clifford" else qrc
    p = cliff_partition if group == "clifford" else real_partition
    seen = set()
    for o in p.orbits:
        assert seen.isdisjoint(o.members)
        seen.update(o.members)
    assert seen == states.as_set()


@pytest.mark.parametrize("group", ["clifford", "real"])
def test_representatives_carry_labels(group, cliff_partition, real_partition):
    p = cliff_partition if group == "clifford" else real_partition
    for rep in representatives(group):
        assert p.orbit_of(rep.state) == rep.label
        assert p[rep.label].entropy == rep.entropy


def test_entropy_constant_on_orbits(cliff_partition, real_partition):
    for p in (cliff_partition, real_partition):
        for o in p.orbits:
            assert all(entropy_exact(s).value == o.entropy for s in o.members)


def test_witness_words_map_representative_to_member(real_partition, cliff_partition):
    rng = random.Random(2)
    for p in (real_partition, cliff_partition):
        for o in p.orbits:
            for s in rng.sample(o.members, 5):
                u = p.witness_gate(s)
                assert apply_gate(u, o.representative) == s


def test_witness_gate_is_local(cliff_partition, local_cliff3):
    rng = random.Random(4)
    members = cliff_partition["S_1"].members
    for s in rng.sample(members, 5):
        assert cliff_partition.witness_gate(s) in local_cliff3


def test_subscript_is_product_qubit(cliff_partition):
    for k in (1, 2, 3):
        per = cliff_partition[f"S_2/3,{k}"].per_qubit
        assert [q for q, e in zip((1, 2, 3), per) if e == 0] == [k]


def test_local_gate_invariance_of_entropy(qc, local_cliff3):
    rng = random.Random(1000)
    states = qc.states
    for _ in range(1000):
        s = states[rng.randrange(len(states))]
        u = local_cliff3.element(rng.randrange(len(local_cliff3)))
        assert entropy_exact(apply_gate(u, s)) == entropy_exact(s)


def test_open_set_rejected(qc):
    partial = StateSet(qc.states[:10])
    with pytest.raises(ValueError, match="not closed"):
        partition(partial, local_generators("clifford"))
