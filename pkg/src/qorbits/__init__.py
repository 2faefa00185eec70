"""Local-gate orbits of 3-qubit Clifford-preparable states, computed exactly."""

from .ring import CycAmp
from .gates import GateMatrix, clifford_1q, cnot, close_group, local_group, real_clifford_1q, tensor3
from .states import PureState3, StateSet, apply_gate, enumerate_group, enumerate_states, real_subset
from .entropy import entropy_exact, entropy_float, meyer_wallach, purity_one_qubit
from .orbits import OrbitPartition, partition, partition_group
from .transitions import diameter, orbit_graph, state_distance, transition_table

__all__ = [
    "CycAmp",
    "GateMatrix",
    "OrbitPartition",
    "PureState3",
    "StateSet",
    "apply_gate",
    "clifford_1q",
    "close_group",
    "cnot",
    "diameter",
    "entropy_exact",
    "entropy_float",
    "enumerate_group",
    "enumerate_states",
    "local_group",
    "meyer_wallach",
    "orbit_graph",
    "partition",
    "partition_group",
    "purity_one_qubit",
    "real_clifford_1q",
    "real_subset",
    "state_distance",
    "tensor3",
    "transition_table",
]
