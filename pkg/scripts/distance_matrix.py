"""Print orbit-to-orbit CNOT distance matrices for both gate sets and topologies."""

from qorbits.orbits import partition_group
from qorbits.transitions import distances, full_transition_report, orbit_graph

for group in ("clifford", "real"):
    p = partition_group(group)
    tables = full_transition_report(p)
    for topo in ("line", "all"):
        g = orbit_graph(tables, topo)
        dist = distances(g)
        labels = g.nodes
        print(f"\n{group}, {topo}")
        print(" " * 10 + "".join(f"{b:>9s}" for b in labels))
        for a in labels:
            print(f"{a:10s}" + "".join(f"{dist[(a, b)]:9d}" for b in labels))
