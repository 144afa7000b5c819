#!/usr/bin/env python3
"""Regenerate tests/data/atlas_n*.g6 and tests/data/atlas_energy.txt from
the networkx graph atlas.

The atlas lists every graph on 0..7 vertices exactly once up to isomorphism,
so it is an external reference for the enumerator and the graph6 codec.
The energy file pairs each graph6 line with the energy from numpy's LAPACK
eigensolver, an oracle independent of the Jacobi code under test.
"""
import pathlib

import networkx as nx
import numpy as np
from networkx.generators.atlas import graph_atlas_g

out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"
by_n = {}
for g in graph_atlas_g():
    by_n.setdefault(g.number_of_nodes(), []).append(g)
energy_lines = []
for n, graphs in sorted(by_n.items()):
    if n == 0:
        continue
    lines = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs]
    (out / f"atlas_n{n}.g6").write_text("\n".join(lines) + "\n")
    for g, text in zip(graphs, lines):
        a = nx.to_numpy_array(g, nodelist=sorted(g.nodes()))
        e = float(np.abs(np.linalg.eigvalsh(a)).sum())
        energy_lines.append(f"{text} {e:.15f}")
    print(n, len(lines))
(out / "atlas_energy.txt").write_text("\n".join(energy_lines) + "\n")
