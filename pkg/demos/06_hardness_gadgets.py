#!/usr/bin/env python3
# The four hardness gadgets double as instance generators and as
# cross-validation fixtures: each comes with a guaranteed relation
# between the source problem and the coverage answer, checked here
# against independent brute-force oracles.
#
# Run with:  python demos/06_hardness_gadgets.py

from covgame import (
    CnfFormula,
    Digraph,
    QbfFormula,
    UndirectedGraph,
    bounded_coverage_graph,
    coverage_value_game,
    coverage_value_graph,
    hampath_to_bounded,
    max_coverage_game,
    oracle,
    qbf_to_game,
    sat_to_graph,
    vc_to_game,
)

# SAT: one chain of clause vertices per variable polarity; choosing a
# branch is choosing an assignment. Coverage value = maxsat + 1.
phi = CnfFormula.of(3, [(1, -2), (2, 3), (-1, -3), (-2,)])
res = sat_to_graph(phi)
print("sat gadget vertices:", res.model.n)
print("coverage value:", coverage_value_graph(res.model).value,
      "= maxsat + 1 =", oracle.maxsat_brute(phi) + 1)
print("satisfiable iff value reaches", res.target_m)

# QBF: same gadget, universal variables handed to the system.
qbf = QbfFormula.of(
    [("e", 1), ("a", 2), ("e", 3)],
    CnfFormula.of(3, [(1, 2, 3), (-2, -3), (-1, 3)]),
)
res = qbf_to_game(qbf)
print("qbf true:", oracle.qbf_eval_brute(qbf),
      "| tester forces target:", max_coverage_game(res.model, res.target_m).decision)

# Vertex cover: the tester probes edges, the system shows an endpoint;
# the endpoints it is willing to show form a cover.
house = UndirectedGraph(
    ("a", "b", "c", "d"),
    (("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")),
)
res = vc_to_game(house)
print("vc gadget value:", coverage_value_game(res.model).value,
      "= min cover + 1 =", oracle.min_vertex_cover_brute(house) + 1)

# Hamiltonian path: one proposition per vertex, n goals in n-1 steps.
maze = Digraph(
    ("s", "x", "y", "z"),
    (("s", "x"), ("x", "y"), ("y", "z"), ("s", "y"), ("z", "x")),
)
res = hampath_to_bounded(maze, "s")
print("hampath m,k:", res.target_m, res.k)
print("bounded decision:", bounded_coverage_graph(res.model, res.target_m, res.k).decision,
      "| brute force:", oracle.hampath_brute(maze, "s"))
