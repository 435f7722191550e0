#!/usr/bin/env python3
# End components explain what the system can confine a play to: vertex
# sets that are strongly connected and closed under every tester edge.
# On controllably recurrent games the cheapest such component through
# the initial vertex has exactly the coverage value, and it doubles as a
# polynomially checkable certificate for NO answers.
#
# Run with:  python demos/05_end_components.py

from covgame import (
    LabeledGameGraph,
    coverage_value_game,
    is_controllably_recurrent_game,
    min_cover_end_component,
    min_safety_value,
    max_coverage_game,
    verify_end_component_witness,
)

# The tester probes either of two request lines; the system answers and
# hands control back. The system would like to keep the play cheap.
g = LabeledGameGraph.make_game(
    ap=["idle", "left", "right"],
    vertices=[
        ("home", ["idle"], 1),
        ("probe", ["idle"], 2),
        ("l", ["left"], 1),
        ("r", ["right"], 1),
    ],
    edges=[
        ("home", "probe"),
        ("probe", "l"),
        ("probe", "r"),
        ("l", "home"),
        ("r", "home"),
    ],
    initial="home",
)
print("recurrent:", is_controllably_recurrent_game(g)[0])
print("coverage value:", coverage_value_game(g).value)

ec, count = min_cover_end_component(g)
print("cheapest end component:", [g.names[v] for v in ec.vertices], "covers", count)

# That component certifies any NO answer above its cover, and the check
# is polynomial: strong connectivity, tester-closure, cover below m.
m = 3
print(f"tester can force {m}:", max_coverage_game(g, m).decision)
print("component certifies the no:", verify_end_component_witness(g, ec.vertices, m))

# The minimal-safety view: fewest distinct propositions the system can
# confine the play to, over confinement sets rather than end components.
value, confinement = min_safety_value(g)
print("min safety value:", value, "via", [g.names[v] for v in confinement])
