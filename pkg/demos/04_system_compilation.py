#!/usr/bin/env python3
# From input-driven systems to games: the tester feeds letters, the
# system resolves nondeterminism. Compilation doubles the state space
# into (state) tester-vertices and (state, letter) system-vertices; for
# deterministic systems the game collapses back to a plain graph.
#
# Run with:  python demos/04_system_compilation.py

from covgame import (
    SystemAutomaton,
    compile_system,
    coverage_value_game,
    coverage_value_graph,
    formats,
    game_to_graph,
    validate,
)

# Nondeterministic on letter "a" from state q0: the system may stall.
flaky = SystemAutomaton.make(
    ap=["ready", "sent"],
    states=["q0", "q1"],
    alphabet=["a", "b"],
    transitions=[
        ("q0", "a", "q0"),
        ("q0", "a", "q1"),
        ("q0", "b", "q0"),
        ("q1", "a", "q1"),
        ("q1", "b", "q0"),
    ],
    initial="q0",
    labels={"q0": ["ready"], "q1": ["sent"]},
)
print("system valid:", validate(flaky).ok)
print("deterministic:", flaky.deterministic)

game = compile_system(flaky)
print("game vertices:", game.n, "=", flaky.n, "states +", flaky.n * 2, "pairs")
print("value the tester can force:", coverage_value_game(game).value)

# A deterministic toggle: every (state, letter) vertex has one successor,
# so ownership is irrelevant and the game reduces to a labeled graph.
toggle = SystemAutomaton.make(
    ap=["even", "odd"],
    states=["e", "o"],
    alphabet=["tick"],
    transitions=[("e", "tick", "o"), ("o", "tick", "e")],
    initial="e",
    labels={"e": ["even"], "o": ["odd"]},
)
tg = compile_system(toggle)
graph = game_to_graph(tg)
print("toggle: game value", coverage_value_game(tg).value,
      "== graph value", coverage_value_graph(graph).value)

# Everything serializes to the JSON interchange format and back.
text = formats.dumps(tg)
print("round trip ok:", formats.loads(text) == tg)
print(text.splitlines()[0], "...")
