import pytest

from covgame import LabeledGameGraph, LabeledGraph


@pytest.fixture
def triangle() -> LabeledGraph:
    return LabeledGraph.make(
        ["p", "q", "r"],
        [("a", ["p"]), ("b", ["q"]), ("c", ["r"])],
        [("a", "b"), ("b", "c"), ("c", "a")],
        "a",
    )


@pytest.fixture
def branch_graph() -> LabeledGraph:
    """s branches to two absorbing vertices with disjoint labels."""
    return LabeledGraph.make(
        ["p", "q"],
        [("s", []), ("t", ["p"]), ("u", ["q"])],
        [("s", "t"), ("s", "u"), ("t", "t"), ("u", "u")],
        "s",
    )


@pytest.fixture
def adversarial_game() -> LabeledGameGraph:
    """The system picks which of two disjointly labeled absorbing
    branches the play enters."""
    return LabeledGameGraph.make_game(
        ["p", "q"],
        [("v0", [], 2), ("a", ["p"], 1), ("b", ["q"], 1)],
        [("v0", "a"), ("v0", "b"), ("a", "a"), ("b", "b")],
        "v0",
    )


@pytest.fixture
def triangle_game() -> LabeledGameGraph:
    """The triangle with every vertex owned by the tester."""
    return LabeledGameGraph.make_game(
        ["p", "q", "r"],
        [("a", ["p"], 1), ("b", ["q"], 1), ("c", ["r"], 1)],
        [("a", "b"), ("b", "c"), ("c", "a")],
        "a",
    )
