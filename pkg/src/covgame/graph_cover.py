"""Exact coverage solvers for labeled graphs.

Searches run over (vertex, covered-set) product states, explored breadth
first with successors in ascending vertex id, so decisions and witnesses
are deterministic and witnesses come out shortest-first. The covered set
only grows along a path, hence the product is finite and a state first
reached at some depth dominates every later arrival.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MOutOfRangeError, NotRecurrentError
from .model import LabeledGraph, require_valid


@dataclass(frozen=True)
class GraphAnswer:
    """Outcome of a graph coverage query.

    For decision queries `value` stays None; coverage_value_graph fills
    it with the attained maximum. `witness` is a vertex-id path starting
    at the initial vertex, absent for no-instances and in witnessless
    (low-memory) mode.
    """

    decision: bool
    value: int | None = None
    witness: tuple[int, ...] | None = None
    steps_used: int | None = None


def _check_m(g: LabeledGraph, m: int) -> None:
    if not 0 <= m <= len(g.ap):
        raise MOutOfRangeError(f"m={m} outside 0..{len(g.ap)}")


def _product_search(g, m, cap, want_witness):
    """BFS the (vertex, covered) product, at most `cap` edges deep
    (no cap when None). Returns (found, witness-or-None); with
    want_witness=False no predecessor map is kept, only the frontier
    and the dedup set."""
    start = (g.initial, g.labels[g.initial])
    if start[1].bit_count() >= m:
        return True, (g.initial,) if want_witness else None
    seen = {start}
    parent = {start: None} if want_witness else None
    frontier = [start]
    depth = 0
    while frontier and (cap is None or depth < cap):
        depth += 1
        nxt = []
        for v, b in frontier:
            for u in g.succ[v]:
                s = (u, b | g.labels[u])
                if s in seen:
                    continue
                seen.add(s)
                if parent is not None:
                    parent[s] = (v, b)
                if s[1].bit_count() >= m:
                    if parent is None:
                        return True, None
                    path = []
                    node = s
                    while node is not None:
                        path.append(node[0])
                        node = parent[node]
                    path.reverse()
                    return True, tuple(path)
                nxt.append(s)
        frontier = nxt
    return False, None


def _answer(found, witness):
    if not found:
        return GraphAnswer(False)
    steps = len(witness) - 1 if witness is not None else None
    return GraphAnswer(True, witness=witness, steps_used=steps)


def max_coverage_graph(g: LabeledGraph, m: int, *, want_witness: bool = True) -> GraphAnswer:
    """Can some path from the initial vertex visit >= m distinct
    propositions? Witnesses are at most m * |V| edges long."""
    require_valid(g)
    _check_m(g, m)
    found, wit = _product_search(g, m, None, want_witness)
    return _answer(found, wit)


def bounded_coverage_graph(
    g: LabeledGraph, m: int, k: int, *, want_witness: bool = True
) -> GraphAnswer:
    """Can >= m propositions be covered within k steps (k+1 vertices)?

    The search depth is capped at min(k, m * |V|): a witness cycling
    without new coverage can always be shortened, so nothing longer is
    ever needed.
    """
    require_valid(g)
    _check_m(g, m)
    if k < 0:
        raise MOutOfRangeError(f"k={k} must be >= 0")
    found, wit = _product_search(g, m, min(k, m * g.n), want_witness)
    return _answer(found, wit)


def coverage_value_graph(g: LabeledGraph, *, want_witness: bool = True) -> GraphAnswer:
    """Largest m for which max_coverage_graph says yes, with a witness
    attaining it. Binary search over m; each probe is one product BFS."""
    require_valid(g)
    lo, hi = 0, len(g.ap)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        found, _ = _product_search(g, mid, None, False)
        if found:
            lo = mid
        else:
            hi = mid - 1
    found, wit = _product_search(g, lo, None, want_witness)
    assert found
    steps = len(wit) - 1 if wit is not None else None
    return GraphAnswer(True, value=lo, witness=wit, steps_used=steps)


def _forward_backward(g: LabeledGraph) -> tuple[set[int], set[int]]:
    """Vertices reachable from the initial vertex, and vertices that can
    reach it. Both by plain BFS, linear in |V| + |E|."""
    fwd = {g.initial}
    queue = [g.initial]
    for v in queue:
        for u in g.succ[v]:
            if u not in fwd:
                fwd.add(u)
                queue.append(u)
    pred: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        for u in g.succ[v]:
            pred[u].append(v)
    bwd = {g.initial}
    queue = [g.initial]
    for v in queue:
        for u in pred[v]:
            if u not in bwd:
                bwd.add(u)
                queue.append(u)
    return fwd, bwd


def is_controllably_recurrent_graph(g: LabeledGraph) -> tuple[bool, int | None]:
    """Does every vertex reachable from the initial vertex admit a path
    back to it? Returns the verdict and the smallest stray vertex id."""
    require_valid(g)
    fwd, bwd = _forward_backward(g)
    stray = [v for v in fwd if v not in bwd]
    if stray:
        return False, min(stray)
    return True, None


def max_coverage_recurrent_graph(g: LabeledGraph) -> int:
    """Coverage value of a controllably recurrent graph, in linear time.

    Under recurrence every reachable vertex sits inside the strongly
    connected component of the initial vertex, so one path can sweep the
    whole reachable set and the value is just its label-union size.
    """
    require_valid(g)
    fwd, bwd = _forward_backward(g)
    for v in fwd:
        if v not in bwd:
            raise NotRecurrentError(
                f"vertex {g.names[v]!r} is reachable but cannot return to the initial vertex"
            )
    mask = 0
    for v in fwd:
        mask |= g.labels[v]
    return mask.bit_count()
