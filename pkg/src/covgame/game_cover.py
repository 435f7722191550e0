"""Solvers for labeled game graphs.

Maximal coverage is a reachability game on the lazy (vertex, covered)
product: the tester wins iff the initial product state lies in the
player-1 attractor of the states whose covered set is large enough, and
the attractor ranks yield a finite-memory strategy whose memory is
exactly the covered set. Bounded coverage is a depth-capped minimax over
the same state space. End components of the uniform-random
interpretation answer the recurrent-game and minimal-safety questions at
desk scale.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    ApCapExceededError,
    BudgetExceededError,
    MOutOfRangeError,
    NotRecurrentError,
)
from .model import (
    DEFAULT_AP_CAP,
    PLAYER1,
    LabeledGameGraph,
    mask_names,
    names_mask,
    require_valid,
)


@dataclass
class TesterStrategy:
    """Finite-memory tester strategy.

    Memoryless on the product: the memory is the set of covered
    propositions, plus the remaining step budget for bounded queries.
    `moves` maps (vertex, covered) -> successor, or with `budget` set,
    (vertex, covered, remaining) -> successor.
    """

    moves: dict
    budget: int | None = None

    def choose(self, vertex: int, covered: int, remaining: int | None = None):
        if self.budget is None:
            return self.moves.get((vertex, covered))
        return self.moves.get((vertex, covered, remaining))

    def to_obj(self, g: LabeledGameGraph) -> dict:
        entries = []
        for key in sorted(self.moves):
            entry = {
                "vertex": g.names[key[0]],
                "covered": list(mask_names(g.ap, key[1])),
                "choose": g.names[self.moves[key]],
            }
            if self.budget is not None:
                entry["remaining"] = key[2]
            entries.append(entry)
        obj = {"kind": "strategy", "entries": entries}
        if self.budget is not None:
            obj["budget"] = self.budget
        return obj

    @classmethod
    def from_obj(cls, g: LabeledGameGraph, obj: dict) -> "TesterStrategy":
        budget = obj.get("budget")
        moves = {}
        for entry in obj.get("entries", ()):
            v = g.id_of[entry["vertex"]]
            covered = names_mask(g.ap, entry["covered"])
            key = (v, covered) if budget is None else (v, covered, entry["remaining"])
            moves[key] = g.id_of[entry["choose"]]
        return cls(moves, budget)


@dataclass(frozen=True)
class GameAnswer:
    """Outcome of a game coverage query. `value` is set by value queries
    and by the bounded solver (root minimax value); the strategy is
    present on yes answers unless suppressed."""

    decision: bool
    value: int | None = None
    strategy: TesterStrategy | None = None


@dataclass(frozen=True)
class EndComponent:
    """Strongly connected, player-1 closed vertex set with its label union."""

    vertices: tuple[int, ...]
    props: int

    def prop_count(self) -> int:
        return self.props.bit_count()


def _check_game(g: LabeledGameGraph, ap_cap: int) -> None:
    require_valid(g)
    if len(g.ap) > ap_cap:
        raise ApCapExceededError(
            f"|AP|={len(g.ap)} exceeds the product cap of {ap_cap}"
        )


def _check_m(g, m):
    if not 0 <= m <= len(g.ap):
        raise MOutOfRangeError(f"m={m} outside 0..{len(g.ap)}")


# ---------------------------------------------------------------------------
# the (vertex, covered) product


class _Product:
    """Reachable part of the (vertex, covered) product, built breadth
    first from (v_in, L(v_in)); only reachable states are materialized.
    State 0 is the initial state; successor rows follow the game's
    ascending-vertex order."""

    __slots__ = ("g", "states", "index", "succ", "pred")

    def __init__(self, g: LabeledGameGraph):
        self.g = g
        labels = g.labels
        start = (g.initial, labels[g.initial])
        states = [start]
        index = {start: 0}
        succ: list[list[int]] = []
        head = 0
        while head < len(states):
            v, b = states[head]
            row = []
            for u in g.succ[v]:
                s = (u, b | labels[u])
                j = index.get(s)
                if j is None:
                    j = len(states)
                    index[s] = j
                    states.append(s)
                row.append(j)
            succ.append(row)
            head += 1
        pred: list[list[int]] = [[] for _ in states]
        for i, row in enumerate(succ):
            for j in row:
                pred[j].append(i)
        self.states = states
        self.index = index
        self.succ = succ
        self.pred = pred

    def __len__(self) -> int:
        return len(self.states)


def _attractor(prod: _Product, goal: list[int]) -> list[int | None]:
    """Player-1 attractor ranks over the product: 0 on the goal, and a
    state enters one round after its first winning successor (player 1)
    or after its last one (player 2). None = adversary can avoid."""
    owner = prod.g.owner
    rank: list[int | None] = [None] * len(prod.states)
    pending = [len(row) for row in prod.succ]
    queue = list(goal)
    for i in goal:
        rank[i] = 0
    head = 0
    while head < len(queue):
        j = queue[head]
        head += 1
        for i in prod.pred[j]:
            if rank[i] is not None:
                continue
            if owner[prod.states[i][0]] == PLAYER1:
                rank[i] = rank[j] + 1
                queue.append(i)
            else:
                pending[i] -= 1
                if pending[i] == 0:
                    rank[i] = rank[j] + 1
                    queue.append(i)
    return rank


def _attractor_strategy(prod: _Product, rank) -> TesterStrategy:
    """Rank-decreasing move per winning player-1 product state, breaking
    ties toward the lowest successor vertex id."""
    g = prod.g
    moves = {}
    for i, (v, b) in enumerate(prod.states):
        if rank[i] in (None, 0) or g.owner[v] != PLAYER1:
            continue
        best = None
        for j in prod.succ[i]:
            if rank[j] is not None and rank[j] < rank[i]:
                u = prod.states[j][0]
                if best is None or u < best:
                    best = u
        moves[(v, b)] = best
    return TesterStrategy(moves)


def _solve_product(prod: _Product, m: int, want_strategy: bool) -> GameAnswer:
    goal = [i for i, (_, b) in enumerate(prod.states) if b.bit_count() >= m]
    rank = _attractor(prod, goal)
    if rank[0] is None:
        return GameAnswer(False)
    strategy = _attractor_strategy(prod, rank) if want_strategy else None
    return GameAnswer(True, strategy=strategy)


def max_coverage_game(
    g: LabeledGameGraph,
    m: int,
    *,
    want_strategy: bool = True,
    ap_cap: int = DEFAULT_AP_CAP,
) -> GameAnswer:
    """Can the tester force >= m distinct propositions to be visited,
    no matter how the system plays?"""
    _check_game(g, ap_cap)
    _check_m(g, m)
    return _solve_product(_Product(g), m, want_strategy)


def coverage_value_game(
    g: LabeledGameGraph,
    *,
    want_strategy: bool = True,
    ap_cap: int = DEFAULT_AP_CAP,
) -> GameAnswer:
    """Largest enforceable coverage, searching m downward over a single
    lazily built product (the attractor is recomputed per goal set)."""
    _check_game(g, ap_cap)
    prod = _Product(g)
    for m in range(len(g.ap), -1, -1):
        ans = _solve_product(prod, m, want_strategy)
        if ans.decision:
            return GameAnswer(True, value=m, strategy=ans.strategy)
    raise AssertionError("m=0 is always enforceable")


# ---------------------------------------------------------------------------
# bounded coverage


def _bounded_value_memo(g: LabeledGameGraph, cap: int, memo: dict) -> int:
    succ, labels, owner = g.succ, g.labels, g.owner

    def value(v: int, b: int, left: int) -> int:
        if left == 0:
            return b.bit_count()
        key = (v, b, left)
        got = memo.get(key)
        if got is None:
            vals = [value(u, b | labels[u], left - 1) for u in succ[v]]
            got = max(vals) if owner[v] == PLAYER1 else min(vals)
            memo[key] = got
        return got

    return value(g.initial, labels[g.initial], cap)


def _bounded_value_dfs(g: LabeledGameGraph, cap: int) -> int:
    """Depth-first exploration-tree value with no memo: a branch ends at
    depth `cap` or on a node whose (vertex, covered) label repeats an
    ancestor's, scoring the covered set there. Linear memory in the
    branch, exponential time."""
    succ, labels, owner = g.succ, g.labels, g.owner
    ancestors: set[tuple[int, int]] = set()

    def explore(v: int, b: int, depth: int) -> int:
        if depth == cap:
            return b.bit_count()
        key = (v, b)
        if key in ancestors:
            return b.bit_count()
        ancestors.add(key)
        best = None
        for u in succ[v]:
            val = explore(u, b | labels[u], depth + 1)
            if best is None or (val > best if owner[v] == PLAYER1 else val < best):
                best = val
        ancestors.discard(key)
        return best

    return explore(g.initial, labels[g.initial], 0)


def _memo_value(memo, labels, u, b, left):
    return b.bit_count() if left == 0 else memo[(u, b, left)]


def _bounded_strategy(g: LabeledGameGraph, m: int, cap: int, memo: dict) -> TesterStrategy:
    """Argmax moves along every adversary-reachable winning line, keyed
    with the remaining budget; recursion stops once the goal is met."""
    succ, labels, owner = g.succ, g.labels, g.owner
    moves = {}
    seen = set()
    stack = [(g.initial, labels[g.initial], cap)]
    while stack:
        v, b, left = stack.pop()
        if (v, b, left) in seen:
            continue
        seen.add((v, b, left))
        if b.bit_count() >= m or left == 0:
            continue
        if owner[v] == PLAYER1:
            for u in succ[v]:
                nb = b | labels[u]
                if _memo_value(memo, labels, u, nb, left - 1) >= m:
                    moves[(v, b, left)] = u
                    stack.append((u, nb, left - 1))
                    break
        else:
            for u in succ[v]:
                stack.append((u, b | labels[u], left - 1))
    return TesterStrategy(moves, budget=cap)


def bounded_coverage_game(
    g: LabeledGameGraph,
    m: int,
    k: int,
    *,
    low_memory: bool = False,
    want_strategy: bool = True,
    ap_cap: int = DEFAULT_AP_CAP,
) -> GameAnswer:
    """Minimax value of the exploration tree capped at k steps, decided
    against m.

    The effective depth is min(k, |V| * (|AP| + 1)): coverage saturates
    past that, so deeper budgets cannot change the value. The default
    path memoizes on (vertex, covered, remaining); low_memory=True
    replays the tree with the ancestor-label cutoff instead, trading
    time for space, and returns no strategy.
    """
    _check_game(g, ap_cap)
    _check_m(g, m)
    if k < 0:
        raise MOutOfRangeError(f"k={k} must be >= 0")
    cap = min(k, g.n * (len(g.ap) + 1))
    limit = sys.getrecursionlimit()
    bump = cap * 2 + 100
    if bump > limit:
        sys.setrecursionlimit(bump)
    try:
        if low_memory:
            val = _bounded_value_dfs(g, cap)
            return GameAnswer(val >= m, value=val)
        memo: dict = {}
        val = _bounded_value_memo(g, cap, memo)
        if val < m:
            return GameAnswer(False, value=val)
        strategy = _bounded_strategy(g, m, cap, memo) if want_strategy else None
        return GameAnswer(True, value=val, strategy=strategy)
    finally:
        if bump > limit:
            sys.setrecursionlimit(limit)


def strategy_covers(g: LabeledGameGraph, strategy: TesterStrategy, m: int) -> bool:
    """Exhaustively play every adversary line against the strategy and
    check that each one reaches >= m covered propositions.

    A play that revisits a (vertex, covered) pair before the goal would
    cycle below m forever, so any such cycle, a missing tester move, or
    an exhausted step budget fails the check.
    """
    require_valid(g)
    _check_m(g, m)
    labels, succ, owner = g.labels, g.succ, g.owner
    start: tuple
    if strategy.budget is None:
        start = (g.initial, labels[g.initial])
    else:
        start = (g.initial, labels[g.initial], strategy.budget)

    def moves_from(node):
        v, b = node[0], node[1]
        if b.bit_count() >= m:
            return []
        if strategy.budget is not None and node[2] == 0:
            return None
        if owner[v] == PLAYER1:
            pick = strategy.choose(v, b, None if strategy.budget is None else node[2])
            if pick is None or pick not in succ[v]:
                return None
            nexts = [pick]
        else:
            nexts = list(succ[v])
        if strategy.budget is None:
            return [(u, b | labels[u]) for u in nexts]
        return [(u, b | labels[u], node[2] - 1) for u in nexts]

    GRAY, BLACK = 1, 2
    color: dict = {}
    stack = [(start, False)]
    while stack:
        node, leaving = stack.pop()
        if leaving:
            color[node] = BLACK
            continue
        state = color.get(node)
        if state == BLACK:
            continue
        if state == GRAY:
            return False  # cycle below the goal
        nexts = moves_from(node)
        if nexts is None:
            return False
        color[node] = GRAY
        stack.append((node, True))
        for child in nexts:
            if color.get(child) == GRAY:
                return False
            stack.append((child, False))
    return True


# ---------------------------------------------------------------------------
# recurrence and end components


def is_controllably_recurrent_game(g: LabeledGameGraph) -> tuple[bool, int | None]:
    """Can the tester force a return to the initial vertex from every
    vertex reachable in the underlying graph? Returns the verdict and
    the smallest reachable vertex outside the return attractor."""
    require_valid(g)
    reach = {g.initial}
    queue = [g.initial]
    for v in queue:
        for u in g.succ[v]:
            if u not in reach:
                reach.add(u)
                queue.append(u)
    pred: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        for u in g.succ[v]:
            pred[u].append(v)
    # player-1 attractor of {v_in} on the game graph itself
    inside = [False] * g.n
    pending = [len(g.succ[v]) for v in range(g.n)]
    inside[g.initial] = True
    queue = [g.initial]
    head = 0
    while head < len(queue):
        j = queue[head]
        head += 1
        for i in pred[j]:
            if inside[i]:
                continue
            if g.owner[i] == PLAYER1:
                inside[i] = True
                queue.append(i)
            else:
                pending[i] -= 1
                if pending[i] == 0:
                    inside[i] = True
                    queue.append(i)
    stray = [v for v in reach if not inside[v]]
    if stray:
        return False, min(stray)
    return True, None


def _is_end_component(g: LabeledGameGraph, vs: set[int]) -> bool:
    """Strongly connected (an inside move everywhere, so singletons need
    a self-loop) and closed under every player-1 edge."""
    inside_succ: dict[int, list[int]] = {}
    for v in vs:
        inside = [u for u in g.succ[v] if u in vs]
        if not inside:
            return False
        if g.owner[v] == PLAYER1 and len(inside) != len(g.succ[v]):
            return False
        inside_succ[v] = inside
    pivot = min(vs)
    seen = {pivot}
    queue = [pivot]
    for v in queue:
        for u in inside_succ[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if seen != vs:
        return False
    inside_pred: dict[int, list[int]] = {v: [] for v in vs}
    for v in vs:
        for u in inside_succ[v]:
            inside_pred[u].append(v)
    seen = {pivot}
    queue = [pivot]
    for v in queue:
        for u in inside_pred[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen == vs


def verify_end_component_witness(
    g: LabeledGameGraph, vertices: Iterable[int], m: int
) -> bool:
    """Check a no-certificate: a valid end component through the initial
    vertex whose label union stays below m. Polynomial time."""
    require_valid(g)
    vs = set(vertices)
    if not vs or not all(isinstance(v, int) and 0 <= v < g.n for v in vs):
        return False
    if g.initial not in vs:
        return False
    if not _is_end_component(g, vs):
        return False
    mask = 0
    for v in vs:
        mask |= g.labels[v]
    return mask.bit_count() < m


def _subset_masks(g: LabeledGameGraph, subset_budget: int):
    others = [v for v in range(g.n) if v != g.initial]
    if 1 << len(others) > subset_budget:
        raise BudgetExceededError(
            f"subset search over {g.n} vertices exceeds the budget"
        )
    for bits in range(1 << len(others)):
        vs = {g.initial}
        rest = bits
        idx = 0
        while rest:
            if rest & 1:
                vs.add(others[idx])
            rest >>= 1
            idx += 1
        yield vs


def min_cover_end_component(
    g: LabeledGameGraph, *, subset_budget: int = 1 << 22
) -> tuple[EndComponent, int]:
    """End component through the initial vertex with the fewest distinct
    propositions, by exhaustive subset search (the underlying problem is
    coNP-hard; this is for desk-scale instances).

    On controllably recurrent games the returned count equals the
    coverage value. When no end component contains the initial vertex
    the game cannot be controllably recurrent (nothing confines the play
    through it), so this raises NotRecurrentError.
    """
    require_valid(g)
    best: set[int] | None = None
    best_mask = 0
    best_count = len(g.ap) + 1
    for vs in _subset_masks(g, subset_budget):
        mask = 0
        for v in vs:
            mask |= g.labels[v]
        count = mask.bit_count()
        if best is not None and count >= best_count:
            continue
        if not _is_end_component(g, vs):
            continue
        best, best_mask, best_count = vs, mask, count
    if best is None:
        raise NotRecurrentError("no end component contains the initial vertex")
    return EndComponent(tuple(sorted(best)), best_mask), best_count


def min_safety_value(
    g: LabeledGameGraph, *, subset_budget: int = 1 << 22
) -> tuple[int, tuple[int, ...]]:
    """Fewest distinct propositions the system can confine the play to.

    Searches vertex sets through the initial vertex that player 1 cannot
    leave and from which player 2 always has an inside move; the play
    then never exits, whatever the tester does. On controllably
    recurrent games this equals the minimal end-component cover. Returns
    the count and the first confining set attaining it.
    """
    require_valid(g)
    best: set[int] | None = None
    best_count = len(g.ap) + 1
    for vs in _subset_masks(g, subset_budget):
        mask = 0
        for v in vs:
            mask |= g.labels[v]
        count = mask.bit_count()
        if best is not None and count >= best_count:
            continue
        ok = True
        for v in vs:
            inside = [u for u in g.succ[v] if u in vs]
            if g.owner[v] == PLAYER1:
                if len(inside) != len(g.succ[v]):
                    ok = False
                    break
            elif not inside:
                ok = False
                break
        if ok:
            best, best_count = vs, count
    assert best is not None  # the full vertex set always confines
    return best_count, tuple(sorted(best))
