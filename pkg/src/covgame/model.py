"""Labeled graphs, labeled game graphs, and input-driven systems.

Vertices and atomic propositions are referred to by string name at the
boundary and by dense integer id internally; input order fixes the id
assignment, so witnesses are reproducible. A proposition set is a bit
mask over the ordered universe, which keeps products over 2^AP cheap and
makes their memory cost explicit.

All model types are immutable after construction and safe to share
between concurrent solver calls.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import FormatError, InvalidModelError, NotDeterministicError

PLAYER1 = 1
PLAYER2 = 2

# Everything downstream of the product construction is exponential in
# |AP|; the cap keeps that blow-up a conscious decision.
DEFAULT_AP_CAP = 30


def mask_names(ap: Sequence[str], mask: int) -> tuple[str, ...]:
    """Proposition names selected by a bit mask, in universe order."""
    return tuple(ap[i] for i in range(len(ap)) if mask >> i & 1)


def names_mask(ap: Sequence[str], props: Iterable[str]) -> int:
    """Bit mask for a collection of proposition names."""
    index = {name: i for i, name in enumerate(ap)}
    mask = 0
    for name in props:
        try:
            mask |= 1 << index[name]
        except KeyError:
            raise FormatError(f"unknown proposition {name!r}") from None
    return mask


@dataclass(frozen=True)
class Violation:
    """One structural defect found by validate()."""

    kind: str
    subject: str

    def __str__(self) -> str:
        return f"{self.kind}({self.subject})"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def has(self, kind: str, subject: str | None = None) -> bool:
        return any(
            v.kind == kind and (subject is None or v.subject == subject)
            for v in self.violations
        )

    def summary(self) -> str:
        return "ok" if self.ok else "; ".join(str(v) for v in self.violations)


@dataclass(frozen=True)
class LabeledGraph:
    """Finite directed graph with an initial vertex and proposition labels.

    `succ` holds ascending successor ids per vertex (also the order in
    which solvers explore them), `labels` one bit mask per vertex. Every
    vertex is expected to have at least one outgoing edge; use validate()
    to check rather than relying on construction.
    """

    ap: tuple[str, ...]
    names: tuple[str, ...]
    succ: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]
    initial: int

    @classmethod
    def make(
        cls,
        ap: Sequence[str],
        vertices: Sequence[tuple[str, Iterable[str]]],
        edges: Iterable[tuple[str, str]],
        initial: str,
    ) -> "LabeledGraph":
        """Build from name-based parts: vertices as (name, props) pairs."""
        names, succ, labels, init = _resolve_parts(ap, vertices, edges, initial)
        return cls(tuple(ap), names, succ, labels, init)

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def id_of(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, row in enumerate(self.succ):
            for u in row:
                yield v, u

    def edge_count(self) -> int:
        return sum(len(row) for row in self.succ)

    def label_names(self, v: int) -> tuple[str, ...]:
        return mask_names(self.ap, self.labels[v])


@dataclass(frozen=True)
class LabeledGameGraph(LabeledGraph):
    """Labeled graph whose vertices are split between the tester
    (player 1) and the system (player 2).

    `owner` holds PLAYER1 or PLAYER2 per vertex; None marks a vertex the
    input failed to assign, which validate() reports as missing-owner.
    """

    owner: tuple[int | None, ...] = ()

    @classmethod
    def make_game(
        cls,
        ap: Sequence[str],
        vertices: Sequence[tuple[str, Iterable[str], int | None]],
        edges: Iterable[tuple[str, str]],
        initial: str,
    ) -> "LabeledGameGraph":
        names, succ, labels, init = _resolve_parts(
            ap, [(name, props) for name, props, _ in vertices], edges, initial
        )
        owner = tuple(o for _, _, o in vertices)
        return cls(tuple(ap), names, succ, labels, init, owner)

    def player_vertices(self, player: int) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.owner[v] == player)


@dataclass(frozen=True)
class SystemAutomaton:
    """Total input-driven system: the tester picks letters, the system
    resolves the nondeterminism among enabled transitions."""

    ap: tuple[str, ...]
    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    transitions: tuple[tuple[int, int, int], ...]  # (state, letter, state) ids
    initial: int
    labels: tuple[int, ...]

    @classmethod
    def make(
        cls,
        ap: Sequence[str],
        states: Sequence[str],
        alphabet: Sequence[str],
        transitions: Iterable[tuple[str, str, str]],
        initial: str,
        labels: dict[str, Iterable[str]],
    ) -> "SystemAutomaton":
        state_id = _index_names(states, "state")
        letter_id = _index_names(alphabet, "letter")
        trans = set()
        for q, a, r in transitions:
            try:
                trans.add((state_id[q], letter_id[a], state_id[r]))
            except KeyError as exc:
                raise FormatError(f"unknown transition component {exc.args[0]!r}") from None
        if initial not in state_id:
            raise FormatError(f"unknown initial state {initial!r}")
        for name in labels:
            if name not in state_id:
                raise FormatError(f"label for unknown state {name!r}")
        label_masks = tuple(names_mask(ap, labels.get(q, ())) for q in states)
        return cls(
            tuple(ap),
            tuple(states),
            tuple(alphabet),
            tuple(sorted(trans)),
            state_id[initial],
            label_masks,
        )

    @property
    def n(self) -> int:
        return len(self.states)

    @cached_property
    def delta(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Successor states per (state, letter), ascending."""
        out: dict[tuple[int, int], list[int]] = {}
        for q, a, r in self.transitions:
            out.setdefault((q, a), []).append(r)
        return {key: tuple(sorted(set(row))) for key, row in out.items()}

    @property
    def deterministic(self) -> bool:
        return all(
            len(self.delta.get((q, a), ())) == 1
            for q in range(self.n)
            for a in range(len(self.alphabet))
        )


Model = LabeledGraph | LabeledGameGraph | SystemAutomaton


def _index_names(names: Sequence[str], what: str) -> dict[str, int]:
    index: dict[str, int] = {}
    for i, name in enumerate(names):
        if name in index:
            raise FormatError(f"duplicate {what} {name!r}")
        index[name] = i
    return index


def _resolve_parts(ap, vertices, edges, initial):
    names = tuple(name for name, _ in vertices)
    vid = _index_names(names, "vertex")
    labels = tuple(names_mask(ap, props) for _, props in vertices)
    rows: list[set[int]] = [set() for _ in names]
    for src, dst in edges:
        try:
            rows[vid[src]].add(vid[dst])
        except KeyError as exc:
            raise FormatError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
    if initial not in vid:
        raise FormatError(f"unknown initial vertex {initial!r}")
    succ = tuple(tuple(sorted(row)) for row in rows)
    return names, succ, labels, vid[initial]


# ---------------------------------------------------------------------------
# validation


def validate(model: Model) -> ValidationReport:
    """Report every structural invariant violation; empty report = valid."""
    if isinstance(model, SystemAutomaton):
        return ValidationReport(tuple(_system_violations(model)))
    return ValidationReport(tuple(_graph_violations(model)))


def _graph_violations(g: LabeledGraph):
    n = g.n
    nap = len(g.ap)
    if not 0 <= g.initial < n:
        yield Violation("bad-initial", str(g.initial))
    for v in range(n):
        if not g.succ[v]:
            yield Violation("non-total", g.names[v])
        for u in g.succ[v]:
            if not 0 <= u < n:
                yield Violation("dangling-edge", f"{g.names[v]}->{u}")
        if g.labels[v] >> nap:
            yield Violation("bad-label", g.names[v])
    if isinstance(g, LabeledGameGraph):
        owner = g.owner
        if len(owner) != n:
            for v in range(len(owner), n):
                yield Violation("missing-owner", g.names[v])
            owner = owner[:n]
        for v, who in enumerate(owner):
            if who is None:
                yield Violation("missing-owner", g.names[v])
            elif who not in (PLAYER1, PLAYER2):
                yield Violation("bad-owner", g.names[v])


def _system_violations(sys: SystemAutomaton):
    n = sys.n
    if not sys.alphabet:
        yield Violation("empty-alphabet", "")
    if not 0 <= sys.initial < n:
        yield Violation("bad-initial", str(sys.initial))
    for q, a, r in sys.transitions:
        if not (0 <= q < n and 0 <= a < len(sys.alphabet) and 0 <= r < n):
            yield Violation("bad-transition", f"{q},{a},{r}")
    for q in range(n):
        if sys.labels[q] >> len(sys.ap):
            yield Violation("bad-label", sys.states[q])
        for a in range(len(sys.alphabet)):
            if not sys.delta.get((q, a)):
                yield Violation("non-total", f"{sys.states[q]},{sys.alphabet[a]}")


def require_valid(model: Model) -> None:
    """Raise InvalidModelError unless the model passes validation."""
    report = validate(model)
    if not report.ok:
        raise InvalidModelError(report)


# ---------------------------------------------------------------------------
# system-tester compilation


def compile_system(sys: SystemAutomaton) -> LabeledGameGraph:
    """Compile a system into the tester/system game.

    Player 1 vertices are the states (the tester picks the next letter),
    player 2 vertices are (state, letter) pairs (the system picks among
    the enabled successors). Both halves carry the state's labels, so
    coverage in the game matches coverage over the system's runs.
    """
    require_valid(sys)
    n = sys.n
    nletters = len(sys.alphabet)
    names = list(sys.states)
    used = set(names)
    for q in range(n):
        for a in range(nletters):
            name = f"({sys.states[q]},{sys.alphabet[a]})"
            while name in used:
                name += "'"
            names.append(name)
            used.add(name)

    def pair_id(q: int, a: int) -> int:
        return n + q * nletters + a

    succ: list[tuple[int, ...]] = [
        tuple(pair_id(q, a) for a in range(nletters)) for q in range(n)
    ]
    labels = list(sys.labels)
    owner: list[int] = [PLAYER1] * n
    for q in range(n):
        for a in range(nletters):
            succ.append(sys.delta.get((q, a), ()))
            labels.append(sys.labels[q])
            owner.append(PLAYER2)
    return LabeledGameGraph(
        sys.ap,
        tuple(names),
        tuple(succ),
        tuple(labels),
        sys.initial,
        tuple(owner),
    )


def game_to_graph(g: LabeledGameGraph) -> LabeledGraph:
    """Erase ownership from a game whose player-2 vertices are all forced.

    Raises NotDeterministicError naming the first (lowest-id) player-2
    vertex whose out-degree is not exactly one.
    """
    require_valid(g)
    for v in range(g.n):
        if g.owner[v] == PLAYER2 and len(g.succ[v]) != 1:
            raise NotDeterministicError(g.names[v])
    return LabeledGraph(g.ap, g.names, g.succ, g.labels, g.initial)


# ---------------------------------------------------------------------------
# paths


def cover_of(g: LabeledGraph, path: Sequence[int]) -> int:
    """Union of the labels along a vertex-id sequence, as a mask."""
    mask = 0
    for v in path:
        mask |= g.labels[v]
    return mask


def path_check(g: LabeledGraph, path: Sequence[int]) -> bool:
    """True iff `path` starts at the initial vertex and follows edges."""
    if not path or path[0] != g.initial:
        return False
    return all(u in g.succ[v] for v, u in zip(path, path[1:]))


def path_from_names(g: LabeledGraph, names: Iterable[str]) -> tuple[int, ...]:
    try:
        return tuple(g.id_of[name] for name in names)
    except KeyError as exc:
        raise FormatError(f"unknown vertex {exc.args[0]!r} in path") from None


# ---------------------------------------------------------------------------
# preprocessing


def patch_self_loops(model: Model) -> tuple[Model, tuple[str, ...]]:
    """Add a self-loop wherever totality fails, returning the patched
    model and the names of the patched vertices.

    Patching changes the coverage semantics of sinks (the play may now
    stall there), so solvers never do this silently; callers opt in.
    """
    if isinstance(model, SystemAutomaton):
        extra = []
        for q in range(model.n):
            for a in range(len(model.alphabet)):
                if not model.delta.get((q, a)):
                    extra.append((q, a, q))
        if not extra:
            return model, ()
        patched = tuple(sorted({model.states[q] for q, _, _ in extra}))
        fixed = SystemAutomaton(
            model.ap,
            model.states,
            model.alphabet,
            tuple(sorted(set(model.transitions) | set(extra))),
            model.initial,
            model.labels,
        )
        return fixed, patched

    sinks = tuple(v for v in range(model.n) if not model.succ[v])
    if not sinks:
        return model, ()
    succ = tuple(
        row if row else (v,) for v, row in enumerate(model.succ)
    )
    patched = tuple(model.names[v] for v in sinks)
    if isinstance(model, LabeledGameGraph):
        fixed = LabeledGameGraph(
            model.ap, model.names, succ, model.labels, model.initial, model.owner
        )
    else:
        fixed = LabeledGraph(model.ap, model.names, succ, model.labels, model.initial)
    return fixed, patched
