"""Run semantics for the machine kinds.

Three engines live here: a deterministic run over a fixed strand pair, an
existential search over every complementary lower strand, and the k-head
runner.  All of them use halting acceptance: a run accepts exactly when it
gets stuck (no transition applies) in a final state.  Getting stuck in a
non-final state rejects, and so does revisiting a configuration, which is
the only way a one-way machine can run forever.

The existential engine does not enumerate whole lower strands.  Because the
lower head is one-way, the only part of the strand that can still matter is
the symbol currently under the head, so the search commits the guess one
position at a time and explores the finite graph of
(state, upper position, lower position, committed symbol) nodes.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

from .machines import (
    LEFT_END,
    RIGHT_END,
    Entry,
    MachineError,
    MultiHeadAutomaton,
    UnknownSymbolError,
    WKAutomaton,
)

Word = tuple[str, ...]


class StrandMismatchError(MachineError):
    """The supplied lower strand is not complementary to the upper strand."""


class SearchBoundError(MachineError):
    """A brute-force enumeration would exceed its configured bound."""


class Verdict(Enum):
    ACCEPT_HALT = "accept"
    REJECT_HALT = "reject"
    INFINITE_LOOP = "loop"


@dataclass(frozen=True)
class Configuration:
    """A machine snapshot: current state plus one position per head.

    Positions run from 0 (the left end marker) to n+1 (the right end
    marker) for an input of length n.
    """

    state: str
    positions: tuple[int, ...]

    @property
    def p1(self) -> int:
        return self.positions[0]

    @property
    def p2(self) -> int:
        return self.positions[1]


@dataclass(frozen=True)
class RunOutcome:
    verdict: Verdict
    final: Configuration
    trace: tuple[tuple[Configuration, Entry], ...] = ()
    witness_lower: Word | None = None

    @property
    def accepted(self) -> bool:
        return self.verdict is Verdict.ACCEPT_HALT


@dataclass(frozen=True)
class SearchResult:
    accepted: bool
    witness_lower: Word | None
    explored: int


def _require_symbols(word: Word, allowed: frozenset[str] | set[str], what: str) -> None:
    for sym in word:
        if sym not in allowed:
            raise UnknownSymbolError(f"symbol {sym!r} is not in the {what}")


def complement_strands(machine: WKAutomaton, upper: Sequence[str]) -> Iterator[Word]:
    """All complementary lower strands of ``upper``, lazily.

    The order is lexicographic with the per-position image order exactly as
    declared in the complementarity relation; the empty word yields exactly
    one strand, the empty word itself.
    """
    w1 = tuple(upper)
    _require_symbols(w1, set(machine.upper_alphabet), "upper alphabet")
    choices = [machine.rho.image(x) for x in w1]
    return itertools.product(*choices)


def run_deterministic(
    machine: WKAutomaton,
    upper: Sequence[str],
    lower: Sequence[str],
    *,
    keep_trace: bool = False,
) -> RunOutcome:
    """Run the two-strand machine on a fixed, complementary strand pair.

    A non-complementary ``lower`` is a precondition error, distinct from a
    rejecting run.
    """
    w1, w2 = tuple(upper), tuple(lower)
    _require_symbols(w1, set(machine.upper_alphabet), "upper alphabet")
    if len(w2) != len(w1):
        raise StrandMismatchError(
            f"lower strand length {len(w2)} differs from upper strand length {len(w1)}"
        )
    for i, (x, y) in enumerate(zip(w1, w2)):
        if y not in machine.rho.image(x):
            raise StrandMismatchError(
                f"position {i + 1}: {y!r} is not a complementarity image of {x!r}"
            )

    up = (LEFT_END,) + w1 + (RIGHT_END,)
    lo = (LEFT_END,) + w2 + (RIGHT_END,)
    delta = machine.delta
    finals = machine.finals

    state, p1, p2 = machine.start, 0, 0
    seen = {(state, p1, p2)}
    trace: list[tuple[Configuration, Entry]] = []
    while True:
        found = delta.get((state, up[p1], lo[p2]))
        if found is None:
            verdict = Verdict.ACCEPT_HALT if state in finals else Verdict.REJECT_HALT
            return RunOutcome(verdict, Configuration(state, (p1, p2)), tuple(trace))
        target, d1, d2 = found
        if keep_trace:
            entry: Entry = (state, (up[p1], lo[p2]), target, (d1, d2))
            trace.append((Configuration(state, (p1, p2)), entry))
        state, p1, p2 = target, p1 + d1, p2 + d2
        if (state, p1, p2) in seen:
            return RunOutcome(
                Verdict.INFINITE_LOOP, Configuration(state, (p1, p2)), tuple(trace)
            )
        seen.add((state, p1, p2))


def run_mfa(
    machine: MultiHeadAutomaton, word: Sequence[str], *, keep_trace: bool = False
) -> RunOutcome:
    """Run the k-head machine, with the same halt/loop classification."""
    w = tuple(word)
    _require_symbols(w, set(machine.alphabet), "alphabet")
    tape = (LEFT_END,) + w + (RIGHT_END,)
    delta = machine.delta
    finals = machine.finals

    state = machine.start
    positions = (0,) * machine.head_count
    seen = {(state, positions)}
    trace: list[tuple[Configuration, Entry]] = []
    while True:
        reads = tuple(tape[p] for p in positions)
        found = delta.get((state, reads))
        if found is None:
            verdict = Verdict.ACCEPT_HALT if state in finals else Verdict.REJECT_HALT
            return RunOutcome(verdict, Configuration(state, positions), tuple(trace))
        target, moves = found
        if keep_trace:
            trace.append((Configuration(state, positions), (state, reads, target, moves)))
        state = target
        positions = tuple(p + d for p, d in zip(positions, moves))
        if (state, positions) in seen:
            return RunOutcome(
                Verdict.INFINITE_LOOP, Configuration(state, positions), tuple(trace)
            )
        seen.add((state, positions))


@dataclass(frozen=True)
class _CompiledWK:
    """Integer-indexed tables for the existential search hot path."""

    start: int
    finals: frozenset[int]
    left: int
    right: int
    upper_index: dict[str, int]
    images: dict[int, tuple[int, ...]]
    delta: dict[tuple[int, int, int], tuple[int, int, int]]
    token_of: tuple[str, ...]


def _compile_wk(machine: WKAutomaton) -> _CompiledWK:
    sym_index: dict[str, int] = {}

    def sym(token: str) -> int:
        return sym_index.setdefault(token, len(sym_index))

    left, right = sym(LEFT_END), sym(RIGHT_END)
    upper_index = {x: sym(x) for x in machine.upper_alphabet}
    for y in machine.lower_alphabet:
        sym(y)

    state_index: dict[str, int] = {}

    def state(name: str) -> int:
        return state_index.setdefault(name, len(state_index))

    for q in machine.states:
        state(q)

    delta = {}
    for (q, u, l), (t, d1, d2) in machine.delta.items():
        delta[(state(q), sym(u), sym(l))] = (state(t), d1, d2)

    images = {
        upper_index[x]: tuple(sym(y) for y in machine.rho.image(x))
        for x in machine.upper_alphabet
    }
    token_of = tuple(sym_index)
    return _CompiledWK(
        start=state(machine.start),
        finals=frozenset(state(q) for q in machine.finals),
        left=left,
        right=right,
        upper_index=upper_index,
        images=images,
        delta=delta,
        token_of=token_of,
    )


def _search(
    compiled: _CompiledWK, w1: Word, want_witness: bool
) -> tuple[bool, Word | None, int]:
    upper_index = compiled.upper_index
    try:
        ups = [compiled.left] + [upper_index[x] for x in w1] + [compiled.right]
    except KeyError as exc:
        raise UnknownSymbolError(
            f"symbol {exc.args[0]!r} is not in the upper alphabet"
        ) from None
    n = len(w1)
    delta = compiled.delta
    images = compiled.images
    finals = compiled.finals
    right_only = (compiled.right,)

    start = (compiled.start, 0, 0, compiled.left)
    visited = {start}
    stack = [start]
    parent: dict[tuple, tuple | None] | None = {start: None} if want_witness else None
    accepting = None
    while stack:
        node = stack.pop()
        q, p1, p2, s = node
        found = delta.get((q, ups[p1], s))
        if found is None:
            if q in finals:
                accepting = node
                break
            continue
        t, d1, d2 = found
        np1 = p1 + d1
        if d2:
            np2 = p2 + 1
            committed = images.get(ups[np2], ()) if np2 <= n else right_only
            for s2 in committed:
                nxt = (t, np1, np2, s2)
                if nxt not in visited:
                    visited.add(nxt)
                    if parent is not None:
                        parent[nxt] = node
                    stack.append(nxt)
        else:
            nxt = (t, np1, p2, s)
            if nxt not in visited:
                visited.add(nxt)
                if parent is not None:
                    parent[nxt] = node
                stack.append(nxt)

    if accepting is None:
        return False, None, len(visited)
    if not want_witness:
        return True, None, len(visited)

    # Rebuild the committed symbols along the accepting path; positions the
    # lower head never reached take each position's first declared image.
    chosen: list[int | None] = [None] * n
    node = accepting
    while node is not None:
        _, _, p2, s = node
        if 1 <= p2 <= n:
            chosen[p2 - 1] = s
        node = parent[node]  # type: ignore[index]
    witness = tuple(
        compiled.token_of[s if s is not None else images[ups[i + 1]][0]]
        for i, s in enumerate(chosen)
    )
    return True, witness, len(visited)


def accepts_existential(
    machine: WKAutomaton, upper: Sequence[str], *, want_witness: bool = True
) -> SearchResult:
    """Decide acceptance over every complementary lower strand.

    Accepts exactly when some reachable search node is stuck in a final
    state.  On acceptance the returned witness strand replays to an
    accepting halt under ``run_deterministic``.
    """
    accepted, witness, explored = _search(
        _compile_wk(machine), tuple(upper), want_witness
    )
    return SearchResult(accepted, witness, explored)


def existential_acceptor(machine: WKAutomaton) -> Callable[[Sequence[str]], bool]:
    """A precompiled acceptance predicate for sweeping many words."""
    compiled = _compile_wk(machine)

    def accepts(word: Sequence[str]) -> bool:
        return _search(compiled, tuple(word), False)[0]

    return accepts


def accepts_existential_bruteforce(
    machine: WKAutomaton, upper: Sequence[str], *, max_strands: int = 1_000_000
) -> bool:
    """Independent oracle: try every complementary strand deterministically."""
    w1 = tuple(upper)
    _require_symbols(w1, set(machine.upper_alphabet), "upper alphabet")
    total = 1
    for x in w1:
        total *= len(machine.rho.image(x))
        if total > max_strands:
            raise SearchBoundError(
                f"strand count exceeds the bound of {max_strands} for a word of length {len(w1)}"
            )
    return any(
        run_deterministic(machine, w1, w2).accepted
        for w2 in complement_strands(machine, w1)
    )
