"""Core machine types and their static checks.

Three machine kinds share one vocabulary: a classical deterministic finite
automaton, a one-way multi-head automaton over an end-marked tape, and a
Watson-Crick automaton whose two one-way heads read the upper and lower
strand of a double-stranded word.  The lower strand is never part of the
input: it is any per-position choice from the complementarity relation
applied to the upper strand.

Reversibility is a property of the transition table.  Two conditions are
checked, named C1 and C2 throughout:

* C1: all transitions into the same state move the heads identically.
* C2: among transitions into the same state with the same head moves, the
  read symbol tuples are pairwise distinct (the table is backward
  deterministic).

All values are immutable after construction and every function here is
pure, so machines can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass

LEFT_END = "#"
RIGHT_END = "$"
END_MARKERS = (LEFT_END, RIGHT_END)

# Characters that the textual format claims for itself; symbol and state
# tokens may not contain them (nor whitespace, nor the '->' arrow).
_RESERVED_CHARS = frozenset("#$:,") | frozenset(" \t\r\n\x0b\x0c")


class MachineError(Exception):
    """Base class for machine construction and simulation errors."""


class UnknownSymbolError(MachineError):
    """A word contains a symbol outside the relevant alphabet."""


class NonInjectiveRhoError(MachineError):
    """The complementarity relation has no functional inverse."""


class InvalidMachineError(MachineError):
    """An operation's precondition (a passing validate report) was violated."""

    def __init__(self, report: CheckReport, context: str = "machine"):
        self.report = report
        rules = ", ".join(sorted({v.rule for v in report.violations}))
        super().__init__(f"{context} fails validation: {rules}")


def is_valid_token(token: str) -> bool:
    """True if ``token`` may name a state or an alphabet symbol."""
    if not token or "->" in token:
        return False
    return not any(ch in _RESERVED_CHARS for ch in token)


@dataclass(frozen=True)
class ComplementarityRelation:
    """Multi-valued map from upper-strand symbols to lower-strand symbols.

    ``images`` preserves declaration order of the domain and of each image
    list; image lists never contain duplicates.
    """

    images: dict[str, tuple[str, ...]]

    def __post_init__(self):
        deduped = {
            x: tuple(dict.fromkeys(ys)) for x, ys in dict(self.images).items()
        }
        object.__setattr__(self, "images", deduped)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> ComplementarityRelation:
        images: dict[str, list[str]] = {}
        for x, y in pairs:
            bucket = images.setdefault(x, [])
            if y not in bucket:
                bucket.append(y)
        return cls({x: tuple(ys) for x, ys in images.items()})

    @classmethod
    def identity(cls, symbols: Iterable[str]) -> ComplementarityRelation:
        return cls({x: (x,) for x in symbols})

    def image(self, symbol: str) -> tuple[str, ...]:
        return self.images.get(symbol, ())

    @property
    def lower_symbols(self) -> tuple[str, ...]:
        """All image symbols, in declaration order, without duplicates."""
        seen = dict.fromkeys(y for ys in self.images.values() for y in ys)
        return tuple(seen)

    @property
    def is_injective(self) -> bool:
        """Single-valued with pairwise distinct images.

        Both conditions together make the inverse a function, which is what
        the translation to a two-head machine needs.
        """
        if any(len(ys) != 1 for ys in self.images.values()):
            return False
        images = [ys[0] for ys in self.images.values()]
        return len(set(images)) == len(images)

    def inverse(self) -> dict[str, str]:
        if not self.is_injective:
            raise NonInjectiveRhoError(
                "complementarity relation is not injective; inverse is not a function"
            )
        return {ys[0]: x for x, ys in self.images.items()}


@dataclass(frozen=True)
class WKAutomaton:
    """A one-way two-strand (Watson-Crick) automaton.

    ``delta`` maps ``(state, upper_read, lower_read)`` to
    ``(state, d1, d2)`` with reads drawn from the alphabets or the end
    markers and displacements in {0, 1}.  The map representation makes
    forward determinism structural: nondeterminism enters only through the
    multi-valued complementarity relation.
    """

    states: tuple[str, ...]
    upper_alphabet: tuple[str, ...]
    start: str
    finals: frozenset[str]
    rho: ComplementarityRelation
    delta: dict[tuple[str, str, str], tuple[str, int, int]]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "upper_alphabet", tuple(self.upper_alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if not isinstance(self.rho, ComplementarityRelation):
            object.__setattr__(self, "rho", ComplementarityRelation(dict(self.rho)))
        delta = {
            (q, u, l): (t, int(d1), int(d2))
            for (q, u, l), (t, d1, d2) in dict(self.delta).items()
        }
        object.__setattr__(self, "delta", delta)

    @property
    def lower_alphabet(self) -> tuple[str, ...]:
        """All complementarity images; may differ from the upper alphabet."""
        return self.rho.lower_symbols


@dataclass(frozen=True)
class MultiHeadAutomaton:
    """A one-way deterministic automaton with k heads on one end-marked tape."""

    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    head_count: int
    start: str
    finals: frozenset[str]
    delta: dict[tuple[str, tuple[str, ...]], tuple[str, tuple[int, ...]]]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        delta = {
            (q, tuple(reads)): (t, tuple(int(d) for d in moves))
            for (q, reads), (t, moves) in dict(self.delta).items()
        }
        object.__setattr__(self, "delta", delta)


@dataclass(frozen=True)
class ClassicalDFA:
    """A deterministic finite automaton with a possibly partial delta.

    A missing transition rejects; there is no implicit sink state.
    """

    states: tuple[str, ...]
    alphabet: tuple[str, ...]
    start: str
    finals: frozenset[str]
    delta: dict[tuple[str, str], str]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "delta", dict(self.delta))


Machine = WKAutomaton | MultiHeadAutomaton | ClassicalDFA

# A transition rendered uniformly for reports and traces:
# (source state, read tuple, target state, move tuple).
Entry = tuple[str, tuple[str, ...], str, tuple[int, ...]]


def format_entry(entry: Entry) -> str:
    q, reads, t, moves = entry
    return f"{q} ({' '.join(reads)}) -> {t} ({' '.join(str(d) for d in moves)})"


@dataclass(frozen=True)
class Violation:
    rule: str
    entries: tuple[Entry, ...]
    note: str

    def __str__(self) -> str:
        text = f"{self.rule}: {self.note}"
        if self.entries:
            text += " :: " + " | ".join(format_entry(e) for e in self.entries)
        return text


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a static check; passing means no violations.

    ``notes`` carry informational remarks that never affect the verdict.
    """

    violations: tuple[Violation, ...] = ()
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "violations", tuple(self.violations))
        object.__setattr__(self, "notes", tuple(self.notes))

    @property
    def passed(self) -> bool:
        return not self.violations


def wk_entries(machine: WKAutomaton) -> list[Entry]:
    return [
        (q, (u, l), t, (d1, d2)) for (q, u, l), (t, d1, d2) in machine.delta.items()
    ]


def mfa_entries(machine: MultiHeadAutomaton) -> list[Entry]:
    return [(q, reads, t, moves) for (q, reads), (t, moves) in machine.delta.items()]


def _name_violations(kind: str, names: Iterable[str]) -> list[Violation]:
    out = []
    seen = set()
    for name in names:
        if not is_valid_token(name):
            out.append(Violation("bad-token", (), f"{kind} name {name!r} uses reserved text"))
        if name in seen:
            out.append(Violation(f"duplicate-{kind}", (), f"{kind} {name!r} declared twice"))
        seen.add(name)
    return out


def _membership_violations(
    states: tuple[str, ...], start: str, finals: frozenset[str]
) -> list[Violation]:
    out = []
    declared = set(states)
    if start not in declared:
        out.append(Violation("unknown-state", (), f"start state {start!r} is not declared"))
    for q in sorted(finals - declared):
        out.append(Violation("unknown-state", (), f"final state {q!r} is not declared"))
    return out


def _left_marker_note(entries: list[Entry]) -> tuple[str, ...]:
    moving = sum(
        1
        for _, reads, _, moves in entries
        if any(r == LEFT_END and d == 1 for r, d in zip(reads, moves))
    )
    if not moving:
        return ()
    return (
        f"{moving} transition(s) move a head that is reading the left end marker"
        f" '{LEFT_END}'; movement is pinned only on the right end marker '{RIGHT_END}'",
    )


def _entry_violations(entries: list[Entry], states: set[str], reads_ok) -> list[Violation]:
    out = []
    for entry in entries:
        q, reads, t, moves = entry
        for name in (q, t):
            if name not in states:
                out.append(Violation("unknown-state", (entry,), f"state {name!r} is not declared"))
        for pos, r in enumerate(reads):
            if not reads_ok(pos, r):
                out.append(Violation("unknown-symbol", (entry,), f"read symbol {r!r} is not available"))
        for d in moves:
            if d not in (0, 1):
                out.append(Violation("bad-displacement", (entry,), f"displacement {d!r} is not 0 or 1"))
        for r, d in zip(reads, moves):
            if r == RIGHT_END and d == 1:
                out.append(
                    Violation(
                        "move-on-endmarker",
                        (entry,),
                        f"head may not move while reading '{RIGHT_END}'",
                    )
                )
    return out


def _validate_wk(machine: WKAutomaton) -> CheckReport:
    violations = []
    violations += _name_violations("state", machine.states)
    violations += _name_violations("symbol", machine.upper_alphabet)
    violations += _membership_violations(machine.states, machine.start, machine.finals)

    upper = set(machine.upper_alphabet)
    for x, ys in machine.rho.images.items():
        if x not in upper:
            violations.append(
                Violation("rho-unknown-symbol", (), f"rho maps {x!r}, which is not in the upper alphabet")
            )
        for y in ys:
            if not is_valid_token(y):
                violations.append(Violation("bad-token", (), f"symbol name {y!r} uses reserved text"))
    for x in machine.upper_alphabet:
        if not machine.rho.image(x):
            violations.append(
                Violation("rho-not-total", (), f"upper symbol {x!r} has no complementarity image")
            )

    lower = set(machine.lower_alphabet)
    entries = wk_entries(machine)

    def reads_ok(pos: int, r: str) -> bool:
        if r in END_MARKERS:
            return True
        return r in upper if pos == 0 else r in lower

    violations += _entry_violations(entries, set(machine.states), reads_ok)
    return CheckReport(tuple(violations), _left_marker_note(entries))


def _validate_mfa(machine: MultiHeadAutomaton) -> CheckReport:
    violations = []
    violations += _name_violations("state", machine.states)
    violations += _name_violations("symbol", machine.alphabet)
    violations += _membership_violations(machine.states, machine.start, machine.finals)
    if machine.head_count < 1:
        violations.append(
            Violation("bad-head-count", (), f"head count {machine.head_count} must be at least 1")
        )

    alphabet = set(machine.alphabet)
    entries = mfa_entries(machine)
    for entry in entries:
        _, reads, _, moves = entry
        if len(reads) != machine.head_count or len(moves) != machine.head_count:
            violations.append(
                Violation(
                    "head-count-mismatch",
                    (entry,),
                    f"transition does not carry exactly {machine.head_count} reads and moves",
                )
            )

    def reads_ok(pos: int, r: str) -> bool:
        return r in END_MARKERS or r in alphabet

    violations += _entry_violations(entries, set(machine.states), reads_ok)
    return CheckReport(tuple(violations), _left_marker_note(entries))


def _validate_dfa(machine: ClassicalDFA) -> CheckReport:
    violations = []
    violations += _name_violations("state", machine.states)
    violations += _name_violations("symbol", machine.alphabet)
    violations += _membership_violations(machine.states, machine.start, machine.finals)
    states = set(machine.states)
    alphabet = set(machine.alphabet)
    for (q, x), t in machine.delta.items():
        entry: Entry = (q, (x,), t, ())
        for name in (q, t):
            if name not in states:
                violations.append(Violation("unknown-state", (entry,), f"state {name!r} is not declared"))
        if x not in alphabet:
            violations.append(Violation("unknown-symbol", (entry,), f"read symbol {x!r} is not available"))
    return CheckReport(tuple(violations))


def validate(machine: Machine) -> CheckReport:
    """Report every violated structural invariant of ``machine``.

    Malformedness is the report's content, not an exception.
    """
    if isinstance(machine, WKAutomaton):
        return _validate_wk(machine)
    if isinstance(machine, MultiHeadAutomaton):
        return _validate_mfa(machine)
    if isinstance(machine, ClassicalDFA):
        return _validate_dfa(machine)
    raise TypeError(f"not a machine: {machine!r}")


def _reversibility_report(entries: list[Entry]) -> CheckReport:
    by_target: dict[str, list[Entry]] = {}
    for entry in entries:
        by_target.setdefault(entry[2], []).append(entry)
    violations = []
    for target, group in by_target.items():
        for e1, e2 in itertools.combinations(group, 2):
            if e1[3] != e2[3]:
                violations.append(
                    Violation("C1", (e1, e2), f"entries into {target!r} move the heads differently")
                )
            elif e1[1] == e2[1]:
                violations.append(
                    Violation(
                        "C2",
                        (e1, e2),
                        f"entries into {target!r} with equal moves read the same symbol pair",
                    )
                )
    return CheckReport(tuple(violations))


def check_reversibility_wk(machine: WKAutomaton) -> CheckReport:
    """Check conditions C1 and C2 over the two-strand transition table."""
    return _reversibility_report(wk_entries(machine))


def check_reversibility_mfa(machine: MultiHeadAutomaton) -> CheckReport:
    """Check conditions C1 and C2 over the k-head transition table."""
    return _reversibility_report(mfa_entries(machine))


def check_strong_reversibility(machine: WKAutomaton) -> CheckReport:
    """Reversible and with an injective complementarity relation."""
    report = check_reversibility_wk(machine)
    if machine.rho.is_injective:
        return report
    offenders = [
        f"{x!r} has {len(ys)} images" for x, ys in machine.rho.images.items() if len(ys) != 1
    ]
    shared = {}
    for x, ys in machine.rho.images.items():
        for y in ys:
            shared.setdefault(y, []).append(x)
    offenders += [
        f"image {y!r} is shared by {xs}" for y, xs in shared.items() if len(xs) > 1
    ]
    violation = Violation(
        "rho-not-injective", (), "; ".join(offenders) or "relation is not injective"
    )
    return CheckReport(report.violations + (violation,), report.notes)
