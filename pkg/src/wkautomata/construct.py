"""Machine-to-machine constructions.

* ``dfa_to_rwka`` compiles any DFA into a reversible two-strand machine for
  the same language.  The lower strand's job is to guess, position by
  position, which DFA transition fires there; the table then only has to
  replay the guess, which keeps it backward deterministic.
* ``mfa2_to_swk`` / ``swk_to_mfa2`` translate between two-head reversible
  machines and strongly reversible two-strand machines (identity relation
  one way, the relation's inverse the other way).
* ``theorem2_machine`` is a fixed reversible machine with a non-injective
  relation for the block language handled by ``oracle.theorem2_member``.
"""

from __future__ import annotations

from .machines import (
    LEFT_END,
    RIGHT_END,
    CheckReport,
    ClassicalDFA,
    ComplementarityRelation,
    InvalidMachineError,
    MachineError,
    MultiHeadAutomaton,
    NonInjectiveRhoError,
    WKAutomaton,
    check_reversibility_mfa,
    check_strong_reversibility,
    validate,
)


class HeadCountError(MachineError):
    """The translation needs a machine with exactly two heads."""


class ReversibilityError(MachineError):
    """The input machine fails a required reversibility check."""

    def __init__(self, report: CheckReport, context: str):
        self.report = report
        rules = ", ".join(str(v) for v in report.violations)
        super().__init__(f"{context}: {rules}")


def _fresh_numbered(stem: str, index: int, taken: set[str]) -> str:
    # Widen the separator until the name is free; the taken set is finite.
    sep = "_"
    while f"{stem}{sep}{index}" in taken:
        sep += "_"
    return f"{stem}{sep}{index}"


def _fresh_primed(stem: str, taken: set[str]) -> str:
    name = stem + "'"
    while name in taken:
        name += "'"
    return name


def dfa_to_rwka(dfa: ClassicalDFA) -> WKAutomaton:
    """Compile a DFA into a reversible two-strand machine, same language.

    Per input symbol, the DFA's transitions are listed in state declaration
    order and the i-th one gets a fresh lower symbol ``x_i``.  Simulation
    entries replay the guessed transition; a fresh start state consumes the
    left markers and every final state gets its own accepting sink on the
    right markers (one sink per final keeps the table backward
    deterministic when there are several finals).

    Input symbols without any transition still receive one fresh image so
    the relation stays total; nothing ever consumes such an image, so the
    language is unaffected.
    """
    report = validate(dfa)
    if not report.passed:
        raise InvalidMachineError(report, "dfa")

    taken = set(dfa.states) | set(dfa.alphabet)
    start = _fresh_primed(dfa.start, taken)
    taken.add(start)

    images: dict[str, tuple[str, ...]] = {}
    simulation: list[tuple[tuple[str, str, str], tuple[str, int, int]]] = []
    for x in dfa.alphabet:
        listed = [(q, dfa.delta[(q, x)]) for q in dfa.states if (q, x) in dfa.delta]
        fresh: list[str] = []
        for i, (q, target) in enumerate(listed, start=1):
            y = _fresh_numbered(x, i, taken)
            taken.add(y)
            fresh.append(y)
            simulation.append(((q, x, y), (target, 1, 1)))
        if not listed:
            y = _fresh_numbered(x, 1, taken)
            taken.add(y)
            fresh.append(y)
        images[x] = tuple(fresh)

    final_states = [q for q in dfa.states if q in dfa.finals]
    sinks: list[str] = []
    if len(final_states) == 1:
        sink = "qf"
        while sink in taken:
            sink += "'"
        taken.add(sink)
        sinks.append(sink)
    else:
        for q in final_states:
            sep = "_"
            while f"qf{sep}{q}" in taken:
                sep += "_"
            sink = f"qf{sep}{q}"
            taken.add(sink)
            sinks.append(sink)

    delta: dict[tuple[str, str, str], tuple[str, int, int]] = {
        (start, LEFT_END, LEFT_END): (dfa.start, 1, 1)
    }
    delta.update(simulation)
    for q, sink in zip(final_states, sinks):
        delta[(q, RIGHT_END, RIGHT_END)] = (sink, 0, 0)

    return WKAutomaton(
        states=(start,) + dfa.states + tuple(sinks),
        upper_alphabet=dfa.alphabet,
        start=start,
        finals=frozenset(sinks),
        rho=ComplementarityRelation(images),
        delta=delta,
    )


def mfa2_to_swk(machine: MultiHeadAutomaton) -> WKAutomaton:
    """Translate a two-head reversible machine to an identity-relation
    two-strand machine; transitions are copied entry for entry."""
    if machine.head_count != 2:
        raise HeadCountError(f"need exactly 2 heads, got {machine.head_count}")
    report = validate(machine)
    if not report.passed:
        raise InvalidMachineError(report, "two-head machine")
    reversibility = check_reversibility_mfa(machine)
    if not reversibility.passed:
        raise ReversibilityError(reversibility, "two-head machine is not reversible")

    delta = {
        (q, reads[0], reads[1]): (t, moves[0], moves[1])
        for (q, reads), (t, moves) in machine.delta.items()
    }
    return WKAutomaton(
        states=machine.states,
        upper_alphabet=machine.alphabet,
        start=machine.start,
        finals=machine.finals,
        rho=ComplementarityRelation.identity(machine.alphabet),
        delta=delta,
    )


def swk_to_mfa2(machine: WKAutomaton) -> MultiHeadAutomaton:
    """Translate a strongly reversible two-strand machine to a two-head one.

    Each lower read is replaced by its unique preimage under the relation;
    end markers are their own preimage.
    """
    report = validate(machine)
    if not report.passed:
        raise InvalidMachineError(report, "two-strand machine")
    if not machine.rho.is_injective:
        raise NonInjectiveRhoError(
            "complementarity relation is not injective; lower reads have no unique preimage"
        )
    strong = check_strong_reversibility(machine)
    if not strong.passed:
        raise ReversibilityError(strong, "two-strand machine is not strongly reversible")

    inverse = machine.rho.inverse()
    inverse[LEFT_END] = LEFT_END
    inverse[RIGHT_END] = RIGHT_END
    delta = {
        (q, (u, inverse[l])): (t, (d1, d2))
        for (q, u, l), (t, d1, d2) in machine.delta.items()
    }
    return MultiHeadAutomaton(
        states=machine.states,
        alphabet=machine.upper_alphabet,
        head_count=2,
        start=machine.start,
        finals=machine.finals,
        delta=delta,
    )


def theorem2_machine() -> WKAutomaton:
    """The fixed reversible machine for the repeated-w, differing-x block
    language over {a, b, *, %}.

    The relation gives '%' three images: the plain separator plus two
    markers that guess which two separators precede the blocks to compare.
    The upper head parks on the first guessed separator while the lower
    head runs ahead to the second; the two heads then compare the blocks
    that follow.  The relation is deliberately not injective.
    """
    rho = ComplementarityRelation(
        {"a": ("a",), "%": ("%", "v_m1", "v_m2"), "b": ("b",), "*": ("*",)}
    )
    delta = {
        ("q0", LEFT_END, LEFT_END): ("q0", 1, 1),
        ("q0", "%", "%"): ("q0", 1, 1),
        ("q0", "a", "a"): ("q0", 1, 1),
        ("q0", "b", "b"): ("q0", 1, 1),
        ("q0", "*", "*"): ("q0", 1, 1),
        ("q0", "%", "v_m1"): ("q1", 0, 1),
        ("q1", "%", "a"): ("q1", 0, 1),
        ("q1", "%", "b"): ("q1", 0, 1),
        ("q1", "%", "*"): ("q1", 0, 1),
        ("q1", "%", "%"): ("q1", 0, 1),
        ("q1", "%", "v_m2"): ("q2", 1, 1),
        ("q2", "a", "a"): ("q2", 1, 1),
        ("q2", "b", "b"): ("q2", 1, 1),
        ("q2", "*", "*"): ("q3", 1, 1),
        ("q3", "a", "a"): ("q3", 1, 1),
        ("q3", "b", "b"): ("q3", 1, 1),
        ("q3", "%", "%"): ("q4", 0, 0),
        ("q3", "%", RIGHT_END): ("q4", 0, 0),
    }
    return WKAutomaton(
        states=("q0", "q1", "q2", "q3", "q4"),
        upper_alphabet=("a", "b", "%", "*"),
        start="q0",
        finals=frozenset({"q3"}),
        rho=rho,
        delta=delta,
    )
