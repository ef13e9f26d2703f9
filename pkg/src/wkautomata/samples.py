"""Sample machines used by the shipped corpus, the tests, and the scripts."""

from __future__ import annotations

import random

from .machines import (
    LEFT_END,
    ClassicalDFA,
    ComplementarityRelation,
    MultiHeadAutomaton,
    WKAutomaton,
)


def example1_dfa() -> ClassicalDFA:
    """Two-state DFA for the regular language (a+b)*a."""
    return ClassicalDFA(
        states=("q0", "q1"),
        alphabet=("a", "b"),
        start="q0",
        finals=frozenset({"q1"}),
        delta={
            ("q0", "a"): "q1",
            ("q0", "b"): "q0",
            ("q1", "a"): "q1",
            ("q1", "b"): "q0",
        },
    )


def twohead_anbn1_mfa() -> MultiHeadAutomaton:
    """Two-head reversible machine for {a^n b^(n+1) : n >= 0}.

    The first head sweeps the a-block while the second waits on the left
    marker; the second head then counts one a per extra b, so it must be
    reading the first b exactly when the first head reaches the right
    marker.
    """
    return MultiHeadAutomaton(
        states=("p0", "p1", "q1", "qf"),
        alphabet=("a", "b"),
        head_count=2,
        start="p0",
        finals=frozenset({"qf"}),
        delta={
            ("p0", ("#", "#")): ("p1", (1, 0)),
            ("p1", ("a", "#")): ("p1", (1, 0)),
            ("p1", ("b", "#")): ("q1", (1, 1)),
            ("q1", ("b", "a")): ("q1", (1, 1)),
            ("q1", ("$", "b")): ("qf", (0, 0)),
        },
    )


def identity_rho_wk() -> WKAutomaton:
    """Strongly reversible two-strand machine for {a^n b^(n+1) : n >= 0}.

    The identity relation pins the lower strand to the upper one, so this
    is the two-strand twin of ``twohead_anbn1_mfa``.
    """
    return WKAutomaton(
        states=("p0", "p1", "q1", "qf"),
        upper_alphabet=("a", "b"),
        start="p0",
        finals=frozenset({"qf"}),
        rho=ComplementarityRelation.identity(("a", "b")),
        delta={
            ("p0", "#", "#"): ("p1", 1, 0),
            ("p1", "a", "#"): ("p1", 1, 0),
            ("p1", "b", "#"): ("q1", 1, 1),
            ("q1", "b", "a"): ("q1", 1, 1),
            ("q1", "$", "b"): ("qf", 0, 0),
        },
    )


def stationary_loop_wk() -> WKAutomaton:
    """A machine whose single transition spins in place on the left markers.

    Every input loops forever, so every input is rejected even though the
    looping state is final.
    """
    return WKAutomaton(
        states=("s",),
        upper_alphabet=("a",),
        start="s",
        finals=frozenset({"s"}),
        rho=ComplementarityRelation.identity(("a",)),
        delta={("s", LEFT_END, LEFT_END): ("s", 0, 0)},
    )


def random_dfa(
    rng: random.Random,
    max_states: int = 5,
    alphabet: tuple[str, ...] = ("a", "b"),
    density: float = 0.9,
) -> ClassicalDFA:
    """A seeded random DFA with a possibly partial transition map."""
    n = rng.randint(1, max_states)
    states = tuple(f"s{i}" for i in range(n))
    delta = {}
    for q in states:
        for x in alphabet:
            if rng.random() < density:
                delta[(q, x)] = states[rng.randrange(n)]
    finals = frozenset(q for q in states if rng.random() < 0.4)
    return ClassicalDFA(
        states=states,
        alphabet=tuple(alphabet),
        start=states[0],
        finals=finals,
        delta=delta,
    )
