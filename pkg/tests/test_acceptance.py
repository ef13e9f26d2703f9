"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Every criterion carries its runtime budget; the budgets are part of
the assertions.
"""

import random
import time
from contextlib import contextmanager

from wkautomata import (
    ComplementarityRelation,
    Verdict,
    WKAutomaton,
    accepts_existential,
    accepts_existential_bruteforce,
    check_reversibility_wk,
    dfa_accepts,
    dfa_to_rwka,
    enumerate_block_strings,
    enumerate_words,
    existential_acceptor,
    mfa2_to_swk,
    run_deterministic,
    run_mfa,
    swk_to_mfa2,
    theorem2_machine,
    theorem2_member,
)
from wkautomata.fileformat import parse_machine, serialize_machine
from wkautomata.oracle import theorem2_witnesses
from wkautomata.samples import (
    example1_dfa,
    identity_rho_wk,
    random_dfa,
    stationary_loop_wk,
    twohead_anbn1_mfa,
)
from conftest import CORPUS_DIR, CORPUS_FILES, run_cli

SEED = 7
RANDOM_DFA_COUNT = 30


@contextmanager
def criterion(number: int, name: str, budget_seconds: float):
    started = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - started
        print(f"criterion {number} [{name}]: FAIL ({elapsed:.2f}s)")
        raise
    elapsed = time.perf_counter() - started
    print(f"criterion {number} [{name}]: PASS ({elapsed:.2f}s)")
    assert elapsed < budget_seconds, f"criterion {number} took {elapsed:.2f}s, budget {budget_seconds}s"


def seeded_dfas():
    rng = random.Random(SEED)
    return [random_dfa(rng) for _ in range(RANDOM_DFA_COUNT)]


def test_criterion_1_golden_construction():
    with criterion(1, "golden-construction", 1.0):
        machine = dfa_to_rwka(example1_dfa())
        assert len(machine.delta) == 6
        assert machine.rho.images == {"a": ("a_1", "a_2"), "b": ("b_1", "b_2")}
        assert machine.states == ("q0'", "q0", "q1", "qf")
        assert machine.finals == frozenset({"qf"})
        golden = (CORPUS_DIR / "example1-rwka.wk").read_text(encoding="utf-8")
        assert serialize_machine(machine) == golden


def test_criterion_2_bounded_equivalence():
    with criterion(2, "bounded-equivalence", 30.0):
        dfa = example1_dfa()
        accept = existential_acceptor(dfa_to_rwka(dfa))
        per_length_accepted = {}
        words = 0
        for word in enumerate_words(dfa.alphabet, 12):
            words += 1
            expected = dfa_accepts(dfa, word)
            assert accept(word) == expected
            if expected:
                per_length_accepted[len(word)] = per_length_accepted.get(len(word), 0) + 1
        assert words == 8191
        for n in range(1, 13):
            assert per_length_accepted[n] == 2 ** (n - 1)

        for dfa in seeded_dfas():
            accept = existential_acceptor(dfa_to_rwka(dfa))
            for word in enumerate_words(dfa.alphabet, 8):
                assert accept(word) == dfa_accepts(dfa, word)


def test_criterion_3_reversibility_preservation():
    with criterion(3, "reversibility-preservation", 5.0):
        machines = [dfa_to_rwka(example1_dfa())]
        machines += [dfa_to_rwka(dfa) for dfa in seeded_dfas()]
        assert all(check_reversibility_wk(m).passed for m in machines)
        multi_final = [m for m in machines if len(m.finals) > 1]
        assert multi_final, "the seeded batch must exercise the per-final-sink case"

        mutated = WKAutomaton(
            states=("q0", "q1", "qf"),
            upper_alphabet=("a",),
            start="q0",
            finals={"qf"},
            rho=ComplementarityRelation({"a": ("a_1",)}),
            delta={
                ("q0", "a", "a_1"): ("q1", 1, 1),
                ("q0", "$", "$"): ("qf", 0, 0),
                ("q1", "$", "$"): ("qf", 0, 0),
            },
        )
        report = check_reversibility_wk(mutated)
        assert not report.passed
        assert {v.rule for v in report.violations} == {"C2"}


def test_criterion_4_engine_oracle_equivalence():
    with criterion(4, "engine-oracle-equivalence", 60.0):
        machines = [
            dfa_to_rwka(example1_dfa()),
            theorem2_machine(),
            identity_rho_wk(),
            stationary_loop_wk(),
        ]
        for machine in machines:
            for word in enumerate_words(machine.upper_alphabet, 6):
                result = accepts_existential(machine, word)
                assert result.accepted == accepts_existential_bruteforce(machine, word)
                if result.accepted:
                    replay = run_deterministic(machine, word, result.witness_lower)
                    assert replay.verdict is Verdict.ACCEPT_HALT


def test_criterion_5_block_language_differential():
    with criterion(5, "block-language-differential", 120.0):
        machine = theorem2_machine()
        accept = existential_acceptor(machine)
        unsound = 0
        missed_detectable = 0
        detectable_total = 0
        for word in enumerate_block_strings(12, 3):
            accepted = accept(word)
            if accepted and not theorem2_member(word):
                unsound += 1
            if any(i >= 2 for i, _ in theorem2_witnesses(word)):
                detectable_total += 1
                if not accepted:
                    missed_detectable += 1
        assert unsound == 0
        assert missed_detectable == 0
        assert detectable_total > 0

        probe = tuple("ab*a%ab*b")
        assert theorem2_member(probe)
        assert theorem2_witnesses(probe) == ((1, 2),)
        assert not accept(probe), "known block-1 discrepancy, not a failure"


def test_criterion_6_twohead_round_trip():
    with criterion(6, "twohead-round-trip", 30.0):
        mfa = twohead_anbn1_mfa()
        round_tripped = swk_to_mfa2(mfa2_to_swk(mfa))
        assert round_tripped == mfa
        wk_twin = mfa2_to_swk(mfa)
        accept_twin = existential_acceptor(wk_twin)
        for word in enumerate_words(mfa.alphabet, 8):
            original = run_mfa(mfa, word).accepted
            assert accept_twin(word) == original
            assert run_mfa(round_tripped, word).accepted == original

        swk = identity_rho_wk()
        translated = swk_to_mfa2(swk)
        accept_swk = existential_acceptor(swk)
        for word in enumerate_words(swk.upper_alphabet, 8):
            assert accept_swk(word) == run_mfa(translated, word).accepted


def test_criterion_7_loop_handling():
    with criterion(7, "loop-handling", 1.0):
        machine = stationary_loop_wk()
        for word in ("", "a", "aaa"):
            outcome = run_deterministic(machine, word, word)
            assert outcome.verdict is Verdict.INFINITE_LOOP
            result = accepts_existential(machine, word)
            assert not result.accepted
            n = len(word)
            bound = (
                len(machine.states)
                * (n + 2) ** 2
                * (len(machine.lower_alphabet) + 2)
            )
            assert result.explored <= bound


def test_criterion_8_format_round_trip():
    with criterion(8, "format-round-trip", 5.0):
        for name in CORPUS_FILES:
            path = CORPUS_DIR / name
            text = path.read_text(encoding="utf-8")
            machine = parse_machine(text)
            assert parse_machine(serialize_machine(machine)) == machine
            assert serialize_machine(machine) == text
            code, _, _ = run_cli("compare", str(path), str(path), "--max-len", "8")
            assert code == 0
