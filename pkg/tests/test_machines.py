"""Types, structural validation, and the C1/C2 reversibility checkers."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from wkautomata import (
    ComplementarityRelation,
    MultiHeadAutomaton,
    WKAutomaton,
    check_reversibility_mfa,
    check_reversibility_wk,
    check_strong_reversibility,
    dfa_to_rwka,
    mfa2_to_swk,
    swk_to_mfa2,
    validate,
)
from wkautomata.machines import is_valid_token
from wkautomata.samples import random_dfa


def wk(delta, states, finals, alphabet=("a", "b"), rho=None, start=None):
    rho = rho or ComplementarityRelation.identity(alphabet)
    return WKAutomaton(
        states=states,
        upper_alphabet=alphabet,
        start=start or states[0],
        finals=finals,
        rho=rho,
        delta=delta,
    )


class TestTokens:
    def test_plain_names_are_valid(self):
        for token in ("a", "q0", "q0'", "v_m1", "%", "*", "state-1"):
            assert is_valid_token(token)

    def test_reserved_text_is_rejected(self):
        for token in ("", "#", "$", "a#b", "a$b", "a b", "a:b", "a,b", "x->y", "\t"):
            assert not is_valid_token(token)


class TestComplementarityRelation:
    def test_image_order_and_dedup(self):
        rho = ComplementarityRelation.from_pairs(
            [("a", "y"), ("a", "x"), ("a", "y"), ("b", "x")]
        )
        assert rho.image("a") == ("y", "x")
        assert rho.image("missing") == ()
        assert rho.lower_symbols == ("y", "x")

    def test_injectivity_needs_single_valued_and_distinct(self):
        assert ComplementarityRelation({"a": ("x",), "b": ("y",)}).is_injective
        assert not ComplementarityRelation({"a": ("x", "y")}).is_injective
        assert not ComplementarityRelation({"a": ("x",), "b": ("x",)}).is_injective

    def test_inverse(self):
        rho = ComplementarityRelation({"a": ("c",), "b": ("d",)})
        assert rho.inverse() == {"c": "a", "d": "b"}


class TestValidate:
    def test_constructed_machine_passes(self, example1_rwka):
        assert validate(example1_rwka).passed

    def test_move_on_right_endmarker_is_flagged(self):
        machine = wk(
            {("q0", "$", "$"): ("q1", 1, 0)},
            states=("q0", "q1"),
            finals={"q1"},
        )
        report = validate(machine)
        assert not report.passed
        assert [v.rule for v in report.violations] == ["move-on-endmarker"]

    def test_missing_rho_image_is_flagged(self):
        machine = wk(
            {},
            states=("q0",),
            finals=set(),
            rho=ComplementarityRelation({"a": ("a",)}),
            alphabet=("a", "b"),
        )
        report = validate(machine)
        assert [v.rule for v in report.violations] == ["rho-not-total"]

    def test_unknown_references_are_flagged(self):
        machine = wk(
            {("q0", "a", "a"): ("ghost", 1, 1)},
            states=("q0",),
            finals={"nowhere"},
        )
        rules = {v.rule for v in validate(machine).violations}
        assert rules == {"unknown-state"}

    def test_left_marker_movement_is_an_informational_note(self, example1_rwka):
        report = validate(example1_rwka)
        assert report.passed
        assert any("left end marker" in note for note in report.notes)

    def test_mfa_head_count_mismatch(self):
        machine = MultiHeadAutomaton(
            states=("q0",),
            alphabet=("a",),
            head_count=2,
            start="q0",
            finals=set(),
            delta={("q0", ("a",)): ("q0", (1,))},
        )
        assert "head-count-mismatch" in {v.rule for v in validate(machine).violations}


class TestReversibilityWK:
    def test_constructed_machine_passes(self, example1_rwka):
        assert check_reversibility_wk(example1_rwka).passed

    def test_c1_same_target_different_moves(self):
        machine = wk(
            {("p", "a", "a"): ("q", 1, 1), ("r", "b", "b"): ("q", 0, 1)},
            states=("p", "r", "q"),
            finals={"q"},
        )
        report = check_reversibility_wk(machine)
        assert [v.rule for v in report.violations] == ["C1"]

    def test_c2_same_target_same_reads(self):
        machine = wk(
            {("p", "$", "$"): ("qf", 0, 0), ("r", "$", "$"): ("qf", 0, 0)},
            states=("p", "r", "qf"),
            finals={"qf"},
        )
        report = check_reversibility_wk(machine)
        assert [v.rule for v in report.violations] == ["C2"]

    def test_passed_is_stable_under_reordering(self, example1_rwka):
        rng = random.Random(11)
        for machine in (example1_rwka, _c2_violating()):
            expected = check_reversibility_wk(machine).passed
            entries = list(machine.delta.items())
            states = list(machine.states)
            for _ in range(5):
                rng.shuffle(entries)
                rng.shuffle(states)
                shuffled = WKAutomaton(
                    states=tuple(states),
                    upper_alphabet=machine.upper_alphabet,
                    start=machine.start,
                    finals=machine.finals,
                    rho=machine.rho,
                    delta=dict(entries),
                )
                assert check_reversibility_wk(shuffled).passed == expected
                assert validate(shuffled).passed == validate(machine).passed


def _c2_violating():
    return wk(
        {("p", "$", "$"): ("qf", 0, 0), ("r", "$", "$"): ("qf", 0, 0)},
        states=("p", "r", "qf"),
        finals={"qf"},
    )


class TestStrongReversibility:
    def test_identity_rho_machine_passes(self, identity_rho):
        assert check_strong_reversibility(identity_rho).passed

    def test_example1_machine_fails_on_multivalued_rho(self, example1_rwka):
        report = check_strong_reversibility(example1_rwka)
        assert not report.passed
        assert "rho-not-injective" in {v.rule for v in report.violations}

    def test_theorem2_machine_fails(self, theorem2):
        report = check_strong_reversibility(theorem2)
        assert not report.passed
        assert any("3 images" in v.note for v in report.violations)

    def test_strong_implies_reversible(self, identity_rho, example1_rwka, theorem2):
        for machine in (identity_rho, example1_rwka, theorem2, _c2_violating()):
            if check_strong_reversibility(machine).passed:
                assert check_reversibility_wk(machine).passed


class TestReversibilityMFA:
    def test_translation_of_strongly_reversible_machine_passes(self, identity_rho):
        assert check_reversibility_mfa(swk_to_mfa2(identity_rho)).passed

    def test_c2_violation(self):
        machine = MultiHeadAutomaton(
            states=("p", "r", "q"),
            alphabet=("a", "b"),
            head_count=2,
            start="p",
            finals=set(),
            delta={
                ("p", ("a", "b")): ("q", (1, 0)),
                ("r", ("a", "b")): ("q", (1, 0)),
            },
        )
        assert [v.rule for v in check_reversibility_mfa(machine).violations] == ["C2"]

    def test_single_transition_machine_passes(self):
        machine = MultiHeadAutomaton(
            states=("p", "q"),
            alphabet=("a",),
            head_count=2,
            start="p",
            finals={"q"},
            delta={("p", ("#", "#")): ("q", (1, 1))},
        )
        assert check_reversibility_mfa(machine).passed


@given(seed=st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_compiled_machines_are_always_reversible(seed):
    dfa = random_dfa(random.Random(seed))
    machine = dfa_to_rwka(dfa)
    assert validate(machine).passed
    assert check_reversibility_wk(machine).passed


@given(seed=st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_translation_of_reversible_mfa_is_strongly_reversible(seed):
    # The sample machine plus single-entry machines drawn at random; anything
    # that passes the two-head check must translate to a strongly reversible
    # two-strand machine.
    from wkautomata.samples import twohead_anbn1_mfa

    twohead = twohead_anbn1_mfa()
    rng = random.Random(seed)
    reads = (rng.choice(("#", "a", "b")), rng.choice(("#", "a", "b")))
    single = MultiHeadAutomaton(
        states=("p", "q"),
        alphabet=("a", "b"),
        head_count=2,
        start="p",
        finals={"q"},
        delta={("p", reads): ("q", (1, 1))},
    )
    for machine in (twohead, single):
        assert check_reversibility_mfa(machine).passed
        assert check_strong_reversibility(mfa2_to_swk(machine)).passed
