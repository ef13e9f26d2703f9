"""Textual machine files and the command-line word conventions.

The format is line oriented.  Lines whose first character is '#' are
comments; blank lines are ignored.  The first content line must be
``type: wk|mfa|dfa``; the remaining header directives (``states``,
``start``, ``final``, ``alphabet``, plus ``rho`` for wk and ``heads`` for
mfa) may come in any order, and ``trans`` lines carry the transitions:

    trans: q r1 r2 -> q' d1 d2        (wk, and mfa with k heads)
    trans: q a -> q'                  (dfa)

End markers are spelled literally ``#`` and ``$`` inside transition lines;
comment detection only looks at a line's first character, so those tokens
are unambiguous.  Duplicate (state, reads) keys are a parse error, which
makes forward determinism structural.

Serialization is canonical: directives in a fixed order, transitions
sorted by source state declaration index and then by read tokens (left
marker first, alphabet symbols next, right marker last), so parsing a
serialized machine returns an equal machine and serializing is idempotent.
"""

from __future__ import annotations

import re
from collections.abc import Sequence

from .machines import (
    END_MARKERS,
    LEFT_END,
    RIGHT_END,
    ClassicalDFA,
    ComplementarityRelation,
    InvalidMachineError,
    Machine,
    MachineError,
    MultiHeadAutomaton,
    UnknownSymbolError,
    WKAutomaton,
    is_valid_token,
    validate,
)

Word = tuple[str, ...]

_HEADER_DIRECTIVES = ("states", "start", "final", "alphabet", "rho", "heads")


class ParseError(MachineError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", col {col}"
            where += ": "
        super().__init__(where + message)


def _directive_lines(text: str):
    """Yield (line number, directive name, [(token, 1-based column), ...])."""
    for number, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.startswith("#"):
            continue
        name, sep, rest = raw.partition(":")
        if not sep or name != name.strip() or not name:
            raise ParseError("expected 'directive: ...'", number, 1)
        offset = len(name) + 1
        tokens = [
            (m.group(), offset + m.start() + 1) for m in re.finditer(r"\S+", rest)
        ]
        yield number, name, tokens


def _single(tokens, number: int, directive: str) -> str:
    if len(tokens) != 1:
        raise ParseError(f"'{directive}:' takes exactly one token", number)
    return tokens[0][0]


def _check_tokens(tokens, number: int, kind: str) -> list[str]:
    names = []
    for tok, col in tokens:
        if not is_valid_token(tok):
            raise ParseError(f"invalid {kind} name {tok!r}", number, col)
        names.append(tok)
    return names


def parse_machine(text: str) -> Machine:
    """Parse a machine file; errors carry the offending line and column."""
    lines = list(_directive_lines(text))
    if not lines:
        raise ParseError("missing type")
    number, name, tokens = lines[0]
    if name != "type":
        raise ParseError("first directive must be 'type:'", number)
    kind = _single(tokens, number, "type")
    if kind not in ("wk", "mfa", "dfa"):
        raise ParseError(f"unknown machine type {kind!r}", number, tokens[0][1])

    headers: dict[str, tuple[int, list]] = {}
    rho_lines: list[tuple[int, list]] = []
    trans_lines: list[tuple[int, list]] = []
    for number, name, tokens in lines[1:]:
        if name == "trans":
            trans_lines.append((number, tokens))
        elif name == "rho":
            if kind != "wk":
                raise ParseError("'rho:' only applies to wk machines", number)
            rho_lines.append((number, tokens))
        elif name in _HEADER_DIRECTIVES:
            if name == "heads" and kind != "mfa":
                raise ParseError("'heads:' only applies to mfa machines", number)
            if name in headers:
                raise ParseError(f"duplicate '{name}:' directive", number)
            headers[name] = (number, tokens)
        elif name == "type":
            raise ParseError("duplicate 'type:' directive", number)
        else:
            raise ParseError(f"unknown directive {name!r}", number)

    for required in ("states", "start", "alphabet"):
        if required not in headers:
            raise ParseError(f"missing '{required}:' directive")
    number, tokens = headers["states"]
    states = tuple(_check_tokens(tokens, number, "state"))
    declared = set(states)
    if len(declared) != len(states):
        raise ParseError("duplicate state declaration", number)
    number, tokens = headers["start"]
    start = _single(tokens, number, "start")
    if start not in declared:
        raise ParseError(f"unknown start state {start!r}", number, tokens[0][1])
    finals: frozenset[str] = frozenset()
    if "final" in headers:
        number, tokens = headers["final"]
        for tok, col in tokens:
            if tok not in declared:
                raise ParseError(f"unknown final state {tok!r}", number, col)
        finals = frozenset(t for t, _ in tokens)
    number, tokens = headers["alphabet"]
    alphabet = tuple(_check_tokens(tokens, number, "symbol"))
    if len(set(alphabet)) != len(alphabet):
        raise ParseError("duplicate symbol declaration", number)

    if kind == "dfa":
        delta_dfa: dict[tuple[str, str], str] = {}
        for number, tokens in trans_lines:
            source, reads, target, moves = _split_trans(tokens, number, reads=1, moves=0)
            _check_state(source, declared, number, tokens)
            _check_state(target, declared, number, tokens)
            sym = reads[0]
            if sym not in alphabet:
                raise ParseError(f"unknown symbol {sym!r}", number)
            if (source, sym) in delta_dfa:
                raise ParseError(f"duplicate transition key ({source}, {sym})", number)
            delta_dfa[(source, sym)] = target
        return ClassicalDFA(states, alphabet, start, finals, delta_dfa)

    if kind == "mfa":
        if "heads" not in headers:
            raise ParseError("missing 'heads:' directive")
        number, tokens = headers["heads"]
        raw = _single(tokens, number, "heads")
        if not raw.isdigit() or int(raw) < 1:
            raise ParseError(f"head count must be a positive integer, got {raw!r}", number)
        k = int(raw)
        allowed = set(alphabet) | set(END_MARKERS)
        delta_mfa: dict[tuple[str, tuple[str, ...]], tuple[str, tuple[int, ...]]] = {}
        for number, tokens in trans_lines:
            source, reads, target, moves = _split_trans(tokens, number, reads=k, moves=k)
            _check_state(source, declared, number, tokens)
            _check_state(target, declared, number, tokens)
            for sym in reads:
                if sym not in allowed:
                    raise ParseError(f"unknown symbol {sym!r}", number)
            key = (source, tuple(reads))
            if key in delta_mfa:
                raise ParseError(
                    f"duplicate transition key ({source}, {' '.join(reads)})", number
                )
            delta_mfa[key] = (target, tuple(moves))
        return MultiHeadAutomaton(states, alphabet, k, start, finals, delta_mfa)

    pairs: list[tuple[str, str]] = []
    for number, tokens in rho_lines:
        for tok, col in tokens:
            lhs, arrow, rhs = tok.partition("->")
            if not arrow or not lhs or not rhs:
                raise ParseError(f"expected 'x->y' pair, got {tok!r}", number, col)
            if lhs not in alphabet:
                raise ParseError(f"unknown symbol {lhs!r} in rho pair", number, col)
            if not is_valid_token(rhs):
                raise ParseError(f"invalid symbol name {rhs!r} in rho pair", number, col)
            pairs.append((lhs, rhs))
    rho = ComplementarityRelation.from_pairs(pairs)
    lower = set(rho.lower_symbols) | set(END_MARKERS)
    upper = set(alphabet) | set(END_MARKERS)
    delta_wk: dict[tuple[str, str, str], tuple[str, int, int]] = {}
    for number, tokens in trans_lines:
        source, reads, target, moves = _split_trans(tokens, number, reads=2, moves=2)
        _check_state(source, declared, number, tokens)
        _check_state(target, declared, number, tokens)
        if reads[0] not in upper:
            raise ParseError(f"unknown upper symbol {reads[0]!r}", number)
        if reads[1] not in lower:
            raise ParseError(f"unknown lower symbol {reads[1]!r}", number)
        key = (source, reads[0], reads[1])
        if key in delta_wk:
            raise ParseError(
                f"duplicate transition key ({source}, {reads[0]}, {reads[1]})", number
            )
        delta_wk[key] = (target, moves[0], moves[1])
    return WKAutomaton(states, alphabet, start, finals, rho, delta_wk)


def _split_trans(tokens, number: int, reads: int, moves: int):
    plain = [tok for tok, _ in tokens]
    if plain.count("->") != 1:
        raise ParseError("transition needs exactly one '->'", number)
    cut = plain.index("->")
    lhs, rhs = plain[:cut], plain[cut + 1 :]
    if len(lhs) != 1 + reads:
        raise ParseError(
            f"expected a source state and {reads} read symbol(s) before '->'", number
        )
    if len(rhs) != 1 + moves:
        raise ParseError(
            f"expected a target state and {moves} displacement(s) after '->'", number
        )
    for d in rhs[1:]:
        if d not in ("0", "1"):
            raise ParseError(f"displacement must be 0 or 1, got {d!r}", number)
    return lhs[0], lhs[1:], rhs[0], [int(d) for d in rhs[1:]]


def _check_state(name: str, declared: set[str], number: int, tokens) -> None:
    if name not in declared:
        col = next((c for t, c in tokens if t == name), None)
        raise ParseError(f"unknown state {name!r}", number, col)


def _read_sort_key(reads: Sequence[str]):
    def category(sym: str) -> tuple[int, str]:
        if sym == LEFT_END:
            return (0, sym)
        if sym == RIGHT_END:
            return (2, sym)
        return (1, sym)

    return tuple(category(sym) for sym in reads)


def serialize_machine(machine: Machine) -> str:
    """Canonical text for a validated machine; round-trips exactly."""
    report = validate(machine)
    if not report.passed:
        raise InvalidMachineError(report, "machine to serialize")

    state_index = {q: i for i, q in enumerate(machine.states)}
    lines = []
    if isinstance(machine, WKAutomaton):
        lines.append("type: wk")
    elif isinstance(machine, MultiHeadAutomaton):
        lines.append("type: mfa")
    else:
        lines.append("type: dfa")
    lines.append("states: " + " ".join(machine.states))
    lines.append("start: " + machine.start)
    finals = sorted(machine.finals, key=state_index.__getitem__)
    lines.append(("final: " + " ".join(finals)).rstrip())

    if isinstance(machine, WKAutomaton):
        lines.append("alphabet: " + " ".join(machine.upper_alphabet))
        pairs = [
            f"{x}->{y}" for x in machine.upper_alphabet for y in machine.rho.image(x)
        ]
        lines.append(("rho: " + " ".join(pairs)).rstrip())
        entries = sorted(
            machine.delta.items(),
            key=lambda kv: (state_index[kv[0][0]], _read_sort_key(kv[0][1:])),
        )
        for (q, u, l), (t, d1, d2) in entries:
            lines.append(f"trans: {q} {u} {l} -> {t} {d1} {d2}")
    elif isinstance(machine, MultiHeadAutomaton):
        lines.append("alphabet: " + " ".join(machine.alphabet))
        lines.append(f"heads: {machine.head_count}")
        entries = sorted(
            machine.delta.items(),
            key=lambda kv: (state_index[kv[0][0]], _read_sort_key(kv[0][1])),
        )
        for (q, reads), (t, moves) in entries:
            lines.append(
                f"trans: {q} {' '.join(reads)} -> {t} {' '.join(str(d) for d in moves)}"
            )
    else:
        lines.append("alphabet: " + " ".join(machine.alphabet))
        entries = sorted(
            machine.delta.items(),
            key=lambda kv: (state_index[kv[0][0]], _read_sort_key((kv[0][1],))),
        )
        for (q, x), t in entries:
            lines.append(f"trans: {q} {x} -> {t}")
    return "\n".join(lines) + "\n"


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    """Parse a command-line word.

    When every alphabet token is a single character the word is their
    plain concatenation; otherwise symbols are comma separated.  The empty
    string is the empty word.
    """
    if text == "":
        return ()
    if all(len(sym) == 1 for sym in alphabet):
        word = tuple(text)
    else:
        word = tuple(text.split(","))
    allowed = set(alphabet)
    for sym in word:
        if sym not in allowed:
            raise UnknownSymbolError(f"symbol {sym!r} is not in the alphabet")
    return word


def render_word(word: Sequence[str], alphabet: Sequence[str]) -> str:
    """Inverse of ``parse_word`` under the same alphabet convention."""
    if all(len(sym) == 1 for sym in alphabet):
        return "".join(word)
    return ",".join(word)
