"""Independent brute-force ground truths and differential comparison.

Nothing here knows about the two-strand engines: DFA evaluation is plain
left-to-right, the block-language membership test works straight off the
language definition, and the word enumerators are exhaustive.  That makes
these functions usable as oracles against the machine constructions.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass

from .machines import ClassicalDFA, UnknownSymbolError

Word = tuple[str, ...]

BLOCK_ALPHABET = ("a", "b", "*", "%")
_BLOCK_CONTENT = ("a", "b")


class AcceptorFailure(Exception):
    """An acceptor raised while comparing; carries the offending word."""

    def __init__(self, side: str, word: Word, cause: Exception):
        self.side = side
        self.word = word
        super().__init__(f"acceptor {side} failed on word {word!r}: {cause}")


def dfa_accepts(dfa: ClassicalDFA, word: Sequence[str]) -> bool:
    """Standard DFA evaluation; a missing transition rejects."""
    alphabet = set(dfa.alphabet)
    state = dfa.start
    for sym in word:
        if sym not in alphabet:
            raise UnknownSymbolError(f"symbol {sym!r} is not in the alphabet")
        found = dfa.delta.get((state, sym))
        if found is None:
            return False
        state = found
    return state in dfa.finals


def theorem2_blocks(word: Sequence[str]) -> list[tuple[str, str]] | None:
    """Parse ``w1*x1%...%wn*xn`` into (w, x) pairs, or None if malformed.

    Well-formed means: '%'-separated blocks, exactly one '*' per block, and
    block content over {a, b}.  A leading or trailing '%' creates an empty
    block and is therefore malformed.  The empty word is the well-formed
    zero-block case.
    """
    if not word:
        return []
    blocks: list[list[str]] = [[]]
    for sym in word:
        if sym == "%":
            blocks.append([])
        else:
            blocks[-1].append(sym)
    pairs = []
    for block in blocks:
        if block.count("*") != 1:
            return None
        cut = block.index("*")
        w, x = block[:cut], block[cut + 1 :]
        if any(sym not in _BLOCK_CONTENT for sym in w + x):
            return None
        pairs.append(("".join(w), "".join(x)))
    return pairs


def theorem2_witnesses(word: Sequence[str]) -> tuple[tuple[int, int], ...]:
    """All 1-based block index pairs (i, j), i < j, with w_i = w_j, x_i != x_j."""
    pairs = theorem2_blocks(word)
    if pairs is None:
        return ()
    return tuple(
        (i + 1, j + 1)
        for i in range(len(pairs))
        for j in range(i + 1, len(pairs))
        if pairs[i][0] == pairs[j][0] and pairs[i][1] != pairs[j][1]
    )


def theorem2_member(word: Sequence[str]) -> bool:
    """Membership in the block language: some two blocks share the w part
    but differ in the x part.  Malformed words are simply non-members."""
    return bool(theorem2_witnesses(word))


def enumerate_words(alphabet: Sequence[str], max_len: int) -> Iterator[Word]:
    """All words of length 0..max_len, shortest first, then lexicographic
    by the declared symbol order."""
    for length in range(max_len + 1):
        yield from itertools.product(tuple(alphabet), repeat=length)


def _block_words_of_length(length: int, max_blocks: int) -> list[Word]:
    order = {sym: i for i, sym in enumerate(BLOCK_ALPHABET)}
    words: list[Word] = []
    for blocks in range(1, max_blocks + 1):
        content = length - (2 * blocks - 1)
        if content < 0:
            continue
        # Distribute the content length over the 2*blocks w/x parts.
        for split in itertools.combinations(range(content + 2 * blocks - 1), 2 * blocks - 1):
            part_lengths = []
            prev = -1
            for cut in split:
                part_lengths.append(cut - prev - 1)
                prev = cut
            part_lengths.append(content + 2 * blocks - 2 - prev)
            for parts in itertools.product(
                *(itertools.product(_BLOCK_CONTENT, repeat=n) for n in part_lengths)
            ):
                word: list[str] = []
                for i in range(blocks):
                    if i:
                        word.append("%")
                    word.extend(parts[2 * i])
                    word.append("*")
                    word.extend(parts[2 * i + 1])
                words.append(tuple(word))
    words.sort(key=lambda w: tuple(order[sym] for sym in w))
    return words


def enumerate_block_strings(max_total_len: int, max_blocks: int) -> Iterator[Word]:
    """All well-formed block words up to the given total length and block
    count, shortest first, then lexicographic under the order a, b, *, %."""
    if max_blocks < 1:
        return
    for length in range(1, max_total_len + 1):
        yield from _block_words_of_length(length, max_blocks)


@dataclass(frozen=True)
class LengthStats:
    words: int
    agreements: int
    a_only: int
    b_only: int


@dataclass(frozen=True)
class DiffReport:
    """Per-length agreement counts plus a capped list of mismatches.

    ``mismatches`` holds (word, side) pairs where side names the acceptor
    that accepted; totals stay exact even when the list is truncated.
    """

    max_len: int
    per_length: dict[int, LengthStats]
    mismatches: tuple[tuple[Word, str], ...]
    truncated: bool
    cap: int

    @property
    def total_words(self) -> int:
        return sum(s.words for s in self.per_length.values())

    @property
    def total_mismatches(self) -> int:
        return sum(s.a_only + s.b_only for s in self.per_length.values())

    def to_text(self, render: Callable[[Word], str] | None = None) -> str:
        render = render or _default_render
        lines = [f"{'length':>6} {'words':>8} {'agree':>8} {'a-only':>8} {'b-only':>8}"]
        for length in sorted(self.per_length):
            s = self.per_length[length]
            lines.append(
                f"{length:>6} {s.words:>8} {s.agreements:>8} {s.a_only:>8} {s.b_only:>8}"
            )
        lines.append(
            f"{'total':>6} {self.total_words:>8}"
            f" {sum(s.agreements for s in self.per_length.values()):>8}"
            f" {sum(s.a_only for s in self.per_length.values()):>8}"
            f" {sum(s.b_only for s in self.per_length.values()):>8}"
        )
        if not self.mismatches:
            lines.append("mismatches: none")
        else:
            shown = len(self.mismatches)
            suffix = f" (showing {shown} of {self.total_mismatches})" if self.truncated else ""
            lines.append(f"mismatches{suffix}:")
            for word, side in self.mismatches:
                lines.append(f"  {side}-only: {render(word)}")
        return "\n".join(lines)

    def to_tsv(self, render: Callable[[Word], str] | None = None) -> str:
        render = render or _default_render
        lines = []
        for length in sorted(self.per_length):
            s = self.per_length[length]
            lines.append(f"len\t{length}\t{s.words}\t{s.agreements}\t{s.a_only}\t{s.b_only}")
        lines.append(
            f"total\t{self.total_words}"
            f"\t{sum(s.agreements for s in self.per_length.values())}"
            f"\t{sum(s.a_only for s in self.per_length.values())}"
            f"\t{sum(s.b_only for s in self.per_length.values())}"
        )
        for word, side in self.mismatches:
            lines.append(f"mismatch\t{side}\t{render(word)}")
        if self.truncated:
            lines.append(f"mismatches-truncated\t{self.total_mismatches}")
        return "\n".join(lines)


def _default_render(word: Word) -> str:
    if all(len(sym) == 1 for sym in word):
        return "".join(word)
    return ",".join(word)


def differential_compare(
    accept_a: Callable[[Word], bool],
    accept_b: Callable[[Word], bool],
    words: Iterable[Sequence[str]],
    *,
    mismatch_cap: int = 100,
) -> DiffReport:
    """Evaluate both acceptors on every word and aggregate per length."""
    counts: dict[int, list[int]] = {}
    mismatches: list[tuple[Word, str]] = []
    truncated = False
    max_len = 0
    for raw in words:
        word = tuple(raw)
        max_len = max(max_len, len(word))
        row = counts.setdefault(len(word), [0, 0, 0, 0])
        row[0] += 1
        try:
            in_a = bool(accept_a(word))
        except Exception as exc:  # noqa: BLE001 - reported with the word attached
            raise AcceptorFailure("a", word, exc) from exc
        try:
            in_b = bool(accept_b(word))
        except Exception as exc:  # noqa: BLE001
            raise AcceptorFailure("b", word, exc) from exc
        if in_a == in_b:
            row[1] += 1
        else:
            row[2 if in_a else 3] += 1
            if len(mismatches) < mismatch_cap:
                mismatches.append((word, "a" if in_a else "b"))
            else:
                truncated = True
    per_length = {
        length: LengthStats(words=row[0], agreements=row[1], a_only=row[2], b_only=row[3])
        for length, row in sorted(counts.items())
    }
    return DiffReport(
        max_len=max_len,
        per_length=per_length,
        mismatches=tuple(mismatches),
        truncated=truncated,
        cap=mismatch_cap,
    )
