"""Command-line surface: check, run, construct, translate, compare, enumerate.

Exit codes are uniform across subcommands: 0 for a passing check, an
accepting run, or a mismatch-free comparison; 1 for the failing or
rejecting counterpart; 2 for unusable input (bad flags, parse errors, or
machines that do not satisfy an operation's precondition).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import construct, engine, fileformat, oracle
from .machines import (
    CheckReport,
    ClassicalDFA,
    MachineError,
    MultiHeadAutomaton,
    WKAutomaton,
    check_reversibility_mfa,
    check_reversibility_wk,
    check_strong_reversibility,
    validate,
)

USAGE_ERROR = 2


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MachineError(f"cannot read {path}: {exc}") from exc
    return fileformat.parse_machine(text)


def _print_report(name: str, report: CheckReport) -> None:
    print(f"{name}: {'pass' if report.passed else 'fail'}")
    for violation in report.violations:
        print(f"  {violation}")


def _cmd_check(args) -> int:
    machine = _load(args.file)
    reports: dict[str, CheckReport] = {"validate": validate(machine)}
    if isinstance(machine, WKAutomaton):
        reports["reversible"] = check_reversibility_wk(machine)
        reports["strongly-reversible"] = check_strong_reversibility(machine)
    elif isinstance(machine, MultiHeadAutomaton):
        reports["reversible"] = check_reversibility_mfa(machine)

    require = args.require
    if require is None:
        require = "valid" if isinstance(machine, ClassicalDFA) else "reversible"
    if require not in ("valid", "reversible", "strong"):
        raise MachineError(f"unknown requirement {require!r}")
    if require != "valid" and isinstance(machine, ClassicalDFA):
        raise MachineError("a dfa has no reversibility checker; use --require valid")
    if require == "strong" and not isinstance(machine, WKAutomaton):
        raise MachineError("strong reversibility only applies to wk machines")

    for name, report in reports.items():
        _print_report(name, report)
    for note in reports["validate"].notes:
        print(f"note: {note}")

    needed = ["validate"]
    if require in ("reversible", "strong"):
        needed.append("reversible")
    if require == "strong":
        needed.append("strongly-reversible")
    return 0 if all(reports[name].passed for name in needed) else 1


def _trace_lines(outcome: engine.RunOutcome) -> list[str]:
    lines = []
    for config, (q, reads, t, moves) in outcome.trace:
        positions = " ".join(str(p) for p in config.positions)
        lines.append(
            f"  [{q} @ {positions}] reads ({' '.join(reads)})"
            f" -> {t} moves ({' '.join(str(d) for d in moves)})"
        )
    final = " ".join(str(p) for p in outcome.final.positions)
    ending = "loop" if outcome.verdict is engine.Verdict.INFINITE_LOOP else "halt"
    lines.append(f"  [{outcome.final.state} @ {final}] {ending}")
    return lines


def _cmd_run(args) -> int:
    machine = _load(args.file)
    if isinstance(machine, ClassicalDFA):
        if args.lower is not None or args.trace:
            raise MachineError("--lower and --trace do not apply to dfa machines")
        word = fileformat.parse_word(args.word, machine.alphabet)
        accepted = oracle.dfa_accepts(machine, word)
        print("accept" if accepted else "reject")
        return 0 if accepted else 1

    if isinstance(machine, MultiHeadAutomaton):
        if args.lower is not None:
            raise MachineError("--lower does not apply to mfa machines")
        word = fileformat.parse_word(args.word, machine.alphabet)
        outcome = engine.run_mfa(machine, word, keep_trace=args.trace)
        print(outcome.verdict.value)
        if args.trace:
            print("\n".join(_trace_lines(outcome)))
        return 0 if outcome.accepted else 1

    word = fileformat.parse_word(args.word, machine.upper_alphabet)
    if args.lower is not None:
        lower = fileformat.parse_word(args.lower, machine.lower_alphabet)
        outcome = engine.run_deterministic(machine, word, lower, keep_trace=args.trace)
        print(outcome.verdict.value)
        if args.trace:
            print("\n".join(_trace_lines(outcome)))
        return 0 if outcome.accepted else 1

    result = engine.accepts_existential(machine, word)
    if not result.accepted:
        print("reject")
        return 1
    print("accept")
    print("witness: " + fileformat.render_word(result.witness_lower, machine.lower_alphabet))
    if args.trace:
        outcome = engine.run_deterministic(machine, word, result.witness_lower, keep_trace=True)
        print("\n".join(_trace_lines(outcome)))
    return 0


def _translate(args, expect: type, operation, label: str) -> int:
    machine = _load(args.file)
    if not isinstance(machine, expect):
        raise MachineError(f"{label} expects a {expect.__name__} machine file")
    produced = operation(machine)
    Path(args.output).write_text(fileformat.serialize_machine(produced), encoding="utf-8")
    print(f"wrote {args.output}")
    return 0


def _acceptor(machine):
    if isinstance(machine, WKAutomaton):
        return engine.existential_acceptor(machine), machine.upper_alphabet
    if isinstance(machine, MultiHeadAutomaton):
        return (lambda word: engine.run_mfa(machine, word).accepted), machine.alphabet
    return (lambda word: oracle.dfa_accepts(machine, word)), machine.alphabet


def _cmd_compare(args) -> int:
    if (args.file_b is None) == (args.oracle is None):
        raise MachineError("compare needs either FILE_B or --oracle, not both")
    machine_a = _load(args.file_a)
    accept_a, alphabet = _acceptor(machine_a)

    if args.oracle is not None:
        if args.oracle == "theorem2":
            accept_b = oracle.theorem2_member
        elif args.oracle.startswith("dfa:"):
            machine_b = _load(args.oracle[len("dfa:") :])
            if not isinstance(machine_b, ClassicalDFA):
                raise MachineError("--oracle dfa:FILE expects a dfa machine file")
            accept_b, _ = _acceptor(machine_b)
        else:
            raise MachineError(f"unknown oracle {args.oracle!r}")
    else:
        machine_b = _load(args.file_b)
        accept_b, _ = _acceptor(machine_b)

    if args.blocks:
        words = oracle.enumerate_block_strings(args.max_len, args.max_blocks)
    else:
        words = oracle.enumerate_words(alphabet, args.max_len)

    report = oracle.differential_compare(accept_a, accept_b, words)
    render = lambda word: fileformat.render_word(word, alphabet)  # noqa: E731
    print(report.to_tsv(render) if args.format == "tsv" else report.to_text(render))
    return 0 if report.total_mismatches == 0 else 1


def _cmd_enumerate(args) -> int:
    machine = _load(args.file)
    accept, alphabet = _acceptor(machine)
    for word in oracle.enumerate_words(alphabet, args.max_len):
        if accept(word):
            print(fileformat.render_word(word, alphabet))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wka",
        description="Check, run, construct, translate, and compare two-strand "
        "(Watson-Crick), multi-head, and classical finite automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a machine file and run the reversibility checks")
    p.add_argument("file")
    p.add_argument("--require", choices=("valid", "reversible", "strong"), default=None)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("run", help="run a machine on a word")
    p.add_argument("file")
    p.add_argument("word")
    p.add_argument("--lower", default=None, help="fixed lower strand (wk only)")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(handler=_cmd_run)

    p = sub.add_parser("from-dfa", help="compile a dfa into a reversible wk machine")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=lambda args: _translate(args, ClassicalDFA, construct.dfa_to_rwka, "from-dfa"))

    p = sub.add_parser("to-mfa", help="translate a strongly reversible wk machine to a 2-head machine")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=lambda args: _translate(args, WKAutomaton, construct.swk_to_mfa2, "to-mfa"))

    p = sub.add_parser("from-mfa", help="translate a reversible 2-head machine to a wk machine")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=lambda args: _translate(args, MultiHeadAutomaton, construct.mfa2_to_swk, "from-mfa"))

    p = sub.add_parser("compare", help="differential sweep of two acceptors over bounded words")
    p.add_argument("file_a")
    p.add_argument("file_b", nargs="?", default=None)
    p.add_argument("--oracle", default=None, help="theorem2 | dfa:FILE")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--blocks", action="store_true", help="sweep well-formed block words instead")
    p.add_argument("--max-blocks", type=int, default=3)
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("enumerate", help="print the accepted words up to a length bound")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(handler=_cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except MachineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
