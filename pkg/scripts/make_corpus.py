#!/usr/bin/env python3
"""Regenerate the shipped corpus files deterministically.

The wk file for the (a+b)*a machine is the construction's own output and
doubles as the golden regression pin for the compiler; rerunning this
script must be a no-op on a clean checkout.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wkautomata import dfa_to_rwka, theorem2_machine
from wkautomata.fileformat import serialize_machine
from wkautomata.samples import (
    example1_dfa,
    identity_rho_wk,
    stationary_loop_wk,
    twohead_anbn1_mfa,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def main() -> int:
    CORPUS.mkdir(exist_ok=True)
    files = {
        "example1-dfa.dfa": example1_dfa(),
        "example1-rwka.wk": dfa_to_rwka(example1_dfa()),
        "theorem2.wk": theorem2_machine(),
        "identity-rho.wk": identity_rho_wk(),
        "twohead-anbn1.mfa": twohead_anbn1_mfa(),
        "loop.wk": stationary_loop_wk(),
    }
    for name, machine in files.items():
        path = CORPUS / name
        text = serialize_machine(machine)
        changed = not path.exists() or path.read_text(encoding="utf-8") != text
        path.write_text(text, encoding="utf-8")
        print(f"{'wrote' if changed else 'unchanged'} {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
