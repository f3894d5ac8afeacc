"""Line-oriented text format for DFAs and NFAs.

DFA files look like::

    alphabet: a b
    states: 3
    initial: 0
    final: 0 1
    0 a 1
    0 b 2
    ...

`#` starts a comment. Every (state, letter) transition must be present
(completeness is checked on load). NFA files use ``initials:`` (plural),
may repeat transition lines, and use the letter ``~`` for epsilon edges.
"""

from __future__ import annotations

import io
from typing import Iterable, TextIO

from .automata import Dfa, Nfa


class FormatError(ValueError):
    """Malformed automaton file; carries the 1-based line number."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _parse_lines(lines: Iterable[str]):
    headers: dict[str, tuple[str, int]] = {}
    transitions: list[tuple[str, str, str, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            key, _, value = line.partition(":")
            key = key.strip()
            if key in headers:
                raise FormatError(f"duplicate header {key!r}", lineno)
            headers[key] = (value.strip(), lineno)
        else:
            parts = line.split()
            if len(parts) != 3:
                raise FormatError(f"expected 'FROM LETTER TO', got {line!r}", lineno)
            transitions.append((parts[0], parts[1], parts[2], lineno))
    return headers, transitions


def _require(headers, key: str):
    if key not in headers:
        raise FormatError(f"missing header {key!r}", 0)
    return headers[key]


def _int_list(value: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in value.split()]
    except ValueError:
        raise FormatError(f"expected integers, got {value!r}", lineno) from None


def load_dfa(source: TextIO | str) -> Dfa:
    if isinstance(source, str):
        source = io.StringIO(source)
    headers, transitions = _parse_lines(source)
    alphabet_raw, alineno = _require(headers, "alphabet")
    alphabet = tuple(alphabet_raw.split())
    if not alphabet:
        raise FormatError("empty alphabet", alineno)
    nvalue, nlineno = _require(headers, "states")
    n = _int_list(nvalue, nlineno)[0]
    ivalue, ilineno = _require(headers, "initial")
    initial = _int_list(ivalue, ilineno)[0]
    fvalue, flineno = _require(headers, "final")
    finals = frozenset(_int_list(fvalue, flineno))
    table: list[list[int | None]] = [[None] * len(alphabet) for _ in range(n)]
    for src, letter, dst, lineno in transitions:
        if letter not in alphabet:
            raise FormatError(f"letter {letter!r} not in alphabet", lineno)
        try:
            s, t = int(src), int(dst)
        except ValueError:
            raise FormatError(f"bad state in {src!r} {letter} {dst!r}", lineno) from None
        if not (0 <= s < n and 0 <= t < n):
            raise FormatError(f"state out of range in {src} {letter} {dst}", lineno)
        x = alphabet.index(letter)
        if table[s][x] is not None:
            raise FormatError(f"duplicate transition {s} {letter}", lineno)
        table[s][x] = t
    for s in range(n):
        for x, a in enumerate(alphabet):
            if table[s][x] is None:
                raise FormatError(f"missing transition {s} {a} (DFA must be complete)", 0)
    return Dfa(alphabet, n, tuple(tuple(row) for row in table), initial, finals)  # type: ignore[arg-type]


def load_nfa(source: TextIO | str) -> Nfa:
    if isinstance(source, str):
        source = io.StringIO(source)
    headers, transitions = _parse_lines(source)
    alphabet_raw, alineno = _require(headers, "alphabet")
    alphabet = tuple(alphabet_raw.split())
    if not alphabet:
        raise FormatError("empty alphabet", alineno)
    nvalue, nlineno = _require(headers, "states")
    n = _int_list(nvalue, nlineno)[0]
    ivalue, ilineno = _require(headers, "initials")
    initials = frozenset(_int_list(ivalue, ilineno))
    fvalue, flineno = _require(headers, "final")
    finals = frozenset(_int_list(fvalue, flineno))
    edges: dict[tuple[int, str], set[int]] = {}
    for src, letter, dst, lineno in transitions:
        if letter != "~" and letter not in alphabet:
            raise FormatError(f"letter {letter!r} not in alphabet", lineno)
        try:
            s, t = int(src), int(dst)
        except ValueError:
            raise FormatError(f"bad state in {src!r} {letter} {dst!r}", lineno) from None
        if not (0 <= s < n and 0 <= t < n):
            raise FormatError(f"state out of range in {src} {letter} {dst}", lineno)
        edges.setdefault((s, "" if letter == "~" else letter), set()).add(t)
    return Nfa.from_dict(alphabet, n, edges, initials, finals)


def dump_dfa(dfa: Dfa, comment: str | None = None) -> str:
    out = []
    if comment:
        for line in comment.splitlines():
            out.append(f"# {line}")
    out.append("alphabet: " + " ".join(dfa.alphabet))
    out.append(f"states: {dfa.n}")
    out.append(f"initial: {dfa.initial}")
    out.append("final: " + " ".join(str(s) for s in sorted(dfa.finals)))
    for s in range(dfa.n):
        for x, a in enumerate(dfa.alphabet):
            out.append(f"{s} {a} {dfa.delta[s][x]}")
    return "\n".join(out) + "\n"


def dump_nfa(nfa: Nfa, comment: str | None = None) -> str:
    out = []
    if comment:
        for line in comment.splitlines():
            out.append(f"# {line}")
    out.append("alphabet: " + " ".join(nfa.alphabet))
    out.append(f"states: {nfa.n}")
    out.append("initials: " + " ".join(str(s) for s in sorted(nfa.initials)))
    out.append("final: " + " ".join(str(s) for s in sorted(nfa.finals)))
    for s in range(nfa.n):
        for x, a in enumerate(nfa.alphabet):
            for t in sorted(nfa.delta[s][x]):
                out.append(f"{s} {a} {t}")
        for t in sorted(nfa.eps[s]):
            out.append(f"{s} ~ {t}")
    return "\n".join(out) + "\n"
