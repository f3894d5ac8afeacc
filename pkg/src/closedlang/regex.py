"""Regular expression syntax trees, a textual parser, and the NFA frontend.

Textual syntax: `∅` (or `0`), `ε` (or `1`), letters of the declared alphabet,
`∪` (or `|` or `+`) for union, juxtaposition for product, postfix `*`, and
parentheses. Precedence: star > product > union. The ASCII fallbacks `0`/`1`
are treated as letters when they belong to the alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .automata import AlphabetError, Language, Nfa, check_alphabet, determinize


class Regex:
    """Base class of regex syntax nodes."""

    def __or__(self, other: "Regex") -> "Regex":
        return Union(self, other)

    def __add__(self, other: "Regex") -> "Regex":
        return Concat(self, other)

    def star(self) -> "Regex":
        return Star(self)


@dataclass(frozen=True)
class EmptySet(Regex):
    pass


@dataclass(frozen=True)
class Epsilon(Regex):
    pass


@dataclass(frozen=True)
class Sym(Regex):
    letter: str


@dataclass(frozen=True)
class Union(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Concat(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Star(Regex):
    body: Regex


def union_all(parts: Iterable[Regex]) -> Regex:
    parts = list(parts)
    if not parts:
        return EmptySet()
    expr = parts[0]
    for p in parts[1:]:
        expr = Union(expr, p)
    return expr


def concat_all(parts: Iterable[Regex]) -> Regex:
    parts = list(parts)
    if not parts:
        return Epsilon()
    expr = parts[0]
    for p in parts[1:]:
        expr = Concat(expr, p)
    return expr


def word_regex(word: str) -> Regex:
    return concat_all(Sym(a) for a in word)


class RegexSyntaxError(ValueError):
    """Malformed textual regex; carries the 0-based offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_UNION_CHARS = {"∪", "|", "+"}


class _Parser:
    def __init__(self, text: str, alphabet: tuple[str, ...]):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def peek(self) -> str | None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self) -> Regex:
        expr = self.union()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return expr

    def union(self) -> Regex:
        expr = self.concat()
        while self.peek() in _UNION_CHARS and self.text[self.pos] not in self.alphabet:
            self.pos += 1
            expr = Union(expr, self.concat())
        return expr

    def concat(self) -> Regex:
        parts = [self.starred()]
        while True:
            c = self.peek()
            if c is None or c == ")" or (c in _UNION_CHARS and c not in self.alphabet):
                break
            parts.append(self.starred())
        return concat_all(parts)

    def starred(self) -> Regex:
        expr = self.atom()
        while self.peek() == "*":
            self.pos += 1
            expr = Star(expr)
        return expr

    def atom(self) -> Regex:
        c = self.peek()
        if c is None:
            raise RegexSyntaxError("unexpected end of input", self.pos)
        if c == "(":
            self.pos += 1
            expr = self.union()
            if self.peek() != ")":
                raise RegexSyntaxError("missing ')'", self.pos)
            self.pos += 1
            return expr
        if c in self.alphabet:
            self.pos += 1
            return Sym(c)
        if c in ("∅", "0"):
            self.pos += 1
            return EmptySet()
        if c in ("ε", "1"):
            self.pos += 1
            return Epsilon()
        if c == ")":
            raise RegexSyntaxError("unmatched ')'", self.pos)
        raise RegexSyntaxError(f"letter {c!r} outside alphabet", self.pos)


def parse_regex(text: str, alphabet: Iterable[str]) -> Regex:
    return _Parser(text, check_alphabet(alphabet)).parse()


def thompson_nfa(expr: Regex, alphabet: tuple[str, ...]) -> Nfa:
    """Thompson construction: one initial, one final, epsilon edges."""
    edges: dict[tuple[int, str], set[int]] = {}
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def add(s: int, a: str, t: int) -> None:
        edges.setdefault((s, a), set()).add(t)

    def build(e: Regex) -> tuple[int, int]:
        start, end = fresh(), fresh()
        if isinstance(e, EmptySet):
            pass
        elif isinstance(e, Epsilon):
            add(start, "", end)
        elif isinstance(e, Sym):
            if e.letter not in alphabet:
                raise AlphabetError(f"letter {e.letter!r} outside alphabet {alphabet!r}")
            add(start, e.letter, end)
        elif isinstance(e, Union):
            for sub in (e.left, e.right):
                s, t = build(sub)
                add(start, "", s)
                add(t, "", end)
        elif isinstance(e, Concat):
            s1, t1 = build(e.left)
            s2, t2 = build(e.right)
            add(start, "", s1)
            add(t1, "", s2)
            add(t2, "", end)
        elif isinstance(e, Star):
            s, t = build(e.body)
            add(start, "", s)
            add(t, "", s)
            add(start, "", end)
            add(t, "", end)
        else:
            raise TypeError(f"not a Regex node: {e!r}")
        return start, end

    start, end = build(expr)
    return Nfa.from_dict(alphabet, counter[0], edges, {start}, {end}, epsilon=True)


def regex_to_language(expr: Regex | str, alphabet: Iterable[str]) -> Language:
    """Canonical Language of a regex (given as a tree or as text)."""
    letters = check_alphabet(alphabet)
    if isinstance(expr, str):
        expr = parse_regex(expr, letters)
    return Language.from_dfa(determinize(thompson_nfa(expr, letters)))
