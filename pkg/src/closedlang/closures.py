"""Prefix-, suffix-, factor- and subword-closure of regular languages.

"Subword" here means subsequence. The constructions work on the trimmed
canonical DFA: a state is *non-empty* if some final state is reachable from
it, and the (unique, if present) empty state of the minimal machine is the
rejecting sink.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .automata import (
    Dfa,
    Language,
    Nfa,
    determinize,
    empty_language,
    is_equivalent,
    universal_language,
)
from .ops import complement


class ClosureKind(enum.Enum):
    PREFIX = "prefix"
    SUFFIX = "suffix"
    FACTOR = "factor"
    SUBWORD = "subword"


#: closed class <-> ideal class duality: prefix<->right, suffix<->left,
#: factor<->two-sided, subword<->all-sided
IDEAL_NAME = {
    ClosureKind.PREFIX: "right",
    ClosureKind.SUFFIX: "left",
    ClosureKind.FACTOR: "two-sided",
    ClosureKind.SUBWORD: "all-sided",
}


def _trim_parts(lang: Language) -> tuple[set[int], set[int]]:
    """(non-empty states, empty states) of the canonical DFA (all reachable)."""
    live = lang.dfa.nonempty_states()
    return live, set(range(lang.dfa.n)) - live


def closure(kind: ClosureKind, lang: Language) -> Language:
    d = lang.dfa
    live, dead = _trim_parts(lang)
    if not live:  # L is empty; every closure of the empty language is empty
        return empty_language(d.alphabet)

    if kind is ClosureKind.PREFIX:
        # make every non-empty state accepting; stays deterministic
        return Language.from_dfa(Dfa(d.alphabet, d.n, d.delta, d.initial, frozenset(live)))

    k = len(d.alphabet)

    if kind in (ClosureKind.SUFFIX, ClosureKind.FACTOR):
        # all non-empty states initial; for factor also all accepting;
        # transitions into empty states are dropped (the trimmed machine)
        delta = tuple(
            tuple(
                frozenset({d.delta[s][x]}) if d.delta[s][x] in live else frozenset()
                for x in range(k)
            )
            if s in live
            else (frozenset(),) * k
            for s in range(d.n)
        )
        finals = frozenset(live) if kind is ClosureKind.FACTOR else d.finals & live
        nfa = Nfa(d.alphabet, d.n, delta, frozenset(live), finals)
        return Language.from_dfa(determinize(nfa))

    # subword: no empty state means the closure is all of Sigma*
    if not dead:
        return universal_language(d.alphabet)
    # delete empty states; add an epsilon edge parallel to every letter edge
    delta = tuple(
        tuple(
            frozenset({d.delta[s][x]}) if d.delta[s][x] in live else frozenset()
            for x in range(k)
        )
        if s in live
        else (frozenset(),) * k
        for s in range(d.n)
    )
    eps = tuple(
        frozenset(t for t in d.delta[s] if t in live) if s in live else frozenset()
        for s in range(d.n)
    )
    nfa = Nfa(
        d.alphabet,
        d.n,
        delta,
        frozenset({d.initial}),
        d.finals & live,
        eps=eps,
        epsilon=True,
    )
    return Language.from_dfa(determinize(nfa))


def is_closed(kind: ClosureKind, lang: Language) -> bool:
    """Closure-fixpoint test: L is kind-closed iff its closure equals L."""
    return is_equivalent(closure(kind, lang), lang)


def is_ideal(kind: ClosureKind, lang: Language) -> bool:
    """Ideal test via duality: non-empty L whose complement is kind-closed.

    ``kind`` names the dual closed class: prefix for right ideals, suffix for
    left, factor for two-sided, subword for all-sided.
    """
    if lang.is_empty():
        return False
    return is_closed(kind, complement(lang))


class UnaryClass(enum.Enum):
    EMPTY = "empty"
    FULL_UNARY = "full-unary"
    FINITE_RANGE = "finite-range"


@dataclass(frozen=True)
class UnaryClassification:
    kind: UnaryClass
    n: int | None = None  # complexity parameter for the finite range {a^i : i <= n-2}


def classify_unary_closed(lang: Language) -> UnaryClassification:
    """Classify a closed unary language: empty, a*, or {a^i : i <= n-2}."""
    if len(lang.alphabet) != 1:
        raise ValueError(f"not a unary language: alphabet {lang.alphabet!r}")
    # on a one-letter alphabet the four closed classes coincide
    if not is_closed(ClosureKind.PREFIX, lang):
        raise ValueError("language is not closed")
    if lang.is_empty():
        return UnaryClassification(UnaryClass.EMPTY)
    if lang.is_universal():
        return UnaryClassification(UnaryClass.FULL_UNARY)
    return UnaryClassification(UnaryClass.FINITE_RANGE, n=lang.complexity)


def closed_kinds(lang: Language) -> list[ClosureKind]:
    return [kind for kind in ClosureKind if is_closed(kind, lang)]


def ideal_kinds(lang: Language) -> list[ClosureKind]:
    return [kind for kind in ClosureKind if is_ideal(kind, lang)]
