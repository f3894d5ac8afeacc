"""Shared oracles and generators for the test suite.

Everything here is deliberately independent of the library's own minimize /
subset-construction code paths: minimality via pairwise table-filling,
equivalence via double reversal, closure membership via reachability DP on
the raw DFA.
"""

from __future__ import annotations

import itertools
import random

from closedlang.automata import Dfa, Language, Nfa, determinize


def random_dfa(rng: random.Random, n: int, k: int, alphabet: tuple[str, ...] | None = None) -> Dfa:
    sigma = alphabet or tuple("abcdefgh"[:k])
    delta = tuple(tuple(rng.randrange(n) for _ in sigma) for _ in range(n))
    finals = frozenset(s for s in range(n) if rng.random() < 0.5)
    return Dfa(sigma, n, delta, 0, finals)


def random_nfa(rng: random.Random, n: int, k: int, density: float = 0.3) -> Nfa:
    sigma = tuple("abcdefgh"[:k])
    delta = tuple(
        tuple(frozenset(t for t in range(n) if rng.random() < density) for _ in sigma)
        for _ in range(n)
    )
    eps = tuple(frozenset(t for t in range(n) if t != s and rng.random() < 0.1) for s in range(n))
    initials = frozenset(s for s in range(n) if rng.random() < 0.4) or frozenset({0})
    finals = frozenset(s for s in range(n) if rng.random() < 0.4)
    return Nfa(sigma, n, delta, initials, finals, eps=eps, epsilon=True)


def words_upto(alphabet: tuple[str, ...], max_len: int):
    """All words of length <= max_len in shortlex order."""
    for length in range(max_len + 1):
        for tup in itertools.product(alphabet, repeat=length):
            yield "".join(tup)


# ---------------------------------------------------------------------------
# minimality oracle: table-filling (pairwise distinguishability)

def table_filling_kappa(dfa: Dfa) -> int:
    """Number of Myhill-Nerode classes among reachable states, computed by
    marking distinguishable pairs until fixpoint."""
    reach = sorted(dfa.reachable())
    marked: set[tuple[int, int]] = set()
    for p, q in itertools.combinations(reach, 2):
        if (p in dfa.finals) != (q in dfa.finals):
            marked.add((p, q))
    changed = True
    while changed:
        changed = False
        for p, q in itertools.combinations(reach, 2):
            if (p, q) in marked:
                continue
            for a in range(len(dfa.alphabet)):
                pp, qq = dfa.delta[p][a], dfa.delta[q][a]
                if pp == qq:
                    continue
                pair = (min(pp, qq), max(pp, qq))
                if pair in marked:
                    marked.add((p, q))
                    changed = True
                    break
    classes = 0
    rep: dict[int, int] = {}
    for s in reach:
        for t in rep:
            if (min(s, t), max(s, t)) not in marked:
                rep[s] = rep[t]
                break
        else:
            rep[s] = classes
            classes += 1
    return classes


# ---------------------------------------------------------------------------
# equivalence oracle: Brzozowski double reversal

def _reverse_nfa(dfa: Dfa) -> Nfa:
    k = len(dfa.alphabet)
    delta = [[set() for _ in range(k)] for _ in range(dfa.n)]
    for s in range(dfa.n):
        for a in range(k):
            delta[dfa.delta[s][a]][a].add(s)
    return Nfa(
        dfa.alphabet,
        dfa.n,
        tuple(tuple(frozenset(row) for row in rows) for rows in delta),
        initials=frozenset(dfa.finals),
        finals=frozenset({dfa.initial}),
    )


def brzozowski_minimal(dfa: Dfa) -> Dfa:
    """Minimal DFA via reverse-determinize-reverse-determinize."""
    once = determinize(_reverse_nfa(dfa))
    twice = determinize(_reverse_nfa(once))
    # drop unreachable subset states introduced by completion
    keep = sorted(twice.reachable())
    index = {s: i for i, s in enumerate(keep)}
    delta = tuple(
        tuple(index[twice.delta[s][a]] for a in range(len(twice.alphabet))) for s in keep
    )
    return Dfa(
        twice.alphabet,
        len(keep),
        delta,
        index[twice.initial],
        frozenset(index[s] for s in twice.finals if s in index),
    )


# ---------------------------------------------------------------------------
# closure membership oracles: reachability DP on the raw DFA

def _reach_any(dfa: Dfa, start: set[int]) -> set[int]:
    seen = set(start)
    stack = list(start)
    while stack:
        s = stack.pop()
        for a in range(len(dfa.alphabet)):
            t = dfa.delta[s][a]
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return seen


def _coaccessible(dfa: Dfa) -> set[int]:
    out = set(dfa.finals)
    changed = True
    while changed:
        changed = False
        for s in range(dfa.n):
            if s in out:
                continue
            if any(dfa.delta[s][a] in out for a in range(len(dfa.alphabet))):
                out.add(s)
                changed = True
    return out


def closure_member_oracle(kind: str, dfa: Dfa, word: str) -> bool:
    """Is ``word`` in the ``kind``-closure of the DFA's language?

    prefix: some extension of word is accepted.
    suffix: word is accepted from some state on an accepted run's path.
    factor: both sided.
    subword: word is a subsequence of some accepted word.
    """
    live = _coaccessible(dfa)
    letters = {a: i for i, a in enumerate(dfa.alphabet)}

    def step_set(states: set[int], c: str) -> set[int]:
        return {dfa.delta[s][letters[c]] for s in states}

    if kind == "prefix":
        s = dfa.initial
        for c in word:
            s = dfa.delta[s][letters[c]]
        return s in live
    if kind == "suffix":
        cur = _reach_any(dfa, {dfa.initial})
        for c in word:
            cur = step_set(cur, c)
        return bool(cur & set(dfa.finals))
    if kind == "factor":
        cur = _reach_any(dfa, {dfa.initial})
        for c in word:
            cur = step_set(cur, c)
        return bool(cur & live)
    if kind == "subword":
        cur = _reach_any(dfa, {dfa.initial})
        for c in word:
            cur = _reach_any(dfa, step_set(cur, c))
        return bool(cur & set(dfa.finals))
    raise ValueError(kind)


def language_set(lang: Language, max_len: int) -> set[str]:
    return set(lang.accepted_words(max_len))
