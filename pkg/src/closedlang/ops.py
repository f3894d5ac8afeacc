"""Regular operations on canonical Languages.

Boolean operations use the product construction; product, star and reversal
go through an epsilon-NFA and the subset construction. Quotient identities
for these operations are exercised as test properties, not used as the
implementation path.
"""

from __future__ import annotations

import enum

from .automata import (
    AlphabetError,
    Dfa,
    Language,
    Nfa,
    common_alphabet,
    determinize,
    is_equivalent,
)


class BooleanOp(enum.Enum):
    UNION = "union"
    INTERSECTION = "intersection"
    DIFFERENCE = "difference"
    SYMMETRIC_DIFFERENCE = "symmetric-difference"

    def combine(self, in_k: bool, in_l: bool) -> bool:
        if self is BooleanOp.UNION:
            return in_k or in_l
        if self is BooleanOp.INTERSECTION:
            return in_k and in_l
        if self is BooleanOp.DIFFERENCE:
            return in_k and not in_l
        return in_k != in_l


def complement(lang: Language) -> Language:
    dfa = lang.dfa
    finals = frozenset(range(dfa.n)) - dfa.finals
    # toggling finals on a minimal canonical DFA keeps it minimal and canonical
    return Language(Dfa(dfa.alphabet, dfa.n, dfa.delta, dfa.initial, finals))


def boolean(op: BooleanOp, k_lang: Language, l_lang: Language) -> Language:
    k_lang, l_lang = common_alphabet(k_lang, l_lang)
    a, b = k_lang.dfa, l_lang.dfa
    k = len(a.alphabet)
    pairs = [(s, t) for s in range(a.n) for t in range(b.n)]
    index = {p: i for i, p in enumerate(pairs)}
    delta = tuple(
        tuple(index[(a.delta[s][x], b.delta[t][x])] for x in range(k)) for (s, t) in pairs
    )
    finals = frozenset(
        index[(s, t)] for (s, t) in pairs if op.combine(s in a.finals, t in b.finals)
    )
    return Language.from_dfa(
        Dfa(a.alphabet, len(pairs), delta, index[(a.initial, b.initial)], finals)
    )


def union(k_lang: Language, l_lang: Language) -> Language:
    return boolean(BooleanOp.UNION, k_lang, l_lang)


def intersection(k_lang: Language, l_lang: Language) -> Language:
    return boolean(BooleanOp.INTERSECTION, k_lang, l_lang)


def difference(k_lang: Language, l_lang: Language) -> Language:
    return boolean(BooleanOp.DIFFERENCE, k_lang, l_lang)


def symmetric_difference(k_lang: Language, l_lang: Language) -> Language:
    return boolean(BooleanOp.SYMMETRIC_DIFFERENCE, k_lang, l_lang)


def product(k_lang: Language, l_lang: Language) -> Language:
    """Concatenation KL via an epsilon-NFA joining K's finals to L's initial."""
    k_lang, l_lang = common_alphabet(k_lang, l_lang)
    a, b = k_lang.dfa, l_lang.dfa
    nletters = len(a.alphabet)
    off = a.n  # states of L shifted by a.n
    delta = tuple(
        tuple(frozenset({a.delta[s][x]}) for x in range(nletters)) for s in range(a.n)
    ) + tuple(
        tuple(frozenset({off + b.delta[s][x]}) for x in range(nletters)) for s in range(b.n)
    )
    eps = tuple(
        frozenset({off + b.initial}) if s in a.finals else frozenset()
        for s in range(a.n)
    ) + tuple(frozenset() for _ in range(b.n))
    nfa = Nfa(
        alphabet=a.alphabet,
        n=a.n + b.n,
        delta=delta,
        initials=frozenset({a.initial}),
        finals=frozenset(off + s for s in b.finals),
        eps=eps,
        epsilon=True,
    )
    return Language.from_dfa(determinize(nfa))


def star(lang: Language) -> Language:
    """Kleene star via a fresh accepting initial state and epsilon back-edges."""
    d = lang.dfa
    k = len(d.alphabet)
    new = d.n  # fresh initial, accepting
    delta = tuple(
        tuple(frozenset({d.delta[s][x]}) for x in range(k)) for s in range(d.n)
    ) + ((frozenset(),) * k,)
    eps = tuple(
        frozenset({d.initial}) if s in d.finals else frozenset() for s in range(d.n)
    ) + (frozenset({d.initial}),)
    nfa = Nfa(
        alphabet=d.alphabet,
        n=d.n + 1,
        delta=delta,
        initials=frozenset({new}),
        finals=d.finals | {new},
        eps=eps,
        epsilon=True,
    )
    return Language.from_dfa(determinize(nfa))


def plus(lang: Language) -> Language:
    """Positive closure L+ = L L*."""
    return product(lang, star(lang))


def reverse(lang: Language) -> Language:
    """Reverse all edges, swap initial and finals, determinize."""
    d = lang.dfa
    k = len(d.alphabet)
    delta = [[set() for _ in range(k)] for _ in range(d.n)]
    for s in range(d.n):
        for x in range(k):
            delta[d.delta[s][x]][x].add(s)
    nfa = Nfa(
        alphabet=d.alphabet,
        n=d.n,
        delta=tuple(tuple(frozenset(ts) for ts in row) for row in delta),
        initials=d.finals,
        finals=frozenset({d.initial}),
    )
    return Language.from_dfa(determinize(nfa))


def residual(lang: Language, word: str) -> Language:
    """The quotient of L by a word: L's DFA re-rooted at the reached state."""
    d = lang.dfa
    for a in word:
        if a not in d.alphabet:
            raise AlphabetError(f"letter {a!r} not in alphabet {d.alphabet!r}")
    return Language.from_dfa(Dfa(d.alphabet, d.n, d.delta, d.run(word), d.finals))


def epsilon_function(lang: Language) -> bool:
    """True iff epsilon is a member (the initial quotient is accepting)."""
    return lang.dfa.initial in lang.dfa.finals


def accepting_quotient_count(lang: Language) -> int:
    """The number of accepting quotients, the parameter k of the product bound."""
    return len(lang.dfa.finals)


def symmetric_difference_empty(k_lang: Language, l_lang: Language) -> bool:
    """Equivalence via emptiness of the symmetric difference (oracle route)."""
    diff = symmetric_difference(*common_alphabet(k_lang, l_lang))
    return diff.is_empty()


def equivalent_widened(k_lang: Language, l_lang: Language) -> bool:
    """is_equivalent after widening to the common alphabet."""
    return is_equivalent(*common_alphabet(k_lang, l_lang))
