"""Parameterized witness families attaining the tight bounds.

Several of these machines are described only in prose where they originate,
so the transition tables here are reconstructions; each generator self-verifies its
claimed complexity and closedness class on construction, and the bound
harness is the final arbiter of tightness.
"""

from __future__ import annotations

from typing import Callable

from .automata import Dfa, Language, widen_alphabet
from .closures import ClosureKind, is_closed
from .regex import Epsilon, Sym, Union, concat_all, regex_to_language, union_all, word_regex


class WitnessParameterError(ValueError):
    """Witness parameter outside the family's admissible range."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise WitnessParameterError(msg)


def _check(lang: Language, kappa: int, kind: ClosureKind | None, family: str) -> Language:
    assert lang.complexity == kappa, (
        f"{family}: built kappa {lang.complexity}, claimed {kappa}"
    )
    if kind is not None:
        assert is_closed(kind, lang), f"{family}: output not {kind.value}-closed"
    return lang


def closure_prefix(n: int) -> Language:
    """{a^i : i <= n-2} over {a,b}; prefix-closed, kappa = n."""
    _require(n >= 2, "closure-prefix needs n >= 2")
    lang = regex_to_language(union_all(word_regex("a" * i) for i in range(n - 1)), ("a", "b"))
    return _check(lang, n, ClosureKind.PREFIX, "closure-prefix")


def closure_suffix_noempty_dfa(n: int) -> Dfa:
    """Raw reconstruction of the no-empty-quotient witness automaton.

    a cycles all states; b maps 0->0, 1->0 and fixes the rest. Initial and
    sole final state is 0.
    """
    _require(n >= 2, "closure-suffix-noempty needs n >= 2")
    delta = []
    for i in range(n):
        ta = (i + 1) % n
        tb = 0 if i <= 1 else i
        delta.append((ta, tb))
    return Dfa(("a", "b"), n, tuple(delta), 0, frozenset({0}))


def closure_suffix_noempty(n: int) -> Language:
    """Witness without the empty quotient: suffix-closure reaches 2^n - 1."""
    lang = Language.from_dfa(closure_suffix_noempty_dfa(n))
    lang = _check(lang, n, None, "closure-suffix-noempty")
    assert lang.dfa.nonempty_states() == set(range(n)), "closure-suffix-noempty must not have the empty quotient"
    return lang


def closure_suffix_empty_dfa(n: int) -> Dfa:
    """Raw reconstruction of the witness that has the empty quotient.

    Like the no-empty-quotient machine on states 0..n-2 but b sends 0 to the sink n-1.
    """
    _require(n >= 2, "closure-suffix-empty needs n >= 2")
    sink = n - 1
    delta = []
    for i in range(n - 1):
        ta = (i + 1) % (n - 1)
        tb = sink if i == 0 else (0 if i == 1 else i)
        delta.append((ta, tb))
    delta.append((sink, sink))
    return Dfa(("a", "b"), n, tuple(delta), 0, frozenset({0}))


def closure_suffix_empty(n: int) -> Language:
    """Witness with the empty quotient: suffix/factor-closure reach 2^(n-1)."""
    lang = Language.from_dfa(closure_suffix_empty_dfa(n))
    lang = _check(lang, n, None, "closure-suffix-empty")
    assert len(lang.dfa.nonempty_states()) == n - 1, "closure-suffix-empty must have the empty quotient"
    return lang


def subword_alphabet(n: int) -> tuple[str, ...]:
    _require(3 <= n <= 28, "closure-subword alphabet needs 3 <= n <= 28")
    return tuple("abcdefghijklmnopqrstuvwxyz"[: n - 2])


def closure_subword(n: int) -> Language:
    """Words whose first letter occurs exactly once; subword-closure reaches
    2^(n-2) + 1. Alphabet size n-2; for n = 2 the witness is a* over {a,b}."""
    _require(n >= 2, "closure-subword needs n >= 2")
    if n == 2:
        return _check(regex_to_language("a*", ("a", "b")), 2, None, "closure-subword")
    sigma = subword_alphabet(n)
    expr = union_all(
        concat_all([Sym(a), union_all(Sym(b) for b in sigma if b != a).star()])
        for a in sigma
    )
    return _check(regex_to_language(expr, sigma), n, None, "closure-subword")


def product_prefix_pair(m: int, n: int) -> tuple[Language, Language]:
    """Prefix-closed pair over {a,b,c} with kappa(KL) = (m+1) * 2^(n-2)."""
    _require(m >= 2 and n >= 2, "product-prefix-pair needs m, n >= 2")
    K = _check(
        Language.from_dfa(product_prefix_k_dfa(m)), m, ClosureKind.PREFIX, "product-prefix-pair K"
    )
    L = _check(
        Language.from_dfa(product_prefix_l_dfa(n)), n, ClosureKind.PREFIX, "product-prefix-pair L"
    )
    return K, L


def product_prefix_k_dfa(m: int) -> Dfa:
    """Raw K of the prefix-closed product pair: a,b loop, c advances to the sink."""
    _require(m >= 2, "product-prefix-pair needs m >= 2")
    kdelta = [
        (i, i, min(i + 1, m - 1)) if i < m - 1 else (m - 1, m - 1, m - 1) for i in range(m)
    ]
    return Dfa(("a", "b", "c"), m, tuple(kdelta), 0, frozenset(range(m - 1)))


def product_prefix_l_dfa(n: int) -> Dfa:
    """Raw L of the prefix-closed product pair.

    a cycles 0..n-2, b maps 0->0 and advances 1..n-2 toward the sink,
    c fixes every live state; for n = 2 this degenerates to {a,c}*.
    """
    _require(n >= 2, "product-prefix-pair needs n >= 2")
    sink = n - 1
    ldelta = []
    for i in range(n - 1):
        ta = (i + 1) % (n - 1)
        if n == 2:
            tb = sink  # L = {a,c}*
        else:
            tb = 0 if i == 0 else (i + 1 if i < n - 2 else sink)
        ldelta.append((ta, tb, i))
    ldelta.append((sink, sink, sink))
    return Dfa(("a", "b", "c"), n, tuple(ldelta), 0, frozenset(range(n - 1)))


def suffix_segment_counter(size: int, count_letter: int, accepting: int = 1) -> Language:
    """Suffix-closed counter language over {a,b,c}.

    Members: in every c-delimited segment the counted letter occurs at most
    size-2 times, and in the final segment fewer than ``accepting`` times.
    The other non-c letter self-loops; overflowing the counter is fatal.
    States 0..size-2 count occurrences since the last c; size-1 is the sink.
    """
    sigma = ("a", "b", "c")
    dead = size - 1
    rows = []
    for i in range(size):
        advance = min(i + 1, dead) if i < dead else dead
        stay = i
        reset = 0 if i < dead else dead
        row = [stay, stay, reset]
        row[count_letter] = advance
        rows.append(tuple(row))
    return Language.from_dfa(Dfa(sigma, size, tuple(rows), 0, frozenset(range(accepting))))


def product_suffix_pair(m: int, n: int) -> tuple[Language, Language]:
    """Suffix-closed pair over {a,b,c} with kappa(KL) = (m-1)n + 1.

    K counts a's between c's (b loops), L counts b's (a loops); K has a
    single accepting quotient (k = 1). Reconstructed from the proof's quotient
    structure and validated empirically by the bound harness.
    """
    _require(m >= 2 and n >= 2, "product-suffix-pair needs m, n >= 2")
    K = _check(suffix_segment_counter(m, 0), m, ClosureKind.SUFFIX, "product-suffix-pair K")
    L = _check(suffix_segment_counter(n, 1), n, ClosureKind.SUFFIX, "product-suffix-pair L")
    return K, L


def product_subword_pair(m: int, n: int) -> tuple[Language, Language]:
    """Subword-closed pair over {a,b}: at most m-2 a's, at most n-2 b's."""
    _require(m >= 2 and n >= 2, "product-subword-pair needs m, n >= 2")
    sigma = ("a", "b")

    def counter(bound: int, letter: int) -> Language:
        sink = bound + 1
        rows = []
        for i in range(bound + 1):
            nxt = i + 1 if i < bound else sink
            rows.append((nxt, i) if letter == 0 else (i, nxt))
        rows.append((sink, sink))
        return Language.from_dfa(Dfa(sigma, bound + 2, tuple(rows), 0, frozenset(range(bound + 1))))

    K = _check(counter(m - 2, 0), m, ClosureKind.SUBWORD, "product-subword-pair K")
    L = _check(counter(n - 2, 1), n, ClosureKind.SUBWORD, "product-subword-pair L")
    return K, L


def star_prefix_dfa(n: int) -> Dfa:
    """Raw reconstruction of the prefix-closed star witness.

    States 0..n-1 with sink n-1, finals 0..n-2; a advances 0..n-3, b advances
    1..n-3, c: n-2 -> 1; everything else goes to the sink.
    """
    _require(n >= 3, "star-prefix needs n >= 3")
    sink = n - 1
    delta = []
    for i in range(n):
        ta = i + 1 if i <= n - 3 else sink
        tb = i + 1 if 1 <= i <= n - 3 else sink
        tc = 1 if i == n - 2 else sink
        delta.append((ta, tb, tc))
    return Dfa(("a", "b", "c"), n, tuple(delta), 0, frozenset(range(n - 1)))


def star_prefix(n: int) -> Language:
    """Prefix-closed witness over {a,b,c} with kappa(L*) = 2^(n-2) + 1."""
    lang = Language.from_dfa(star_prefix_dfa(n))
    return _check(lang, n, ClosureKind.PREFIX, "star-prefix")


def star_suffix_eq(n: int) -> Language:
    """(a | b a^(n-2))* over {a,b}: suffix-closed, kappa = n, L* = L."""
    _require(n >= 3, "star-suffix-eq needs n >= 3")
    expr = Union(Sym("a"), word_regex("b" + "a" * (n - 2))).star()
    return _check(regex_to_language(expr, ("a", "b")), n, ClosureKind.SUFFIX, "star-suffix-eq")


def star_suffix_neq(n: int) -> Language:
    """eps | a^i b for i <= n-3, over {a,b}: suffix-closed, kappa(L*) = n-1."""
    _require(n >= 3, "star-suffix-neq needs n >= 3")
    expr = Union(Epsilon(), union_all(word_regex("a" * i + "b") for i in range(n - 2)))
    return _check(regex_to_language(expr, ("a", "b")), n, ClosureKind.SUFFIX, "star-suffix-neq")


def star_subword(n: int) -> Language:
    """{a^i : i <= n-2} over {a,b}: subword-closed, kappa(L*) = 2."""
    _require(n >= 2, "star-subword needs n >= 2")
    lang = regex_to_language(union_all(word_regex("a" * i) for i in range(n - 1)), ("a", "b"))
    return _check(lang, n, ClosureKind.SUBWORD, "star-subword")


def kuratowski_prefix(n: int) -> Language:
    """star_prefix(n) with a loop on a new letter d in every state."""
    _require(n >= 3, "kuratowski-prefix needs n >= 3")
    base = star_prefix(n).dfa
    sigma = base.alphabet + ("d",)
    delta = tuple(row + (s,) for s, row in enumerate(base.delta))
    lang = Language.from_dfa(Dfa(sigma, base.n, delta, base.initial, base.finals))
    return _check(lang, n, ClosureKind.PREFIX, "kuratowski-prefix")


def kuratowski_suffix(n: int) -> Language:
    """b* | b* a^i b for 1 <= i <= n-3, over {a,b}: suffix-closed, kappa = n."""
    _require(n >= 4, "kuratowski-suffix needs n >= 4")
    bstar = word_regex("b").star()
    expr = Union(
        bstar,
        union_all(concat_all([bstar, word_regex("a" * i + "b")]) for i in range(1, n - 2)),
    )
    return _check(regex_to_language(expr, ("a", "b")), n, ClosureKind.SUFFIX, "kuratowski-suffix")


def kuratowski_subword(n: int) -> Language:
    """{b^j a^i : i <= n-2} over {a,b,c}: subword-closed, kappa = n."""
    _require(n >= 2, "kuratowski-subword needs n >= 2")
    expr = concat_all([word_regex("b").star(), union_all(word_regex("a" * i) for i in range(n - 1))])
    return _check(regex_to_language(expr, ("a", "b", "c")), n, ClosureKind.SUBWORD, "kuratowski-subword")


def unary_closed(n: int) -> Language:
    """{a^i : i <= n-2} over {a}: the finite unary closed language."""
    _require(n >= 2, "unary-closed needs n >= 2")
    lang = regex_to_language(union_all(word_regex("a" * i) for i in range(n - 1)), ("a",))
    return _check(lang, n, ClosureKind.PREFIX, "unary-closed")


#: family name -> (arity, generator); unary generators take n, binary (m, n)
FAMILIES: dict[str, tuple[int, Callable]] = {
    "closure-prefix": (1, closure_prefix),
    "closure-suffix-noempty": (1, closure_suffix_noempty),
    "closure-suffix-empty": (1, closure_suffix_empty),
    "closure-subword": (1, closure_subword),
    "product-prefix-pair": (2, product_prefix_pair),
    "product-suffix-pair": (2, product_suffix_pair),
    "product-subword-pair": (2, product_subword_pair),
    "star-prefix": (1, star_prefix),
    "star-suffix-eq": (1, star_suffix_eq),
    "star-suffix-neq": (1, star_suffix_neq),
    "star-subword": (1, star_subword),
    "kuratowski-prefix": (1, kuratowski_prefix),
    "kuratowski-suffix": (1, kuratowski_suffix),
    "kuratowski-subword": (1, kuratowski_subword),
    "unary-closed": (1, unary_closed),
}


def witness(family: str, n: int, m: int | None = None):
    """Build a witness Language (or pair) by family name."""
    if family not in FAMILIES:
        raise WitnessParameterError(f"unknown family {family!r}; one of {sorted(FAMILIES)}")
    arity, gen = FAMILIES[family]
    if arity == 1:
        return gen(n)
    if m is None:
        raise WitnessParameterError(f"family {family!r} needs both m and n")
    return gen(m, n)
