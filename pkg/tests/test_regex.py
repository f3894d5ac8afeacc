import random
import re as pyre

import pytest

from closedlang.regex import (
    Concat,
    EmptySet,
    Epsilon,
    Regex,
    RegexSyntaxError,
    Star,
    Sym,
    Union,
    concat_all,
    parse_regex,
    regex_to_language,
    thompson_nfa,
    union_all,
    word_regex,
)
from closedlang.automata import Language
from helpers import words_upto


def test_parse_basics():
    lang = regex_to_language("(a∪baa)*", ("a", "b"))
    assert lang.complexity == 4
    assert "baa" in lang and "ba" not in lang
    assert regex_to_language("a|b", ("a", "b")) == regex_to_language("a∪b", ("a", "b"))
    # ∅ and ε spellings
    assert regex_to_language("∅", ("a",)).is_empty()
    assert "" in regex_to_language("ε", ("a",))
    assert regex_to_language("0", ("a",)).is_empty()  # 0 not a letter here
    assert "0" in regex_to_language("0", ("a", "0"))  # but a letter when declared


def test_parse_precedence():
    # star > concatenation > union
    assert parse_regex("ab*", ("a", "b")) == Concat(Sym("a"), Star(Sym("b")))
    assert parse_regex("a∪bc", ("a", "b", "c")) == Union(Sym("a"), Concat(Sym("b"), Sym("c")))
    assert parse_regex("(ab)*", ("a", "b")) == Star(Concat(Sym("a"), Sym("b")))


@pytest.mark.parametrize("bad", ["(a", "a)", "*", "a∪", "a∪)", ""])
def test_parse_errors_have_positions(bad):
    with pytest.raises(RegexSyntaxError) as exc:
        parse_regex(bad, ("a", "b"))
    assert "position" in str(exc.value)


def test_unknown_letter_rejected():
    with pytest.raises(RegexSyntaxError):
        parse_regex("ac", ("a", "b"))


def _random_regex(rng: random.Random, depth: int) -> Regex:
    if depth == 0 or rng.random() < 0.3:
        return Sym(rng.choice("ab")) if rng.random() < 0.9 else Epsilon()
    pick = rng.randrange(3)
    if pick == 0:
        return Union(_random_regex(rng, depth - 1), _random_regex(rng, depth - 1))
    if pick == 1:
        return Concat(_random_regex(rng, depth - 1), _random_regex(rng, depth - 1))
    return Star(_random_regex(rng, depth - 1))


def _to_python_re(expr: Regex) -> str:
    if isinstance(expr, Epsilon):
        return "(?:)"
    if isinstance(expr, Sym):
        return pyre.escape(expr.letter)
    if isinstance(expr, Union):
        return f"(?:{_to_python_re(expr.left)}|{_to_python_re(expr.right)})"
    if isinstance(expr, Concat):
        return f"(?:{_to_python_re(expr.left)}{_to_python_re(expr.right)})"
    if isinstance(expr, Star):
        return f"(?:{_to_python_re(expr.body)})*"
    raise TypeError(expr)


def test_membership_matches_python_re():
    rng = random.Random(21)
    for _ in range(120):
        ast = _random_regex(rng, 3)
        lang = regex_to_language(ast, ("a", "b"))
        pattern = pyre.compile(_to_python_re(ast) + r"\Z")
        for w in words_upto(("a", "b"), 5):
            assert (w in lang) == bool(pattern.match(w)), (ast, w)


def test_thompson_matches_language():
    rng = random.Random(22)
    for _ in range(60):
        ast = _random_regex(rng, 3)
        nfa = thompson_nfa(ast, ("a", "b"))
        lang = regex_to_language(ast, ("a", "b"))
        for w in words_upto(("a", "b"), 4):
            assert nfa.accepts(w) == (w in lang)


def test_ast_helpers():
    assert word_regex("") == Epsilon()
    assert regex_to_language(word_regex("aba"), ("a", "b")) == Language.from_nfa(
        thompson_nfa(parse_regex("aba", ("a", "b")), ("a", "b"))
    )
    assert isinstance(union_all([]), EmptySet)
    assert isinstance(concat_all([]), Epsilon)
    combo = (Sym("a") | Sym("b")) + Sym("a").star()
    assert combo == Concat(Union(Sym("a"), Sym("b")), Star(Sym("a")))


def test_empty_set_operand():
    lang = regex_to_language(Union(EmptySet(), Sym("a")), ("a", "b"))
    assert lang == regex_to_language("a", ("a", "b"))
    assert regex_to_language(Concat(EmptySet(), Sym("a")), ("a", "b")).is_empty()
    assert "" in regex_to_language(Star(EmptySet()), ("a", "b"))
