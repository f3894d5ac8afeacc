"""closedlang: a workbench for quotient complexity of closed regular languages."""

from .automata import (
    AlphabetError,
    Dfa,
    Language,
    Nfa,
    canonicalize,
    complexity,
    determinize,
    empty_language,
    is_equivalent,
    membership,
    minimize,
    universal_language,
    widen_alphabet,
    word_language,
)
from .closures import ClosureKind, closure, is_closed, is_ideal
from .ops import (
    BooleanOp,
    boolean,
    complement,
    plus,
    product,
    residual,
    reverse,
    star,
)
from .regex import Regex, parse_regex, regex_to_language

__version__ = "0.1.0"

__all__ = [
    "AlphabetError",
    "BooleanOp",
    "ClosureKind",
    "Dfa",
    "Language",
    "Nfa",
    "Regex",
    "boolean",
    "canonicalize",
    "closure",
    "complement",
    "complexity",
    "determinize",
    "empty_language",
    "is_closed",
    "is_equivalent",
    "is_ideal",
    "membership",
    "minimize",
    "parse_regex",
    "plus",
    "product",
    "regex_to_language",
    "residual",
    "reverse",
    "star",
    "universal_language",
    "widen_alphabet",
    "word_language",
]
