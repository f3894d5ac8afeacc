"""Closure–complement orbits.

Starting from a language L, repeatedly apply complement and one closure
operator (positive closure ``plus`` or Kleene closure ``star``) and collect
the distinct languages produced. The orbit is always finite: at most 10
languages under plus and 14 under star, and for closed languages at most
4 and 8 respectively.

Entries are labeled by the shortest operator word reaching them, written
left to right in application order ('-' complement, '+' plus, '*' star),
so ``-*`` is "complement, then star". Ties go to complement-first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .automata import Language
from .ops import complement, plus, star


class OrbitGenerator(str, Enum):
    PLUS = "plus"
    STAR = "star"

    @property
    def symbol(self) -> str:
        return "+" if self is OrbitGenerator.PLUS else "*"

    def apply(self, lang: Language) -> Language:
        return plus(lang) if self is OrbitGenerator.PLUS else star(lang)


@dataclass(frozen=True)
class OrbitEntry:
    expression: str  # shortest operator word, '' for L itself
    language: Language

    @property
    def complexity(self) -> int:
        return self.language.complexity


@dataclass(frozen=True)
class Orbit:
    generator: OrbitGenerator
    entries: tuple[OrbitEntry, ...]  # BFS discovery order

    def __len__(self) -> int:
        return len(self.entries)

    def expression_of(self, lang: Language) -> str:
        for entry in self.entries:
            if entry.language == lang:
                return entry.expression
        raise KeyError("language not in orbit")

    def __contains__(self, lang: Language) -> bool:
        return any(entry.language == lang for entry in self.entries)


def orbit(lang: Language, generator: OrbitGenerator | str) -> Orbit:
    """BFS closure of {complement, generator} from ``lang``."""
    gen = OrbitGenerator(generator)
    entries: list[OrbitEntry] = [OrbitEntry("", lang)]
    seen = {lang}
    frontier = [OrbitEntry("", lang)]
    while frontier:
        nxt: list[OrbitEntry] = []
        for entry in frontier:
            for sym, image in (
                ("-", complement(entry.language)),
                (gen.symbol, gen.apply(entry.language)),
            ):
                if image in seen:
                    continue
                seen.add(image)
                new = OrbitEntry(entry.expression + sym, image)
                entries.append(new)
                nxt.append(new)
        frontier = nxt
    return Orbit(gen, tuple(entries))


def orbit_complexities(lang: Language, generator: OrbitGenerator | str) -> dict[str, int]:
    """Quotient complexity of every orbit entry, keyed by its expression."""
    return {e.expression: e.complexity for e in orbit(lang, generator).entries}


@dataclass(frozen=True)
class CapReport:
    plus_cap: int
    star_cap: int
    worst_plus: int
    worst_star: int

    @property
    def ok(self) -> bool:
        return self.worst_plus <= self.plus_cap and self.worst_star <= self.star_cap


def check_orbit_caps(
    sample, plus_cap: int = 10, star_cap: int = 14
) -> CapReport:
    """Assert orbit-size caps over a sample of languages.

    Defaults fit arbitrary regular languages; pass ``plus_cap=4, star_cap=8``
    for a sample of closed languages.
    """
    worst_plus = 0
    worst_star = 0
    for lang in sample:
        worst_plus = max(worst_plus, len(orbit(lang, OrbitGenerator.PLUS)))
        worst_star = max(worst_star, len(orbit(lang, OrbitGenerator.STAR)))
    report = CapReport(plus_cap, star_cap, worst_plus, worst_star)
    if not report.ok:
        raise AssertionError(
            f"orbit cap exceeded: plus {worst_plus}/{plus_cap}, star {worst_star}/{star_cap}"
        )
    return report
