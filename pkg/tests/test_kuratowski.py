import random

from closedlang import bounds, witnesses as wit
from closedlang.automata import Language, empty_language, universal_language, word_language
from closedlang.closures import ClosureKind, closed_kinds, is_ideal
from closedlang.kuratowski import CapReport, OrbitGenerator, check_orbit_caps, orbit, orbit_complexities
from closedlang.ops import complement, plus, star, union
from helpers import random_dfa

SIGMA = ("a", "b")


def _closed_sample(max_kappa=2):
    out = []
    seen = set()
    for kappa in range(1, max_kappa + 1):
        for langs in bounds.closed_language_inventory(kappa, 2).values():
            for lang in langs:
                if lang not in seen:
                    seen.add(lang)
                    out.append(lang)
    return out


def test_trivial_orbits():
    assert len(orbit(universal_language(SIGMA), "plus")) == 2
    assert len(orbit(empty_language(SIGMA), "plus")) == 2
    assert len(orbit(empty_language(SIGMA), "star")) == 4  # adds eps and its complement


def test_orbit_closure_audit():
    rng = random.Random(61)
    for _ in range(15):
        lang = Language.from_dfa(random_dfa(rng, rng.randrange(1, 4), 2))
        for gen in OrbitGenerator:
            orb = orbit(lang, gen)
            for entry in orb.entries:
                assert complement(entry.language) in orb
                assert gen.apply(entry.language) in orb


def test_orbit_expressions_shortest_with_complement_first_ties():
    orb = orbit(wit.kuratowski_suffix(5), "star")
    exprs = [e.expression for e in orb.entries]
    assert exprs[0] == ""
    assert all(len(a) <= len(b) for a, b in zip(exprs, exprs[1:]))  # BFS order
    assert set(exprs) == {"", "-", "*", "-*", "*-", "-*-", "*-*", "*-*-"}


def test_complexity_symmetry_under_complement():
    rng = random.Random(62)
    for _ in range(10):
        lang = Language.from_dfa(random_dfa(rng, 3, 2))
        for gen in OrbitGenerator:
            for entry in orbit(lang, gen).entries:
                assert complement(entry.language).complexity == entry.complexity


def test_closed_caps_small():
    sample = _closed_sample(2)
    rep = check_orbit_caps(sample, plus_cap=4, star_cap=8)
    assert isinstance(rep, CapReport) and rep.ok


def test_closed_orbit_identities():
    # for closed L not in {empty, Sigma*}: the star orbit satisfies
    # L-* = L- + eps, L-*- = L minus eps, and complements are ideals
    eps = word_language("", SIGMA)
    for lang in _closed_sample(3)[:40]:
        if lang.is_empty() or lang.is_universal():
            continue
        kinds = closed_kinds(lang)
        comp = complement(lang)
        for kind in kinds:
            assert is_ideal(kind, comp)
        assert plus(comp) == comp  # complement of closed is an ideal, plus-stable
        assert star(comp) == union(comp, eps)
        assert complement(star(comp)) == boolean_minus_eps(lang)
        # plus keeps the closedness kinds
        assert set(kinds) <= set(closed_kinds(plus(lang)))


def boolean_minus_eps(lang):
    from closedlang.ops import difference

    return difference(lang, word_language("", SIGMA))


def test_orbit_complexities_on_suffix_witness():
    cx = orbit_complexities(wit.kuratowski_suffix(5), "star")
    assert cx == {"": 5, "-": 5, "*": 4, "*-": 4, "-*": 6, "-*-": 6, "*-*": 5, "*-*-": 5}


def test_random_caps_sample():
    rng = random.Random(63)
    sample = [Language.from_dfa(random_dfa(rng, rng.randrange(1, 5), 2)) for _ in range(25)]
    assert check_orbit_caps(sample).ok
