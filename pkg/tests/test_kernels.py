import random

import numpy as np
import pytest

from closedlang.automata import Language, canonicalize
from closedlang.closures import ClosureKind, closed_kinds, closure
from closedlang.kernels import decode_signature, dfa_to_arrays, get_backend
from helpers import random_dfa

KINDS = (ClosureKind.PREFIX, ClosureKind.SUFFIX, ClosureKind.FACTOR, ClosureKind.SUBWORD)
KIND_BIT = {ClosureKind.PREFIX: 1, ClosureKind.SUFFIX: 2, ClosureKind.FACTOR: 4, ClosureKind.SUBWORD: 8}


@pytest.fixture(scope="module")
def py():
    return get_backend("python")


@pytest.fixture(scope="module")
def nb():
    return get_backend("numba")


def _cases(count, seed=51, max_n=4, max_k=3):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_dfa(rng, rng.randrange(1, max_n + 1), rng.randrange(1, max_k + 1))


def test_python_backend_matches_object_model(py):
    for d in _cases(200):
        lang = Language.from_dfa(d)
        n, k, delta, fm = dfa_to_arrays(d)
        stats = py.closure_stats(n, k, delta, np.int64(fm))
        assert stats[0] == lang.complexity
        nonempty = d.nonempty_states()
        assert stats[1] == int(any(s not in nonempty for s in d.reachable()))
        assert [int(x) for x in stats[2:6]] == [closure(kind, lang).complexity for kind in KINDS]


def test_closed_kind_mask_matches_object_model(py):
    for d in _cases(200, seed=52):
        lang = Language.from_dfa(d)
        n, k, delta, fm = dfa_to_arrays(d)
        m, mask = py.closed_kind_mask(n, k, delta, np.int64(fm))
        assert int(m) == lang.complexity
        expect = sum(KIND_BIT[kind] for kind in closed_kinds(lang))
        assert int(mask) == expect


def test_signature_roundtrip(py):
    for d in _cases(200, seed=53):
        lang = Language.from_dfa(d)
        n, k, delta, fm = dfa_to_arrays(d)
        m, sig = py.min_canon(n, k, delta, np.int64(fm), 0)
        assert int(m) == lang.complexity
        assert int(sig) >= 0
        rebuilt = decode_signature(int(sig), int(m), k, d.alphabet)
        assert canonicalize(rebuilt) == rebuilt == lang.dfa


def test_backends_agree(py, nb):
    for d in _cases(150, seed=54):
        n, k, delta, fm = dfa_to_arrays(d)
        assert list(py.closure_stats(n, k, delta, np.int64(fm))) == list(
            nb.closure_stats(n, k, delta, np.int64(fm))
        )
        assert py.min_canon(n, k, delta, np.int64(fm), 0) == tuple(
            nb.min_canon(n, k, delta, np.int64(fm), 0)
        )


def test_sweep_agrees_across_backends(py, nb):
    out_py = py.sweep_closure_bounds(2, 2)
    out_nb = nb.sweep_closure_bounds(2, 2)
    assert list(out_py) == list(out_nb)
    assert out_py[0] == 0


def test_collect_closed_agrees_across_backends(py, nb):
    sp, kp, cp = py.collect_closed(2, 2)
    sn, kn, cn = nb.collect_closed(2, 2)
    assert cp == cn
    assert sorted(zip(sp.tolist(), kp.tolist())) == sorted(zip(sn.tolist(), kn.tolist()))


def test_dfa_to_arrays_requires_initial_zero():
    from closedlang.automata import Dfa

    d = Dfa(("a",), 2, ((1,), (0,)), 1, frozenset({0}))
    with pytest.raises(ValueError):
        dfa_to_arrays(d)


def test_get_backend_validation(monkeypatch):
    with pytest.raises(ValueError):
        get_backend("cuda")
    monkeypatch.setenv("CLOSEDLANG_BACKEND", "python")
    assert get_backend().name == "python"
    monkeypatch.setenv("CLOSEDLANG_BACKEND", "numba")
    assert get_backend().name == "numba"
