"""Bound registry and verification harness for operations on closed languages.

Every complexity bound lives in one :class:`BoundCell`. The harness checks
both directions:

* tightness — named witness families reach the bound exactly
  (:func:`verify_tightness`);
* universality — exhaustive sweeps over all small machines never exceed it
  (:func:`verify_closure_universal`, :func:`verify_universal`);
* search — for cells without a named family, :func:`find_witness` looks for
  an attaining pair (absence within budget is INCONCLUSIVE, never refutation).

Reports are line-oriented: one ``CELL ...`` line per grid point, ``NOTE``
lines for known caveats, and a trailing ``SUMMARY`` line.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .automata import Dfa, Language
from .closures import ClosureKind, closure
from .kernels import decode_signature, dfa_to_arrays, get_backend
from .ops import (
    BooleanOp,
    accepting_quotient_count,
    boolean,
    product,
    reverse,
    star,
)
from . import witnesses as _wit

VERDICTS = ("TIGHT", "WITHIN", "VIOLATION", "SKIP", "INCONCLUSIVE")

_KIND_BITS = {
    "prefix": 1,
    "suffix": 2,
    "factor": 4,
    "subword": 8,
}

_BOOLEAN_OPS = {
    "union": BooleanOp.UNION,
    "intersection": BooleanOp.INTERSECTION,
    "difference": BooleanOp.DIFFERENCE,
    "symmetric-difference": BooleanOp.SYMMETRIC_DIFFERENCE,
}


@dataclass(frozen=True)
class BoundCell:
    """One bound: an operation restricted to a class of closed languages."""

    operation: str  # closure|union|intersection|difference|symmetric-difference|product|star|reversal
    cls: str  # prefix|suffix|factor|subword|unary-closed|regular
    arity: int
    formula: Callable[[int, int, int], int]  # (m, n, k) -> bound
    tightness_alphabet: int
    variant: str = ""  # qualifier, e.g. "has-empty" / "no-empty" / "star-eq" / "star-neq"
    min_n: int = 1
    min_m: int = 1
    note: str = ""  # caveat printed with every report on this cell

    @property
    def key(self) -> str:
        base = f"{self.operation}:{self.cls}"
        return f"{base}:{self.variant}" if self.variant else base

    def bound(self, m: int, n: int, k: int = 1) -> int:
        if n < self.min_n or (self.arity == 2 and m < self.min_m):
            raise ValueError(
                f"cell {self.key} needs n >= {self.min_n}"
                + (f", m >= {self.min_m}" if self.arity == 2 else "")
            )
        return self.formula(m, n, k)


@dataclass(frozen=True)
class PointRecord:
    m: int | None
    n: int
    k: int
    kappa: int
    bound: int
    verdict: str

    def porcelain(self, cell: BoundCell) -> str:
        bits = [f"CELL op={cell.operation} class={cell.cls}"]
        if cell.variant:
            bits.append(f"variant={cell.variant}")
        if self.m is not None:
            bits.append(f"m={self.m}")
        bits.append(f"n={self.n}")
        if cell.operation == "product" and cell.cls in ("suffix", "regular"):
            bits.append(f"k={self.k}")
        bits.append(f"kappa={self.kappa} bound={self.bound} verdict={self.verdict}")
        return " ".join(bits)


@dataclass
class VerificationReport:
    cell: BoundCell
    records: list[PointRecord] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seed: int | None = None
    runtime: float = 0.0

    @property
    def violations(self) -> int:
        return sum(1 for r in self.records if r.verdict == "VIOLATION")

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def lines(self) -> list[str]:
        out = [r.porcelain(self.cell) for r in self.records]
        out.extend(f"NOTE {note}" for note in self.notes)
        tight = sum(1 for r in self.records if r.verdict == "TIGHT")
        out.append(
            f"SUMMARY cell={self.cell.key} points={len(self.records)} "
            f"tight={tight} violations={self.violations}"
        )
        return out


def _f(fn: Callable[[int, int, int], int]) -> Callable[[int, int, int], int]:
    return fn


def _make_cells() -> dict[str, BoundCell]:
    cells: list[BoundCell] = []

    # --- closure ---
    cells.append(BoundCell("closure", "prefix", 1, _f(lambda m, n, k: n), 1))
    cells.append(
        BoundCell("closure", "suffix", 1, _f(lambda m, n, k: 2**n - 1), 2, variant="no-empty")
    )
    cells.append(
        BoundCell("closure", "suffix", 1, _f(lambda m, n, k: 2 ** (n - 1)), 2, variant="has-empty")
    )
    cells.append(BoundCell("closure", "factor", 1, _f(lambda m, n, k: 2 ** (n - 1)), 2))
    cells.append(
        BoundCell("closure", "subword", 1, _f(lambda m, n, k: 2 ** (n - 2) + 1), 2, min_n=2)
    )
    cells.append(BoundCell("closure", "unary-closed", 1, _f(lambda m, n, k: n), 1))

    # --- boolean operations ---
    for op, bop in _BOOLEAN_OPS.items():
        del bop
        for cls in ("prefix", "factor", "subword"):
            # intersection/difference improvements assume nontrivial operands
            if op == "intersection":
                fn = _f(lambda m, n, k: m * n - (m + n - 2))
                lo_m, lo_n = 2, 2
            elif op == "difference":
                fn = _f(lambda m, n, k: m * n - (n - 1))
                lo_m, lo_n = 2, 1
            else:
                fn = _f(lambda m, n, k: m * n)
                lo_m, lo_n = 1, 1
            cells.append(BoundCell(op, cls, 2, fn, 4, min_m=lo_m, min_n=lo_n))
        cells.append(BoundCell(op, "suffix", 2, _f(lambda m, n, k: m * n), 4))
        if op == "difference":
            cells.append(BoundCell(op, "unary-closed", 2, _f(lambda m, n, k: m), 1, min_m=2))
        else:
            cells.append(BoundCell(op, "unary-closed", 2, _f(lambda m, n, k: max(m, n)), 1))
        cells.append(BoundCell(op, "regular", 2, _f(lambda m, n, k: m * n), 2))

    # --- product ---
    cells.append(
        BoundCell(
            "product",
            "prefix",
            2,
            _f(lambda m, n, k: (m + 1) * 2 ** (n - 2)),
            3,
            min_n=2,
            note=(
                "summary-table value m*2^(n-2) for the prefix-closed product "
                "disagrees with the attained maximum (m+1)*2^(n-2); "
                "the attained value governs the verdict"
            ),
        )
    )
    cells.append(
        BoundCell("product", "suffix", 2, _f(lambda m, n, k: (m - k) * n + k), 3, min_m=2)
    )
    cells.append(BoundCell("product", "factor", 2, _f(lambda m, n, k: m + n - 1), 2))
    cells.append(BoundCell("product", "subword", 2, _f(lambda m, n, k: m + n - 1), 2))
    cells.append(BoundCell("product", "unary-closed", 2, _f(lambda m, n, k: m + n - 2), 1, min_n=2, min_m=2))
    cells.append(
        BoundCell("product", "regular", 2, _f(lambda m, n, k: m * 2**n - k * 2 ** (n - 1)), 2)
    )

    # --- star ---
    cells.append(BoundCell("star", "prefix", 1, _f(lambda m, n, k: 2 ** (n - 2) + 1), 2, min_n=2))
    cells.append(BoundCell("star", "suffix", 1, _f(lambda m, n, k: n), 2, variant="star-eq"))
    cells.append(
        BoundCell("star", "suffix", 1, _f(lambda m, n, k: n - 1), 2, variant="star-neq", min_n=2)
    )
    cells.append(BoundCell("star", "factor", 1, _f(lambda m, n, k: 2), 1))
    cells.append(BoundCell("star", "subword", 1, _f(lambda m, n, k: 2), 1))
    cells.append(BoundCell("star", "unary-closed", 1, _f(lambda m, n, k: 2), 1))
    cells.append(
        BoundCell(
            "star", "regular", 1, _f(lambda m, n, k: 2 ** (n - 1) + 2 ** (n - k - 1)), 2
        )
    )

    # --- reversal ---
    cells.append(BoundCell("reversal", "prefix", 1, _f(lambda m, n, k: 2 ** (n - 1)), 2))
    cells.append(BoundCell("reversal", "suffix", 1, _f(lambda m, n, k: 2 ** (n - 1) + 1), 3))
    cells.append(BoundCell("reversal", "factor", 1, _f(lambda m, n, k: 2 ** (n - 2) + 1), 3, min_n=2))
    cells.append(BoundCell("reversal", "subword", 1, _f(lambda m, n, k: 2 ** (n - 2) + 1), 3, min_n=2))
    cells.append(BoundCell("reversal", "unary-closed", 1, _f(lambda m, n, k: n), 1))
    cells.append(BoundCell("reversal", "regular", 1, _f(lambda m, n, k: 2**n), 2))

    return {c.key: c for c in cells}


CELLS: dict[str, BoundCell] = _make_cells()


def bound_formula(cell: BoundCell | str, m: int, n: int, k: int = 1) -> int:
    """Numeric bound of a cell at (m, n, k); raises on side-condition breach."""
    if isinstance(cell, str):
        cell = CELLS[cell]
    return cell.bound(m, n, k)


# ---------------------------------------------------------------------------
# witness generators per cell key: n -> Language, or (m, n) -> (K, L)

def _suffix_pair_with_k(m: int, n: int):
    K, L = _wit.product_suffix_pair(m, n)
    return K, L


WITNESS_GENERATORS: dict[str, Callable] = {
    "closure:prefix": _wit.closure_prefix,
    "closure:suffix:no-empty": _wit.closure_suffix_noempty,
    "closure:suffix:has-empty": _wit.closure_suffix_empty,
    "closure:factor": _wit.closure_suffix_empty,
    "closure:subword": _wit.closure_subword,
    "closure:unary-closed": _wit.unary_closed,
    "product:prefix": _wit.product_prefix_pair,
    "product:suffix": _suffix_pair_with_k,
    "product:factor": _wit.product_subword_pair,  # subword-closed is factor-closed
    "product:subword": _wit.product_subword_pair,
    "product:unary-closed": lambda m, n: (_wit.unary_closed(m), _wit.unary_closed(n)),
    "star:prefix": _wit.star_prefix,
    "star:suffix:star-eq": _wit.star_suffix_eq,
    "star:suffix:star-neq": _wit.star_suffix_neq,
    "star:factor": _wit.star_subword,
    "star:subword": _wit.star_subword,
    "union:unary-closed": lambda m, n: (_wit.unary_closed(m), _wit.unary_closed(n)),
    "difference:unary-closed": lambda m, n: (_wit.unary_closed(m), _wit.unary_closed(n)),
}


def apply_cell(cell: BoundCell, *langs: Language) -> Language:
    """Apply the cell's operation to one or two languages."""
    if cell.operation == "closure":
        if cell.cls == "unary-closed":
            return closure(ClosureKind.PREFIX, langs[0])
        return closure(ClosureKind(cell.cls), langs[0])
    if cell.operation in _BOOLEAN_OPS:
        return boolean(_BOOLEAN_OPS[cell.operation], langs[0], langs[1])
    if cell.operation == "product":
        return product(langs[0], langs[1])
    if cell.operation == "star":
        return star(langs[0])
    if cell.operation == "reversal":
        return reverse(langs[0])
    raise ValueError(f"unknown operation {cell.operation!r}")


def _verdict(kappa: int, bnd: int) -> str:
    if kappa > bnd:
        return "VIOLATION"
    return "TIGHT" if kappa == bnd else "WITHIN"


def verify_tightness(
    cell: BoundCell | str,
    grid: Iterable[int] | Iterable[tuple[int, int]],
) -> VerificationReport:
    """Build the cell's witness at each grid point and demand exact equality."""
    if isinstance(cell, str):
        cell = CELLS[cell]
    t0 = time.perf_counter()
    report = VerificationReport(cell)
    gen = WITNESS_GENERATORS.get(cell.key)
    if gen is None:
        report.notes.append(f"no witness family registered for {cell.key}; use find_witness")
        report.records.append(PointRecord(None, 0, 1, 0, 0, "SKIP"))
        report.runtime = time.perf_counter() - t0
        return report
    if cell.note:
        report.notes.append(cell.note)
    for point in grid:
        if cell.arity == 2:
            m, n = point  # type: ignore[misc]
            K, L = gen(m, n)
            k = accepting_quotient_count(K)
            result = apply_cell(cell, K, L)
        else:
            m, n = None, point  # type: ignore[assignment]
            L = gen(n)
            k = accepting_quotient_count(L)
            result = apply_cell(cell, L)
        bnd = cell.bound(m or 1, n, k)
        report.records.append(PointRecord(m, n, k, result.complexity, bnd, _verdict(result.complexity, bnd)))
    report.runtime = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# enumeration

ENUM_GUARD_STATES = 5
ENUM_GUARD_ALPHABET = 2


def enumerate_dfas(
    n: int,
    alphabet_size: int,
    filter: Callable[[Dfa], bool] | None = None,
    allow_large: bool = False,
) -> Iterator[Dfa]:
    """Every complete DFA with exactly n states and initial state 0, in
    lexicographic (transition table, finals bitmask) order."""
    if not allow_large and (n > ENUM_GUARD_STATES or alphabet_size > ENUM_GUARD_ALPHABET):
        raise ValueError(
            f"enumeration guard: n <= {ENUM_GUARD_STATES} and alphabet <= "
            f"{ENUM_GUARD_ALPHABET} unless allow_large=True"
        )
    alphabet = tuple("abcdefgh"[:alphabet_size])
    k = alphabet_size
    digits = [0] * (n * k)
    while True:
        delta = tuple(tuple(digits[s * k : (s + 1) * k]) for s in range(n))
        for fmask in range(1 << n):
            finals = frozenset(s for s in range(n) if (fmask >> s) & 1)
            dfa = Dfa(alphabet, n, delta, 0, finals)
            if filter is None or filter(dfa):
                yield dfa
        pos = 0
        while pos < n * k:
            digits[pos] += 1
            if digits[pos] < n:
                break
            digits[pos] = 0
            pos += 1
        else:
            return
        if pos == n * k:
            return


_INVENTORY_CACHE: dict[tuple[int, int], dict[str, list[Language]]] = {}


def closed_language_inventory(
    n: int, alphabet_size: int, backend_name: str | None = None
) -> dict[str, list[Language]]:
    """All closed languages with quotient complexity exactly n over the first
    ``alphabet_size`` letters, grouped per kind (deterministic order)."""
    key = (n, alphabet_size)
    if key in _INVENTORY_CACHE:
        return _INVENTORY_CACHE[key]
    kern = get_backend(backend_name)
    alphabet = tuple("abcdefgh"[:alphabet_size])
    sigs, kinds, count = kern.collect_closed(n, alphabet_size)
    mask_by_sig: dict[int, int] = {}
    for i in range(count):
        mask_by_sig[int(sigs[i])] = int(kinds[i])
    out: dict[str, list[Language]] = {name: [] for name in _KIND_BITS}
    for sig in sorted(mask_by_sig):
        lang = Language.from_dfa(decode_signature(sig, n, alphabet_size, alphabet))
        mask = mask_by_sig[sig]
        for name, bit in _KIND_BITS.items():
            if mask & bit:
                out[name].append(lang)
    _INVENTORY_CACHE[key] = out
    return out


def _class_members(cls: str, kappa: int, alphabet_size: int, backend_name: str | None) -> list[Language]:
    if cls == "unary-closed":
        return [lang for lang in closed_language_inventory(kappa, 1, backend_name)["prefix"]]
    if cls == "regular":
        kern = get_backend(backend_name)
        seen: set[int] = set()
        out: list[Language] = []
        alphabet = tuple("abcdefgh"[:alphabet_size])
        for dfa in enumerate_dfas(kappa, alphabet_size):
            nn, kk, arr, fm = dfa_to_arrays(dfa)
            m, sig = kern.min_canon(nn, kk, arr, np.int64(fm), 0)
            if int(m) != kappa or int(sig) in seen:
                continue
            seen.add(int(sig))
            out.append(Language.from_dfa(decode_signature(int(sig), kappa, kk, alphabet)))
        return out
    return closed_language_inventory(kappa, alphabet_size, backend_name)[cls]


def verify_closure_universal(
    max_states: int = 4, alphabet_size: int = 2, backend_name: str | None = None
) -> list[VerificationReport]:
    """Exhaustive check of all four closure bounds over every complete DFA
    with up to ``max_states`` states (one sweep at max_states covers every
    language of lower complexity too)."""
    kern = get_backend(backend_name)
    out = kern.sweep_closure_bounds(max_states, alphabet_size)
    width = max_states + 1
    reports = []
    cell_keys = (
        "closure:prefix",
        "closure:suffix:no-empty",
        "closure:suffix:has-empty",
        "closure:factor",
        "closure:subword",
    )
    assert int(out[0]) == 0, f"{int(out[0])} closure bound violations in exhaustive sweep"
    for block, cell_key in enumerate(cell_keys):
        cell = CELLS[cell_key]
        report = VerificationReport(cell)
        for m in range(1, max_states + 1):
            observed = int(out[1 + block * width + m])
            if observed == 0:
                continue  # no machine fell in this (m, variant) bucket
            if m < cell.min_n:
                continue
            bnd = cell.bound(1, m, 1)
            report.records.append(PointRecord(None, m, 1, observed, bnd, _verdict(observed, bnd)))
        reports.append(report)
    return reports


def verify_universal(
    cell: BoundCell | str,
    max_states: int,
    alphabet_size: int = 2,
    backend_name: str | None = None,
) -> VerificationReport:
    """Apply the cell's operation to every class member (or pair) with
    complexity up to ``max_states``; record the maximum observed per point."""
    if isinstance(cell, str):
        cell = CELLS[cell]
    t0 = time.perf_counter()
    report = VerificationReport(cell)
    if cell.note:
        report.notes.append(cell.note)
    asize = 1 if cell.cls == "unary-closed" else alphabet_size
    members = {
        kappa: _class_members(cell.cls, kappa, asize, backend_name)
        for kappa in range(1, max_states + 1)
    }
    if cell.arity == 1:
        for n in range(max(1, cell.min_n), max_states + 1):
            best = 0
            best_k = 1
            for L in members[n]:
                if cell.variant == "star-eq" and star(L) != L:
                    continue
                if cell.variant == "star-neq" and star(L) == L:
                    continue
                kappa = apply_cell(cell, L).complexity
                if kappa > best:
                    best = kappa
                    best_k = accepting_quotient_count(L)
            if best == 0:
                continue
            bnd = cell.bound(1, n, best_k)
            report.records.append(PointRecord(None, n, best_k, best, bnd, _verdict(best, bnd)))
    else:
        for m in range(max(1, cell.min_m), max_states + 1):
            for n in range(max(1, cell.min_n), max_states + 1):
                best = 0
                best_k = 1
                worst_slack = None
                for K in members[m]:
                    kk = accepting_quotient_count(K)
                    for L in members[n]:
                        kappa = apply_cell(cell, K, L).complexity
                        bnd = cell.bound(m, n, kk)
                        slack = bnd - kappa
                        if worst_slack is None or slack < worst_slack:
                            worst_slack = slack
                            best = kappa
                            best_k = kk
                if worst_slack is None:
                    continue
                bnd = cell.bound(m, n, best_k)
                report.records.append(
                    PointRecord(m, n, best_k, best, bnd, _verdict(best, bnd))
                )
    report.runtime = time.perf_counter() - t0
    return report


@dataclass
class WitnessSearch:
    cell: BoundCell
    m: int
    n: int | None
    verdict: str  # TIGHT | INCONCLUSIVE | VIOLATION
    witness: tuple[Language, ...] | None
    examined: int
    seed: int


def _random_class_member(
    rng: random.Random, cls: str, kappa: int, alphabet_size: int, kern
) -> Language | None:
    n = kappa + rng.randrange(0, 2)
    k = alphabet_size
    delta = np.array([rng.randrange(n) for _ in range(n * k)], np.int64)
    fmask = np.int64(rng.randrange(1 << n))
    m, mask = kern.closed_kind_mask(n, k, delta, fmask)
    if int(m) != kappa:
        return None
    if cls == "regular":
        pass
    elif cls == "unary-closed":
        if not (int(mask) & 1):
            return None
    elif not (int(mask) & _KIND_BITS[cls]):
        return None
    _, sig = kern.min_canon(n, k, delta, fmask, 0)
    if int(sig) < 0:
        return None
    return Language.from_dfa(
        decode_signature(int(sig), kappa, k, tuple("abcdefgh"[:k]))
    )


def find_witness(
    cell: BoundCell | str,
    m: int,
    n: int | None = None,
    alphabet_size: int = 2,
    budget: int = 50_000,
    seed: int = 0,
    backend_name: str | None = None,
) -> WitnessSearch:
    """Search for class members attaining the cell's bound exactly.

    Exhaustive over the class inventory when complexities are at most 3,
    then seeded random sampling until the budget runs out. A miss is
    INCONCLUSIVE (the bound may need a larger alphabet), never a refutation.
    """
    if isinstance(cell, str):
        cell = CELLS[cell]
    if cell.arity == 2 and n is None:
        raise ValueError(f"cell {cell.key} is binary: supply n")
    examined = 0
    kern = get_backend(backend_name)
    rng = random.Random(seed)

    def candidates(kappa: int) -> Iterator[Language]:
        nonlocal examined
        if kappa <= 3:
            yield from _class_members(cell.cls, kappa, alphabet_size, backend_name)
        while True:
            lang = _random_class_member(rng, cell.cls, kappa, alphabet_size, kern)
            if lang is not None:
                yield lang
            examined += 1
            if examined >= budget:
                return

    if cell.arity == 1:
        for L in candidates(m):
            examined += 1
            if examined > budget:
                break
            if cell.variant == "star-eq" and star(L) != L:
                continue
            if cell.variant == "star-neq" and star(L) == L:
                continue
            kappa = apply_cell(cell, L).complexity
            bnd = cell.bound(1, m, accepting_quotient_count(L))
            if kappa > bnd:
                return WitnessSearch(cell, m, None, "VIOLATION", (L,), examined, seed)
            if kappa == bnd:
                return WitnessSearch(cell, m, None, "TIGHT", (L,), examined, seed)
        return WitnessSearch(cell, m, None, "INCONCLUSIVE", None, examined, seed)

    assert n is not None
    lefts = list(_class_members(cell.cls, m, alphabet_size, backend_name)) if m <= 3 else []
    rights = list(_class_members(cell.cls, n, alphabet_size, backend_name)) if n <= 3 else []
    for K in lefts:
        kk = accepting_quotient_count(K)
        bnd = cell.bound(m, n, kk)
        for L in rights:
            examined += 1
            if examined > budget:
                return WitnessSearch(cell, m, n, "INCONCLUSIVE", None, examined, seed)
            kappa = apply_cell(cell, K, L).complexity
            if kappa > bnd:
                return WitnessSearch(cell, m, n, "VIOLATION", (K, L), examined, seed)
            if kappa == bnd:
                return WitnessSearch(cell, m, n, "TIGHT", (K, L), examined, seed)
    while examined < budget:
        K = _random_class_member(rng, cell.cls, m, alphabet_size, kern)
        L = _random_class_member(rng, cell.cls, n, alphabet_size, kern)
        examined += 1
        if K is None or L is None:
            continue
        kk = accepting_quotient_count(K)
        bnd = cell.bound(m, n, kk)
        kappa = apply_cell(cell, K, L).complexity
        if kappa > bnd:
            return WitnessSearch(cell, m, n, "VIOLATION", (K, L), examined, seed)
        if kappa == bnd:
            return WitnessSearch(cell, m, n, "TIGHT", (K, L), examined, seed)
    return WitnessSearch(cell, m, n, "INCONCLUSIVE", None, examined, seed)


DEFAULT_GRIDS: dict[str, Sequence] = {
    "closure:prefix": range(2, 11),
    "closure:suffix:no-empty": range(2, 9),
    "closure:suffix:has-empty": range(2, 10),
    "closure:factor": range(2, 10),
    "closure:subword": range(2, 9),
    "closure:unary-closed": range(2, 9),
    "product:prefix": [(m, n) for m in range(2, 7) for n in range(2, 7)],
    "product:suffix": [(m, n) for m in range(2, 7) for n in range(2, 7)],
    "product:factor": [(m, n) for m in range(2, 9) for n in range(2, 9)],
    "product:subword": [(m, n) for m in range(2, 9) for n in range(2, 9)],
    "product:unary-closed": [(m, n) for m in range(2, 7) for n in range(2, 7)],
    "star:prefix": range(3, 9),
    "star:suffix:star-eq": range(3, 9),
    "star:suffix:star-neq": range(3, 9),
    "star:factor": range(2, 9),
    "star:subword": range(2, 9),
    "star:unary-closed": range(3, 7),
}


def default_grid(cell: BoundCell | str) -> Sequence:
    if isinstance(cell, str):
        cell = CELLS[cell]
    return DEFAULT_GRIDS.get(cell.key, [])
