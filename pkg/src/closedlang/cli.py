"""Command-line interface.

Subcommands: info, complexity, closure, apply, witness, verify, search,
kuratowski. Languages come from ``--file PATH`` (DFA/NFA text format) or
``--regex STRING --alphabet LETTERS``; both flags are repeatable for binary
operations, files are consumed before regexes.

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .automata import AlphabetError, Language
from .closures import (
    ClosureKind,
    IDEAL_NAME,
    closed_kinds,
    closure,
    ideal_kinds,
)
from .fileformat import FormatError, dump_dfa, load_dfa, load_nfa
from .kuratowski import OrbitGenerator, orbit
from .ops import (
    BooleanOp,
    accepting_quotient_count,
    boolean,
    complement,
    plus,
    product,
    residual,
    reverse,
    star,
)
from .regex import RegexSyntaxError, regex_to_language
from .witnesses import FAMILIES, WitnessParameterError, witness
from . import bounds

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2

_APPLY_UNARY = ("star", "plus", "reverse", "complement", "residual")
_APPLY_BINARY = ("union", "intersection", "difference", "symmetric-difference", "product")


class CliError(Exception):
    def __init__(self, message: str, status: int = EXIT_USAGE):
        super().__init__(message)
        self.status = status


def _load_file(path: str) -> Language:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}") from exc
    if "initials:" in text:
        try:
            return Language.from_nfa(load_nfa(text))
        except FormatError as exc:
            raise CliError(f"{path}:{exc.lineno}: {exc}") from exc
    try:
        return Language.from_dfa(load_dfa(text))
    except FormatError as first:
        try:
            return Language.from_nfa(load_nfa(text))
        except FormatError:
            raise CliError(f"{path}:{first.lineno}: {first}") from first


def _gather_inputs(args, want: int) -> list[Language]:
    langs = [_load_file(p) for p in args.file or []]
    for rx in args.regex or []:
        if not args.alphabet:
            raise CliError("--regex requires --alphabet")
        try:
            langs.append(regex_to_language(rx, tuple(args.alphabet)))
        except RegexSyntaxError as exc:
            raise CliError(f"regex {rx!r}: {exc}") from exc
    if len(langs) != want:
        raise CliError(f"expected {want} input language(s), got {len(langs)}")
    return langs


def _add_input_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--file", action="append", metavar="PATH", help="DFA/NFA file (repeatable)")
    sub.add_argument("--regex", action="append", metavar="EXPR", help="regular expression (repeatable)")
    sub.add_argument("--alphabet", metavar="LETTERS", help="alphabet for --regex, e.g. 'abc'")


def _emit(lang: Language, path: str | None, comment: str | None = None) -> None:
    if path:
        Path(path).write_text(dump_dfa(lang.dfa, comment))


def _parse_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


def _cmd_info(args) -> int:
    (lang,) = _gather_inputs(args, 1)
    print(f"kappa: {lang.complexity}")
    kinds = closed_kinds(lang)
    print("closed:", ", ".join(k.value for k in kinds) if kinds else "none")
    duals = ideal_kinds(complement(lang))
    print("ideal-duals:", ", ".join(IDEAL_NAME[k] for k in duals) if duals else "none")
    nonempty = lang.dfa.nonempty_states()
    has_empty = any(s not in nonempty for s in lang.dfa.reachable())
    print("has-empty-quotient:", "yes" if has_empty else "no")
    print("accepting-quotients:", accepting_quotient_count(lang))
    print("sample:", " ".join(repr(w) for w in lang.accepted_words(3)[:8]) or "(none)")
    return EXIT_OK


def _cmd_complexity(args) -> int:
    (lang,) = _gather_inputs(args, 1)
    print(lang.complexity)
    return EXIT_OK


def _cmd_closure(args) -> int:
    (lang,) = _gather_inputs(args, 1)
    result = closure(ClosureKind(args.kind), lang)
    print(f"kappa: {result.complexity}")
    _emit(result, args.emit, f"{args.kind}-closure, kappa={result.complexity}")
    if not args.emit:
        print(dump_dfa(result.dfa), end="")
    return EXIT_OK


def _cmd_apply(args) -> int:
    if args.op in _APPLY_UNARY:
        (lang,) = _gather_inputs(args, 1)
        if args.op == "star":
            result = star(lang)
        elif args.op == "plus":
            result = plus(lang)
        elif args.op == "reverse":
            result = reverse(lang)
        elif args.op == "complement":
            result = complement(lang)
        else:
            if args.word is None:
                raise CliError("residual requires --word")
            result = residual(lang, args.word)
    elif args.op in _APPLY_BINARY:
        k_lang, l_lang = _gather_inputs(args, 2)
        try:
            if args.op == "product":
                result = product(k_lang, l_lang)
            else:
                result = boolean(BooleanOp(args.op.replace("-", "_")), k_lang, l_lang)
        except AlphabetError as exc:
            raise CliError(str(exc)) from exc
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown op {args.op!r}")
    print(f"kappa: {result.complexity}")
    _emit(result, args.emit, f"{args.op}, kappa={result.complexity}")
    if not args.emit:
        print(dump_dfa(result.dfa), end="")
    return EXIT_OK


def _cmd_witness(args) -> int:
    try:
        built = witness(args.family, args.n, args.m)
    except WitnessParameterError as exc:
        raise CliError(str(exc)) from exc
    langs = built if isinstance(built, tuple) else (built,)
    for i, lang in enumerate(langs):
        label = "KL"[i] if len(langs) == 2 else "L"
        print(f"{label}: kappa={lang.complexity} alphabet={''.join(lang.dfa.alphabet)}")
        if args.emit:
            suffix = f".{label}" if len(langs) == 2 else ""
            Path(args.emit + suffix).write_text(
                dump_dfa(lang.dfa, f"{args.family} n={args.n}" + (f" m={args.m}" if args.m else ""))
            )
    return EXIT_OK


def _grid_for(cell: bounds.BoundCell, args) -> list:
    ns = _parse_range(args.n) if args.n else None
    ms = _parse_range(args.m) if args.m else None
    if cell.arity == 1:
        if ns:
            return ns
    elif ns and ms:
        return [(m, n) for m in ms for n in ns]
    elif ns:
        return [(n, n) for n in ns]
    grid = list(bounds.default_grid(cell))
    if not grid:
        raise CliError(f"no default grid for {cell.key}; pass --n (and --m)")
    return grid


def _cmd_verify(args) -> int:
    keys = [args.cell] if args.cell else sorted(bounds.WITNESS_GENERATORS)
    status = EXIT_OK
    all_lines: list[str] = []
    for key in keys:
        if key not in bounds.CELLS:
            raise CliError(f"unknown cell {key!r}; one of {sorted(bounds.CELLS)}")
        cell = bounds.CELLS[key]
        if args.universal:
            report = bounds.verify_universal(cell, args.universal)
        else:
            report = bounds.verify_tightness(cell, _grid_for(cell, args))
        if not report.ok:
            status = EXIT_VERIFY
        if not args.porcelain:
            all_lines.append(f"# cell {cell.key}")
        all_lines.extend(report.lines())
    if args.closure_sweep:
        for report in bounds.verify_closure_universal(args.closure_sweep):
            if not report.ok:
                status = EXIT_VERIFY
            if not args.porcelain:
                all_lines.append(f"# exhaustive sweep {report.cell.key}")
            all_lines.extend(report.lines())
    for line in all_lines:
        print(line)
    return status


def _cmd_search(args) -> int:
    if args.cell not in bounds.CELLS:
        raise CliError(f"unknown cell {args.cell!r}; one of {sorted(bounds.CELLS)}")
    cell = bounds.CELLS[args.cell]
    result = bounds.find_witness(
        cell,
        args.m,
        args.n,
        alphabet_size=args.alphabet_size,
        budget=args.budget,
        seed=args.seed,
    )
    point = f"m={result.m}" + (f" n={result.n}" if result.n is not None else "")
    print(
        f"SEARCH cell={cell.key} {point} verdict={result.verdict} "
        f"examined={result.examined} seed={result.seed}"
    )
    if result.witness:
        for label, lang in zip("KL", result.witness):
            print(f"{label}: kappa={lang.complexity}")
            if args.emit:
                Path(f"{args.emit}.{label}").write_text(dump_dfa(lang.dfa))
    return EXIT_OK if result.verdict != "VIOLATION" else EXIT_VERIFY


def _cmd_kuratowski(args) -> int:
    (lang,) = _gather_inputs(args, 1)
    orb = orbit(lang, OrbitGenerator(args.generator))
    for entry in orb.entries:
        expr = entry.expression or "L"
        line = f"{expr:8s} kappa={entry.complexity}"
        if args.emit:
            path = Path(args.emit) / f"orbit{entry.expression.replace('*', 's').replace('+', 'p')}.dfa"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(dump_dfa(entry.language.dfa, f"orbit entry {expr}"))
            line += f" file={path}"
        print(line)
    print(f"size: {len(orb)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="closedlang",
        description="Closure operations, complexity bounds, and witness machines for regular languages.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="complexity, closedness classes, ideal duals")
    _add_input_flags(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("complexity", help="print the quotient complexity")
    _add_input_flags(p)
    p.set_defaults(func=_cmd_complexity)

    p = sub.add_parser("closure", help="apply a closure operator")
    _add_input_flags(p)
    p.add_argument("--kind", required=True, choices=[k.value for k in ClosureKind])
    p.add_argument("--emit", metavar="PATH", help="write the result DFA here")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("apply", help="apply a regular operation")
    _add_input_flags(p)
    p.add_argument("--op", required=True, choices=_APPLY_UNARY + _APPLY_BINARY)
    p.add_argument("--word", help="word for --op residual")
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("witness", help="build a named witness family member")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="tightness/universality runs over bound cells")
    p.add_argument("--cell", help="cell key, e.g. star:prefix; default: all cells with witnesses")
    p.add_argument("--n", help="grid range, e.g. 3..8 or 4")
    p.add_argument("--m", help="grid range for binary cells")
    p.add_argument("--universal", type=int, metavar="MAX", help="exhaustive sweep up to MAX states instead of tightness")
    p.add_argument("--closure-sweep", type=int, metavar="MAX", help="also sweep all machines up to MAX states against the closure bounds")
    p.add_argument("--porcelain", action="store_true", help="machine-readable lines only")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="search for a bound-attaining witness")
    p.add_argument("--cell", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--budget", type=int, default=50_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--emit", metavar="PATH")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("kuratowski", help="closure-complement orbit of a language")
    _add_input_flags(p)
    p.add_argument("--generator", choices=["plus", "star"], default="star")
    p.add_argument("--emit", metavar="DIR", help="write each orbit entry's DFA into DIR")
    p.set_defaults(func=_cmd_kuratowski)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.status
    except (FormatError, RegexSyntaxError, AlphabetError, WitnessParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
