"""Core automaton representations: complete DFAs, NFAs, and canonical languages.

All values are immutable; every operation returns a fresh object. A
``Language`` is represented by its minimal complete DFA in canonical (BFS)
numbering, so two Languages over the same alphabet are equal iff they denote
the same set of words.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable


class AlphabetError(ValueError):
    """A letter does not belong to the relevant alphabet."""


def check_alphabet(alphabet: Iterable[str]) -> tuple[str, ...]:
    letters = tuple(alphabet)
    if not letters:
        raise AlphabetError("alphabet must be non-empty")
    for a in letters:
        if not (isinstance(a, str) and len(a) == 1 and a.isprintable()):
            raise AlphabetError(f"bad letter {a!r}: need a single printable character")
    if len(set(letters)) != len(letters):
        raise AlphabetError(f"duplicate letters in alphabet {letters!r}")
    return letters


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton.

    States are 0..n-1; ``delta[s][i]`` is the successor of state ``s`` on the
    i-th alphabet letter. Completeness is enforced on construction.
    """

    alphabet: tuple[str, ...]
    n: int
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 1:
            raise ValueError("a complete DFA needs at least one state")
        if not (0 <= self.initial < self.n):
            raise ValueError(f"initial state {self.initial} out of range")
        if len(self.delta) != self.n:
            raise ValueError("transition table must have one row per state")
        for s, row in enumerate(self.delta):
            if len(row) != len(self.alphabet):
                raise ValueError(f"state {s}: need one transition per letter")
            for t in row:
                if not (0 <= t < self.n):
                    raise ValueError(f"transition {s} -> {t} out of range")
        if not all(0 <= q < self.n for q in self.finals):
            raise ValueError("final states out of range")

    def letter_index(self, a: str) -> int:
        try:
            return self.alphabet.index(a)
        except ValueError:
            raise AlphabetError(f"letter {a!r} not in alphabet {self.alphabet!r}") from None

    def step(self, state: int, a: str) -> int:
        return self.delta[state][self.letter_index(a)]

    def run(self, word: str, start: int | None = None) -> int:
        state = self.initial if start is None else start
        for a in word:
            state = self.step(state, a)
        return state

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.finals

    def reachable(self) -> set[int]:
        seen = {self.initial}
        todo = [self.initial]
        while todo:
            s = todo.pop()
            for t in self.delta[s]:
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
        return seen

    def nonempty_states(self) -> set[int]:
        """States whose right language is non-empty (a final is reachable)."""
        preds: list[set[int]] = [set() for _ in range(self.n)]
        for s in range(self.n):
            for t in self.delta[s]:
                preds[t].add(s)
        live = set(self.finals)
        todo = list(live)
        while todo:
            s = todo.pop()
            for p in preds[s]:
                if p not in live:
                    live.add(p)
                    todo.append(p)
        return live


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton with a set of initial states.

    ``delta[s][i]`` is the set of successors of ``s`` on the i-th letter;
    ``eps[s]`` the set of epsilon-successors (empty unless ``epsilon`` is set).
    """

    alphabet: tuple[str, ...]
    n: int
    delta: tuple[tuple[frozenset[int], ...], ...]
    initials: frozenset[int]
    finals: frozenset[int]
    eps: tuple[frozenset[int], ...] = ()
    epsilon: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(
            self, "delta", tuple(tuple(frozenset(ts) for ts in row) for row in self.delta)
        )
        eps = self.eps if self.eps else tuple(frozenset() for _ in range(self.n))
        object.__setattr__(self, "eps", tuple(frozenset(ts) for ts in eps))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 0:
            raise ValueError("negative state count")
        if len(self.delta) != self.n or len(self.eps) != self.n:
            raise ValueError("transition table must have one row per state")
        states = range(self.n)
        for row in self.delta:
            if len(row) != len(self.alphabet):
                raise ValueError("need one target set per letter")
            for ts in row:
                if not all(t in states for t in ts):
                    raise ValueError("transition target out of range")
        for ts in self.eps:
            if ts and not self.epsilon:
                raise ValueError("epsilon edges present but epsilon flag not set")
            if not all(t in states for t in ts):
                raise ValueError("epsilon target out of range")
        if not all(q in states for q in self.initials | self.finals):
            raise ValueError("initial/final states out of range")

    @staticmethod
    def from_dict(
        alphabet: Iterable[str],
        n: int,
        edges: dict[tuple[int, str], Iterable[int]],
        initials: Iterable[int],
        finals: Iterable[int],
        epsilon: bool = False,
    ) -> "Nfa":
        """Build from a sparse ``(state, letter) -> targets`` mapping.

        The letter ``""`` denotes an epsilon edge.
        """
        letters = check_alphabet(alphabet)
        delta = [[set() for _ in letters] for _ in range(n)]
        eps = [set() for _ in range(n)]
        has_eps = False
        for (s, a), targets in edges.items():
            if a == "":
                eps[s].update(targets)
                has_eps = True
            else:
                if a not in letters:
                    raise AlphabetError(f"letter {a!r} not in alphabet {letters!r}")
                delta[s][letters.index(a)].update(targets)
        return Nfa(
            alphabet=letters,
            n=n,
            delta=tuple(tuple(frozenset(ts) for ts in row) for row in delta),
            initials=frozenset(initials),
            finals=frozenset(finals),
            eps=tuple(frozenset(ts) for ts in eps),
            epsilon=epsilon or has_eps,
        )

    def eps_closure(self, states: Iterable[int]) -> frozenset[int]:
        closure = set(states)
        todo = list(closure)
        while todo:
            s = todo.pop()
            for t in self.eps[s]:
                if t not in closure:
                    closure.add(t)
                    todo.append(t)
        return frozenset(closure)

    def accepts(self, word: str) -> bool:
        """Direct simulation, used as an oracle against determinization."""
        current = self.eps_closure(self.initials)
        for a in word:
            i = self.alphabet.index(a)
            current = self.eps_closure({t for s in current for t in self.delta[s][i]})
        return bool(current & self.finals)


def determinize(nfa: Nfa) -> Dfa:
    """Accessible subset construction with epsilon closure.

    The empty subset is kept as the rejecting sink so the result is complete.
    """
    k = len(nfa.alphabet)
    start = nfa.eps_closure(nfa.initials)
    index: dict[frozenset[int], int] = {start: 0}
    subsets: list[frozenset[int]] = [start]
    delta: list[list[int]] = []
    i = 0
    while i < len(subsets):
        current = subsets[i]
        row = []
        for a in range(k):
            nxt = nfa.eps_closure({t for s in current for t in nfa.delta[s][a]})
            if nxt not in index:
                index[nxt] = len(subsets)
                subsets.append(nxt)
            row.append(index[nxt])
        delta.append(row)
        i += 1
    finals = frozenset(i for i, sub in enumerate(subsets) if sub & nfa.finals)
    return Dfa(nfa.alphabet, len(subsets), tuple(tuple(r) for r in delta), 0, finals)


def minimize(dfa: Dfa) -> Dfa:
    """Minimal complete DFA via Moore partition refinement on reachable states."""
    reach = sorted(dfa.reachable())
    k = len(dfa.alphabet)
    first: dict[bool, int] = {}
    cls = {}
    for s in reach:
        key = s in dfa.finals
        if key not in first:
            first[key] = len(first)
        cls[s] = first[key]
    nclasses = len(first)
    while True:
        sigs = {}
        new_cls = {}
        for s in reach:
            sig = (cls[s],) + tuple(cls[dfa.delta[s][a]] for a in range(k))
            if sig not in sigs:
                sigs[sig] = len(sigs)
            new_cls[s] = sigs[sig]
        if len(sigs) == nclasses:
            break
        cls, nclasses = new_cls, len(sigs)
    rep: dict[int, int] = {}
    for s in reach:
        rep.setdefault(cls[s], s)
    delta = tuple(
        tuple(cls[dfa.delta[rep[c]][a]] for a in range(k)) for c in range(nclasses)
    )
    finals = frozenset(cls[s] for s in reach if s in dfa.finals)
    return Dfa(dfa.alphabet, nclasses, delta, cls[dfa.initial], finals)


def is_minimal(dfa: Dfa) -> bool:
    return len(dfa.reachable()) == dfa.n and minimize(dfa).n == dfa.n


def canonicalize(dfa: Dfa) -> Dfa:
    """Renumber a minimal DFA in BFS order, expanding letters in alphabet order.

    Canonical forms of two minimal DFAs are identical iff the machines are
    isomorphic. Rejects non-minimal input.
    """
    if not is_minimal(dfa):
        raise ValueError("canonicalize requires a minimal DFA")
    order: dict[int, int] = {dfa.initial: 0}
    queue = deque([dfa.initial])
    while queue:
        s = queue.popleft()
        for t in dfa.delta[s]:
            if t not in order:
                order[t] = len(order)
                queue.append(t)
    k = len(dfa.alphabet)
    inv = {new: old for old, new in order.items()}
    delta = tuple(
        tuple(order[dfa.delta[inv[s]][a]] for a in range(k)) for s in range(dfa.n)
    )
    finals = frozenset(order[s] for s in dfa.finals)
    return Dfa(dfa.alphabet, dfa.n, delta, 0, finals)


@dataclass(frozen=True)
class Language:
    """A regular language as a minimized, canonically numbered complete DFA.

    Equality of Languages over the same alphabet is language equality.
    """

    dfa: Dfa

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.dfa.alphabet

    @property
    def complexity(self) -> int:
        """Quotient complexity: the number of distinct quotients."""
        return self.dfa.n

    @staticmethod
    def from_dfa(dfa: Dfa) -> "Language":
        return Language(canonicalize(minimize(dfa)))

    @staticmethod
    def from_nfa(nfa: Nfa) -> "Language":
        return Language.from_dfa(determinize(nfa))

    def __contains__(self, word: str) -> bool:
        return membership(self, word)

    def is_empty(self) -> bool:
        return not self.dfa.finals

    def is_universal(self) -> bool:
        return len(self.dfa.finals) == self.dfa.n

    def accepted_words(self, max_len: int) -> list[str]:
        """All members of length at most ``max_len``, shortlex order."""
        out = []
        level = [("", self.dfa.initial)]
        for _ in range(max_len + 1):
            nxt = []
            for w, s in level:
                if s in self.dfa.finals:
                    out.append(w)
                for i, a in enumerate(self.alphabet):
                    nxt.append((w + a, self.dfa.delta[s][i]))
            level = nxt
        return out


def complexity(lang: Language) -> int:
    return lang.complexity


def membership(lang: Language, word: str) -> bool:
    for a in word:
        if a not in lang.alphabet:
            raise AlphabetError(f"letter {a!r} not in alphabet {lang.alphabet!r}")
    return lang.dfa.accepts(word)


def is_equivalent(k_lang: Language, l_lang: Language) -> bool:
    if k_lang.alphabet != l_lang.alphabet:
        raise AlphabetError(
            f"alphabet mismatch: {k_lang.alphabet!r} vs {l_lang.alphabet!r}; widen first"
        )
    return k_lang.dfa == l_lang.dfa


def widen_alphabet(lang: Language, alphabet: Iterable[str]) -> Language:
    """View the same set of words over a larger alphabet.

    New letters lead every state to a rejecting sink, so the complexity grows
    by at most one.
    """
    wide = check_alphabet(alphabet)
    if not set(wide) >= set(lang.alphabet):
        raise AlphabetError(f"cannot shrink alphabet {lang.alphabet!r} to {wide!r}")
    old = lang.dfa
    sink = old.n  # fresh sink; minimize() merges it if one already exists
    rows = []
    for s in range(old.n):
        rows.append(
            tuple(old.delta[s][old.alphabet.index(a)] if a in old.alphabet else sink for a in wide)
        )
    rows.append(tuple(sink for _ in wide))
    return Language.from_dfa(Dfa(wide, old.n + 1, tuple(rows), old.initial, old.finals))


def empty_language(alphabet: Iterable[str]) -> Language:
    letters = check_alphabet(alphabet)
    return Language(Dfa(letters, 1, ((0,) * len(letters),), 0, frozenset()))


def universal_language(alphabet: Iterable[str]) -> Language:
    letters = check_alphabet(alphabet)
    return Language(Dfa(letters, 1, ((0,) * len(letters),), 0, frozenset({0})))


def word_language(word: str, alphabet: Iterable[str]) -> Language:
    """The singleton language {word}."""
    letters = check_alphabet(alphabet)
    n = len(word) + 2
    sink = n - 1
    rows = []
    for i in range(len(word)):
        rows.append(tuple(i + 1 if a == word[i] else sink for a in letters))
    rows.append(tuple(sink for _ in letters))  # state len(word)
    rows.append(tuple(sink for _ in letters))  # sink
    return Language.from_dfa(Dfa(letters, n, tuple(rows), 0, frozenset({len(word)})))


def common_alphabet(k_lang: Language, l_lang: Language) -> tuple[Language, Language]:
    """Widen both operands to the sorted union of their alphabets."""
    if k_lang.alphabet == l_lang.alphabet:
        return k_lang, l_lang
    union = tuple(sorted(set(k_lang.alphabet) | set(l_lang.alphabet)))
    return widen_alphabet(k_lang, union), widen_alphabet(l_lang, union)
