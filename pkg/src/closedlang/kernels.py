"""Hot kernels for the exhaustive sweeps, on an integer/bitmask DFA encoding.

A machine is ``(n, k, delta, finals_mask)`` with ``delta`` a flat int64 array
(``delta[s*k + a]`` is the successor of state s on letter a), initial state 0,
and finals as a bitmask. These kernels only ever see small machines (base
machines up to ~6 states, subset automata up to 2^6 + 1), so subsets fit in
an int64 bitmask.

The same source is compiled two ways: with ``numba.njit`` (default) and as
plain Python, selected by the environment variable ``CLOSEDLANG_BACKEND``
(``numba`` or ``python``). Both backends are importable side by side for the
agreement tests and the benchmark.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

#: per-machine closure-bound result layout for sweep tables
SWEEP_TABLES = ("prefix", "suffix_noempty", "suffix_empty", "factor", "subword")


def _build(jit):
    @jit
    def reach_mask(n, k, delta, initial):
        """Bitmask of states reachable from the initial state."""
        mask = np.int64(1) << initial
        stack = np.empty(n, np.int64)
        stack[0] = initial
        top = 1
        while top > 0:
            top -= 1
            s = stack[top]
            for a in range(k):
                t = delta[s * k + a]
                if not (mask >> t) & 1:
                    mask |= np.int64(1) << t
                    stack[top] = t
                    top += 1
        return mask

    @jit
    def live_mask(n, k, delta, finals_mask):
        """Bitmask of non-empty states (some final state is reachable)."""
        mask = np.int64(finals_mask)
        changed = True
        while changed:
            changed = False
            for s in range(n):
                if (mask >> s) & 1:
                    continue
                for a in range(k):
                    if (mask >> delta[s * k + a]) & 1:
                        mask |= np.int64(1) << s
                        changed = True
                        break
        return mask

    @jit
    def minimize_classes(n, k, delta, finals_mask, initial, cls):
        """Moore refinement over reachable states; fills ``cls``, returns the
        number of classes. Unreachable states get class -1."""
        reach = reach_mask(n, k, delta, initial)
        for s in range(n):
            cls[s] = -1
        # initial partition by finality, numbered by first occurrence
        nclasses = 0
        first_final = -1
        first_nonfinal = -1
        for s in range(n):
            if not (reach >> s) & 1:
                continue
            if (finals_mask >> s) & 1:
                if first_final < 0:
                    first_final = nclasses
                    nclasses += 1
                cls[s] = first_final
            else:
                if first_nonfinal < 0:
                    first_nonfinal = nclasses
                    nclasses += 1
                cls[s] = first_nonfinal
        sig = np.empty(n, np.int64)
        distinct = np.empty(n, np.int64)
        newcls = np.empty(n, np.int64)
        while True:
            base = np.int64(nclasses)
            for s in range(n):
                if cls[s] < 0:
                    continue
                acc = np.int64(cls[s])
                for a in range(k):
                    acc = acc * base + cls[delta[s * k + a]]
                sig[s] = acc
            count = 0
            for s in range(n):
                if cls[s] < 0:
                    continue
                found = -1
                for i in range(count):
                    if distinct[i] == sig[s]:
                        found = i
                        break
                if found < 0:
                    distinct[count] = sig[s]
                    found = count
                    count += 1
                newcls[s] = found
            if count == nclasses:
                break
            nclasses = count
            for s in range(n):
                if cls[s] >= 0:
                    cls[s] = newcls[s]
        return nclasses

    @jit
    def min_kappa(n, k, delta, finals_mask, initial):
        """Quotient complexity of the machine's language."""
        cls = np.empty(n, np.int64)
        return minimize_classes(n, k, delta, finals_mask, initial, cls)

    @jit
    def min_canon(n, k, delta, finals_mask, initial):
        """(kappa, canonical signature) of the minimized machine.

        The signature packs the BFS-renumbered transition table and finals
        into one int64; -1 when the machine is too large to encode.
        """
        cls = np.empty(n, np.int64)
        m = minimize_classes(n, k, delta, finals_mask, initial, cls)
        # bits: m*k digits base m, plus m final bits; keep comfortably in 62
        bits = np.float64(m * k) * np.log2(np.float64(max(m, 2))) + m
        if bits > 62.0:
            return m, np.int64(-1)
        qdelta = np.empty(m * k, np.int64)
        qfinal = np.zeros(m, np.int64)
        seen = np.zeros(m, np.int64)
        for s in range(n):
            c = cls[s]
            if c < 0 or seen[c] == 1:
                continue
            seen[c] = 1
            for a in range(k):
                qdelta[c * k + a] = cls[delta[s * k + a]]
            if (finals_mask >> s) & 1:
                qfinal[c] = 1
        # BFS renumbering from the initial class, letters in order
        order = np.full(m, -1, np.int64)
        queue = np.empty(m, np.int64)
        order[cls[initial]] = 0
        queue[0] = cls[initial]
        head = 0
        tail = 1
        while head < tail:
            c = queue[head]
            head += 1
            for a in range(k):
                t = qdelta[c * k + a]
                if order[t] < 0:
                    order[t] = tail
                    queue[tail] = t
                    tail += 1
        sig = np.int64(0)
        for new in range(m):
            old = queue[new]
            for a in range(k):
                sig = sig * m + order[qdelta[old * k + a]]
        for new in range(m):
            sig = sig * 2 + qfinal[queue[new]]
        return m, sig

    @jit
    def subset_min_canon(nbase, k, img, eclo, start_mask, finals_mask, all_nonempty_final):
        """Determinize a bitmask-encoded NFA and return (kappa, canonical sig).

        ``img[s*k + a]`` is the bitmask image of state s under letter a (already
        trimmed), ``eclo[s]`` the epsilon closure of {s}. A subset is accepting
        when it meets ``finals_mask``, or merely when non-empty if
        ``all_nonempty_final`` is set.
        """
        cap = (1 << nbase) + 1
        masks = np.empty(cap, np.int64)
        index = np.full(1 << nbase, -1, np.int64)
        masks[0] = start_mask
        index[start_mask] = 0
        count = 1
        ddelta = np.empty(cap * k, np.int64)
        i = 0
        while i < count:
            cur = masks[i]
            for a in range(k):
                nxt = np.int64(0)
                rest = cur
                while rest:
                    s = np.int64(0)
                    low = rest & (-rest)
                    while (low >> s) & 1 == 0:
                        s += 1
                    rest &= rest - 1
                    step = img[s * k + a]
                    r2 = step
                    while r2:
                        t = np.int64(0)
                        low2 = r2 & (-r2)
                        while (low2 >> t) & 1 == 0:
                            t += 1
                        r2 &= r2 - 1
                        nxt |= eclo[t]
                if index[nxt] < 0:
                    index[nxt] = count
                    masks[count] = nxt
                    count += 1
                ddelta[i * k + a] = index[nxt]
            i += 1
        dfinals = np.int64(0)
        for j in range(count):
            if all_nonempty_final == 1:
                if masks[j] != 0:
                    dfinals |= np.int64(1) << j
            elif masks[j] & finals_mask:
                dfinals |= np.int64(1) << j
        return min_canon(count, k, ddelta[: count * k], dfinals, 0)

    @jit
    def closure_stats(n, k, delta, finals_mask):
        """Per-machine summary: [kappa, has_empty, k_pre, k_suf, k_fac, k_sub]."""
        out = np.empty(6, np.int64)
        reach = reach_mask(n, k, delta, 0)
        live = live_mask(n, k, delta, finals_mask)
        trim = reach & live
        m = min_kappa(n, k, delta, finals_mask, 0)
        has_empty = 1 if (reach & ~live) != 0 else 0
        out[0] = m
        out[1] = has_empty
        if trim == 0:  # empty language: all closures are empty
            out[2] = 1
            out[3] = 1
            out[4] = 1
            out[5] = 1
            return out
        out[2] = min_kappa(n, k, delta, trim, 0)
        img = np.empty(n * k, np.int64)
        identity = np.empty(n, np.int64)
        for s in range(n):
            identity[s] = np.int64(1) << s
            for a in range(k):
                t = delta[s * k + a]
                if ((trim >> s) & 1) and ((trim >> t) & 1):
                    img[s * k + a] = np.int64(1) << t
                else:
                    img[s * k + a] = 0
        ksuf, _ = subset_min_canon(n, k, img, identity, trim, finals_mask & trim, 0)
        kfac, _ = subset_min_canon(n, k, img, identity, trim, np.int64(0), 1)
        out[3] = ksuf
        out[4] = kfac
        if has_empty == 0:
            out[5] = 1  # subword closure is all of Sigma*
            return out
        eclo = np.empty(n, np.int64)
        for s in range(n):
            mask = np.int64(1) << s if ((trim >> s) & 1) else np.int64(0)
            eclo[s] = mask
        changed = True
        while changed:
            changed = False
            for s in range(n):
                if not (trim >> s) & 1:
                    continue
                acc = eclo[s]
                for a in range(k):
                    step = img[s * k + a]
                    r2 = step
                    while r2:
                        t = np.int64(0)
                        low2 = r2 & (-r2)
                        while (low2 >> t) & 1 == 0:
                            t += 1
                        r2 &= r2 - 1
                        acc |= eclo[t]
                if acc != eclo[s]:
                    eclo[s] = acc
                    changed = True
        ksub, _ = subset_min_canon(n, k, img, eclo, eclo[0], finals_mask & trim, 0)
        out[5] = ksub
        return out

    @jit
    def sweep_closure_bounds(n, k):
        """Check the four closure bounds over every complete n-state machine.

        Returns [violations, then five blocks of size n+1 holding the maximum
        closure complexity observed per kappa(L)=m] — see SWEEP_TABLES.
        """
        width = n + 1
        out = np.zeros(1 + 5 * width, np.int64)
        ntables = np.int64(1)
        for _ in range(n * k):
            ntables *= n
        digits = np.zeros(n * k, np.int64)
        delta = np.zeros(n * k, np.int64)
        for _ in range(ntables):
            for f in range(1 << n):
                stats = closure_stats(n, k, delta, np.int64(f))
                m = stats[0]
                has_empty = stats[1]
                kpre = stats[2]
                ksuf = stats[3]
                kfac = stats[4]
                ksub = stats[5]
                bpre = m
                bsuf = (1 << m) - 1 if has_empty == 0 else 1 << (m - 1)
                bfac = 1 << (m - 1)
                bsub = (1 << (m - 2)) + 1 if m >= 2 else 1
                if kpre > bpre or ksuf > bsuf or kfac > bfac or ksub > bsub:
                    out[0] += 1
                if kpre > out[1 + 0 * width + m]:
                    out[1 + 0 * width + m] = kpre
                suf_block = 1 if has_empty == 1 else 0
                if ksuf > out[1 + (1 + suf_block) * width + m]:
                    out[1 + (1 + suf_block) * width + m] = ksuf
                if kfac > out[1 + 3 * width + m]:
                    out[1 + 3 * width + m] = kfac
                if ksub > out[1 + 4 * width + m]:
                    out[1 + 4 * width + m] = ksub
            # odometer step to the next transition table
            pos = 0
            while pos < n * k:
                digits[pos] += 1
                if digits[pos] < n:
                    break
                digits[pos] = 0
                pos += 1
            for i in range(n * k):
                delta[i] = digits[i]
        return out

    @jit
    def language_canon(n, k, delta, finals_mask):
        """(kappa, canonical signature) of the machine's language."""
        return min_canon(n, k, delta, finals_mask, 0)

    @jit
    def closed_kind_mask(n, k, delta, finals_mask):
        """Bitmask of kinds (1=prefix, 2=suffix, 4=factor, 8=subword) under
        which the machine's language is closed, plus kappa.

        Returns (kappa, mask). A language is kind-closed iff its closure has
        the same canonical signature.
        """
        m, sig = min_canon(n, k, delta, finals_mask, 0)
        reach = reach_mask(n, k, delta, 0)
        live = live_mask(n, k, delta, finals_mask)
        trim = reach & live
        mask = 0
        if trim == 0:  # the empty language is closed under all four kinds
            return m, 15
        has_empty = 1 if (reach & ~live) != 0 else 0
        mpre, spre = min_canon(n, k, delta, trim, 0)
        if mpre == m and spre == sig:
            mask |= 1
        img = np.empty(n * k, np.int64)
        identity = np.empty(n, np.int64)
        for s in range(n):
            identity[s] = np.int64(1) << s
            for a in range(k):
                t = delta[s * k + a]
                if ((trim >> s) & 1) and ((trim >> t) & 1):
                    img[s * k + a] = np.int64(1) << t
                else:
                    img[s * k + a] = 0
        msuf, ssuf = subset_min_canon(n, k, img, identity, trim, finals_mask & trim, 0)
        if msuf == m and ssuf == sig:
            mask |= 2
        mfac, sfac = subset_min_canon(n, k, img, identity, trim, np.int64(0), 1)
        if mfac == m and sfac == sig:
            mask |= 4
        if has_empty == 0:
            # subword closure is Sigma*; closed iff L = Sigma*
            if m == 1 and (finals_mask >> 0) & 1:
                mask |= 8
        else:
            eclo = np.empty(n, np.int64)
            for s in range(n):
                eclo[s] = np.int64(1) << s if ((trim >> s) & 1) else np.int64(0)
            changed = True
            while changed:
                changed = False
                for s in range(n):
                    if not (trim >> s) & 1:
                        continue
                    acc = eclo[s]
                    for a in range(k):
                        r2 = img[s * k + a]
                        while r2:
                            t = np.int64(0)
                            low2 = r2 & (-r2)
                            while (low2 >> t) & 1 == 0:
                                t += 1
                            r2 &= r2 - 1
                            acc |= eclo[t]
                    if acc != eclo[s]:
                        eclo[s] = acc
                        changed = True
            msub, ssub = subset_min_canon(n, k, img, eclo, eclo[0], finals_mask & trim, 0)
            if msub == m and ssub == sig:
                mask |= 8
        return m, mask

    @jit
    def collect_closed(n, k):
        """Signatures of all closed languages with kappa exactly n.

        Scans every complete n-state machine; returns (sigs, kindmasks, count)
        with one entry per scanned machine whose language is closed under at
        least one kind (duplicates included; deduplicate by signature).
        """
        ntables = np.int64(1)
        for _ in range(n * k):
            ntables *= n
        total = ntables * (1 << n)
        sigs = np.empty(total, np.int64)
        kinds = np.empty(total, np.int64)
        count = 0
        digits = np.zeros(n * k, np.int64)
        delta = np.zeros(n * k, np.int64)
        for _ in range(ntables):
            for f in range(1 << n):
                m, mask = closed_kind_mask(n, k, delta, np.int64(f))
                if m == n and mask != 0:
                    _, sig = min_canon(n, k, delta, np.int64(f), 0)
                    sigs[count] = sig
                    kinds[count] = mask
                    count += 1
            pos = 0
            while pos < n * k:
                digits[pos] += 1
                if digits[pos] < n:
                    break
                digits[pos] = 0
                pos += 1
            for i in range(n * k):
                delta[i] = digits[i]
        return sigs[:count], kinds[:count], count

    return SimpleNamespace(
        reach_mask=reach_mask,
        live_mask=live_mask,
        min_kappa=min_kappa,
        min_canon=min_canon,
        subset_min_canon=subset_min_canon,
        closure_stats=closure_stats,
        sweep_closure_bounds=sweep_closure_bounds,
        language_canon=language_canon,
        closed_kind_mask=closed_kind_mask,
        collect_closed=collect_closed,
        name="unset",
    )


_BACKENDS: dict[str, SimpleNamespace] = {}


def get_backend(name: str | None = None) -> SimpleNamespace:
    """Kernel namespace for ``name`` ('numba' or 'python'), built lazily.

    With no argument, honors CLOSEDLANG_BACKEND and falls back to numba when
    available, else python.
    """
    if name is None:
        name = os.environ.get("CLOSEDLANG_BACKEND", "").strip().lower()
        if name not in ("numba", "python"):
            try:
                import numba  # noqa: F401

                name = "numba"
            except ImportError:
                name = "python"
    if name not in ("numba", "python"):
        raise ValueError(f"unknown backend {name!r}: use 'numba' or 'python'")
    if name not in _BACKENDS:
        if name == "numba":
            import numba

            ns = _build(numba.njit(cache=False))
        else:
            ns = _build(lambda fn: fn)
        ns.name = name
        _BACKENDS[name] = ns
    return _BACKENDS[name]


def dfa_to_arrays(dfa) -> tuple[int, int, np.ndarray, int]:
    """Flatten a Dfa (initial state must be 0) into the kernel encoding."""
    if dfa.initial != 0:
        raise ValueError("kernel encoding fixes the initial state at 0")
    n, k = dfa.n, len(dfa.alphabet)
    delta = np.empty(n * k, np.int64)
    for s in range(n):
        for a in range(k):
            delta[s * k + a] = dfa.delta[s][a]
    finals_mask = 0
    for s in dfa.finals:
        finals_mask |= 1 << s
    return n, k, delta, finals_mask


def decode_signature(sig: int, n: int, k: int, alphabet: tuple[str, ...]):
    """Rebuild the canonical Dfa from a kernel signature (kappa = n)."""
    from .automata import Dfa

    finals = []
    for s in range(n - 1, -1, -1):
        if sig & 1:
            finals.append(s)
        sig >>= 1
    digits = []
    for _ in range(n * k):
        digits.append(sig % n)
        sig //= n
    digits.reverse()
    delta = tuple(tuple(digits[s * k : (s + 1) * k]) for s in range(n))
    return Dfa(alphabet[:k], n, delta, 0, frozenset(finals))
