"""Correspondences between exceptional sequences, forests, parking functions,
Pruefer codes and transposition factorizations of the long cycle."""
from __future__ import annotations

from typing import Sequence

from .forest import RootedLabeledForest
from .modules import IntervalModule
from .sequences import ExceptionalSequence, braid_sigma, is_exceptional_sequence


# -- forests <-> sequences ------------------------------------------------------

def forest_to_ces(forest: RootedLabeledForest) -> ExceptionalSequence:
    """The complete exceptional sequence whose support poset has Hasse diagram ``forest``.

    Roots in increasing label order get consecutive blocks covering ``[1, n]``.
    Inside the interval ``[a, b]`` of a vertex ``r`` the children with labels
    above ``r`` are laid out first (increasing labels), then a one-vertex gap,
    then the children with labels below ``r``, the last of them ending at ``b``.
    """
    n = forest.n
    support: dict[int, tuple[int, int]] = {}
    start = 1
    for root in forest.roots:
        support[root] = (start, start + forest.weight(root) - 1)
        start += forest.weight(root)
    stack = list(forest.roots)
    while stack:
        r = stack.pop()
        a, b = support[r]
        kids = forest.children(r)
        pos = a
        for c in (c for c in kids if c > r):
            support[c] = (pos, pos + forest.weight(c) - 1)
            pos += forest.weight(c)
        pos += 1  # the gap
        for c in (c for c in kids if c < r):
            support[c] = (pos, pos + forest.weight(c) - 1)
            pos += forest.weight(c)
        assert pos == b + 1
        stack.extend(kids)
    objs = tuple(IntervalModule(*support[v], n) for v in range(1, n + 1))
    return ExceptionalSequence._trusted(objs, n)


def ces_to_forest(seq: ExceptionalSequence | Sequence[IntervalModule]) -> RootedLabeledForest:
    """Hasse diagram of support containment; the parent is the smallest strictly larger support."""
    if not isinstance(seq, ExceptionalSequence):
        seq = ExceptionalSequence(seq)
    elif not is_exceptional_sequence(seq.objects):
        raise ValueError(f"not an exceptional sequence: {seq}")
    if not seq.is_complete:
        raise ValueError(f"sequence of length {len(seq)} is not complete for n={seq.n}")
    objs = seq.objects
    parent = []
    for i, x in enumerate(objs):
        best, best_len = 0, None
        for j, y in enumerate(objs):
            if j != i and y.contains(x) and (best_len is None or y.length < best_len):
                best, best_len = j + 1, y.length
        parent.append(best)
    return RootedLabeledForest(tuple(parent))


# -- parking functions ------------------------------------------------------------

def is_parking_function(entries: Sequence[int], n: int | None = None) -> bool:
    """At least ``k`` entries are ``<= k`` for every ``k``."""
    n = len(entries) if n is None else n
    if len(entries) != n or any(not 1 <= x <= n for x in entries):
        return False
    s = sorted(entries)
    return all(s[k] <= k + 1 for k in range(n))


def _check_parking(entries: Sequence[int]):
    n = len(entries)
    for pos, x in enumerate(entries, start=1):
        if not isinstance(x, int) or not 1 <= x <= n:
            raise ValueError(f"entry {pos} ({x!r}) is outside 1..{n}")
    s = sorted(entries)
    for k in range(n):
        if s[k] > k + 1:
            raise ValueError(f"not a parking function: fewer than {k + 1} entries are <= {k + 1}")


def ces_tops(seq: ExceptionalSequence) -> tuple[int, ...]:
    return seq.tops()


def park_nondecreasing(p: Sequence[int]) -> ExceptionalSequence:
    """Cars ``n, n-1, ..., 1`` each take the first free spot at or after their preference.

    >>> str(park_nondecreasing((1, 1, 2, 2)))
    'M(1,4);M(1,1);M(2,3);M(2,2)'
    """
    p = tuple(p)
    _check_parking(p)
    if any(p[k] > p[k + 1] for k in range(len(p) - 1)):
        raise ValueError(f"{p} is not nondecreasing")
    n = len(p)
    taken = [False] * (n + 2)
    spots = [0] * n
    for car in range(n - 1, -1, -1):
        b = p[car]
        while taken[b]:
            b += 1
        taken[b] = True
        spots[car] = b
    return ExceptionalSequence(tuple(IntervalModule(a, b, n) for a, b in zip(p, spots)), n)


def parking_to_ces(p: Sequence[int]) -> ExceptionalSequence:
    """The unique complete exceptional sequence with sequence of tops ``p``.

    Start from the sorted parking function and bubble entries into place.
    An adjacent swap of unequal tops is realised by ``sigma_i`` when the left
    top is larger and by ``sigma_i^{-1}`` when it is smaller; the other
    direction can merge two tops (consecutive supports).
    """
    p = tuple(p)
    _check_parking(p)
    seq = park_nondecreasing(sorted(p))
    for k in range(len(p)):
        tops = seq.tops()
        j = tops.index(p[k], k)
        for i in range(j, k, -1):  # move position i (1-based) to i-1
            left, right = seq[i - 1].a, seq[i].a
            seq = braid_sigma(seq, i, inverse=left < right)
    assert seq.tops() == p, (seq, p)
    return seq


# -- Pruefer codes of parking functions ------------------------------------------------

def parking_prufer(p: Sequence[int]) -> tuple[int, ...]:
    """Consecutive differences modulo ``n + 1``."""
    p = tuple(p)
    _check_parking(p)
    m = len(p) + 1
    return tuple((p[k + 1] - p[k]) % m for k in range(len(p) - 1))


def prufer_parking(code: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Inverse of :func:`parking_prufer`: the unique shift of the partial sums that parks."""
    code = tuple(code)
    n = len(code) + 1 if n is None else n
    if len(code) != n - 1:
        raise ValueError(f"a code for n={n} must have {n - 1} entries")
    m = n + 1
    lift = [0]
    for c in code:
        lift.append((lift[-1] + c) % m)
    found = []
    for t in range(m):
        cand = tuple((x + t) % m for x in lift)
        if is_parking_function(cand, n):
            found.append(cand)
    if len(found) != 1:
        raise AssertionError(f"{len(found)} shifts of {code} are parking functions")
    return found[0]


# -- transposition factorizations -------------------------------------------------------

def compose_transpositions(pairs: Sequence[tuple[int, int]], m: int) -> tuple[int, ...]:
    """Product ``t_1 t_2 ... t_k`` as a map on ``0..m-1``, the rightmost factor acting first."""
    perm = list(range(m))
    for x, y in pairs:  # perm <- perm o (x y)
        perm[x], perm[y] = perm[y], perm[x]
    return tuple(perm)


def long_cycle(n: int) -> tuple[int, ...]:
    """The cycle ``(0 1 ... n)`` as the map ``k -> k + 1 mod n + 1``."""
    return tuple((k + 1) % (n + 1) for k in range(n + 1))


def ces_to_factorization(seq: ExceptionalSequence) -> tuple[tuple[int, int], ...]:
    """``M(a, b)`` becomes the transposition ``(a, b+1 mod n+1)``."""
    m = seq.n + 1
    return tuple((x.a, (x.b + 1) % m) for x in seq)


def factorization_to_ces(pairs: Sequence[tuple[int, int]], n: int | None = None) -> ExceptionalSequence:
    pairs = [tuple(p) for p in pairs]
    n = len(pairs) if n is None else n
    if len(pairs) != n:
        raise ValueError(f"expected {n} transpositions, got {len(pairs)}")
    for pos, (x, y) in enumerate(pairs, start=1):
        if x == y or not (0 <= x <= n and 0 <= y <= n):
            raise ValueError(f"factor {pos} ({x},{y}) is not a transposition of 0..{n}")
    if compose_transpositions(pairs, n + 1) != long_cycle(n):
        raise ValueError(f"the factors do not compose to the cycle (0 1 ... {n})")
    objs = []
    for x, y in pairs:
        if 0 in (x, y):
            a, b = max(x, y), n
        else:
            a, b = min(x, y), max(x, y) - 1
        objs.append(IntervalModule(a, b, n))
    return ExceptionalSequence(objs, n)


def render_factorization(pairs: Sequence[tuple[int, int]]) -> str:
    return " ".join(f"{x}-{y}" for x, y in pairs)


def parse_factorization(text: str) -> list[tuple[int, int]]:
    out = []
    for pos, tok in enumerate(text.split(), start=1):
        parts = tok.split("-")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ValueError(f"factor {pos} ({tok!r}) is not of the form x-y")
        out.append((int(parts[0]), int(parts[1])))
    return out


def parse_parking(text: str) -> tuple[int, ...]:
    out = []
    for pos, tok in enumerate(text.replace(" ", "").strip("()").split(","), start=1):
        if not tok.isdigit():
            raise ValueError(f"parking entry {pos} ({tok!r}) is not a positive integer")
        out.append(int(tok))
    return tuple(out)


def render_parking(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def enumerate_parking_functions(n: int):
    """All ``(n+1)^(n-1)`` parking functions of length ``n``, lexicographically."""
    import itertools

    for p in itertools.product(range(1, n + 1), repeat=n):
        if is_parking_function(p, n):
            yield p
