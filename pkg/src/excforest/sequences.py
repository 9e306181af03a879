"""Exceptional sequences, perpendicular categories and the braid group action."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .modules import IntervalModule, all_interval_modules, ext_dim, hom_dim, parse_module


def _same_rank(objects: Sequence[IntervalModule]) -> int | None:
    ranks = {x.n for x in objects}
    if len(ranks) > 1:
        raise ValueError(f"modules of mixed ranks {sorted(ranks)}")
    return ranks.pop() if ranks else None


def is_exceptional_sequence(objects: Sequence[IntervalModule]) -> bool:
    """True iff Hom(E_j, E_i) = 0 = Ext(E_j, E_i) for all i < j."""
    _same_rank(objects)
    for j in range(len(objects)):
        for i in range(j):
            if hom_dim(objects[j], objects[i]) or ext_dim(objects[j], objects[i]):
                return False
    return True


class ExceptionalSequence:
    """An exceptional sequence ``(E_1, ..., E_k)`` for the rank ``n`` quiver.

    Positions are 1-based in the mathematics and 0-based in ``objects``.
    """

    __slots__ = ("n", "objects")

    def __init__(self, objects: Iterable[IntervalModule], n: int | None = None, check: bool = True):
        objs = tuple(objects)
        rank = _same_rank(objs)
        if n is None:
            if rank is None:
                raise ValueError("rank of an empty sequence must be given")
            n = rank
        elif rank is not None and rank != n:
            raise ValueError(f"modules have rank {rank}, expected {n}")
        if len(objs) > n:
            raise ValueError(f"{len(objs)} objects exceed rank {n}")
        if check and not is_exceptional_sequence(objs):
            raise ValueError(f"not an exceptional sequence: {render_sequence(objs)}")
        self.n = n
        self.objects = objs

    @classmethod
    def _trusted(cls, objects: tuple[IntervalModule, ...], n: int) -> ExceptionalSequence:
        seq = cls.__new__(cls)
        seq.n = n
        seq.objects = objects
        return seq

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], n: int) -> ExceptionalSequence:
        return cls((IntervalModule(a, b, n) for a, b in pairs), n)

    @property
    def is_complete(self) -> bool:
        return len(self.objects) == self.n

    def tops(self) -> tuple[int, ...]:
        return tuple(x.a for x in self.objects)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((x.a, x.b) for x in self.objects)

    def __len__(self):
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)

    def __getitem__(self, item):
        return self.objects[item]

    def __eq__(self, other):
        if not isinstance(other, ExceptionalSequence):
            return NotImplemented
        return self.n == other.n and self.objects == other.objects

    def __hash__(self):
        return hash((self.n, self.objects))

    def __repr__(self):
        return f"ExceptionalSequence({render_sequence(self.objects)!r}, n={self.n})"

    def __str__(self):
        return render_sequence(self.objects)


def render_sequence(objects: Iterable[IntervalModule], simples: bool = False) -> str:
    return ";".join(x.render(simples) for x in objects)


def parse_sequence(text: str, n: int | None = None) -> ExceptionalSequence:
    """Parse ``"M(2,3);S(6);M(1,3)"``.

    Without ``n`` the rank is the number of objects (complete sequences).
    """
    parts = [p for p in text.strip().split(";") if p.strip()]
    if n is None:
        n = len(parts)
    objs = []
    for pos, part in enumerate(parts, start=1):
        try:
            objs.append(parse_module(part, n))
        except ValueError as exc:
            raise ValueError(f"object {pos}: {exc}") from None
    return ExceptionalSequence(objs, n)


def _require_complete(seq: ExceptionalSequence):
    if not seq.is_complete:
        raise ValueError(f"sequence of length {len(seq)} is not complete for n={seq.n}")


# -- perpendicular categories and relative projectivity ----------------------

def perpendicular(z: Sequence[IntervalModule], side: str, n: int | None = None) -> frozenset[IntervalModule]:
    """Indecomposables of the right (``Z^perp``) or left (``^perp Z``) perpendicular category."""
    rank = _same_rank(z)
    if n is None:
        if rank is None:
            raise ValueError("rank must be given for an empty object set")
        n = rank
    if side == "right":
        ok = lambda x: all(not hom_dim(e, x) and not ext_dim(e, x) for e in z)
    elif side == "left":
        ok = lambda x: all(not hom_dim(x, e) and not ext_dim(x, e) for e in z)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return frozenset(x for x in all_interval_modules(n) if ok(x))


def relative_flags(seq: ExceptionalSequence) -> list[tuple[bool, bool]]:
    """``(relatively projective, relatively injective)`` for each position.

    ``E_i`` is projective in the exact, extension-closed subcategory
    ``(E_{i+1} + ... + E_n)^perp`` iff Ext(E_i, X) = 0 for all its
    indecomposables X; dually for injectivity in ``^perp(E_1 + ... + E_{i-1})``.
    """
    _require_complete(seq)
    objs = seq.objects
    flags = []
    for i, e in enumerate(objs):
        right = perpendicular(objs[i + 1:], "right", seq.n)
        left = perpendicular(objs[:i], "left", seq.n)
        rel_proj = all(not ext_dim(e, x) for x in right)
        rel_inj = all(not ext_dim(x, e) for x in left)
        flags.append((rel_proj, rel_inj))
    return flags


# -- braid group action -------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    """A word in the generators ``sigma_i^{+-1}``; ``-i`` is the inverse of ``sigma_i``.

    Words multiply like group elements and act on the left, so the rightmost
    letter is applied first.
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if any(x == 0 for x in self.letters):
            raise ValueError("generator index 0 is not allowed")

    def inverse(self) -> BraidWord:
        return BraidWord(tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.letters * k)

    def __len__(self):
        return len(self.letters)

    def check(self, n: int):
        for x in self.letters:
            if not 1 <= abs(x) <= n - 1:
                raise ValueError(f"generator {x} out of range: |i| must be between 1 and n-1={n - 1}")

    def render(self) -> str:
        return " ".join(str(x) for x in self.letters)

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        tokens = text.replace(",", " ").split()
        letters = []
        for pos, tok in enumerate(tokens, start=1):
            if not re.fullmatch(r"[+-]?\d+", tok):
                raise ValueError(f"braid word token {pos} ({tok!r}) is not a signed integer")
            letters.append(int(tok))
        return cls(tuple(letters))


def mutate_left(x: IntervalModule, y: IntervalModule) -> IntervalModule:
    """The object ``E'`` with ``sigma(x, y) = (E', x)`` for an exceptional pair ``(x, y)``."""
    n = x.n
    cases = []
    if not hom_dim(x, y) and not ext_dim(x, y):
        cases.append(y)  # orthogonal: the pair commutes
    if x.b == y.b and y.a < x.a:
        cases.append(IntervalModule(y.a, x.a - 1, n))  # x is a submodule of y
    if x.a == y.a and y.b < x.b:
        cases.append(IntervalModule(y.b + 1, x.b, n))  # y is a quotient of x
    if y.a == x.b + 1:
        cases.append(IntervalModule(x.a, y.b, n))  # consecutive supports
    if len(cases) != 1:
        raise ValueError(f"({x}, {y}) is not an exceptional pair")
    return cases[0]


def mutate_right(x: IntervalModule, y: IntervalModule) -> IntervalModule:
    """The object ``W`` with ``sigma^{-1}(x, y) = (y, W)``; found by search and asserted unique."""
    found = [w for w in all_interval_modules(x.n)
             if not hom_dim(w, y) and not ext_dim(w, y) and mutate_left(y, w) == x]
    if len(found) != 1:
        raise AssertionError(f"inverse mutation of ({x}, {y}) has {len(found)} candidates")
    return found[0]


def braid_sigma(seq: ExceptionalSequence, i: int, inverse: bool = False) -> ExceptionalSequence:
    """Apply ``sigma_i`` (or its inverse) to a complete exceptional sequence.

    ``sigma_i`` moves ``E_i`` to position ``i+1`` and inserts the mutation
    of ``E_{i+1}`` at position ``i``.
    """
    _require_complete(seq)
    if not 1 <= i <= seq.n - 1:
        raise ValueError(f"generator index {i} out of range 1..{seq.n - 1}")
    objs = list(seq.objects)
    x, y = objs[i - 1], objs[i]
    if inverse:
        objs[i - 1], objs[i] = y, mutate_right(x, y)
    else:
        objs[i - 1], objs[i] = mutate_left(x, y), x
    return ExceptionalSequence._trusted(tuple(objs), seq.n)


def apply_braid_word(seq: ExceptionalSequence, word: BraidWord | Sequence[int]) -> ExceptionalSequence:
    """Act by a braid word, rightmost letter first."""
    if not isinstance(word, BraidWord):
        word = BraidWord(tuple(word))
    word.check(seq.n)
    for x in reversed(word.letters):
        seq = braid_sigma(seq, abs(x), inverse=x < 0)
    return seq


def named_braid(n: int, name: str, k: int | None = None) -> BraidWord:
    """Defining words of the distinguished braids.

    ``delta = s_1 s_2 ... s_{n-1}``, ``delta_k = s_1 ... s_k``,
    ``garside = delta_{n-1} ... delta_1`` and ``full_twist = delta^n``.

    >>> named_braid(3, "garside").letters
    (1, 2, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    if name == "delta":
        return BraidWord(tuple(range(1, n)))
    if name == "delta_k":
        if k is None or not 1 <= k <= n - 1:
            raise ValueError(f"delta_k needs 1 <= k <= {n - 1}, got {k}")
        return BraidWord(tuple(range(1, k + 1)))
    if name == "garside":
        return BraidWord(tuple(x for j in range(n - 1, 0, -1) for x in range(1, j + 1)))
    if name == "garside_inv":
        return named_braid(n, "garside").inverse()
    if name == "full_twist":
        return named_braid(n, "delta") ** n
    raise ValueError(f"unknown braid {name!r}")


def dual_module(x: IntervalModule) -> IntervalModule:
    return IntervalModule(x.n + 1 - x.b, x.n + 1 - x.a, x.n)


def duality(seq: ExceptionalSequence) -> ExceptionalSequence:
    """``D(E_1, ..., E_n) = (DE_n, ..., DE_1)`` using the quiver's self-opposite symmetry."""
    return ExceptionalSequence._trusted(tuple(dual_module(x) for x in reversed(seq.objects)), seq.n)


def garside(seq: ExceptionalSequence) -> ExceptionalSequence:
    return apply_braid_word(seq, named_braid(seq.n, "garside"))


def conjugation(seq: ExceptionalSequence) -> ExceptionalSequence:
    """``C = D o Delta``."""
    return duality(garside(seq))


# -- enumeration --------------------------------------------------------------

@lru_cache(maxsize=None)
def _follow_masks(n: int) -> tuple[tuple[IntervalModule, ...], tuple[int, ...]]:
    mods = all_interval_modules(n)
    masks = []
    # masks[i]: bitmask of candidates y that may follow mods[i]
    for x in mods:
        m = 0
        for j, y in enumerate(mods):
            if not hom_dim(y, x) and not ext_dim(y, x):
                m |= 1 << j
        masks.append(m)
    return mods, tuple(masks)


def enumerate_ces(n: int, first: IntervalModule | None = None) -> Iterator[ExceptionalSequence]:
    """All complete exceptional sequences, by left-to-right backtracking.

    ``first`` restricts to sequences starting with that object, which
    partitions the enumeration.
    """
    mods, masks = _follow_masks(n)
    index = {x: j for j, x in enumerate(mods)}
    full = (1 << len(mods)) - 1
    stack: list[int] = []

    def rec(allowed: int):
        if len(stack) == n:
            yield ExceptionalSequence._trusted(tuple(mods[j] for j in stack), n)
            return
        m = allowed
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            stack.append(j)
            yield from rec(allowed & masks[j])
            stack.pop()

    if first is None:
        yield from rec(full)
    else:
        stack.append(index[first])
        yield from rec(masks[index[first]])
