"""Cluster tilting sets, signed exceptional sequences and the Garside map between them."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .bijections import ces_to_forest
from .modules import IntervalModule, all_interval_modules, chi, ext_dim, hom_dim, parse_module
from .sequences import ExceptionalSequence, garside, is_exceptional_sequence, relative_flags


@dataclass(frozen=True, order=True)
class SignedObject:
    """A module, or its shift ``M[1]`` when ``shifted`` (sign -1)."""

    module: IntervalModule
    shifted: bool = False

    @property
    def sign(self) -> int:
        return -1 if self.shifted else 1

    def render(self) -> str:
        return self.module.render() + ("[1]" if self.shifted else "")

    def to_json(self) -> dict:
        return {"a": self.module.a, "b": self.module.b, "shifted": self.shifted}

    def __str__(self):
        return self.render()


SignedSequence = tuple[SignedObject, ...]


def parse_signed(text: str, n: int) -> SignedObject:
    m = re.fullmatch(r"\s*(.*?)(\[1\])?\s*", text)
    return SignedObject(parse_module(m.group(1), n), m.group(2) is not None)


def parse_signed_sequence(text: str, n: int | None = None) -> SignedSequence:
    parts = [p for p in text.split(";") if p.strip()]
    n = len(parts) if n is None else n
    return tuple(parse_signed(p, n) for p in parts)


def render_signed_sequence(items: Iterable[SignedObject]) -> str:
    return ";".join(x.render() for x in items)


def _compatible(x: SignedObject, y: SignedObject) -> bool:
    if x.module == y.module:
        return False
    if x.shifted and y.shifted:
        return True
    if x.shifted:
        return not hom_dim(x.module, y.module)
    if y.shifted:
        return not hom_dim(y.module, x.module)
    return not ext_dim(x.module, y.module) and not ext_dim(y.module, x.module)


def is_cluster_tilting(items: Iterable[SignedObject], n: int | None = None) -> bool:
    items = list(items)
    n = items[0].module.n if n is None and items else n
    if len(items) != n or any(x.module.n != n for x in items):
        return False
    if any(x.shifted and not x.module.is_projective for x in items):
        return False
    return all(_compatible(x, y) for i, x in enumerate(items) for y in items[i + 1:])


def _candidates(n: int) -> list[SignedObject]:
    mods = [SignedObject(x) for x in all_interval_modules(n)]
    shifted = [SignedObject(IntervalModule(k, n, n), True) for k in range(1, n + 1)]
    return mods + shifted


def enumerate_clusters(n: int) -> Iterator[frozenset[SignedObject]]:
    """All cluster tilting sets (``C_{n+1}`` of them), by clique search on compatibility."""
    cands = _candidates(n)
    m = len(cands)
    compat = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and _compatible(cands[i], cands[j]):
                compat[i] |= 1 << j
    chosen: list[int] = []

    def rec(allowed: int, start: int):
        if len(chosen) == n:
            yield frozenset(cands[i] for i in chosen)
            return
        for i in range(start, m):
            if allowed >> i & 1:
                chosen.append(i)
                yield from rec(allowed & compat[i], i + 1)
                chosen.pop()

    yield from rec((1 << m) - 1, 0)


def cluster_to_signed_sequence(items: Iterable[SignedObject]) -> SignedSequence:
    """Unshifted members left to right in the Auslander-Reiten quiver, then shifted projectives by size.

    Left to right means decreasing ``a + b``; ties are broken by ``(a, b)``.
    """
    items = list(items)
    if not is_cluster_tilting(items):
        raise ValueError(f"not a cluster tilting set: {render_signed_sequence(items)}")
    plain = sorted((x for x in items if not x.shifted),
                   key=lambda x: (-(x.module.a + x.module.b), x.module.a, x.module.b))
    shifted = sorted((x for x in items if x.shifted), key=lambda x: x.module.length)
    return tuple(plain + shifted)


def underlying(seq: Sequence[SignedObject]) -> ExceptionalSequence:
    return ExceptionalSequence((x.module for x in seq), check=False)


def is_signed_exceptional_sequence(seq: Sequence[SignedObject]) -> bool:
    """Complete exceptional sequence whose shifted positions are relatively projective."""
    mods = [x.module for x in seq]
    if not mods or len(mods) != mods[0].n or not is_exceptional_sequence(mods):
        return False
    flags = relative_flags(ExceptionalSequence(mods, check=False))
    return all(proj for x, (proj, _) in zip(seq, flags) if x.shifted)


def garside_signed(seq: Sequence[SignedObject]) -> SignedSequence:
    """``Delta`` on the underlying sequence; ``E_k`` hands its sign to ``E'_{n-k+1}``.

    Projective ``E_k`` keeps its sign, other relatively projective objects give
    ``+``, and the remaining (relatively injective only) objects give ``-``.
    """
    base = underlying(seq)
    n = base.n
    image = garside(base)
    forest = ces_to_forest(base)
    signs = [0] * n
    for k in range(1, n + 1):
        e = seq[k - 1]
        if e.module.is_projective:
            s = e.sign
        elif forest.classification(k) != "descending":
            s = 1
        else:
            s = -1
        signs[n - k] = s
    return tuple(SignedObject(x, s < 0) for x, s in zip(image, signs))


def pairing_matrix(seq: Sequence[SignedObject], image: Sequence[SignedObject]) -> list[list[int]]:
    """Entry ``[k][j]`` is ``eps_k eps'_j chi(E_k, E'_j)`` (0-based)."""
    return [[x.sign * y.sign * chi(x.module, y.module) for y in image] for x in seq]


def c_vector_check(seq: Sequence[SignedObject], image: Sequence[SignedObject]) -> bool:
    """Kronecker identity between a signed sequence and its Garside image.

    ``E_k`` pairs with ``E'_{n-k+1}`` (the position its strand ends in), so the
    pairing matrix must be the reversed identity.
    """
    if len(seq) != len(image):
        raise ValueError(f"length mismatch {len(seq)} vs {len(image)}")
    n = len(seq)
    mat = pairing_matrix(seq, image)
    return all(mat[k][j] == (1 if j == n - 1 - k else 0) for k in range(n) for j in range(n))


def c_vectors(image: Sequence[SignedObject]) -> list[tuple[int, ...]]:
    """``-eps'_j dim E'_j`` for each position of the Garside image."""
    return [tuple(-x.sign * d for d in x.module.dim_vector) for x in image]


def count_signed(n: int, oracle: bool = False) -> int:
    """Number of signed exceptional sequences: each relatively projective position may be shifted.

    With ``oracle`` the relative projectivity comes from perpendicular
    categories instead of the forest.
    """
    from .sequences import enumerate_ces

    total = 0
    for s in enumerate_ces(n):
        if oracle:
            k = sum(1 for proj, _ in relative_flags(s) if proj)
        else:
            f = ces_to_forest(s)
            k = sum(1 for v in range(1, n + 1) if f.classification(v) != "descending")
        total += 2**k
    return total
