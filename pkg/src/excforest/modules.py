"""Interval modules of the linearly oriented quiver 1 -> 2 -> ... -> n.

Every indecomposable representation is determined by its support, a closed
interval ``[a, b]`` of vertices.  The module ``M(a, b)`` has top ``S(a)`` and
socle ``S(b)``; projectives are ``P(a) = M(a, n)`` and injectives are
``I(b) = M(1, b)``.

>>> hom_dim(IntervalModule(2, 4, 4), IntervalModule(1, 3, 4))
1
>>> ext_dim(IntervalModule(1, 3, 4), IntervalModule(2, 4, 4))
1
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


@dataclass(frozen=True, order=True, slots=True)
class IntervalModule:
    """The indecomposable ``M(a, b)`` over the rank ``n`` linear quiver."""

    a: int
    b: int
    n: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b <= self.n:
            raise ValueError(f"invalid interval module M({self.a},{self.b}) for n={self.n}")

    @property
    def length(self) -> int:
        return self.b - self.a + 1

    @property
    def top(self) -> int:
        return self.a

    @property
    def socle(self) -> int:
        return self.b

    @property
    def is_projective(self) -> bool:
        return self.b == self.n

    @property
    def is_injective(self) -> bool:
        return self.a == 1

    @property
    def is_simple(self) -> bool:
        return self.a == self.b

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(1 if self.a <= v <= self.b else 0 for v in range(1, self.n + 1))

    def contains(self, other: IntervalModule) -> bool:
        """Support containment (not necessarily strict)."""
        return self.a <= other.a and other.b <= self.b

    def disjoint(self, other: IntervalModule) -> bool:
        return self.b < other.a or other.b < self.a

    def render(self, simples: bool = False) -> str:
        if simples and self.a == self.b:
            return f"S({self.a})"
        return f"M({self.a},{self.b})"

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b}

    def __str__(self):
        return self.render()


def simple(i: int, n: int) -> IntervalModule:
    return IntervalModule(i, i, n)


def projective(i: int, n: int) -> IntervalModule:
    return IntervalModule(i, n, n)


def injective(i: int, n: int) -> IntervalModule:
    return IntervalModule(1, i, n)


_MODULE_RE = re.compile(r"\s*(?:M\(\s*(\d+)\s*,\s*(\d+)\s*\)|S\(\s*(\d+)\s*\))\s*$")


def parse_module(text: str, n: int) -> IntervalModule:
    """Parse ``"M(a,b)"`` or ``"S(a)"``."""
    m = _MODULE_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse module {text!r}")
    if m.group(3) is not None:
        a = b = int(m.group(3))
    else:
        a, b = int(m.group(1)), int(m.group(2))
    return IntervalModule(a, b, n)


def _check_rank(x: IntervalModule, y: IntervalModule):
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x} has n={x.n}, {y} has n={y.n}")


def hom_dim(x: IntervalModule, y: IntervalModule) -> int:
    """dim Hom(x, y).

    A nonzero map is a quotient of ``x`` (same top) that is a submodule of
    ``y`` (same socle), so it exists iff ``y.a <= x.a <= y.b <= x.b``.
    """
    _check_rank(x, y)
    return int(y.a <= x.a <= y.b <= x.b)


def ext_dim(x: IntervalModule, y: IntervalModule) -> int:
    """dim Ext^1(x, y), equal to dim Hom(y, tau x)."""
    _check_rank(x, y)
    return int(x.a < y.a <= x.b + 1 <= y.b)


def euler_form(d: Sequence[int], e: Sequence[int]) -> int:
    """Euler form of the linear quiver on dimension vectors."""
    if len(d) != len(e):
        raise ValueError(f"dimension vectors of different lengths {len(d)} and {len(e)}")
    diag = sum(x * y for x, y in zip(d, e))
    arrows = sum(d[i] * e[i + 1] for i in range(len(d) - 1))
    return diag - arrows


def chi(x: IntervalModule, y: IntervalModule) -> int:
    """``hom_dim(x, y) - ext_dim(x, y)`` computed through the Euler form."""
    _check_rank(x, y)
    return euler_form(x.dim_vector, y.dim_vector)


def tau(x: IntervalModule) -> IntervalModule:
    """Auslander-Reiten translate of a non-projective module."""
    if x.is_projective:
        raise ValueError(f"{x} is projective")
    return IntervalModule(x.a + 1, x.b + 1, x.n)


def tau_star(x: IntervalModule) -> IntervalModule:
    """``tau`` extended by sending the projective ``P(a)`` to the injective ``I(a)``."""
    if x.is_projective:
        return IntervalModule(1, x.a, x.n)
    return tau(x)


@lru_cache(maxsize=None)
def all_interval_modules(n: int) -> tuple[IntervalModule, ...]:
    """All ``n(n+1)/2`` interval modules, lexicographic in ``(a, b)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(IntervalModule(a, b, n) for a in range(1, n + 1) for b in range(a, n + 1))
