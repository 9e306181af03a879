"""Brute-force Hom and Ext for representations of the linear quiver.

Independent of the closed forms in :mod:`excforest.modules`: a representation
is stored as vector space dimensions plus one matrix per arrow, Hom is the
solution space of the intertwining equations, and Ext^1 is read off from the
projective resolution ``0 -> P(b+1) -> P(a) -> M(a,b) -> 0``.
"""
from __future__ import annotations

from dataclasses import dataclass

import sympy

from .modules import IntervalModule


@dataclass(frozen=True)
class Representation:
    dims: tuple[int, ...]
    maps: tuple[sympy.Matrix, ...]  # maps[i]: V_{i+1} -> V_{i+2}, shape dims[i+1] x dims[i]

    @property
    def n(self) -> int:
        return len(self.dims)


def interval_representation(a: int, b: int, n: int) -> Representation:
    """``M(a, b)`` as identity maps on its support and zero elsewhere.

    ``a = b + 1`` gives the zero representation (used for ``P(n+1) = 0``).
    """
    dims = tuple(1 if a <= v <= b else 0 for v in range(1, n + 1))
    maps = []
    for i in range(n - 1):
        src, dst = dims[i], dims[i + 1]
        maps.append(sympy.eye(1) if src and dst else sympy.zeros(dst, src))
    return Representation(dims, tuple(maps))


def _hom_basis(v: Representation, w: Representation) -> list[list[sympy.Matrix]]:
    # unknowns: entries of f_i (w.dims[i] x v.dims[i]) stacked vertex by vertex
    offsets = []
    total = 0
    for dv, dw in zip(v.dims, w.dims):
        offsets.append(total)
        total += dv * dw
    if total == 0:
        return []
    rows = []
    for i in range(v.n - 1):
        # f_{i+1} A_i - B_i f_i = 0
        A, B = v.maps[i], w.maps[i]
        dv0, dv1, dw0, dw1 = v.dims[i], v.dims[i + 1], w.dims[i], w.dims[i + 1]
        for r in range(dw1):
            for c in range(dv0):
                row = [0] * total
                for k in range(dv1):
                    row[offsets[i + 1] + r * dv1 + k] += A[k, c]
                for k in range(dw0):
                    row[offsets[i] + k * dv0 + c] -= B[r, k]
                rows.append(row)
    system = sympy.Matrix(rows) if rows else sympy.zeros(0, total)
    basis = []
    for vec in system.nullspace() if rows else [sympy.eye(total)[:, j] for j in range(total)]:
        f = []
        for i, (dv, dw) in enumerate(zip(v.dims, w.dims)):
            f.append(sympy.Matrix(dw, dv, list(vec[offsets[i]:offsets[i] + dv * dw])))
        basis.append(f)
    return basis


def hom_space_dim(v: Representation, w: Representation) -> int:
    return len(_hom_basis(v, w))


def _flatten(f: list[sympy.Matrix]) -> list:
    out = []
    for m in f:
        out.extend(list(m))
    return out


def oracle_hom_dim(x: IntervalModule, y: IntervalModule) -> int:
    return hom_space_dim(interval_representation(x.a, x.b, x.n),
                         interval_representation(y.a, y.b, y.n))


def oracle_ext_dim(x: IntervalModule, y: IntervalModule) -> int:
    """dim Ext^1(x, y) = dim coker(Hom(P(a), y) -> Hom(P(b+1), y))."""
    n = x.n
    p_top = interval_representation(x.a, n, n)
    p_ker = interval_representation(x.b + 1, n, n)
    target = interval_representation(y.a, y.b, n)
    ker_basis = _hom_basis(p_ker, target)
    if not ker_basis:
        return 0
    incl = _hom_basis(p_ker, p_top)
    # the inclusion P(b+1) -> P(a) is the unique map up to scalar
    assert len(incl) == 1
    iota = incl[0]
    images = []
    for f in _hom_basis(p_top, target):
        images.append(_flatten([f[i] * iota[i] for i in range(n)]))
    # images already live in Hom(P(b+1), y), so their span has dimension = rank
    rank = sympy.Matrix(images).rank() if images else 0
    return len(ker_basis) - rank
