"""Trivariate generating functions in ``a, b, c`` for forest and sequence statistics."""
from __future__ import annotations

import json
from collections import Counter
from typing import Iterable, Mapping

Exponent = tuple[int, int, int]


class TrivariatePolynomial:
    """Sparse integer polynomial in ``a, b, c``; ``terms`` maps ``(p, q, r)`` to a coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        acc: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != 3 or min(exp) < 0:
                raise ValueError(f"bad exponent {exp}")
            acc[exp] = acc.get(exp, 0) + int(coeff)
        self.terms = {e: k for e, k in acc.items() if k}

    @classmethod
    def constant(cls, k: int) -> TrivariatePolynomial:
        return cls({(0, 0, 0): k})

    @classmethod
    def linear(cls, ka: int, kb: int, kc: int, k0: int = 0) -> TrivariatePolynomial:
        return cls({(1, 0, 0): ka, (0, 1, 0): kb, (0, 0, 1): kc, (0, 0, 0): k0})

    def __eq__(self, other):
        if isinstance(other, int):
            other = TrivariatePolynomial.constant(other)
        if not isinstance(other, TrivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: TrivariatePolynomial) -> TrivariatePolynomial:
        out = dict(self.terms)
        for e, k in other.terms.items():
            out[e] = out.get(e, 0) + k
        return TrivariatePolynomial(out)

    def __neg__(self) -> TrivariatePolynomial:
        return TrivariatePolynomial({e: -k for e, k in self.terms.items()})

    def __sub__(self, other: TrivariatePolynomial) -> TrivariatePolynomial:
        return self + (-other)

    def __mul__(self, other: TrivariatePolynomial | int) -> TrivariatePolynomial:
        if isinstance(other, int):
            return TrivariatePolynomial({e: k * other for e, k in self.terms.items()})
        out: dict[Exponent, int] = {}
        for (p1, q1, r1), k1 in self.terms.items():
            for (p2, q2, r2), k2 in other.terms.items():
                e = (p1 + p2, q1 + q2, r1 + r2)
                out[e] = out.get(e, 0) + k1 * k2
        return TrivariatePolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, a: int, b: int, c: int) -> int:
        return sum(k * a**p * b**q * c**r for (p, q, r), k in self.terms.items())

    def coefficient(self, p: int, q: int, r: int) -> int:
        return self.terms.get((p, q, r), 0)

    def substitute_c(self, shift_b: int = 1) -> TrivariatePolynomial:
        """``P(a, b, c + shift_b * b)``."""
        out = TrivariatePolynomial()
        for (p, q, r), k in self.terms.items():
            term = TrivariatePolynomial({(p, q, 0): k})
            base = TrivariatePolynomial({(0, 1, 0): shift_b, (0, 0, 1): 1})
            power = TrivariatePolynomial.constant(1)
            for _ in range(r):
                power = power * base
            out = out + term * power
        return out

    def divide_by_b_plus_c(self) -> TrivariatePolynomial:
        """Exact division by ``b + c``, as long division in ``c``; a nonzero remainder raises."""
        rem = dict(self.terms)
        quot: dict[Exponent, int] = {}
        while rem:
            r_max = max(e[2] for e in rem)
            if r_max == 0:
                raise ArithmeticError("polynomial is not divisible by b + c")
            lead = {e: k for e, k in rem.items() if e[2] == r_max}
            for (p, q, r), k in lead.items():
                quot[(p, q, r - 1)] = quot.get((p, q, r - 1), 0) + k
                # subtract k a^p b^q c^(r-1) (b + c)
                rem[(p, q, r)] -= k
                key = (p, q + 1, r - 1)
                rem[key] = rem.get(key, 0) - k
            rem = {e: k for e, k in rem.items() if k}
        return TrivariatePolynomial(quot)

    def render(self) -> str:
        """Terms ``"k a^p b^q c^r"`` sorted by exponent, joined by ``" + "``."""
        if not self.terms:
            return "0"
        return " + ".join(f"{self.terms[e]} a^{e[0]} b^{e[1]} c^{e[2]}" for e in sorted(self.terms))

    def to_json(self) -> list[list[int]]:
        return [[p, q, r, k] for (p, q, r), k in sorted(self.terms.items())]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __repr__(self):
        return f"TrivariatePolynomial({self.render()})"


def formula_poly(n: int) -> TrivariatePolynomial:
    """``c (a + (n-1) b + c) (2a + (n-2) b + c) ... ((n-1) a + b + c)``."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = TrivariatePolynomial.linear(0, 0, 1)
    for j in range(1, n):
        poly = poly * TrivariatePolynomial.linear(j, n - j, 1)
    return poly


def recursion_poly(n: int) -> TrivariatePolynomial:
    """``P_n`` from ``P_{n-1}`` by splitting on whether vertex 1 is a root.

    With ``Q = P_{n-1}(a, b, b + c)``:
    ``P_n = c Q + (n-1) a c Q / (b + c)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = TrivariatePolynomial.linear(0, 0, 1)
    c = TrivariatePolynomial.linear(0, 0, 1)
    for m in range(2, n + 1):
        q = poly.substitute_c()
        second = (q * c).divide_by_b_plus_c() * TrivariatePolynomial.linear(m - 1, 0, 0)
        poly = c * q + second
    return poly


def _from_counts(counts: Counter) -> TrivariatePolynomial:
    return TrivariatePolynomial(dict(counts))


def forest_statistic_poly(n: int) -> TrivariatePolynomial:
    from .forest import enumerate_forests, statistics

    return _from_counts(Counter(tuple(statistics(f)) for f in enumerate_forests(n)))


def sequence_flag_counts(flags: list[tuple[bool, bool]]) -> Exponent:
    p = sum(1 for pr, inj in flags if pr and not inj)
    q = sum(1 for pr, inj in flags if inj and not pr)
    r = sum(1 for pr, inj in flags if pr and inj)
    return p, q, r


def sequence_statistic_poly(n: int) -> TrivariatePolynomial:
    """Sum over complete sequences with the perpendicular-category flags."""
    from .sequences import enumerate_ces, relative_flags

    return _from_counts(Counter(sequence_flag_counts(relative_flags(s)) for s in enumerate_ces(n)))


def statistic_poly(n: int, source: str = "forests") -> TrivariatePolynomial:
    if source == "forests":
        return forest_statistic_poly(n)
    if source == "sequences":
        return sequence_statistic_poly(n)
    raise ValueError(f"source must be 'forests' or 'sequences', got {source!r}")


def evaluate(poly: TrivariatePolynomial, a: int, b: int, c: int) -> int:
    return poly.evaluate(a, b, c)
