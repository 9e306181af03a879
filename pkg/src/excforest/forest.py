"""Rooted labeled forests on ``1..n`` and their braid group action.

A forest is stored as a parent map: ``parent[i - 1]`` is the parent of label
``i``, with ``0`` standing for the master root that turns the forest ``F``
into the tree ``F_+`` on ``0..n``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence


class ForestStatistics(NamedTuple):
    p: int  # ascending non-roots: parent label larger
    q: int  # descending non-roots: parent label smaller
    r: int  # roots


@dataclass(frozen=True)
class RootedLabeledForest:
    parent: tuple[int, ...]

    def __post_init__(self):
        n = len(self.parent)
        if n < 1:
            raise ValueError("a forest needs at least one vertex")
        for v, p in enumerate(self.parent, start=1):
            if not 0 <= p <= n or p == v:
                raise ValueError(f"vertex {v} has invalid parent {p}")
        for v in range(1, n + 1):
            seen = set()
            while v:
                if v in seen:
                    raise ValueError(f"parent map has a cycle through {v}")
                seen.add(v)
                v = self.parent[v - 1]

    @classmethod
    def from_parents(cls, parents: dict[int, int] | Sequence[int]) -> RootedLabeledForest:
        if isinstance(parents, dict):
            n = len(parents)
            return cls(tuple(parents[v] for v in range(1, n + 1)))
        return cls(tuple(parents))

    @classmethod
    def edgeless(cls, n: int) -> RootedLabeledForest:
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.parent)

    def parent_of(self, v: int) -> int:
        return self.parent[v - 1]

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(v for v, p in enumerate(self.parent, start=1) if p == 0)

    @cached_property
    def _children(self) -> dict[int, tuple[int, ...]]:
        kids: dict[int, list[int]] = {v: [] for v in range(self.n + 1)}
        for v, p in enumerate(self.parent, start=1):
            kids[p].append(v)
        return {v: tuple(c) for v, c in kids.items()}

    def children(self, v: int) -> tuple[int, ...]:
        """Children of ``v`` in ``F_+`` in increasing label order; ``children(0)`` are the roots."""
        return self._children[v]

    @cached_property
    def _weights(self) -> tuple[int, ...]:
        w = [1] * (self.n + 1)
        for v in self.postorder():
            p = self.parent[v - 1]
            w[p] += w[v]
        return tuple(w)

    def weight(self, v: int) -> int:
        """Size of the subtree rooted at ``v`` (``weight(0) = n + 1``)."""
        return self._weights[v]

    def postorder(self) -> list[int]:
        out: list[int] = []
        stack = [(0, False)]
        while stack:
            v, done = stack.pop()
            if done:
                if v:
                    out.append(v)
                continue
            stack.append((v, True))
            for c in reversed(self.children(v)):
                stack.append((c, False))
        return out

    def ancestors(self, v: int) -> list[int]:
        out = []
        while v:
            v = self.parent[v - 1]
            out.append(v)
        return out

    def is_ascending(self, v: int) -> bool:
        p = self.parent[v - 1]
        return p != 0 and p > v

    def is_descending(self, v: int) -> bool:
        p = self.parent[v - 1]
        return p != 0 and p < v

    def classification(self, v: int) -> str:
        if self.parent[v - 1] == 0:
            return "root"
        return "ascending" if self.is_ascending(v) else "descending"

    def close(self, u: int, w: int) -> bool:
        """Siblings in ``F_+`` or parent and child."""
        pu, pw = self.parent[u - 1], self.parent[w - 1]
        return pu == pw or pu == w or pw == u

    def relabel(self, perm: dict[int, int]) -> RootedLabeledForest:
        """Rename each label ``v`` to ``perm[v]`` keeping the shape (``perm[0] = 0``)."""
        perm = {0: 0, **perm}
        new = [0] * self.n
        for v, p in enumerate(self.parent, start=1):
            new[perm[v] - 1] = perm[p]
        return RootedLabeledForest(tuple(new))

    def canonical_shape(self) -> str:
        """Unlabeled shape of ``F_+`` as a canonical nested string."""
        codes: dict[int, str] = {}
        for v in self.postorder() + [0]:
            codes[v] = "(" + "".join(sorted(codes[c] for c in self.children(v))) + ")"
        return codes[0]

    def unrooted_shape(self) -> str:
        """Canonical form of ``F_+`` as an unrooted tree, rooting at its center(s)."""
        adj: dict[int, list[int]] = {v: [] for v in range(self.n + 1)}
        for v, p in enumerate(self.parent, start=1):
            adj[v].append(p)
            adj[p].append(v)
        degree = {v: len(ws) for v, ws in adj.items()}
        layer = [v for v, d in degree.items() if d <= 1]
        left = len(adj)
        while left > 2:
            left -= len(layer)
            nxt = []
            for v in layer:
                for w in adj[v]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
            layer = nxt

        def code(v: int, up: int) -> str:
            return "(" + "".join(sorted(code(w, v) for w in adj[v] if w != up)) + ")"

        return min(code(c, -1) for c in layer)

    def to_json(self) -> dict:
        return {"n": self.n, "parent": list(self.parent)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: dict | str) -> RootedLabeledForest:
        if isinstance(data, str):
            data = json.loads(data)
        parent = tuple(int(p) for p in data["parent"])
        if "n" in data and int(data["n"]) != len(parent):
            raise ValueError(f"n={data['n']} does not match {len(parent)} parent entries")
        return cls(parent)

    def to_dot(self) -> str:
        lines = ["digraph forest {"]
        for v in range(1, self.n + 1):
            style = ' [style=filled, fillcolor=lightgray]' if self.parent[v - 1] == 0 else ""
            lines.append(f"  {v}{style};")
        for v, p in enumerate(self.parent, start=1):
            if p:
                lines.append(f"  {v} -> {p};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def statistics(forest: RootedLabeledForest) -> ForestStatistics:
    p = q = r = 0
    for v in range(1, forest.n + 1):
        kind = forest.classification(v)
        if kind == "root":
            r += 1
        elif kind == "ascending":
            p += 1
        else:
            q += 1
    return ForestStatistics(p, q, r)


def projective_vertices(forest: RootedLabeledForest) -> list[int]:
    """Vertices of the projective objects, smallest label first.

    Start at the last root and repeatedly step to the child with the largest
    label below its parent's.
    """
    chain = [max(forest.roots)]
    while True:
        v = chain[-1]
        smaller = [c for c in forest.children(v) if c < v]
        if not smaller:
            break
        chain.append(max(smaller))
    return chain[::-1]


def injective_vertices(forest: RootedLabeledForest) -> list[int]:
    """Vertices of the injective objects, from the first root downwards."""
    chain = [min(forest.roots)]
    while True:
        v = chain[-1]
        larger = [c for c in forest.children(v) if c > v]
        if not larger:
            break
        chain.append(min(larger))
    return chain


# -- Pruefer codes --------------------------------------------------------------

def prufer_encode(forest: RootedLabeledForest) -> tuple[int, ...]:
    """Repeatedly delete the largest-labeled leaf of ``F_+`` (never ``0``), recording its neighbour."""
    n = forest.n
    degree = [0] * (n + 1)
    for v, p in enumerate(forest.parent, start=1):
        degree[v] += 1
        degree[p] += 1
    parent = list(forest.parent)
    removed = [False] * (n + 1)
    code = []
    for _ in range(n - 1):
        leaf = max(v for v in range(1, n + 1) if not removed[v] and degree[v] == 1)
        # children always go before their parent, so a leaf's neighbour is its parent
        nb = parent[leaf - 1]
        code.append(nb)
        removed[leaf] = True
        degree[leaf] -= 1
        degree[nb] -= 1
    return tuple(code)


def prufer_decode(code: Sequence[int], n: int) -> RootedLabeledForest:
    """Inverse of :func:`prufer_encode`: rebuild ``F_+`` and root it at ``0``."""
    code = tuple(code)
    if n < 1 or len(code) != n - 1:
        raise ValueError(f"a code for n={n} must have {max(n - 1, 0)} entries, got {len(code)}")
    for pos, c in enumerate(code, start=1):
        if not isinstance(c, int) or not 0 <= c <= n:
            raise ValueError(f"code entry {pos} ({c!r}) is outside 0..{n}")
    remaining = [0] * (n + 1)
    for c in code:
        remaining[c] += 1
    removed = [False] * (n + 1)
    adj: dict[int, list[int]] = {v: [] for v in range(n + 1)}
    for c in code:
        leaf = max(v for v in range(1, n + 1) if not removed[v] and remaining[v] == 0)
        adj[leaf].append(c)
        adj[c].append(leaf)
        removed[leaf] = True
        remaining[c] -= 1
    last = [v for v in range(1, n + 1) if not removed[v]]
    assert len(last) == 1
    adj[last[0]].append(0)
    adj[0].append(last[0])
    parent = [0] * n
    seen = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                parent[w - 1] = u
                frontier.append(w)
    return RootedLabeledForest(tuple(parent))


def enumerate_forests(n: int) -> Iterator[RootedLabeledForest]:
    """All ``(n+1)^(n-1)`` forests, one per Pruefer code."""
    for code in itertools.product(range(n + 1), repeat=n - 1):
        yield prufer_decode(code, n)


# -- braid, delta and duality actions -------------------------------------------

def _swap(x: int, i: int) -> int:
    return i + 1 if x == i else i if x == i + 1 else x


def _sigma_forward(forest: RootedLabeledForest, i: int) -> RootedLabeledForest:
    par = list(forest.parent)
    u, w = i, i + 1
    pu, pw = par[u - 1], par[w - 1]
    if pw == u:
        # case 1: v_i parent of v_{i+1}; v'_{i+1} takes v_i's place, v'_i hangs below it
        par[w - 1], par[u - 1] = pu, w
    elif pu == w:
        # case 2: v_i child of v_{i+1}; children of v_i and v_{i+1} trade labels, both hang from k
        par = [_swap(p, i) for p in par]
        par[u - 1] = par[w - 1] = pw
    elif pu == pw:
        # case 3: siblings; v'_i (new) takes v'_{i+1} and the old children of v_{i+1}
        par = [_swap(p, i) for p in par]
        par[u - 1], par[w - 1] = pu, u
    else:
        # case 0: not close, exchange the labels
        par = [_swap(p, i) for p in par]
        par[u - 1], par[w - 1] = pw, pu
    return RootedLabeledForest(tuple(par))


def sigma_forest(forest: RootedLabeledForest, i: int, inverse: bool = False) -> RootedLabeledForest:
    if not 1 <= i <= forest.n - 1:
        raise ValueError(f"generator index {i} out of range 1..{forest.n - 1}")
    if not inverse:
        return _sigma_forward(forest, i)
    # the orbit of a single configuration has length 2 or 3
    prev, cur = forest, _sigma_forward(forest, i)
    while cur != forest:
        prev, cur = cur, _sigma_forward(cur, i)
    return prev


def apply_braid_word_forest(forest: RootedLabeledForest, word) -> RootedLabeledForest:
    """Act by a braid word (``BraidWord`` or signed ints), rightmost letter first."""
    letters = getattr(word, "letters", word)
    for x in letters:
        if not 1 <= abs(x) <= forest.n - 1:
            raise ValueError(f"generator {x} out of range: |i| must be between 1 and n-1={forest.n - 1}")
    for x in reversed(tuple(letters)):
        forest = sigma_forest(forest, abs(x), inverse=x < 0)
    return forest


def delta_forest(forest: RootedLabeledForest) -> RootedLabeledForest:
    """Direct description of the fundamental braid ``delta``.

    Labels shift cyclically (``n`` becomes ``1``, ``j`` becomes ``j + 1``).
    If ``v_n`` was a root it then trades places with the master root.
    """
    n = forest.n
    perm = {v: v + 1 for v in range(1, n)}
    perm[n] = 1
    was_root = forest.parent_of(n) == 0
    out = forest.relabel(perm)
    if not was_root:
        return out
    par = list(out.parent)
    for v in range(2, n + 1):
        if par[v - 1] == 1:
            par[v - 1] = 0
        elif par[v - 1] == 0:
            par[v - 1] = 1
    par[0] = 0
    return RootedLabeledForest(tuple(par))


def duality_forest(forest: RootedLabeledForest) -> RootedLabeledForest:
    n = forest.n
    return forest.relabel({v: n + 1 - v for v in range(1, n + 1)})


def garside_forest(forest: RootedLabeledForest, inverse: bool = False) -> RootedLabeledForest:
    from .sequences import named_braid

    return apply_braid_word_forest(forest, named_braid(forest.n, "garside_inv" if inverse else "garside"))


def conjugation_forest(forest: RootedLabeledForest) -> RootedLabeledForest:
    """``C = D o Delta``."""
    return duality_forest(garside_forest(forest))



def _reroot(edges: Sequence[tuple[int, int]], n: int) -> RootedLabeledForest:
    adj: dict[int, list[int]] = {v: [] for v in range(n + 1)}
    for u, w in edges:
        adj[u].append(w)
        adj[w].append(u)
    parent = [0] * (n + 1)
    seen, stack = {0}, [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                stack.append(w)
    return RootedLabeledForest(tuple(parent[1:]))


def full_twist_forest(forest: RootedLabeledForest) -> RootedLabeledForest:
    """Direct description of ``delta^n``.

    The tree ``F_+`` keeps its shape; with projective vertices ``j_1 < ... < j_p``
    the labels move ``j_k -> j_{k-1}``, ``j_1 -> 0`` and ``0 -> j_p``, and the
    result is re-rooted at ``0``.
    """
    n = forest.n
    cycle = [0] + projective_vertices(forest)
    perm = {v: v for v in range(n + 1)}
    for k, v in enumerate(cycle):
        perm[v] = cycle[k - 1]
    edges = [(perm[v], perm[p]) for v, p in enumerate(forest.parent, start=1)]
    return _reroot(edges, n)
