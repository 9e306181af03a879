"""Exhaustive verification suites behind ``excforest verify``.

Every suite works at one rank ``n`` and returns a :class:`Report` with a
case count and failure count per named check, plus the first counterexample.
"""
from __future__ import annotations

import itertools
import math
from typing import Callable

from . import bijections as bij
from . import cluster as cl
from . import forest as fo
from . import genfun as gf
from . import modules as md
from . import sequences as sq

# suites that call the perpendicular-category or matrix oracles stop at 5
ORACLE_CAP = 5
ENUMERATION_CAP = 7


class Report:
    def __init__(self, suite: str, n: int):
        self.suite = suite
        self.n = n
        self.objects = 0
        self.checks: dict[str, list[int]] = {}
        self.info: dict[str, object] = {}
        self.counterexample: dict | None = None

    def check(self, name: str, ok: bool, witness: Callable[[], object] | object = None):
        entry = self.checks.setdefault(name, [0, 0])
        entry[0] += 1
        if not ok:
            entry[1] += 1
            if self.counterexample is None:
                w = witness() if callable(witness) else witness
                self.counterexample = {"check": name, "witness": str(w)}

    @property
    def passed(self) -> bool:
        return all(f == 0 for _, f in self.checks.values())

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "passed": self.passed,
            "objects": self.objects,
            "checks": {k: {"cases": c, "failures": f} for k, (c, f) in self.checks.items()},
            "info": self.info,
            "counterexample": self.counterexample,
        }


def _ces(n):
    return list(sq.enumerate_ces(n))


def _forests(n):
    return list(fo.enumerate_forests(n))


def _catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


# -- suites ---------------------------------------------------------------------------

def suite_homext(n: int) -> Report:
    from .linalg_oracle import oracle_ext_dim, oracle_hom_dim

    rep = Report("homext", n)
    mods = md.all_interval_modules(n)
    rep.objects = len(mods)
    for x, y in itertools.product(mods, repeat=2):
        h, e = md.hom_dim(x, y), md.ext_dim(x, y)
        rep.check("hom_matches_oracle", h == oracle_hom_dim(x, y), (x, y))
        rep.check("ext_matches_oracle", e == oracle_ext_dim(x, y), (x, y))
        rep.check("hom_minus_ext_is_euler_form", h - e == md.euler_form(x.dim_vector, y.dim_vector), (x, y))
    for x in mods:
        rep.check("self_hom_1_ext_0", md.hom_dim(x, x) == 1 and md.ext_dim(x, x) == 0, x)
    images = {}
    for x in mods:
        t = md.tau_star(x)
        if x.is_projective:
            rep.check("tau_star_projective_to_injective", t.is_injective and t.a == 1 and t.b == x.a, x)
            continue
        rep.check("tau_star_non_injective_image", not t.is_injective, x)
        rep.check("tau_star_preserves_length", t.length == x.length, x)
        rep.check("tau_star_injective_map", t not in images, lambda: (x, images.get(t)))
        images[t] = x
    return rep


def suite_bijection(n: int) -> Report:
    rep = Report("bijection", n)
    seqs, forests = _ces(n), _forests(n)
    total = (n + 1) ** (n - 1)
    rep.objects = len(seqs)
    rep.check("ces_count", len(seqs) == total, len(seqs))
    rep.check("forest_count", len(forests) == total, len(forests))
    seq_set = set(seqs)
    images = set()
    for f in forests:
        s = bij.forest_to_ces(f)
        rep.check("forest_to_ces_is_exceptional", sq.is_exceptional_sequence(s.objects), f)
        rep.check("forest_round_trip", bij.ces_to_forest(s) == f, f)
        rep.check("image_in_enumeration", s in seq_set, f)
        images.add(s)
        rep.check("root_weights_sum_to_n", sum(f.weight(r) for r in f.roots) == n, f)
        rep.check("weight_recursion",
                  all(f.weight(v) == 1 + sum(f.weight(c) for c in f.children(v)) for v in range(1, n + 1)), f)
    rep.check("forest_to_ces_onto", images == seq_set, len(images))
    simples = sq.ExceptionalSequence([md.simple(i, n) for i in range(1, n + 1)])
    all_both = []
    for s in seqs:
        f = bij.ces_to_forest(s)
        rep.check("ces_round_trip", bij.forest_to_ces(f) == s, s)
        rep.check("length_equals_weight", all(x.length == f.weight(v) for v, x in enumerate(s, start=1)), s)
        flags = sq.relative_flags(s)
        expected = {"root": (True, True), "ascending": (True, False), "descending": (False, True)}
        rep.check("flags_match_classification",
                  all(flags[v - 1] == expected[f.classification(v)] for v in range(1, n + 1)), s)
        rep.check("no_position_without_flags", all(p or i for p, i in flags), s)
        if all(p and i for p, i in flags):
            all_both.append(s)
    rep.check("unique_all_both_is_simples", all_both == [simples], lambda: [str(s) for s in all_both])
    return rep


def suite_equivariance(n: int) -> Report:
    rep = Report("equivariance", n)
    seqs = _ces(n)
    rep.objects = len(seqs)
    rep.info["generators"] = n - 1
    for s in seqs:
        f = bij.ces_to_forest(s)
        tops = s.tops()
        for i in range(1, n):
            fwd, bwd = sq.braid_sigma(s, i), sq.braid_sigma(s, i, inverse=True)
            rep.check("sigma_equivariant", bij.ces_to_forest(fwd) == fo.sigma_forest(f, i), (s, i))
            rep.check("sigma_inverse_equivariant",
                      bij.ces_to_forest(bwd) == fo.sigma_forest(f, i, inverse=True), (s, i))
            rep.check("output_exceptional",
                      sq.is_exceptional_sequence(fwd.objects) and sq.is_exceptional_sequence(bwd.objects), (s, i))
            rep.check("sigma_then_inverse_is_identity", sq.braid_sigma(fwd, i, inverse=True) == s, (s, i))
            if tops[i - 1] != tops[i]:
                swapped = tops[:i - 1] + (tops[i], tops[i - 1]) + tops[i + 1:]
                moved = fwd if tops[i - 1] > tops[i] else bwd
                rep.check("tops_transport", moved.tops() == swapped, (s, i))
    return rep


def _relation_checks(rep: Report, obj, n: int, act: Callable, tag: str):
    for i in range(1, n):
        for j in range(i + 2, n):
            rep.check(f"commute_{tag}", act(act(obj, j), i) == act(act(obj, i), j), (obj, i, j))
        if i + 1 < n:
            lhs = act(act(act(obj, i), i + 1), i)
            rhs = act(act(act(obj, i + 1), i), i + 1)
            rep.check(f"braid_{tag}", lhs == rhs, (obj, i))


def suite_braid_relations(n: int) -> Report:
    rep = Report("braid-relations", n)
    forests = _forests(n)
    rep.objects = len(forests)
    for f in forests:
        _relation_checks(rep, f, n, fo.sigma_forest, "forest")
        for i in range(1, n):
            once = fo.sigma_forest(f, i)
            if f.close(i, i + 1):
                ok = once != f and fo.sigma_forest(once, i) != f and fo.sigma_forest(fo.sigma_forest(once, i), i) == f
                rep.check("close_order_3", ok, (f, i))
            else:
                rep.check("non_close_order_2", once != f and fo.sigma_forest(once, i) == f, (f, i))
            rep.check("root_prop", (f.parent_of(i + 1) == 0) == (once.parent_of(i) == 0), (f, i))
    if n <= ORACLE_CAP + 1:
        for s in _ces(n):
            _relation_checks(rep, s, n, sq.braid_sigma, "ces")
    return rep


def suite_delta(n: int) -> Report:
    rep = Report("delta", n)
    forests = _forests(n)
    rep.objects = len(forests)
    word, garside = sq.named_braid(n, "delta"), sq.named_braid(n, "garside")
    for f in forests:
        d = fo.delta_forest(f)
        rep.check("delta_forest_matches_word", d == fo.apply_braid_word_forest(f, word), f)
        rep.check("delta_preserves_shape", d.unrooted_shape() == f.unrooted_shape(), f)
        twist = f
        for _ in range(n):
            twist = fo.delta_forest(twist)
        rep.check("full_twist_rotates_projectives", twist == fo.full_twist_forest(f), f)
        rep.check("full_twist_projectives_become_injective",
                  fo.injective_vertices(twist) == fo.projective_vertices(f), f)
        rep.check("garside_squared_is_full_twist_forest",
                  fo.apply_braid_word_forest(f, garside * garside) == twist, f)
    for s in _ces(n):
        d = sq.apply_braid_word(s, word)
        ok = d[0] == md.tau_star(s[n - 1]) and d.objects[1:] == s.objects[:-1]
        rep.check("delta_on_sequences", ok, s)
        rep.check("garside_squared_is_full_twist_ces",
                  sq.apply_braid_word(s, garside * garside) == sq.apply_braid_word(s, word ** n), s)
    return rep


A7_FOREST = fo.RootedLabeledForest((2, 3, 0, 1, 1, 7, 3))
A7_DELTA = fo.RootedLabeledForest((5, 1, 4, 7, 0, 0, 0))
A7_DELTA_INV = fo.RootedLabeledForest((0, 1, 4, 7, 0, 5, 5))


def suite_garside(n: int) -> Report:
    rep = Report("garside", n)
    forests = _forests(n)
    rep.objects = len(forests)
    gw = sq.named_braid(n, "garside")
    for f in forests:
        g = fo.garside_forest(f)
        rep.check("garside_inverse", fo.garside_forest(g, inverse=True) == f, f)
        for i in range(1, n):
            lhs = fo.apply_braid_word_forest(f, gw * sq.BraidWord((i,)) * gw.inverse())
            rep.check("conjugate_sigma_forest", lhs == fo.sigma_forest(f, n - i), (f, i))
            dual = fo.duality_forest
            rep.check("duality_sigma_forest",
                      dual(fo.sigma_forest(dual(f), i)) == fo.sigma_forest(f, n - i, inverse=True), (f, i))
        pv, iv = fo.projective_vertices(f), fo.injective_vertices(f)
        rep.check("delta_F_1", set(g.roots) == {n - j + 1 for j in pv}, f)
        rep.check("delta_F_2", set(fo.injective_vertices(g)) == {n - k + 1 for k in f.roots}, f)
        j1 = pv[0]
        rep.check("delta_F_3",
                  set(fo.projective_vertices(g)) == {n - i + 1 for i in (j1,) + f.children(j1)}, f)
        ig = fo.injective_vertices(g)
        rep.check("delta_F_4", ig[-1] == n - iv[0] + 1
                  and set(g.children(ig[-1])) == {n - v + 1 for v in iv[1:]}, f)
        c = fo.conjugation_forest(f)
        rep.check("C_F_1", set(c.roots) == set(pv), f)
        rep.check("C_F_2", fo.projective_vertices(c)[0] == iv[0] and set(c.children(iv[0])) == set(iv[1:]), f)
        lq = iv[-1]
        c_inv = fo.duality_forest(fo.garside_forest(f, inverse=True))
        rep.check("C_F_3", set(fo.projective_vertices(c_inv)) == {lq} | set(f.children(lq)), f)
        rep.check("C_equals_delta_inverse_after_D",
                  fo.garside_forest(fo.duality_forest(f), inverse=True) == c, f)
        rep.check("C_involution", fo.conjugation_forest(c) == f, f)
    for s in _ces(n):
        g = sq.garside(s)
        f = bij.ces_to_forest(s)
        rep.check("garside_equivariant", bij.ces_to_forest(g) == fo.garside_forest(f), s)
        rep.check("duality_equivariant", bij.ces_to_forest(sq.duality(s)) == fo.duality_forest(f), s)
        rep.check("conjugation_equivariant",
                  bij.ces_to_forest(sq.conjugation(s)) == fo.conjugation_forest(f), s)
        for i in range(1, n):
            lhs = sq.apply_braid_word(s, gw * sq.BraidWord((i,)) * gw.inverse())
            rep.check("conjugate_sigma_ces", lhs == sq.braid_sigma(s, n - i), (s, i))
            rhs = sq.braid_sigma(s, n - i, inverse=True)
            rep.check("duality_sigma_ces", sq.duality(sq.braid_sigma(sq.duality(s), i)) == rhs, (s, i))
        if n <= ORACLE_CAP:
            before, after = sq.relative_flags(s), sq.relative_flags(g)
            rep.check("rel_proj_iff_rel_inj_after_delta",
                      all(before[k][0] == after[n - 1 - k][1] for k in range(n)), s)
        ok = True
        for k in range(n):
            for j in range(n):
                val = md.chi(s[k], g[j])
                ok &= val in (1, -1) if j == n - 1 - k else val == 0
        rep.check("orthogonality_after_delta", ok, s)
    rep.check("rank7_garside_example", fo.garside_forest(A7_FOREST) == A7_DELTA
                  and fo.garside_forest(A7_FOREST, inverse=True) == A7_DELTA_INV, A7_FOREST)
    return rep


def suite_genfun(n: int) -> Report:
    rep = Report("genfun", n)
    rep.objects = (n + 1) ** (n - 1)
    formula = gf.formula_poly(n)
    forests = gf.forest_statistic_poly(n)
    rep.check("formula_equals_recursion", formula == gf.recursion_poly(n), n)
    rep.check("formula_equals_forest_statistics", formula == forests, lambda: forests.render())
    if n <= ORACLE_CAP:
        seqs = gf.sequence_statistic_poly(n)
        rep.check("formula_equals_sequence_statistics", formula == seqs, lambda: seqs.render())
        simples = sq.ExceptionalSequence([md.simple(i, n) for i in range(1, n + 1)])
        rep.check("all_both_is_simples",
                  all(p and i for p, i in sq.relative_flags(simples)) and seqs.coefficient(0, 0, n) == 1, n)
    rep.check("c_power_n_coefficient_1", formula.coefficient(0, 0, n) == 1, n)
    rep.check("value_at_111", formula.evaluate(1, 1, 1) == (n + 1) ** (n - 1), n)
    rep.check("value_at_212", formula.evaluate(2, 1, 2) == 2 * math.factorial(2 * n + 1) // math.factorial(n + 2), n)
    rep.info["polynomial"] = formula.to_json()
    return rep


def suite_clusters(n: int) -> Report:
    rep = Report("clusters", n)
    clusters = list(cl.enumerate_clusters(n))
    rep.objects = len(clusters)
    rep.check("count_is_catalan", len(clusters) == _catalan(n + 1), len(clusters))
    seen: dict = {}
    tie_sensitive = 0
    for c in clusters:
        s = cl.cluster_to_signed_sequence(c)
        label = lambda: cl.render_signed_sequence(s)  # noqa: E731
        rep.check("cluster_tilting", cl.is_cluster_tilting(c, n), label)
        rep.check("signed_sequence_valid", cl.is_signed_exceptional_sequence(s), label)
        rep.check("signed_sequence_injective", s not in seen, label)
        seen[s] = c
        plain = [x.module for x in s if not x.shifted]
        ok = True
        for x, y in itertools.permutations(plain, 2):
            if x.a + x.b > y.a + y.b:
                ok &= md.hom_dim(y, x) == 0
            elif x.a + x.b == y.a + y.b:
                ok &= md.hom_dim(x, y) == 0
        rep.check("hom_ordering", ok, label)
        g = cl.garside_signed(s)
        rep.check("garside_signed_valid", cl.is_signed_exceptional_sequence(g), label)
        rep.check("c_vector_pairing", cl.c_vector_check(s, g), label)
        # other orders inside groups of equal a + b
        unshifted = [x for x in s if not x.shifted]
        shifted = tuple(x for x in s if x.shifted)
        groups = [list(grp) for _, grp in itertools.groupby(unshifted, key=lambda x: x.module.a + x.module.b)]
        for perm in itertools.product(*(itertools.permutations(grp) for grp in groups)):
            alt = tuple(x for grp in perm for x in grp) + shifted
            if alt == s:
                continue
            rep.check("tie_order_valid", cl.is_signed_exceptional_sequence(alt), lambda: alt)
            tie_sensitive += cl.garside_signed(alt) != g
    rep.info["tie_orders_changing_garside_output"] = tie_sensitive
    expected = math.factorial(n) * _catalan(n + 1)
    counted = cl.count_signed(n)
    rep.check("count_signed_formula", counted == expected == gf.formula_poly(n).evaluate(2, 1, 2), counted)
    if n <= ORACLE_CAP:
        rep.check("count_signed_oracle", cl.count_signed(n, oracle=True) == expected, n)
    return rep


def suite_parking(n: int) -> Report:
    rep = Report("parking", n)
    seqs = _ces(n)
    rep.objects = len(seqs)
    tops_seen = {}
    for s in seqs:
        t = bij.ces_tops(s)
        rep.check("tops_are_parking", bij.is_parking_function(t, n), s)
        rep.check("tops_injective", t not in tops_seen, s)
        tops_seen[t] = s
        rep.check("parking_to_ces_after_tops", bij.parking_to_ces(t) == s, s)
    parking = list(bij.enumerate_parking_functions(n))
    rep.check("parking_count", len(parking) == (n + 1) ** (n - 1), len(parking))
    for p in parking:
        s = bij.parking_to_ces(p)
        rep.check("tops_after_parking_to_ces", bij.ces_tops(s) == p, p)
        if list(p) == sorted(p):
            rep.check("nondecreasing_construction", bij.park_nondecreasing(p) == s, p)
    return rep


def suite_prufer(n: int) -> Report:
    rep = Report("prufer", n)
    forests = _forests(n)
    rep.objects = len(forests)
    codes = set()
    differ = 0
    for f in forests:
        code = fo.prufer_encode(f)
        rep.check("code_shape", len(code) == n - 1 and all(0 <= c <= n for c in code), f)
        rep.check("forest_round_trip", fo.prufer_decode(code, n) == f, f)
        codes.add(code)
        differ += bij.prufer_parking(code, n) != bij.ces_tops(bij.forest_to_ces(f))
    rep.check("codes_distinct", len(codes) == len(forests), len(codes))
    parking = list(bij.enumerate_parking_functions(n))
    pcodes = set()
    for p in parking:
        code = bij.parking_prufer(p)
        rep.check("parking_round_trip", bij.prufer_parking(code, n) == p, p)
        pcodes.add(code)
    rep.check("parking_codes_onto", pcodes == set(itertools.product(range(n + 1), repeat=n - 1)), len(pcodes))
    rep.info["forests_where_routes_differ"] = differ
    if n == 4:
        chain = fo.RootedLabeledForest((0, 1, 2, 3))
        via_code = bij.prufer_parking(fo.prufer_encode(chain), n)
        via_tops = bij.ces_tops(bij.forest_to_ces(chain))
        rep.check("routes_differ_on_chain", (via_code, via_tops) == ((1, 4, 1, 2), (1, 1, 1, 1)),
                  (via_code, via_tops))
    return rep


def _half_open_hasse(pairs, n: int) -> fo.RootedLabeledForest:
    # factor (x, y) with 0 read as n + 1 is the interval [min, max)
    spans = [(min(x or n + 1, y or n + 1), max(x or n + 1, y or n + 1)) for x, y in pairs]
    parent = []
    for i, (lo, hi) in enumerate(spans):
        best = 0
        for j, (lo2, hi2) in enumerate(spans):
            if j != i and lo2 <= lo and hi <= hi2 and (best == 0 or hi2 - lo2 < spans[best - 1][1] - spans[best - 1][0]):
                best = j + 1
        parent.append(best)
    return fo.RootedLabeledForest(tuple(parent))


def suite_factorization(n: int) -> Report:
    rep = Report("factorization", n)
    seqs = _ces(n)
    rep.objects = len(seqs)
    cycle = bij.long_cycle(n)
    for s in seqs:
        pairs = bij.ces_to_factorization(s)
        rep.check("composes_to_long_cycle", bij.compose_transpositions(pairs, n + 1) == cycle, s)
        rep.check("round_trip", bij.factorization_to_ces(pairs, n) == s, s)
        rep.check("text_round_trip", bij.parse_factorization(bij.render_factorization(pairs)) == list(pairs), s)
        rep.check("hasse_of_half_open_intervals", _half_open_hasse(pairs, n) == bij.ces_to_forest(s), s)
    return rep


SUITES: dict[str, tuple[Callable[[int], Report], int]] = {
    "homext": (suite_homext, ORACLE_CAP),
    "bijection": (suite_bijection, ORACLE_CAP),
    "equivariance": (suite_equivariance, ENUMERATION_CAP),
    "braid-relations": (suite_braid_relations, ENUMERATION_CAP),
    "delta": (suite_delta, ENUMERATION_CAP - 1),
    "garside": (suite_garside, ENUMERATION_CAP - 1),
    "genfun": (suite_genfun, ENUMERATION_CAP),
    "clusters": (suite_clusters, ORACLE_CAP),
    "parking": (suite_parking, ENUMERATION_CAP),
    "prufer": (suite_prufer, ENUMERATION_CAP),
    "factorization": (suite_factorization, ENUMERATION_CAP),
}


def run_verify(suite: str, n: int, force: bool = False) -> Report:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    func, cap = SUITES[suite]
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap and not force:
        raise ValueError(f"suite {suite} is capped at n={cap}; pass --force to go further")
    return func(n)
