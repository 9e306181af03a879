"""Command-line interface: ``excforest {convert,enumerate,act,stats,verify,factorize}``.

Exit codes are 0 on success, 1 when a payload fails validation (or a verify
suite finds a counterexample) and 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bijections as bij
from . import cluster as cl
from . import forest as fo
from . import genfun as gf
from . import sequences as sq
from .modules import IntervalModule
from .verify import ENUMERATION_CAP, ORACLE_CAP, SUITES, run_verify

FORMATS = ("forest", "ces", "parking", "prufer", "factorization")
NAMED = ("delta", "Delta", "Delta-inv", "D", "C", "full-twist")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_payload(arg: str | None) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    return arg


def _maybe_json(text: str):
    text = text.strip()
    if text[:1] in "[{":
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON at position {exc.pos}: {exc.msg}") from None
    return None


def _int_list(text: str, what: str) -> list[int]:
    out = []
    for pos, tok in enumerate(text.replace(",", " ").replace("(", " ").replace(")", " ").split(), start=1):
        try:
            out.append(int(tok))
        except ValueError:
            raise ValueError(f"{what} entry {pos} ({tok!r}) is not an integer") from None
    return out


# -- parsing ------------------------------------------------------------------------

def parse_payload(fmt: str, text: str, n: int | None = None, prufer_route: str = "forest") -> sq.ExceptionalSequence:
    """Parse a payload of format ``fmt`` and route it to a complete exceptional sequence."""
    data = _maybe_json(text)
    if fmt == "ces":
        if data is None:
            return sq.parse_sequence(text, n)
        objects = data["objects"] if isinstance(data, dict) else data
        n = data.get("n", n) if isinstance(data, dict) else n
        n = len(objects) if n is None else n
        return sq.ExceptionalSequence([IntervalModule(int(o["a"]), int(o["b"]), n) for o in objects], n)
    if fmt == "forest":
        if isinstance(data, dict):
            return bij.forest_to_ces(fo.RootedLabeledForest.from_json(data))
        parents = data if data is not None else _int_list(text, "parent")
        return bij.forest_to_ces(fo.RootedLabeledForest(tuple(int(p) for p in parents)))
    if fmt == "parking":
        entries = data["entries"] if isinstance(data, dict) else data
        entries = tuple(int(x) for x in entries) if entries is not None else tuple(_int_list(text, "parking"))
        return bij.parking_to_ces(entries)
    if fmt == "prufer":
        if isinstance(data, dict):
            code, n = data["code"], data.get("n", n)
        else:
            code = data if data is not None else _int_list(text, "code")
        code = tuple(int(c) for c in code)
        n = len(code) + 1 if n is None else n
        if prufer_route == "parking":
            return bij.parking_to_ces(bij.prufer_parking(code, n))
        return bij.forest_to_ces(fo.prufer_decode(code, n))
    if fmt == "factorization":
        if isinstance(data, dict):
            pairs, n = data["factors"], data.get("n", n)
        elif data is not None:
            pairs = data
        else:
            pairs = bij.parse_factorization(text)
        return bij.factorization_to_ces([tuple(int(v) for v in p) for p in pairs], n)
    raise UsageError(f"unknown format {fmt!r}")


# -- rendering ----------------------------------------------------------------------

def render_payload(fmt: str, seq: sq.ExceptionalSequence, as_json: bool, prufer_route: str = "forest") -> str:
    n = seq.n
    if fmt == "ces":
        if as_json:
            return _dumps({"n": n, "objects": [x.to_json() for x in seq]})
        return str(seq)
    if fmt == "forest":
        return bij.ces_to_forest(seq).dumps()
    if fmt == "dot":
        return bij.ces_to_forest(seq).to_dot().rstrip("\n")
    if fmt == "parking":
        tops = bij.ces_tops(seq)
        return _dumps({"n": n, "entries": list(tops)}) if as_json else bij.render_parking(tops)
    if fmt == "prufer":
        if prufer_route == "parking":
            code = bij.parking_prufer(bij.ces_tops(seq))
        else:
            code = fo.prufer_encode(bij.ces_to_forest(seq))
        return _dumps({"n": n, "code": list(code)}) if as_json else ",".join(map(str, code))
    if fmt == "factorization":
        pairs = bij.ces_to_factorization(seq)
        if as_json:
            return _dumps({"n": n, "factors": [list(p) for p in pairs]})
        return bij.render_factorization(pairs)
    raise UsageError(f"unknown format {fmt!r}")


# -- subcommands --------------------------------------------------------------------

def cmd_convert(args) -> int:
    if args.to == "dot" and args.src != "forest":
        raise UsageError("--to dot is only available for --from forest")
    seq = parse_payload(args.src, _read_payload(args.payload), args.n, args.prufer_route)
    print(render_payload(args.to, seq, args.json, args.prufer_route))
    return 0


def _check_cap(n: int, cap: int, force: bool, what: str):
    if n < 1:
        raise UsageError("n must be positive")
    if n > cap and not force:
        raise UsageError(f"{what} is capped at n={cap}; pass --force to go further")


def cmd_enumerate(args) -> int:
    n = args.n
    _check_cap(n, ORACLE_CAP if args.kind == "clusters" else ENUMERATION_CAP, args.force, f"enumerate {args.kind}")
    if args.kind == "ces":
        items = ((_dumps({"n": n, "objects": [x.to_json() for x in s]}) if args.json else str(s))
                 for s in sq.enumerate_ces(n))
    elif args.kind == "forests":
        items = (f.dumps() for f in fo.enumerate_forests(n))
    elif args.kind == "parking":
        items = ((_dumps({"n": n, "entries": list(p)}) if args.json else bij.render_parking(p))
                 for p in bij.enumerate_parking_functions(n))
    else:
        seqs = sorted(cl.cluster_to_signed_sequence(c) for c in cl.enumerate_clusters(n))
        items = ((_dumps([x.to_json() for x in s]) if args.json else cl.render_signed_sequence(s)) for s in seqs)
    count = 0
    for line in items:
        if args.limit is not None and count >= args.limit:
            break
        print(line)
        count += 1
    return 0


def _act_named(name: str, obj, rep: str):
    n = obj.n
    if rep == "forest":
        table = {
            "delta": fo.delta_forest,
            "Delta": fo.garside_forest,
            "Delta-inv": lambda f: fo.garside_forest(f, inverse=True),
            "D": fo.duality_forest,
            "C": fo.conjugation_forest,
            "full-twist": fo.full_twist_forest,
        }
        return table[name](obj)
    table = {
        "delta": lambda s: sq.apply_braid_word(s, sq.named_braid(n, "delta")),
        "Delta": sq.garside,
        "Delta-inv": lambda s: sq.apply_braid_word(s, sq.named_braid(n, "garside_inv")),
        "D": sq.duality,
        "C": sq.conjugation,
        "full-twist": lambda s: sq.apply_braid_word(s, sq.named_braid(n, "full_twist")),
    }
    return table[name](obj)


def cmd_act(args) -> int:
    text = _read_payload(args.payload)
    word = sq.BraidWord.parse(args.word or "")
    if args.rep == "forest":
        data = _maybe_json(text)
        if isinstance(data, dict):
            obj = fo.RootedLabeledForest.from_json(data)
        else:
            parents = data if data is not None else _int_list(text, "parent")
            obj = fo.RootedLabeledForest(tuple(int(p) for p in parents))
        word.check(obj.n)
        obj = fo.apply_braid_word_forest(obj, word)
    else:
        obj = parse_payload("ces", text, args.n)
        word.check(obj.n)
        obj = sq.apply_braid_word(obj, word)
    for name in args.named or ():
        obj = _act_named(name, obj, args.rep)
    if args.rep == "forest":
        print(obj.dumps())
    else:
        print(render_payload("ces", obj, args.json))
    return 0


def cmd_stats(args) -> int:
    n = args.n
    cap = ORACLE_CAP if args.source == "sequences" else ENUMERATION_CAP
    if args.source in ("formula", "recursion"):
        cap = 10**6
    _check_cap(n, cap, args.force, f"stats --source {args.source}")
    poly = {
        "formula": gf.formula_poly,
        "recursion": gf.recursion_poly,
        "forests": lambda m: gf.statistic_poly(m, "forests"),
        "sequences": lambda m: gf.statistic_poly(m, "sequences"),
    }[args.source](n)
    if args.eval is not None:
        point = _int_list(args.eval, "evaluation point")
        if len(point) != 3:
            raise UsageError("--eval needs three integers a,b,c")
        print(poly.evaluate(*point))
    elif args.json:
        print(poly.dumps())
    else:
        print(poly.render())
    return 0


def cmd_verify(args) -> int:
    cap = SUITES[args.suite][1]
    _check_cap(args.n, cap, args.force, f"suite {args.suite}")
    report = run_verify(args.suite, args.n, force=True)
    print(json.dumps(report.to_json(), indent=None if args.compact else 2))
    return 0 if report.passed else 1


def cmd_factorize(args) -> int:
    seq = parse_payload(args.src, _read_payload(args.payload), args.n, args.prufer_route)
    pairs = bij.ces_to_factorization(seq)
    composite = bij.compose_transpositions(pairs, seq.n + 1)
    ok = composite == bij.long_cycle(seq.n)
    if args.json:
        print(_dumps({"n": seq.n, "factors": [list(p) for p in pairs],
                      "composite": list(composite), "is_long_cycle": ok}))
    else:
        print(bij.render_factorization(pairs))
    return 0 if ok else 1


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="excforest",
        description="Exceptional sequences of the linear A_n quiver, rooted labeled forests and parking functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between forest, ces, parking, prufer and factorization")
    p.add_argument("--from", dest="src", choices=FORMATS, required=True)
    p.add_argument("--to", choices=FORMATS + ("dot",), required=True)
    p.add_argument("--n", type=int, help="rank, when it cannot be read off the payload")
    p.add_argument("--prufer-route", choices=("forest", "parking"), default="forest",
                   help="read Pruefer codes as forest codes (default) or as parking-function codes")
    p.add_argument("--json", action="store_true", help="emit JSON instead of the text shorthand")
    p.add_argument("payload", nargs="?", help="payload text or JSON; '-' or omitted reads stdin")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("enumerate", help="list every object of one kind for rank n")
    p.add_argument("kind", choices=("ces", "forests", "parking", "clusters"))
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--force", action="store_true", help="lift the n cap")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("act", help="apply a braid word and/or a named element")
    p.add_argument("--rep", choices=("forest", "ces"), required=True)
    p.add_argument("--word", help="signed generator indices, e.g. '1 -2 3'; rightmost acts first")
    p.add_argument("--named", choices=NAMED, action="append",
                   help="named element applied after the word; repeatable, applied in order")
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("payload", nargs="?")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("stats", help="the trivariate generating polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--source", choices=("formula", "recursion", "forests", "sequences"), default="formula")
    p.add_argument("--eval", help="evaluate at a,b,c instead of printing the polynomial")
    p.add_argument("--json", action="store_true")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("suite", choices=tuple(SUITES))
    p.add_argument("n", type=int)
    p.add_argument("--force", action="store_true", help="lift the n cap")
    p.add_argument("--compact", action="store_true", help="single-line JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("factorize", help="transposition factorization of the long cycle")
    p.add_argument("--from", dest="src", choices=FORMATS, default="ces")
    p.add_argument("--n", type=int)
    p.add_argument("--prufer-route", choices=("forest", "parking"), default="forest")
    p.add_argument("--json", action="store_true")
    p.add_argument("payload", nargs="?")
    p.set_defaults(func=cmd_factorize)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"excforest: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, TypeError, AssertionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"excforest: invalid input: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
