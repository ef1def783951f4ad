"""Command-line entry point.

Exit codes: 0 success, 1 usage, 2 bad input, 3 precondition failure,
4 certificate or self-check failure.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

from . import classes, textio
from .counting import count_copies, exceeds, pattern_id
from .decomposition import find_module
from .errors import CertificateError, DomainError, EHGraphsError, InputError
from .graph import Graph, OrderedGraph, Tournament

SEED_ENV = "EHGRAPHS_SEED"
_RATIONAL = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def rational(text):
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(f"expected p/q, got {text!r}")
    try:
        return Fraction(text.replace(" ", ""))
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError("zero denominator") from None


def _b(x):
    return "true" if x else "false"


def _fmt(vs):
    return ",".join(str(v) for v in vs)


def _load(path, kind=None):
    try:
        value = textio.read(path)
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror}") from None
    if kind is None:
        return value
    if kind == "tournament":
        if not isinstance(value, Tournament):
            raise InputError(f"{path} is not a tournament")
        return value
    if isinstance(value, Tournament):
        raise InputError(f"{path} is a tournament")
    base = value.graph if isinstance(value, OrderedGraph) else value
    return OrderedGraph(base) if kind == "ordered" else base


# ------------------------------------------------------------------ commands


def cmd_classify(args, out):
    g = _load(args.file, args.kind)
    kind = {Graph: "graph", OrderedGraph: "ordered", Tournament: "tournament"}[type(g)]
    out.append(f"kind: {kind}")
    out.append(f"n: {g.n}")
    m = find_module(g)
    out.append(f"prime: {_b(m is None)}")
    if m is not None:
        out.append(f"module: {_fmt(m.vertices)}")
    if isinstance(g, Graph):
        out.append(f"in_J: {_b(classes.in_J(g))}")
        out.append(f"in_H: {_b(classes.in_H(g))}")
    elif isinstance(g, OrderedGraph):
        out.append(f"in_K: {_b(classes.in_K(g))}")
        out.append(f"in_L: {_b(classes.in_L(g))}")
    else:
        from .tournaments import q_numbering

        nums = q_numbering(g)
        out.append(f"in_Q: {_b(nums is not None)}")
        if nums is not None:
            out.append(f"numbering: {_fmt(nums)}")
    return 0


def cmd_count(args, out):
    h = _load(args.pattern)
    g = _load(args.host)
    out.append(f"pattern: {pattern_id(h)}")
    out.append(f"host_n: {g.n}")
    if args.threshold is None:
        out.append(f"count: {count_copies(h, g)}")
    else:
        out.append(f"threshold: {args.threshold}")
        out.append(f"exceeds: {_b(exceeds(h, g, args.threshold))}")
    return 0


def _params(args, h, j):
    from .extraction import Params

    return Params(h=max(h.n, j.n, 4), d=args.d)


def _outcome_lines(o):
    from .extraction import CopyWitness, RestrictedSet

    if isinstance(o, RestrictedSet):
        meta = dict(o.meta)
        lines = [
            "outcome: restricted_set",
            f"side: {o.side}",
            f"eps: {o.eps}",
            f"size: {len(o.vertices)}",
            f"route: {meta.get('route', 'search')}",
        ]
        if "reason" in meta:
            lines.append(f"reason: {meta['reason']}")
        lines.append(f"vertices: {_fmt(o.vertices)}")
        return lines
    if isinstance(o, CopyWitness):
        return [
            "outcome: copy_witness",
            f"pattern: {pattern_id(o.pattern)}",
            f"count_at_least: {o.count}",
            f"threshold: {o.threshold}",
            f"host_size: {len(o.host)}",
        ]
    raise CertificateError(f"unexpected outcome {type(o).__name__}")


def cmd_extract(args, out):
    from .extraction import certify, unordered_extract, viral_extract

    h, j, g = _load(args.h), _load(args.j), _load(args.host)
    if not (type(h) is type(j) is type(g)) or isinstance(g, Tournament):
        raise InputError("h, j and host must all be graphs or all ordered graphs")
    fn = viral_extract if isinstance(g, OrderedGraph) else unordered_extract
    o = fn(h, j, g, args.eps, _params(args, h, j), args.seed, args.full)
    out.extend(_outcome_lines(o))
    certify(g, o)
    out.append("verified: true")
    return 0


def cmd_eh(args, out):
    from .extraction import certify, eh_extract

    h, j, g = _load(args.h), _load(args.j), _load(args.host)
    if not (type(h) is type(j) is type(g)) or isinstance(g, Tournament):
        raise InputError("h, j and host must all be graphs or all ordered graphs")
    res = eh_extract(h, j, g, seed=args.seed, params=_params(args, h, j))
    certify(g, res)
    out.append(f"kind: {res.kind}")
    out.append(f"size: {res.size}")
    out.append(f"host_n: {g.n}")
    for step in res.schedule:
        out.append("schedule: " + " ".join(str(s) for s in step))
    out.append(f"vertices: {_fmt(res.vertices)}")
    out.append("verified: true")
    return 0


def cmd_enumerate(args, out):
    from .enumeration import catalog_text, enumerate_prime_in_H

    if args.cls != "prime-in-H":
        raise DomainError(f"unknown class {args.cls!r}")
    graphs = enumerate_prime_in_H(args.n, method=args.method)
    text = catalog_text(graphs)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.append(f"count: {len(graphs)}")
        out.append(f"written: {args.out}")
    else:
        out.append(f"# count: {len(graphs)}")
        out.append(text.rstrip("\n"))
    return 0


def _suite_char(max_n):
    from .enumeration import all_graphs

    for n in range(max_n + 1):
        gs = all_graphs(n)
        bad = sum(1 for g in gs if classes.in_H(g) != (classes.in_J(g) and classes.in_J(g.complement())))
        yield f"char_n{n}", bad == 0, f"{len(gs)} classes, {bad} exceptions"


def _suite_split(max_n):
    from .enumeration import enumerate_prime_in_H

    for n in range(3, max_n + 1):
        gs = enumerate_prime_in_H(n)
        bad = sum(1 for g in gs if not (classes.is_split(g) and classes.is_split_degrees(g)))
        yield f"split_n{n}", bad == 0, f"{len(gs)} prime members, {bad} not split"


def _suite_figures(_max_n):
    from .decomposition import is_prime
    from .enumeration import fig2_fixture, fig2_ordered, fig3_fixtures, fig4_fixtures

    f2 = fig2_fixture()
    yield "fig2_in_H", classes.in_H(f2), ""
    yield "fig2_prime", is_prime(f2), ""
    o = fig2_ordered(6)
    yield "fig2_order_in_L", classes.in_L(o) and is_prime(o), ""
    f4 = fig4_fixtures()
    yield "fig4_all_prime", all(is_prime(x) for x in f4), ""
    members = [i + 1 for i, x in enumerate(f4) if classes.in_L(x)]
    yield "fig4_in_L_positions", members == [1, 5, 7], _fmt(members)
    yield "fig3_not_in_H", not any(classes.in_H(x) for x in fig3_fixtures()), ""


def _suite_duality(max_n):
    from .extraction import eh_extract
    from .generators import random_bull_free
    from .graph import bull, complement

    for s in range(max_n):
        g = random_bull_free(40 + 5 * s, seed=s)
        a = eh_extract(bull(), bull(), g, seed=s)
        b = eh_extract(bull(), bull(), complement(g), seed=s)
        ok = a.vertices == b.vertices and {a.kind, b.kind} == {"clique", "stable"}
        yield f"duality_{s}", ok, f"{a.kind}/{b.kind} size {a.size}"


_SUITES = {
    "char": (_suite_char, 6),
    "split": (_suite_split, 7),
    "figures": (_suite_figures, 0),
    "duality": (_suite_duality, 10),
}


def cmd_verify(args, out):
    fn, default = _SUITES[args.suite]
    max_n = default if args.max_n is None else args.max_n
    ok_all = True
    for name, ok, note in fn(max_n):
        ok_all = ok_all and ok
        out.append(f"{name}: {'pass' if ok else 'fail'}" + (f" ({note})" if note else ""))
    out.append(f"suite: {args.suite}")
    out.append(f"result: {'pass' if ok_all else 'fail'}")
    return 0 if ok_all else 4


# --------------------------------------------------------------------- parser


def build_parser():
    env_seed = os.environ.get(SEED_ENV, "0")
    p = _Parser(prog="ehgraphs", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=1, help="worker cap (results do not depend on it)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify")
    c.add_argument("file")
    c.add_argument("--kind", choices=["graph", "ordered", "tournament"])
    c.set_defaults(fn=cmd_classify)

    c = sub.add_parser("count")
    c.add_argument("--pattern", required=True)
    c.add_argument("--host", required=True)
    c.add_argument("--threshold", type=rational)
    c.set_defaults(fn=cmd_count)

    for name, fn in (("extract", cmd_extract), ("eh", cmd_eh)):
        c = sub.add_parser(name)
        c.add_argument("--h", required=True)
        c.add_argument("--j", required=True)
        c.add_argument("--host", required=True)
        c.add_argument("--seed", type=int, default=int(env_seed))
        c.add_argument("--d", type=int, default=4)
        if name == "extract":
            c.add_argument("--eps", type=rational, required=True)
            c.add_argument("--full", action="store_true", help="run the blockade route even when not needed")
        c.set_defaults(fn=fn)

    c = sub.add_parser("enumerate")
    c.add_argument("--class", dest="cls", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--method", choices=["grow", "all", "split"], default="grow")
    c.add_argument("--out")
    c.set_defaults(fn=cmd_enumerate)

    c = sub.add_parser("verify")
    c.add_argument("--suite", required=True, choices=sorted(_SUITES))
    c.add_argument("--max-n", type=int)
    c.set_defaults(fn=cmd_verify)
    return p


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        out = []
        code = args.fn(args, out)
    except UsageError as err:
        print(f"usage error: {err}", file=stderr)
        return 1
    except InputError as err:
        print(f"input error: {err}", file=stderr)
        return 2
    except CertificateError as err:
        print(f"certificate failure: {err}", file=stderr)
        return 4
    except (DomainError, EHGraphsError) as err:
        print(f"precondition failed: {err}", file=stderr)
        return 3
    stdout.write("\n".join(out) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
