"""Command-line entry point.

Every verb prints one canonical JSON document (compact separators, keys in
insertion order) so identical invocations give byte-identical output.
Exit status: 0 on success, 1 when a verification sweep has failures,
2 on usage or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from . import kspace, schur, vertex
from .partitions import enumerate_k_irreducibles, is_partition, k_split, strip
from .symfunc import SymFunc
from .verify import SUITES, Budget, summarize, sweep


class UsageError(Exception):
    pass


def parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_shape(text: str) -> tuple[int, ...]:
    v = parse_ints(text)
    if not is_partition(v):
        raise UsageError(f"{text!r} is not a partition")
    return strip(v)


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


class Output:
    def __init__(self, fmt: str, t_one: bool):
        self.fmt = fmt
        self.t_one = t_one

    def func(self, f: SymFunc) -> str:
        if self.t_one:
            f = f.at_t_one()
        return f.pretty() if self.fmt == "pretty" else dumps(f.to_json())

    def obj(self, data: Any, pretty: str | None = None) -> str:
        if self.fmt == "pretty" and pretty is not None:
            return pretty
        return dumps(data)


# ---------------------------------------------------------------------------
# verbs


def cmd_hl(args, out: Output) -> int:
    print(out.func(vertex.hall_littlewood(parse_shape(args.shape))))
    return 0


def cmd_kschur(args, out: Output) -> int:
    print(out.func(kspace.k_schur(parse_shape(args.shape), args.k)))
    return 0


def cmd_gpoly(args, out: Output) -> int:
    print(out.func(kspace.g_poly(parse_shape(args.shape), args.k)))
    return 0


def cmd_ksplit(args, out: Output) -> int:
    blocks = k_split(parse_shape(args.shape), args.k)
    data = {"k": args.k, "blocks": [list(b) for b in blocks]}
    print(out.obj(data, " | ".join(",".join(map(str, b)) for b in blocks)))
    return 0


def cmd_straighten(args, out: Output) -> int:
    st = schur.straighten(parse_ints(args.vector))
    if st is None:
        print(out.obj({"zero": True}, "0"))
    else:
        data = {"zero": False, "sign": st.sign, "vector": list(st.parts)}
        print(out.obj(data, f"{'-' if st.sign < 0 else ''}s[{','.join(map(str, st.parts))}]"))
    return 0


def cmd_kostka(args, out: Output) -> int:
    if args.inverse and args.foulkes:
        raise UsageError("--inverse and --foulkes are exclusive")
    if args.foulkes:
        parts, K = vertex.kostka_foulkes_matrix(args.degree)
        if out.t_one:
            rows = [[c.eval_at_one() for c in row] for row in K]
        else:
            rows = [[c.to_json() for c in row] for row in K]
        kind = "foulkes"
    else:
        parts, K = (schur.inverse_kostka if args.inverse else schur.kostka_matrix)(args.degree)
        rows = [list(row) for row in K]
        kind = "inverse" if args.inverse else "kostka"
    data = {"kind": kind, "degree": args.degree, "partitions": [list(p) for p in parts], "matrix": rows}
    if args.foulkes and not out.t_one:
        pretty_rows = [[c.pretty() for c in row] for row in K]
    else:
        pretty_rows = [[str(c) for c in row] for row in rows]
    lines = ["\t".join([""] + [",".join(map(str, p)) for p in parts])]
    for p, row in zip(parts, pretty_rows):
        lines.append("\t".join([",".join(map(str, p))] + row))
    print(out.obj(data, "\n".join(lines)))
    return 0


def cmd_apply_b(args, out: Output) -> int:
    index = parse_ints(args.index)
    if args.to_hl is not None:
        f = vertex.hall_littlewood(parse_shape(args.to_hl))
    elif args.to_s is not None:
        f = SymFunc.basis_element(parse_shape(args.to_s))
    else:
        f = SymFunc.one()
    print(out.func(vertex.apply_B_vector(index, f)))
    return 0


def cmd_irreducibles(args, out: Output) -> int:
    parts = enumerate_k_irreducibles(args.k)
    data = {"k": args.k, "count": len(parts), "partitions": [list(p) for p in parts]}
    print(out.obj(data, "\n".join("(" + ",".join(map(str, p)) + ")" for p in parts)))
    return 0


def cmd_reduce(args, out: Output) -> int:
    c, rects, mu = kspace.reduce_to_irreducible(parse_shape(args.shape), args.k)
    data = {"k": args.k, "c": c, "rectangles": [list(r) for r in rects], "irreducible": list(mu)}
    pretty = f"t^{c} s^({args.k})[{args.shape}] = " + " ".join(
        f"B[{','.join(map(str, r))}]" for r in rects) + f" s^({args.k})[{','.join(map(str, mu))}]"
    print(out.obj(data, pretty))
    return 0


def cmd_verify(args, out: Output) -> int:
    budget = Budget(args.max_degree, args.test_degree)
    reports = sweep(args.suite, budget)
    summary = summarize(reports)
    if out.fmt == "pretty":
        for r in reports:
            if not r.passed:
                print(f"FAIL {r.id} {dumps(r.params)}")
        print(f"{summary['passed']}/{summary['total']} passed")
    else:
        data = {
            "suite": args.suite,
            "budget": {"max_degree": budget.max_degree, "test_degree": budget.test_degree},
            "summary": summary,
            "reports": [r.to_json(timings=args.timings) for r in reports],
        }
        print(dumps(data))
    return 0 if summary["failed"] == 0 else 1


def table_json(k: int, n: int, kind: str) -> dict:
    if kind == "g":
        funcs = kspace.g_table(k, n).g
    else:
        funcs = kspace.kschur_table(k, n).functions
    return {"k": k, "degree": n, "kind": kind, "entries": [[list(p), f.to_json()] for p, f in funcs.items()]}


def cmd_table(args, out: Output) -> int:
    path = None
    if args.cache_dir:
        path = os.path.join(args.cache_dir, f"{args.kind}-k{args.k}-d{args.degree}.json")
    if path and os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = table_json(args.k, args.degree, args.kind)
        if path:
            os.makedirs(args.cache_dir, exist_ok=True)
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(dumps(data))
    if out.fmt == "pretty":
        lines = []
        for p, f in data["entries"]:
            func = SymFunc.from_json(f)
            lines.append(f"({','.join(map(str, p))}): {out.func(func)}")
        print("\n".join(lines))
    else:
        if out.t_one:
            data = dict(data, entries=[[p, SymFunc.from_json(f).at_t_one().to_json()] for p, f in data["entries"]])
        print(dumps(data))
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--t-one", action="store_true", default=argparse.SUPPRESS, help="specialise t = 1")
    common.add_argument("--format", choices=("json", "pretty"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="kschur", description="Hall-Littlewood vertex operators and k-Schur functions")
    parser.add_argument("--t-one", action="store_true", help="specialise t = 1")
    parser.add_argument("--format", choices=("json", "pretty"), default="json")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    p = verb("hl", cmd_hl, "Hall-Littlewood function in the Schur basis")
    p.add_argument("--shape", required=True)
    p = verb("kschur", cmd_kschur, "k-Schur function in the Schur basis")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--shape", required=True)
    p = verb("gpoly", cmd_gpoly, "k-split polynomial in the Schur basis")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--shape", required=True)
    p = verb("ksplit", cmd_ksplit, "k-split of a partition")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--shape", required=True)
    p = verb("straighten", cmd_straighten, "straighten an integer vector")
    p.add_argument("--vector", required=True)
    p = verb("kostka", cmd_kostka, "Kostka, inverse Kostka or Kostka-Foulkes matrix")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--foulkes", action="store_true")
    p = verb("apply-b", cmd_apply_b, "apply a vertex operator")
    p.add_argument("--index", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--to-hl", help="act on the Hall-Littlewood function of this shape")
    g.add_argument("--to-s", help="act on the Schur function of this shape")
    p = verb("irreducibles", cmd_irreducibles, "k-irreducible partitions")
    p.add_argument("--k", type=int, required=True)
    p = verb("reduce", cmd_reduce, "strip k-rectangles down to an irreducible shape")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--shape", required=True)
    p = verb("verify", cmd_verify, "run a verification sweep")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--max-degree", type=int, default=Budget.max_degree)
    p.add_argument("--test-degree", type=int, default=Budget.test_degree)
    p.add_argument("--timings", action="store_true", help="include per-report milliseconds (not reproducible)")
    p = verb("table", cmd_table, "G or k-Schur table for one (k, degree)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--kind", choices=("g", "kschur"), default="kschur")
    p.add_argument("--cache-dir")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format, args.t_one)
    try:
        return args.fn(args, out)
    except (UsageError, ValueError) as exc:
        print(f"kschur {args.verb}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
