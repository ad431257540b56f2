"""Command-line interface.

One binary, deterministic output.  Results go to stdout, errors to stderr.
Exit codes: 0 success, 2 usage or malformed input, 3 range/infeasibility
(the offending prime index is printed), 4 a verification claim failed (the
CI tripwire).  Matula numbers and primes are always printed as decimal
strings; only the two analytic bound formulas print floats, at 6 significant
figures.  With --json every result line is a single JSON object.
"""

import argparse
import json
import sys

from . import extremal, primes, treetext
from .codec import decode, encode
from .enumerator import DEFAULT_CAPS, EnumSpec, count_trees, enumerate_trees
from .errors import (
    BadSize,
    DomainError,
    FactorOutOfRange,
    IndexOutOfRange,
    MatulaError,
    NotPrime,
    SizeTooLarge,
    TooFewBranches,
    TreeSyntaxError,
    ValueOutOfRange,
)
from .trees import TreeClass, binary_caterpillar, params

_RANGE_ERRORS = (IndexOutOfRange, ValueOutOfRange, FactorOutOfRange, SizeTooLarge)
_USAGE_ERRORS = (
    TreeSyntaxError,
    NotPrime,
    DomainError,
    TooFewBranches,
    BadSize,
)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="matula",
        description="Rooted trees as integers: encode, decode, enumerate, verify.",
    )
    parser.add_argument(
        "--prime-bound",
        type=int,
        default=None,
        metavar="N",
        help="prime value ceiling (default: MATULA_PRIME_BOUND or 2^32)",
    )
    parser.add_argument(
        "--json", action="store_true", help="one JSON object per result line"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="tree text -> Matula number")
    p.add_argument("tree", help="tree text, or '-' to read one tree per stdin line")

    p = sub.add_parser("decode", help="Matula number -> tree text")
    p.add_argument("number", type=int)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead")

    p = sub.add_parser("params", help="structural parameters of a tree or number")
    p.add_argument("tree_or_number", help="tree text, or a decimal Matula number")

    p = sub.add_parser("enumerate", help="list all trees of a class and size")
    p.add_argument(
        "--class",
        dest="tree_class",
        required=True,
        choices=[c.value for c in TreeClass],
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--leaves", type=int)
    group.add_argument("--vertices", type=int)
    p.add_argument(
        "--with-matula",
        action="store_true",
        help="append the Matula number, tab-separated",
    )
    p.add_argument("--max-leaves", type=int, default=None, help="cap override")
    p.add_argument("--max-vertices", type=int, default=None, help="cap override")
    p.add_argument("--count", action="store_true", help="print the count only")

    p = sub.add_parser("seq", help="extremal Matula number sequences")
    p.add_argument("which", choices=["q", "l"], help="q: caterpillar max, l: binary min")
    p.add_argument("--max", type=int, required=True, dest="k_max")

    p = sub.add_parser("primes", help="prime oracle queries")
    p.add_argument("query", choices=["nth", "index", "pi"])
    p.add_argument("argument", type=int)

    v = sub.add_parser("verify", help="re-check the extremal claims (exit 4 on failure)")
    vsub = v.add_subparsers(dest="verb", required=True)

    p = vsub.add_parser("lemma1", help="caterpillar product inequality instances")
    p.add_argument("--max", type=int, required=True, dest="k_max")

    p = vsub.add_parser("max-topological", help="caterpillar is the leaf-count maximum")
    p.add_argument("--leaves", type=int, required=True)

    p = vsub.add_parser("min-binary", help="balanced tree is the binary minimum")
    p.add_argument("--leaves", type=int, required=True)

    p = vsub.add_parser("gi-max", help="Gutman-Ivic tree is the vertex-count maximum")
    p.add_argument("--vertices", type=int, required=True)

    p = vsub.add_parser("prime-bounds", help="Robin / Rosser-Schoenfeld envelope")
    p.add_argument("--max-m", type=int, required=True)

    return parser


def _emit(args, obj, plain):
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(plain)


def _parse_tree_arg(text):
    return treetext.parse(text)


def _six_figures(x: float) -> str:
    return f"{x:.5e}"


def _cmd_encode(args, oracle):
    texts = []
    if args.tree == "-":
        texts = [line.strip() for line in sys.stdin if line.strip()]
    else:
        texts = [args.tree]
    for text in texts:
        n = encode(_parse_tree_arg(text), oracle)
        _emit(args, {"matula": str(n)}, str(n))
    return 0


def _cmd_decode(args, oracle):
    t = decode(args.number, oracle)
    if args.dot:
        out = treetext.to_dot(t)
        _emit(args, {"dot": out}, out.rstrip("\n"))
    else:
        text = treetext.serialize(t)
        _emit(args, {"tree": text}, text)
    return 0


def _cmd_params(args, oracle):
    raw = args.tree_or_number.strip()
    if raw.isdigit():
        t = decode(int(raw), oracle)
    else:
        t = _parse_tree_arg(raw)
    p = params(t)
    obj = {
        "vertices": p.vertices,
        "leaves": p.leaves,
        "height": p.height,
        "max_outdegree": p.max_outdegree,
        "outdegree_multiset": list(p.outdegree_multiset),
        "wiener": p.wiener,
    }
    plain = (
        f"vertices={p.vertices} leaves={p.leaves} height={p.height} "
        f"max_outdegree={p.max_outdegree} "
        f"outdegrees={','.join(map(str, p.outdegree_multiset))} "
        f"wiener={p.wiener}"
    )
    _emit(args, obj, plain)
    return 0


def _cmd_enumerate(args, oracle):
    tree_class = TreeClass(args.tree_class)
    if args.leaves is not None:
        spec = EnumSpec(tree_class, "leaves", args.leaves)
        cap = args.max_leaves
    else:
        spec = EnumSpec(tree_class, "vertices", args.vertices)
        cap = args.max_vertices
    if args.count:
        n = count_trees(spec, cap)
        _emit(args, {"count": n}, str(n))
        return 0
    for t in enumerate_trees(spec, cap):
        text = treetext.serialize(t)
        if args.with_matula:
            m = encode(t, oracle)
            _emit(args, {"tree": text, "matula": str(m)}, f"{text}\t{m}")
        else:
            _emit(args, {"tree": text}, text)
    return 0


def _cmd_seq(args, oracle):
    if args.which == "q":
        values = extremal.caterpillar_numbers(args.k_max, oracle)
    else:
        values = extremal.min_binary_numbers(args.k_max, oracle)
    for k, value in enumerate(values, start=1):
        _emit(args, {"k": k, "value": str(value)}, f"{k}\t{value}")
    return 0


def _cmd_primes(args, oracle):
    if args.query == "nth":
        result = oracle.nth_prime(args.argument)
    elif args.query == "index":
        result = oracle.prime_index(args.argument)
    else:
        result = oracle.prime_count(args.argument)
    _emit(args, {args.query: str(result)}, str(result))
    return 0


def _verify_lemma1(args, oracle):
    ok = True
    for rec in extremal.check_caterpillar_inequality(args.k_max, oracle):
        ok = ok and rec.holds
        status = "holds" if rec.holds else "VIOLATED"
        suffix = " (equality)" if rec.equality else ""
        _emit(
            args,
            {
                "k1": rec.k1,
                "k2": rec.k2,
                "lhs": str(rec.lhs),
                "rhs": str(rec.rhs),
                "holds": rec.holds,
                "equality": rec.equality,
            },
            f"({rec.k1},{rec.k2}) {rec.lhs} <= {rec.rhs} {status}{suffix}",
        )
    return 0 if ok else 4


def _verify_max_topological(args, oracle):
    n = args.leaves
    spec = EnumSpec(TreeClass.TOPOLOGICAL, "leaves", n)
    report = extremal.exhaustive_max(spec, oracle)
    expected_value = extremal.caterpillar_numbers(n, oracle)[-1]
    expected_tree = binary_caterpillar(n)
    ok = report.optimum == expected_value and report.witness == expected_tree
    _emit(
        args,
        {
            "leaves": n,
            "maximum": str(report.optimum),
            "witness": treetext.serialize(report.witness),
            "examined": report.examined,
            "ok": ok,
        },
        f"leaves={n} maximum={report.optimum} "
        f"witness={treetext.serialize(report.witness)} "
        f"examined={report.examined} {'ok' if ok else 'MISMATCH'}",
    )
    return 0 if ok else 4


def _verify_min_binary(args, oracle):
    k = args.leaves
    report = extremal.min_binary_bnb(k, oracle)
    expected_value = extremal.min_binary_numbers(k, oracle)[-1]
    expected_tree = extremal.min_binary_tree(k)
    ok = report.optimum == expected_value and report.witness == expected_tree
    _emit(
        args,
        {
            "leaves": k,
            "minimum": str(report.optimum),
            "witness": treetext.serialize(report.witness),
            "examined": report.examined,
            "pruned": report.pruned,
            "exhaustive": report.exhaustive,
            "ok": ok,
        },
        f"leaves={k} minimum={report.optimum} "
        f"witness={treetext.serialize(report.witness)} "
        f"examined={report.examined} pruned={report.pruned} "
        f"exhaustive={report.exhaustive} {'ok' if ok else 'MISMATCH'}",
    )
    return 0 if ok else 4


def _verify_gi_max(args, oracle):
    n = args.vertices
    spec = EnumSpec(TreeClass.ROOTED, "vertices", n)
    report = extremal.exhaustive_max(spec, oracle)
    expected_tree = extremal.gi_max_tree(n)
    ok = report.witness == expected_tree
    _emit(
        args,
        {
            "vertices": n,
            "maximum": str(report.optimum),
            "witness": treetext.serialize(report.witness),
            "examined": report.examined,
            "ok": ok,
        },
        f"vertices={n} maximum={report.optimum} "
        f"witness={treetext.serialize(report.witness)} "
        f"examined={report.examined} {'ok' if ok else 'MISMATCH'}",
    )
    return 0 if ok else 4


def _verify_prime_bounds(args, oracle):
    m_max = args.max_m
    if m_max < 2:
        raise DomainError(f"--max-m must be >= 2, got {m_max}")
    table = oracle.primes_up_to_index(m_max)
    failures = 0
    for m in range(2, m_max + 1):
        p = table[m - 1]
        if primes.robin_lower(m) > p:
            failures += 1
            _emit(
                args,
                {"m": m, "p": str(p), "bound": "lower", "ok": False},
                f"m={m} p={p} VIOLATES lower bound",
            )
        if m >= 20 and p > primes.rosser_schoenfeld_upper(m):
            failures += 1
            _emit(
                args,
                {"m": m, "p": str(p), "bound": "upper", "ok": False},
                f"m={m} p={p} VIOLATES upper bound",
            )
    lower_of_last = _six_figures(primes.robin_lower(m_max))
    upper_of_last = _six_figures(primes.rosser_schoenfeld_upper(max(m_max, 20)))
    _emit(
        args,
        {
            "checked_m": m_max,
            "failures": failures,
            "lower_at_max": lower_of_last,
            "upper_at_max": upper_of_last,
            "ok": failures == 0,
        },
        f"checked m=2..{m_max} failures={failures} "
        f"bounds_at_max=[{lower_of_last}, {upper_of_last}] "
        f"{'ok' if failures == 0 else 'FAILED'}",
    )
    return 0 if failures == 0 else 4


_COMMANDS = {
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "params": _cmd_params,
    "enumerate": _cmd_enumerate,
    "seq": _cmd_seq,
    "primes": _cmd_primes,
}

_VERIFIERS = {
    "lemma1": _verify_lemma1,
    "max-topological": _verify_max_topological,
    "min-binary": _verify_min_binary,
    "gi-max": _verify_gi_max,
    "prime-bounds": _verify_prime_bounds,
}


def run(argv=None) -> int:
    """Parse argv, execute, and return the exit code (0/2/3/4)."""
    parser = _build_parser()
    args = parser.parse_args(argv)

    previous_default = primes._default_oracle
    if args.prime_bound is not None:
        try:
            oracle = primes.PrimeOracle(limit_value=args.prime_bound)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        # Canonical ordering inside tree construction consults the shared
        # oracle, so the override must apply process-wide for this run.
        primes.set_default_oracle(oracle)
    else:
        oracle = primes.default_oracle()

    try:
        if args.command == "verify":
            return _VERIFIERS[args.verb](args, oracle)
        return _COMMANDS[args.command](args, oracle)
    except _RANGE_ERRORS as exc:
        detail = getattr(exc, "index", None)
        where = f" (offending index {detail})" if detail is not None else ""
        print(f"error: {exc}{where}", file=sys.stderr)
        return 3
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MatulaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        if args.prime_bound is not None:
            primes.set_default_oracle(previous_default)


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
