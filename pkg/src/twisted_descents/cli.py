"""Command-line interface.

Subcommands: ``conv``, ``comp``, ``coprod``, ``solomon``, ``young`` for
arithmetic, ``verify`` for the invariant suites.  Exit codes: 0 success,
1 verification failure, 2 usage or parse error, 3 size cap exceeded.

Caps may also be set through the environment (``TDA_MAX_N``,
``TDA_MAX_SUPPORT``, ``TDA_MAX_TERMS``); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .algebra import composition_product, convolution, coproduct
from .limits import MAX_TERMS, SizeLimitError
from .permutations import compose
from .solomon import DescentElement, solomon_compose, young_decompose
from .textio import (
    ParseError,
    element_to_json,
    parse,
    parse_composition,
    parse_permutation,
    render,
    render_composition,
    render_permutation,
    render_tensor,
    tensor_to_json,
)
from .verify import Config, SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_ENV = {"max_n": "TDA_MAX_N", "max_support": "TDA_MAX_SUPPORT", "max_terms": "TDA_MAX_TERMS"}


def _resolve_cap(args: argparse.Namespace, name: str) -> int | None:
    value = getattr(args, name, None)
    if value is not None:
        return value
    raw = os.environ.get(_ENV[name], "")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ParseError(f"environment {_ENV[name]}={raw!r} is not an integer", 0)
    return None


def _emit(args: argparse.Namespace, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _render_descent(d: DescentElement) -> str:
    parts = []
    for i, (c, coeff) in enumerate(d):
        mag = f"{abs(coeff)}*{render_composition(c)}"
        if i == 0:
            parts.append(("-" if coeff < 0 else "") + mag)
        else:
            parts.append(("- " if coeff < 0 else "+ ") + mag)
    return " ".join(parts) if parts else "0"


def cmd_conv(args) -> int:
    result = convolution(parse(args.a), parse(args.b))
    _emit(args, render(result), element_to_json(result))
    return EXIT_OK


def cmd_comp(args) -> int:
    result = composition_product(parse(args.a), parse(args.b))
    _emit(args, render(result), element_to_json(result))
    return EXIT_OK


def cmd_coprod(args) -> int:
    max_terms = _resolve_cap(args, "max_terms")
    result = coproduct(parse(args.a), MAX_TERMS if max_terms is None else max_terms)
    _emit(args, render_tensor(result, ascii_only=args.ascii), tensor_to_json(result))
    return EXIT_OK


def cmd_solomon(args) -> int:
    a = DescentElement({parse_composition(args.c1): 1})
    b = DescentElement({parse_composition(args.c2): 1})
    result = solomon_compose(a, b)
    obj = {"terms": [{"coeff": c, "parts": list(k)} for k, c in result]}
    _emit(args, _render_descent(result), obj)
    return EXIT_OK


def cmd_young(args) -> int:
    parts = parse_composition(args.partition)
    p = parse_permutation(args.perm)
    beta, tau = young_decompose(parts, p)
    if compose(beta, tau) != p:
        print(f"recomposition check failed: {beta} . {tau} != {p}", file=sys.stderr)
        return EXIT_VERIFY
    text = f"beta = {render_permutation(beta)}\nshuffle = {render_permutation(tau)}"
    _emit(args, text, {"beta": list(beta), "shuffle": list(tau)})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        names = ", ".join(list(SUITES) + ["all"])
        print(f"unknown suite {args.suite!r}; available: {names}", file=sys.stderr)
        return EXIT_USAGE
    cfg = Config(
        max_n=_resolve_cap(args, "max_n"),
        max_support=_resolve_cap(args, "max_support"),
        max_terms=_resolve_cap(args, "max_terms"),
        trials=args.trials,
        seed=args.seed,
    )
    results = run_suite(args.suite, cfg)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "results": [
                        {"suite": r.suite, "law": r.law, "ok": r.ok, "detail": r.detail}
                        for r in results
                    ]
                },
                sort_keys=True,
            )
        )
    else:
        for r in results:
            print(r.line())
        failures = sum(1 for r in results if not r.ok)
        total = len(results)
        print(f"{total - failures}/{total} laws hold")
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--ascii", action="store_true", help="avoid non-ASCII output")
    common.add_argument("--max-n", type=int, dest="max_n", help="degree cap for sweeps")
    common.add_argument(
        "--max-support", type=int, dest="max_support", help="oracle universe cap"
    )
    common.add_argument(
        "--max-terms", type=int, dest="max_terms", help="expansion size cap"
    )
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--trials", type=int, help="randomized trial count")

    parser = argparse.ArgumentParser(
        prog="twisted-descents",
        description="Exact products, coproducts, and verification for set compositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conv", parents=[common], help="convolution product of two elements")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=cmd_conv)

    p = sub.add_parser("comp", parents=[common], help="composition product of two elements")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=cmd_comp)

    p = sub.add_parser("coprod", parents=[common], help="coproduct of an element")
    p.add_argument("a")
    p.set_defaults(fn=cmd_coprod)

    p = sub.add_parser(
        "solomon", parents=[common], help="Solomon's rule on two integer compositions"
    )
    p.add_argument("c1")
    p.add_argument("c2")
    p.set_defaults(fn=cmd_solomon)

    p = sub.add_parser(
        "young", parents=[common], help="Young/shuffle factorization of a permutation"
    )
    p.add_argument("partition", help="block sizes, e.g. 2,1")
    p.add_argument("perm", help="one-line permutation, e.g. 3,1,2")
    p.set_defaults(fn=cmd_young)

    p = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p.add_argument("suite", help="suite name or 'all'")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
