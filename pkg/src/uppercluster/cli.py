"""Command-line front end: seed diagnostics, mutation, presentation runs,
fixture verification, and Laurent-phenomenon fuzzing.

Input formats (JSON):

* seed file:       {"n": int, "m": int, "matrix": [[int]] (n rows, m columns),
                    "names": [str]}
* generator file:  {"generators": [{"name": str, "expr": str}]}
* relations file:  {"relations": [str]}   -- each either "expr" or "lhs = rhs"

Expressions use the grammar of :mod:`uppercluster.expressions`.

Exit codes: 0 verified / success, 1 input error, 2 candidate or incomplete
(including Groebner step-budget overruns).  Reports on stdout are
byte-deterministic for identical inputs and flags; timing summaries go to
stderr.  The environment variable UPPERCLUSTER_GB_STEP_BUDGET bounds the
number of S-pair reductions of any single Groebner run.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .cluster import (
    ExchangeMatrix,
    LaurentViolationError,
    Seed,
    rank3_classification,
    totally_coprime_certificate,
)
from .expressions import ExpressionError, format_laurent, parse_expression, parse_relation
from .groebner import GBBudgetExceededError
from .orders import order_by_name
from .presentation import (
    GeneratorSet,
    GuessOutsideBoundsError,
    build_presentation,
    iterate,
    make_presentation,
    presentation_context,
    verify_paper_presentation,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCOMPLETE = 2


class InputError(Exception):
    """A problem with user-supplied files or arguments."""


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_seed(path: str) -> Seed:
    data = _load_json(path)
    try:
        n, m = int(data["n"]), int(data["m"])
        matrix = data["matrix"]
        names = data["names"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: seed files need n, m, matrix, names ({exc})") from exc
    if len(matrix) != n or any(len(row) != m for row in matrix):
        raise InputError(f"{path}: matrix must have {n} rows of {m} columns")
    if len(names) != n:
        raise InputError(f"{path}: expected {n} names")
    try:
        exchange = ExchangeMatrix.from_rows(matrix)
        return Seed.initial(exchange, [str(s) for s in names])
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_generators(path: str, seed: Seed) -> GeneratorSet:
    data = _load_json(path)
    entries = data.get("generators")
    if not isinstance(entries, list):
        raise InputError(f"{path}: expected a 'generators' list")
    extras = []
    for entry in entries:
        try:
            name, expr = str(entry["name"]), str(entry["expr"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"{path}: each generator needs name and expr") from exc
        try:
            extras.append((name, parse_expression(expr, seed.context)))
        except ExpressionError as exc:
            raise InputError(f"{path}: generator {name}: {exc}") from exc
    try:
        return GeneratorSet(seed.context, tuple(extras))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_relations(path: str, context) -> list:
    data = _load_json(path)
    entries = data.get("relations")
    if not isinstance(entries, list):
        raise InputError(f"{path}: expected a 'relations' list")
    out = []
    for idx, text in enumerate(entries):
        try:
            out.append(parse_relation(str(text), context))
        except ExpressionError as exc:
            raise InputError(f"{path}: relation {idx}: {exc}") from exc
    return out


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for key, value in payload.items():
        if isinstance(value, list):
            print(f"{key}:")
            for item in value:
                print(f"  {item}")
        elif isinstance(value, dict):
            print(f"{key}:")
            for k, v in value.items():
                print(f"  {k}: {v}")
        else:
            print(f"{key}: {value}")


def cmd_check(args) -> int:
    seed = load_seed(args.seed)
    matrix = seed.matrix
    report: dict = {
        "acyclic": matrix.is_acyclic(),
        "coprime": matrix.is_coprime(),
        "full_rank": matrix.is_full_rank(),
        "rank": matrix.rank(),
        "skew_symmetrizer": list(matrix.skew_symmetrizer()),
        "certificate": totally_coprime_certificate(matrix),
    }
    if matrix.mutable_count == 3 and matrix.size == 3:
        p = matrix.principal
        if all(p[i][j] == -p[j][i] for i in range(3) for j in range(3)):
            a, b, c = abs(p[1][0]), abs(p[2][1]), abs(p[0][2])
            if min(a, b, c) > 0:
                report["rank3_class"] = rank3_classification(a, b, c)
    _emit(report, args.json)
    return EXIT_OK


def cmd_mutate(args) -> int:
    seed = load_seed(args.seed)
    try:
        word = [int(tok) - 1 for tok in args.word.split()]
    except ValueError:
        raise InputError(f"mutation word must be 1-based indices, got {args.word!r}")
    for k in word:
        if not 0 <= k < seed.mutable_count:
            raise InputError(f"index {k + 1} out of range (m = {seed.mutable_count})")
    mutated = seed.apply_word(word)
    payload = {
        "matrix": [list(row) for row in mutated.matrix.rows],
        "labels": list(mutated.labels),
        "cluster": [f"{label} = {format_laurent(entry)}"
                    for label, entry in zip(mutated.labels, mutated.cluster)],
    }
    _emit(payload, args.json)
    return EXIT_OK


def cmd_laurent_fuzz(args) -> int:
    seed = load_seed(args.seed)
    rng = random.Random(args.rng_seed)
    violations = 0
    for _ in range(args.trials):
        word = [rng.randrange(seed.mutable_count)
                for _ in range(rng.randint(1, args.max_len))]
        try:
            seed.apply_word(word)
        except LaurentViolationError:
            violations += 1
    payload = {
        "trials": args.trials,
        "max_len": args.max_len,
        "rng_seed": args.rng_seed,
        "violations": violations,
    }
    _emit(payload, args.json)
    return EXIT_OK if violations == 0 else EXIT_INCOMPLETE


def _certificate_or_die(seed: Seed, assume: bool) -> None:
    if assume:
        return
    if totally_coprime_certificate(seed.matrix) == "unknown":
        raise InputError(
            "no total-coprimality certificate (matrix is neither full rank nor "
            "certified by the rank-3 criterion); pass --assume-totally-coprime "
            "to proceed with conditional results")


def cmd_present(args) -> int:
    seed = load_seed(args.seed)
    order = order_by_name(args.order)
    _certificate_or_die(seed, args.assume_totally_coprime)
    gens = load_generators(args.generators, seed) if args.generators \
        else GeneratorSet.lower_bound(seed)
    started = time.monotonic()
    if args.max_iters == 0:
        pr = build_presentation(seed, gens, order)
        presentation = make_presentation(pr, "candidate")
        payload = presentation.to_dict()
        payload["iteration"] = {"steps": [], "pruned": []}
        _emit(payload, args.json)
        print(f"elapsed: {time.monotonic() - started:.2f}s", file=sys.stderr)
        return EXIT_INCOMPLETE
    try:
        presentation, report = iterate(
            seed, gens, max_iters=args.max_iters, adopt_cap=args.adopt_cap,
            order=order, assume_totally_coprime=args.assume_totally_coprime)
    except GuessOutsideBoundsError as exc:
        raise InputError(str(exc)) from exc
    payload = presentation.to_dict()
    payload["iteration"] = report.to_dict()
    _emit(payload, args.json)
    print(f"elapsed: {time.monotonic() - started:.2f}s", file=sys.stderr)
    return EXIT_OK if presentation.status == "verified_equal_U" else EXIT_INCOMPLETE


def cmd_verify(args) -> int:
    seed = load_seed(args.seed)
    order = order_by_name(args.order)
    _certificate_or_die(seed, args.assume_totally_coprime)
    gens = load_generators(args.generators, seed)
    context = presentation_context(seed, gens)
    relations = load_relations(args.relations, context)
    started = time.monotonic()
    report = verify_paper_presentation(
        seed, gens, relations, order,
        assume_totally_coprime=args.assume_totally_coprime)
    _emit(report.to_dict(), args.json)
    print(f"elapsed: {time.monotonic() - started:.2f}s", file=sys.stderr)
    return EXIT_OK if report.all_passed else EXIT_INCOMPLETE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uppercluster",
        description="Presentations and diagnostics for upper cluster algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_order: bool = False):
        p.add_argument("--json", action="store_true",
                       help="emit a JSON report instead of text")
        if with_order:
            p.add_argument("--order", choices=["degrevlex", "lex"],
                           default="degrevlex", help="monomial order for plain bases")
            p.add_argument("--assume-totally-coprime", action="store_true",
                           help="proceed without a total-coprimality certificate "
                            "(results are conditional)")

    p = sub.add_parser("check", help="seed diagnostics")
    p.add_argument("seed")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mutate", help="apply a mutation word and print the seed")
    p.add_argument("seed")
    p.add_argument("word", help="whitespace-separated 1-based indices, e.g. '1 2 1'")
    common(p)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("laurent_fuzz",
                       help="randomized Laurent-phenomenon check (violations = bugs)")
    p.add_argument("seed")
    p.add_argument("--max-len", type=int, default=6)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--rng-seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_laurent_fuzz)

    p = sub.add_parser("present",
                       help="iterate the saturation criterion to a presentation")
    p.add_argument("seed")
    p.add_argument("generators", nargs="?", default=None,
                   help="generator file; defaults to the lower bound")
    p.add_argument("--max-iters", type=int, default=8)
    p.add_argument("--adopt-cap", type=int, default=3,
                   help="new elements adopted per iteration")
    common(p, with_order=True)
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("verify",
                       help="verify a written-out presentation (four checks)")
    p.add_argument("seed")
    p.add_argument("generators")
    p.add_argument("relations")
    common(p, with_order=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GBBudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE


if __name__ == "__main__":
    sys.exit(main())
