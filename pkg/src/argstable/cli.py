"""Command line front end.

    argstable solve      [--input PATH|-] [--format apx|tgf] [--engine E] [--json] [--cross-check]
    argstable check      [--input ...] [--format ...] NAME...
    argstable query      [--input ...] [--format ...] (--brave | --cautious) NAME
    argstable translate  [--input ...] [--format ...] TARGET [--emit asp|dimacs]
    argstable admissible [--input ...] [--format ...]

Exit status: 0 success or positive verdict, 1 input error, 2 exhaustive bound
exceeded, 3 negative verdict, 4 engine disagreement under --cross-check.
The ARGSTABLE_BOUND environment variable overrides the exhaustive bounds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .engines import (
    SolveReport,
    check_preferred_unsat,
    preferred_via_alpha,
    preferred_via_gamma,
    preferred_via_lambda,
    query,
)
from .errors import BoundExceededError, ParseError, UnknownArgumentError
from .framework import ArgumentationFramework, parse_apx, parse_tgf
from .logic import DEFAULT_MODEL_BOUND, export_dimacs
from .oracle import DEFAULT_SUBSET_BOUND, enumerate_admissible, preferred_oracle
from .translate import alpha, beta, gamma, lambda_, stable_fragment

_ENGINES = {
    "alpha": preferred_via_alpha,
    "gamma": preferred_via_gamma,
    "lambda": preferred_via_lambda,
}

_TARGETS = {
    "alpha": alpha,
    "beta": beta,
    "gamma": gamma,
    "lambda": lambda_,
    "stable-fragment": stable_fragment,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}argstable: error: {message}")


@dataclass
class RunConfig:
    input_path: str
    input_format: str
    model_bound: int
    subset_bound: int


def _build_parser() -> _Parser:
    parser = _Parser(prog="argstable", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", default="-", metavar="PATH",
                       help="framework file, or - for standard input (default)")
        p.add_argument("--format", default="apx", choices=["apx", "tgf"])

    p = sub.add_parser("solve", help="list the preferred extensions")
    common(p)
    p.add_argument("--engine", default="gamma",
                   choices=["alpha", "gamma", "lambda", "oracle"])
    p.add_argument("--json", action="store_true",
                   help="one JSON object per extension, with its witness model")
    p.add_argument("--cross-check", action="store_true",
                   help="run every engine and fail on disagreement")

    p = sub.add_parser("check", help="decide whether a set is a preferred extension")
    common(p)
    p.add_argument("members", nargs="*", metavar="NAME")

    p = sub.add_parser("query", help="brave or cautious acceptance of one argument")
    common(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--brave", action="store_true")
    mode.add_argument("--cautious", action="store_true")
    p.add_argument("argument", metavar="NAME")

    p = sub.add_parser("translate", help="emit a translation of the framework")
    common(p)
    p.add_argument("target", choices=sorted(_TARGETS))
    p.add_argument("--emit", default="asp", choices=["asp", "dimacs"])

    p = sub.add_parser("admissible", help="list every admissible set")
    common(p)
    return parser


def _config(ns) -> RunConfig:
    model_bound, subset_bound = DEFAULT_MODEL_BOUND, DEFAULT_SUBSET_BOUND
    raw = os.environ.get("ARGSTABLE_BOUND")
    if raw is not None:
        try:
            model_bound = subset_bound = int(raw)
        except ValueError:
            raise _UsageError(f"argstable: error: ARGSTABLE_BOUND is not an integer: {raw!r}")
    return RunConfig(ns.input, ns.format, model_bound, subset_bound)


def _load(config: RunConfig) -> ArgumentationFramework:
    if config.input_path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(config.input_path, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise _UsageError(f"argstable: error: cannot read {config.input_path}: {exc}")
    return parse_apx(text) if config.input_format == "apx" else parse_tgf(text)


def _format_set(s) -> str:
    return "{" + ",".join(sorted(s)) + "}"


def _run_engine(name: str, af: ArgumentationFramework, config: RunConfig) -> SolveReport:
    if name == "oracle":
        extensions = preferred_oracle(af, bound=config.subset_bound)
        return SolveReport("oracle", tuple(extensions), {})
    return _ENGINES[name](af, bound=config.model_bound)


def _cmd_solve(ns, af: ArgumentationFramework, config: RunConfig) -> int:
    if ns.cross_check:
        names = ["alpha", "gamma", "lambda", "oracle"]
        with ThreadPoolExecutor(max_workers=len(names)) as pool:
            reports = list(pool.map(lambda n: _run_engine(n, af, config), names))
        results = {r.engine: r.extensions for r in reports}
        if len(set(results.values())) != 1:
            for engine, extensions in results.items():
                print(
                    f"argstable: {engine}: {' '.join(_format_set(e) for e in extensions) or '(none)'}",
                    file=sys.stderr,
                )
            print("argstable: error: engines disagree", file=sys.stderr)
            return 4
        report = next(r for r in reports if r.engine == ns.engine)
    else:
        report = _run_engine(ns.engine, af, config)
    for extension in report.extensions:
        if ns.json:
            witness = report.witnesses.get(extension)
            print(json.dumps({
                "engine": report.engine,
                "extension": sorted(extension),
                "witness": sorted(witness) if witness is not None else None,
            }))
        else:
            print(_format_set(extension))
    return 0


def _cmd_check(ns, af: ArgumentationFramework, config: RunConfig) -> int:
    verdict = check_preferred_unsat(af, frozenset(ns.members), bound=config.model_bound)
    if verdict.holds:
        print("preferred")
        return 0
    if verdict.failure == "not-a-model":
        print("not preferred: the complement is not a model of the defeat theory")
    else:
        print(
            "not preferred: certificate formula is satisfiable;"
            f" counter-model {_format_set(verdict.counter_model)}"
        )
    return 3


def _cmd_query(ns, af: ArgumentationFramework, config: RunConfig) -> int:
    mode = "brave" if ns.brave else "cautious"
    verdict = query(af, ns.argument, mode, bound=config.model_bound)
    adverb = "bravely" if mode == "brave" else "cautiously"
    if verdict.evidence is not None:
        outcome = "true" if verdict.holds else "false"
        print(f"{ns.argument} is {adverb} {outcome},"
              f" evidenced by {_format_set(verdict.evidence)}")
    else:
        print(f"{ns.argument} is {adverb} {'true' if verdict.holds else 'false'}")
    return 0 if verdict.holds else 3


def _cmd_translate(ns, af: ArgumentationFramework, config: RunConfig) -> int:
    program = _TARGETS[ns.target](af)
    if ns.emit == "asp":
        sys.stdout.write(program.to_asp())
    else:
        text, _ = export_dimacs(program)
        sys.stdout.write(text)
    return 0


def _cmd_admissible(ns, af: ArgumentationFramework, config: RunConfig) -> int:
    for s in enumerate_admissible(af, bound=config.subset_bound):
        print(_format_set(s))
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "check": _cmd_check,
    "query": _cmd_query,
    "translate": _cmd_translate,
    "admissible": _cmd_admissible,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
        config = _config(ns)
        af = _load(config)
        return _COMMANDS[ns.command](ns, af, config)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (ParseError, UnknownArgumentError) as exc:
        print(f"argstable: error: {exc}", file=sys.stderr)
        return 1
    except BoundExceededError as exc:
        print(f"argstable: error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    raise SystemExit(main())
