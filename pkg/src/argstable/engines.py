"""Preferred-extension engines and certificate checkers built on the translations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .errors import UnknownArgumentError
from .framework import ArgumentationFramework
from .logic import (
    DEFAULT_MODEL_BOUND,
    Clause,
    Interpretation,
    Literal,
    Program,
    entails,
    interpretation_key,
    is_model,
    minimal_models,
    stable_models,
)
from .translate import alpha, compl, decode, defeat_atom, gamma, lambda_

Extension = frozenset[str]


@dataclass(frozen=True)
class SolveReport:
    """Extensions found by one engine, with the model that produced each."""

    engine: str
    extensions: tuple[Extension, ...]
    witnesses: Mapping[Extension, Interpretation]

    def __post_init__(self):
        object.__setattr__(self, "witnesses", dict(self.witnesses))


class PreferredCheck(NamedTuple):
    holds: bool
    counter_model: Interpretation | None
    failure: str | None  # "not-a-model" or "satisfiable" when holds is False


@dataclass(frozen=True)
class QueryVerdict:
    mode: str
    holds: bool
    evidence: Interpretation | None


def _report(engine: str, af: ArgumentationFramework, pairs) -> SolveReport:
    witnesses = {extension: model for extension, model in pairs}
    extensions = tuple(sorted(witnesses, key=interpretation_key))
    return SolveReport(engine, extensions, witnesses)


def preferred_via_alpha(
    af: ArgumentationFramework, bound: int = DEFAULT_MODEL_BOUND
) -> SolveReport:
    """Preferred extensions read off the minimal models of the defeat theory."""
    found = minimal_models(alpha(af), bound=bound)
    return _report("alpha", af, ((decode(af, m), m) for m in found))


def preferred_via_gamma(
    af: ArgumentationFramework, bound: int = DEFAULT_MODEL_BOUND
) -> SolveReport:
    """Preferred extensions read off the stable models of the disjunctive program."""
    found = stable_models(gamma(af), bound=bound)
    return _report("gamma", af, ((decode(af, m), m) for m in found))


def preferred_via_lambda(
    af: ArgumentationFramework, bound: int = DEFAULT_MODEL_BOUND
) -> SolveReport:
    """Preferred extensions listed directly inside the stable models of the
    program with acceptance rules."""
    found = stable_models(lambda_(af), bound=bound)
    return _report("lambda", af, ((m & af.arguments, m) for m in found))


def check_preferred_unsat(
    af: ArgumentationFramework,
    members,
    bound: int = DEFAULT_MODEL_BOUND,
) -> PreferredCheck:
    """Certificate check: the complement image must model the defeat theory,
    and the theory plus the denial of every member plus the negated complement
    conjunction must be unsatisfiable.  On failure the counter-model is the
    lexicographically first minimal satisfying model."""
    s = frozenset(members)
    theory = alpha(af)
    complement = compl(af, s)
    if not is_model(theory, complement):
        return PreferredCheck(False, None, "not-a-model")
    if not complement:
        # Negating an empty conjunction gives falsum, so unsatisfiability
        # holds outright and the verdict is the model-hood check above.
        return PreferredCheck(True, None, None)
    clauses = set(theory.clauses)
    clauses.update(
        Clause(head=(Literal(defeat_atom(x), 1),)) for x in sorted(s)
    )
    clauses.add(Clause(head=tuple(Literal(d, 1) for d in sorted(complement))))
    certificate = Program(frozenset(clauses), theory.signature)
    satisfying = minimal_models(certificate, bound=bound)
    if not satisfying:
        return PreferredCheck(True, None, None)
    return PreferredCheck(False, satisfying[0], "satisfiable")


def check_preferred_consequence(
    af: ArgumentationFramework,
    members,
    bound: int = DEFAULT_MODEL_BOUND,
) -> bool:
    """Minimality as consequence: the complement image models the defeat
    theory, and the theory plus the denial of every member entails each
    complement atom."""
    s = frozenset(members)
    theory = alpha(af)
    complement = compl(af, s)
    if not is_model(theory, complement):
        return False
    clauses = set(theory.clauses)
    clauses.update(
        Clause(head=(Literal(defeat_atom(x), 1),)) for x in sorted(s)
    )
    strengthened = Program(frozenset(clauses), theory.signature)
    goal = [Clause(head=(Literal(d),)) for d in sorted(complement)]
    return entails(strengthened, goal, bound=bound)


def query(
    af: ArgumentationFramework,
    argument: str,
    mode: str,
    bound: int = DEFAULT_MODEL_BOUND,
) -> QueryVerdict:
    """Brave/cautious membership over the preferred extensions, evidenced by
    the lexicographically first qualifying stable model."""
    if argument not in af.arguments:
        raise UnknownArgumentError(f"unknown argument: {argument!r}")
    found = stable_models(lambda_(af), bound=bound)
    found.sort(key=interpretation_key)
    if mode == "brave":
        hits = [m for m in found if argument in m]
        return QueryVerdict("brave", bool(hits), hits[0] if hits else None)
    if mode == "cautious":
        misses = [m for m in found if argument not in m]
        return QueryVerdict("cautious", not misses, misses[0] if misses else None)
    raise ValueError(f"unknown query mode: {mode!r}")
