"""Preferred extensions of argumentation frameworks via minimal and stable models."""

from .errors import BoundExceededError, ParseError, UnknownArgumentError
from .framework import ArgumentationFramework, parse_apx, parse_tgf
from .logic import (
    AtomMap,
    Clause,
    Literal,
    Program,
    entails,
    evaluate,
    export_dimacs,
    g_transform,
    gl_reduct,
    is_minimal_model_by_consequence,
    is_model,
    is_unsatisfiable,
    maximal_models,
    minimal_models,
    models,
    normalize,
    stable_models,
)
from .oracle import (
    defeated_arguments,
    enumerate_admissible,
    preferred_oracle,
    stable_oracle,
)
from .translate import (
    alpha,
    beta,
    compl,
    decode,
    defeat_atom,
    defeat_map,
    gamma,
    lambda_,
    stable_fragment,
)
from .engines import (
    PreferredCheck,
    QueryVerdict,
    SolveReport,
    check_preferred_consequence,
    check_preferred_unsat,
    preferred_via_alpha,
    preferred_via_gamma,
    preferred_via_lambda,
    query,
)

__all__ = [
    "ArgumentationFramework",
    "AtomMap",
    "BoundExceededError",
    "Clause",
    "Literal",
    "ParseError",
    "PreferredCheck",
    "Program",
    "QueryVerdict",
    "SolveReport",
    "UnknownArgumentError",
    "alpha",
    "beta",
    "check_preferred_consequence",
    "check_preferred_unsat",
    "compl",
    "decode",
    "defeat_atom",
    "defeat_map",
    "defeated_arguments",
    "entails",
    "enumerate_admissible",
    "evaluate",
    "export_dimacs",
    "g_transform",
    "gamma",
    "gl_reduct",
    "is_minimal_model_by_consequence",
    "is_model",
    "is_unsatisfiable",
    "lambda_",
    "maximal_models",
    "minimal_models",
    "models",
    "normalize",
    "parse_apx",
    "parse_tgf",
    "preferred_oracle",
    "preferred_via_alpha",
    "preferred_via_gamma",
    "preferred_via_lambda",
    "query",
    "stable_fragment",
    "stable_models",
    "stable_oracle",
]
