"""Shared fixtures: golden frameworks, expected clause sets, random generators
and the brute-force reference computations the fast paths are tested against."""

import string
from itertools import combinations

from argstable import ArgumentationFramework, Clause, Literal, Program, gl_reduct, models

# a -> b -> c: the smallest framework where defence matters.
CHAIN = ArgumentationFramework({"a", "b", "c"}, {("a", "b"), ("b", "c")})
# A mutual attack feeding an odd cycle; preferred extensions {a} and {b,d}.
KNOT = ArgumentationFramework(
    {"a", "b", "c", "d", "e"},
    {("a", "b"), ("b", "a"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "c")},
)
SELF_ATTACK = ArgumentationFramework({"a"}, {("a", "a")})
EMPTY = ArgumentationFramework(frozenset(), frozenset())
NO_ATTACKS = ArgumentationFramework({"a", "b"}, frozenset())

CHAIN_ALPHA = frozenset({
    Clause(head=("d(b)",), body=(Literal("d(a)", 1),)),
    Clause(head=("d(b)",)),
    Clause(head=("d(c)",), body=(Literal("d(b)", 1),)),
    Clause(head=("d(c)",), body=("d(a)",)),
})

CHAIN_BETA = frozenset({
    Clause(head=(Literal("a", 1),), body=("b",)),
    Clause(head=(), body=("b",)),
    Clause(head=(Literal("b", 1),), body=("c",)),
    Clause(head=("a",), body=("c",)),
})

KNOT_GAMMA = frozenset({
    Clause(head=("d(a)", "d(b)")),
    Clause(head=("d(a)",), body=("d(a)",)),
    Clause(head=("d(b)",), body=("d(b)",)),
    Clause(head=("d(b)", "d(c)")),
    Clause(head=("d(c)",), body=("d(a)",)),
    Clause(head=("d(c)", "d(e)")),
    Clause(head=("d(c)",), body=("d(d)",)),
    Clause(head=("d(c)", "d(d)")),
    Clause(head=("d(d)",), body=("d(b)", "d(e)")),
    Clause(head=("d(d)", "d(e)")),
    Clause(head=("d(e)",), body=("d(c)",)),
})

KNOT_GAMMA_STABLE = [
    frozenset({"d(a)", "d(c)", "d(e)"}),
    frozenset({"d(b)", "d(c)", "d(d)", "d(e)"}),
]

KNOT_LAMBDA_STABLE = [
    frozenset({"a", "d(b)", "d(c)", "d(d)", "d(e)"}),
    frozenset({"b", "d", "d(a)", "d(c)", "d(e)"}),
]

FOUR_RULE_PROGRAM = Program.of(
    [
        Clause(head=("b",), body=(Literal("a", 1),)),
        Clause(head=("b",)),
        Clause(head=("c",), body=(Literal("b", 1),)),
        Clause(head=("c",), body=("a",)),
    ],
    signature={"a", "b", "c"},
)

FOUR_RULE_REDUCT = frozenset({
    Clause(head=("b",)),
    Clause(head=("c",), body=("a",)),
})


def random_framework(rng, max_args=7, density=(0.1, 0.9)):
    n = rng.randint(1, max_args)
    names = list(string.ascii_lowercase[:n])
    p = rng.uniform(*density)
    attacks = frozenset(
        (x, y) for x in names for y in names if rng.random() < p
    )
    return ArgumentationFramework(frozenset(names), attacks)


def random_program(rng, max_atoms=8, max_clauses=8, negation=True):
    """A general program over p0..pk, with the whole atom pool declared as the
    signature whether or not every atom occurs."""
    n_atoms = rng.randint(1, max_atoms)
    atoms = [f"p{i}" for i in range(n_atoms)]
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        m = rng.randint(0, 2)
        n = rng.randint(0, 3)
        if m + n == 0:
            m = 1
        head = tuple(Literal(rng.choice(atoms)) for _ in range(m))
        body = tuple(
            Literal(rng.choice(atoms), rng.randint(0, 1) if negation else 0)
            for _ in range(n)
        )
        clauses.append(Clause(head, body))
    return Program.of(clauses, signature=atoms)


def subsets_of(items):
    pool = sorted(items)
    for size in range(len(pool) + 1):
        for combo in combinations(pool, size):
            yield frozenset(combo)


def brute_minimal(model_list):
    return sorted(
        (m for m in model_list if not any(o < m for o in model_list)),
        key=lambda s: tuple(sorted(s)),
    )


def brute_maximal(model_list):
    return sorted(
        (m for m in model_list if not any(o > m for o in model_list)),
        key=lambda s: tuple(sorted(s)),
    )


def brute_stable(program, bound=24):
    """Stable models straight from the definition, over every subset."""
    found = []
    for s in subsets_of(program.signature):
        reduct_models = models(gl_reduct(program, s), bound=bound)
        if s in reduct_models and not any(o < s for o in reduct_models):
            found.append(s)
    return sorted(found, key=lambda x: tuple(sorted(x)))
