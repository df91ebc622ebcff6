"""Propositional clauses, interpretations and model enumeration.

A clause is a disjunction of head literals implied by a conjunction of body
literals; an empty head reads as falsum (a constraint) and an empty body as
verum (a fact).  Literals carry a negation depth instead of a boolean so that
rewriting passes can introduce double negation without simplifying it away;
cancellation happens only in the separate `normalize` pass.

Interpretations are plain frozensets of true atoms, judged against a program's
declared signature, which may be larger than the set of atoms that occur in
its clauses.  Exhaustive operations refuse signatures beyond `bound`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import BoundExceededError

DEFAULT_MODEL_BOUND = 24

Interpretation = frozenset[str]


@dataclass(frozen=True, order=True)
class Literal:
    atom: str
    neg: int = 0

    def __post_init__(self):
        if not isinstance(self.atom, str) or not self.atom:
            raise ValueError(f"invalid atom: {self.atom!r}")
        if self.neg < 0:
            raise ValueError("negation depth must be non-negative")

    def negate(self) -> "Literal":
        return Literal(self.atom, self.neg + 1)

    def simplified(self) -> "Literal":
        """Cancel double negation down to depth 0 or 1."""
        return Literal(self.atom, self.neg % 2)

    @property
    def positive(self) -> bool:
        return self.neg % 2 == 0

    def __str__(self) -> str:
        return "not " * self.neg + self.atom


def _as_literal(value) -> Literal:
    if isinstance(value, Literal):
        return value
    if isinstance(value, str):
        return Literal(value)
    raise TypeError(f"expected Literal or atom name, got {value!r}")


@dataclass(frozen=True, order=True)
class Clause:
    """`h1 v ... v hm :- l1, ..., ln` with m + n > 0.

    Plain general clauses keep heads at negation depth 0 and bodies at depth
    at most 1; transformation passes may build clauses outside that shape.
    """

    head: tuple[Literal, ...] = ()
    body: tuple[Literal, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(_as_literal(h) for h in self.head))
        object.__setattr__(self, "body", tuple(_as_literal(b) for b in self.body))
        if not self.head and not self.body:
            raise ValueError("a clause needs at least one head or body literal")

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_fact(self) -> bool:
        return not self.body

    def is_general(self) -> bool:
        return all(h.neg == 0 for h in self.head) and all(b.neg <= 1 for b in self.body)

    def is_positive(self) -> bool:
        return self.is_general() and all(b.neg == 0 for b in self.body)

    def atoms(self) -> frozenset[str]:
        return frozenset(l.atom for l in self.head + self.body)

    def __str__(self) -> str:
        head_text = " v ".join(str(h) for h in self.head)
        body_text = ", ".join(str(b) for b in self.body)
        if not self.head:
            return f":- {body_text}."
        if not self.body:
            return f"{head_text}."
        return f"{head_text} :- {body_text}."


@dataclass(frozen=True)
class Program:
    """A finite clause set with an explicit signature."""

    clauses: frozenset[Clause]
    signature: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "clauses", frozenset(self.clauses))
        object.__setattr__(self, "signature", frozenset(self.signature))
        stray = self.occurring_atoms() - self.signature
        if stray:
            raise ValueError(f"clause atoms outside the signature: {sorted(stray)}")

    @classmethod
    def of(cls, clauses: Iterable[Clause], signature: Iterable[str] | None = None) -> "Program":
        clause_set = frozenset(clauses)
        occurring = frozenset(a for c in clause_set for a in c.atoms())
        sig = occurring if signature is None else frozenset(signature)
        return cls(clause_set, sig)

    def occurring_atoms(self) -> frozenset[str]:
        return frozenset(a for c in self.clauses for a in c.atoms())

    def sorted_clauses(self) -> list[Clause]:
        return sorted(self.clauses)

    def is_general(self) -> bool:
        return all(c.is_general() for c in self.clauses)

    def is_positive(self) -> bool:
        return all(c.is_positive() for c in self.clauses)

    def to_asp(self) -> str:
        """One clause per line, canonical order, `not` for negation."""
        return "".join(str(c) + "\n" for c in self.sorted_clauses())

    def __str__(self) -> str:
        return self.to_asp()


def literal_value(literal: Literal, interpretation: Interpretation) -> bool:
    return (literal.atom in interpretation) == (literal.neg % 2 == 0)


def evaluate(
    interpretation: Interpretation,
    clause: Clause,
    signature: Iterable[str] | None = None,
) -> bool:
    """Clause truth under an interpretation: body all true and head all false
    is the only falsifying case."""
    if signature is not None:
        stray = clause.atoms() - frozenset(signature)
        if stray:
            raise ValueError(f"clause atoms outside the signature: {sorted(stray)}")
    if not all(literal_value(b, interpretation) for b in clause.body):
        return True
    return any(literal_value(h, interpretation) for h in clause.head)


def is_model(program: Program, interpretation: Interpretation) -> bool:
    interp = frozenset(interpretation)
    stray = interp - program.signature
    if stray:
        raise ValueError(f"interpretation atoms outside the signature: {sorted(stray)}")
    return all(evaluate(interp, c) for c in program.clauses)


def _check_bound(size: int, bound: int, what: str) -> None:
    if size > bound:
        raise BoundExceededError(f"{what} has {size} atoms, exceeding the bound of {bound}")


def interpretation_key(s: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(s))


def _canonical(sets: Iterable[frozenset[str]]) -> list[frozenset[str]]:
    return sorted(sets, key=interpretation_key)


def models(program: Program, bound: int = DEFAULT_MODEL_BOUND) -> list[Interpretation]:
    """All interpretations over the signature satisfying every clause.

    Exhaustive by design; this is the reference the cleverer enumerators are
    tested against.
    """
    atoms = sorted(program.signature)
    _check_bound(len(atoms), bound, "program signature")
    clauses = program.sorted_clauses()
    found = []
    for bits in range(1 << len(atoms)):
        interp = frozenset(a for i, a in enumerate(atoms) if bits >> i & 1)
        if all(evaluate(interp, c) for c in clauses):
            found.append(interp)
    return _canonical(found)


class _CnfSolver:
    """Tiny DPLL over the integer CNF image of a program.

    Each general clause becomes one CNF clause: head literals keep their
    parity, body literals flip.  Extra integer clauses can be layered on a
    solve call; that is how the shrink/grow/block loops are expressed.
    """

    def __init__(self, program: Program):
        self.atoms = sorted(program.signature)
        self.index = {a: i + 1 for i, a in enumerate(self.atoms)}
        self.base = [self.clause_ints(c) for c in program.sorted_clauses()]

    def clause_ints(self, clause: Clause) -> list[int]:
        lits: list[int] = []
        for h in clause.head:
            v = self.index[h.atom]
            lits.append(v if h.neg % 2 == 0 else -v)
        for b in clause.body:
            v = self.index[b.atom]
            lits.append(-v if b.neg % 2 == 0 else v)
        seen: list[int] = []
        for lit in lits:
            if lit not in seen:
                seen.append(lit)
        return seen

    def solve(
        self, extra: Sequence[Sequence[int]] = (), default: bool = False
    ) -> Interpretation | None:
        cnf = self.base + [list(c) for c in extra]
        assignment = _dpll(cnf, {})
        if assignment is None:
            return None
        return frozenset(
            a for a in self.atoms if assignment.get(self.index[a], default)
        )

    def not_superset_of(self, s: Interpretation) -> list[int]:
        return [-self.index[a] for a in sorted(s)]

    def not_subset_of(self, s: Interpretation) -> list[int]:
        return [self.index[a] for a in sorted(set(self.atoms) - set(s))]

    def strictly_below(self, s: Interpretation) -> list[list[int]]:
        outside = [[-self.index[a]] for a in self.atoms if a not in s]
        return outside + [self.not_superset_of(s)]

    def strictly_above(self, s: Interpretation) -> list[list[int]]:
        inside = [[self.index[a]] for a in sorted(s)]
        return inside + [self.not_subset_of(s)]


def _dpll(cnf: list[list[int]], assignment: dict[int, bool]) -> dict[int, bool] | None:
    while True:
        unit = None
        for clause in cnf:
            satisfied = False
            unassigned: list[int] = []
            for lit in clause:
                value = assignment.get(abs(lit))
                if value is None:
                    unassigned.append(lit)
                elif (lit > 0) == value:
                    satisfied = True
                    break
            if satisfied:
                continue
            if not unassigned:
                return None
            if len(unassigned) == 1:
                unit = unassigned[0]
                break
        if unit is None:
            break
        assignment[abs(unit)] = unit > 0

    branch_var = None
    for clause in cnf:
        satisfied = False
        candidate = None
        for lit in clause:
            value = assignment.get(abs(lit))
            if value is None:
                if candidate is None:
                    candidate = abs(lit)
            elif (lit > 0) == value:
                satisfied = True
                break
        if not satisfied and candidate is not None:
            branch_var = candidate
            break
    if branch_var is None:
        return assignment
    for value in (True, False):
        trial = dict(assignment)
        trial[branch_var] = value
        result = _dpll(cnf, trial)
        if result is not None:
            return result
    return None


def minimal_models(program: Program, bound: int = DEFAULT_MODEL_BOUND) -> list[Interpretation]:
    """Subset-minimal models over the signature.

    Find a model, shrink it by re-solving under strict-subset constraints,
    emit, then block every superset of the emitted model and repeat.
    """
    _check_bound(len(program.signature), bound, "program signature")
    solver = _CnfSolver(program)
    blocked: list[list[int]] = []
    found: list[Interpretation] = []
    while True:
        model = solver.solve(blocked, default=False)
        if model is None:
            break
        while True:
            smaller = solver.solve(blocked + solver.strictly_below(model), default=False)
            if smaller is None:
                break
            model = smaller
        found.append(model)
        blocked.append(solver.not_superset_of(model))
    return _canonical(found)


def maximal_models(program: Program, bound: int = DEFAULT_MODEL_BOUND) -> list[Interpretation]:
    """Subset-maximal models over the signature; the dual grow/block loop."""
    _check_bound(len(program.signature), bound, "program signature")
    solver = _CnfSolver(program)
    blocked: list[list[int]] = []
    found: list[Interpretation] = []
    while True:
        model = solver.solve(blocked, default=True)
        if model is None:
            break
        while True:
            larger = solver.solve(blocked + solver.strictly_above(model), default=True)
            if larger is None:
                break
            model = larger
        found.append(model)
        blocked.append(solver.not_subset_of(model))
    return _canonical(found)


def is_unsatisfiable(program: Program, bound: int = DEFAULT_MODEL_BOUND) -> bool:
    _check_bound(len(program.signature), bound, "program signature")
    return _CnfSolver(program).solve() is None


def _negation_clauses(clause: Clause) -> list[Clause]:
    # not (H :- B) is equivalent to: every body literal holds, every head literal fails
    asserted = [Clause(head=(b.simplified(),)) for b in clause.body]
    denied = [Clause(head=(h.negate().simplified(),)) for h in clause.head]
    return asserted + denied


def entails(
    program: Program,
    conjunction: Clause | Iterable[Clause],
    bound: int = DEFAULT_MODEL_BOUND,
) -> bool:
    """Logical consequence of a conjunction of clauses, one UNSAT query each."""
    goals = [conjunction] if isinstance(conjunction, Clause) else list(conjunction)
    for goal in goals:
        stray = goal.atoms() - program.signature
        if stray:
            raise ValueError(f"goal atoms outside the signature: {sorted(stray)}")
        refutation = Program(
            program.clauses | frozenset(_negation_clauses(goal)), program.signature
        )
        if not is_unsatisfiable(refutation, bound=bound):
            return False
    return True


def gl_reduct(program: Program, s: Interpretation) -> Program:
    """Reduct of a general program with respect to a set of atoms: drop every
    clause whose body negates a member of `s`, strip the remaining negated
    body literals."""
    if not program.is_general():
        raise ValueError("reduct requires a general program")
    stray = frozenset(s) - program.signature
    if stray:
        raise ValueError(f"reduct set atoms outside the signature: {sorted(stray)}")
    reduced: list[Clause] = []
    for clause in program.sorted_clauses():
        if any(b.neg == 1 and b.atom in s for b in clause.body):
            continue
        positive_body = tuple(b for b in clause.body if b.neg == 0)
        if not clause.head and not positive_body:
            # A constraint stripped of its whole body is falsum, which the
            # clause type cannot hold; keep an equivalent inconsistent pair.
            atom = clause.body[0].atom
            reduced.append(Clause(head=(Literal(atom),)))
            reduced.append(Clause(body=(Literal(atom),)))
            continue
        reduced.append(Clause(clause.head, positive_body))
    result = Program(frozenset(reduced), program.signature)
    assert all(
        l.neg == 0 for c in result.clauses for l in c.head + c.body
    ), "reduct must be negation-free"
    return result


def _has_model_strictly_below(program: Program, s: Interpretation) -> bool:
    solver = _CnfSolver(program)
    return solver.solve(solver.strictly_below(s), default=False) is not None


def stable_models(program: Program, bound: int = DEFAULT_MODEL_BOUND) -> list[Interpretation]:
    """All sets that are minimal models of their own reduct.

    Candidates are drawn from the classical minimal models: any stable model
    is one, since a smaller classical model would also model the reduct.  The
    reduct condition is then checked per candidate.
    """
    if not program.is_general():
        raise ValueError("stable models require a general program")
    found = []
    for candidate in minimal_models(program, bound=bound):
        reduct = gl_reduct(program, candidate)
        if is_model(reduct, candidate) and not _has_model_strictly_below(reduct, candidate):
            found.append(candidate)
    return found


def is_minimal_model_by_consequence(
    program: Program, m: Interpretation, bound: int = DEFAULT_MODEL_BOUND
) -> bool:
    """Minimality via entailment: m models p, and p plus the negation of every
    atom outside m entails every atom of m."""
    interp = frozenset(m)
    if not is_model(program, interp):
        return False
    denials = frozenset(
        Clause(head=(Literal(a, 1),)) for a in program.signature - interp
    )
    strengthened = Program(program.clauses | denials, program.signature)
    goal = [Clause(head=(Literal(a),)) for a in sorted(interp)]
    return entails(strengthened, goal, bound=bound)


@dataclass(frozen=True)
class AtomMap:
    """A bijection between source and target atoms, with an optional dense
    1-based variable numbering used by the DIMACS export."""

    forward: Mapping[str, str] = field(default_factory=dict)
    var_index: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "forward", dict(self.forward))
        object.__setattr__(self, "var_index", dict(self.var_index))
        if len(set(self.forward.values())) != len(self.forward):
            raise ValueError("atom map is not a bijection")
        if self.var_index:
            indices = sorted(self.var_index.values())
            if indices != list(range(1, len(indices) + 1)):
                raise ValueError("variable indices must be dense from 1")
        object.__setattr__(
            self, "_inverse", {v: k for k, v in self.forward.items()}
        )

    def apply(self, atom: str) -> str:
        return self.forward[atom]

    def invert(self, atom: str) -> str:
        return self._inverse[atom]

    def index_of(self, atom: str) -> int:
        return self.var_index[atom]


def g_transform(program: Program, amap: AtomMap) -> Program:
    """Replace every atom occurrence x by `not f(x)`, leaving any double
    negation in place; `normalize` is the separate simplification pass."""
    missing = program.signature - amap.forward.keys()
    if missing:
        raise ValueError(f"atom map does not cover: {sorted(missing)}")
    image = frozenset(amap.forward[a] for a in program.signature)
    if image & program.signature:
        raise ValueError("atom map image must be disjoint from the signature")
    mapped = frozenset(
        Clause(
            head=tuple(Literal(amap.forward[h.atom], h.neg + 1) for h in c.head),
            body=tuple(Literal(amap.forward[b.atom], b.neg + 1) for b in c.body),
        )
        for c in program.clauses
    )
    return Program(mapped, image)


def normalize(program: Program) -> Program:
    """Contrapose every clause and cancel double negation.

    The head becomes the negated body and vice versa, with an empty side
    reading as the negation of verum or falsum, so facts turn into constraints
    and stripped heads into facts.
    """
    rewritten = set()
    for clause in program.clauses:
        new_head = sorted({b.negate().simplified() for b in clause.body})
        new_body = sorted({h.negate().simplified() for h in clause.head})
        rewritten.add(Clause(tuple(new_head), tuple(new_body)))
    return Program(frozenset(rewritten), program.signature)


def _dimacs_name(atom: str) -> str:
    return atom.replace("(", "_").replace(")", "")


def export_dimacs(program: Program) -> tuple[str, AtomMap]:
    """CNF text for the program: comment lines naming the variables, a
    `p cnf V C` header, then one clause per line in canonical order."""
    atoms = sorted(program.signature)
    index = {a: i + 1 for i, a in enumerate(atoms)}
    amap = AtomMap(var_index=index)
    solver_lines = []
    clauses = program.sorted_clauses()
    for clause in clauses:
        lits: list[int] = []
        for h in clause.head:
            v = index[h.atom]
            lits.append(v if h.neg % 2 == 0 else -v)
        for b in clause.body:
            v = index[b.atom]
            lits.append(-v if b.neg % 2 == 0 else v)
        deduped: list[int] = []
        for lit in lits:
            if lit not in deduped:
                deduped.append(lit)
        solver_lines.append(" ".join(str(l) for l in deduped) + " 0")
    lines = [f"c var {index[a]} = {_dimacs_name(a)}" for a in atoms]
    lines.append(f"p cnf {len(atoms)} {len(clauses)}")
    lines.extend(solver_lines)
    return "".join(line + "\n" for line in lines), amap
