"""Brute-force reference semantics, deliberately unclever.

Everything here enumerates subsets and applies the defining conditions
directly; the translation-based engines are tested against these answers.
"""

from __future__ import annotations

from itertools import combinations

from .errors import BoundExceededError
from .framework import ArgumentationFramework

DEFAULT_SUBSET_BOUND = 20

Extension = frozenset[str]


def _check_bound(af: ArgumentationFramework, bound: int) -> None:
    if len(af.arguments) > bound:
        raise BoundExceededError(
            f"framework has {len(af.arguments)} arguments, exceeding the bound of {bound}"
        )


def _subsets(af: ArgumentationFramework):
    items = sorted(af.arguments)
    for size in range(len(items) + 1):
        for combo in combinations(items, size):
            yield frozenset(combo)


def _canonical(sets) -> list[Extension]:
    return sorted(sets, key=lambda s: tuple(sorted(s)))


def enumerate_admissible(
    af: ArgumentationFramework, bound: int = DEFAULT_SUBSET_BOUND
) -> list[Extension]:
    """All admissible sets, in canonical order."""
    _check_bound(af, bound)
    return _canonical(s for s in _subsets(af) if af.is_admissible(s))


def preferred_oracle(
    af: ArgumentationFramework, bound: int = DEFAULT_SUBSET_BOUND
) -> list[Extension]:
    """Inclusion-maximal admissible sets by pairwise comparison."""
    admissible = enumerate_admissible(af, bound=bound)
    return _canonical(s for s in admissible if not any(s < t for t in admissible))


def stable_oracle(
    af: ArgumentationFramework, bound: int = DEFAULT_SUBSET_BOUND
) -> list[Extension]:
    """Conflict-free sets attacking every argument outside them."""
    _check_bound(af, bound)
    found = []
    for s in _subsets(af):
        if not af.is_conflict_free(s):
            continue
        outside = af.arguments - s
        if all(any((m, x) in af.attacks for m in s) for x in outside):
            found.append(s)
    return _canonical(found)


def defeated_arguments(
    af: ArgumentationFramework, bound: int = DEFAULT_SUBSET_BOUND
) -> frozenset[str]:
    """Arguments in no preferred extension."""
    accepted: set[str] = set()
    for s in preferred_oracle(af, bound=bound):
        accepted |= s
    return af.arguments - accepted
