"""Bases of the distance-k balls: their minimal excluded permutations.

A ball B_k is a pattern class (closed under one-point deletion), so a
permutation belongs to it exactly when it avoids every basis element, and
minimality can be tested through deletions alone. The basis elements have
length at most 3k+1 (block model) or 2k+1 (prefix model); an optional probe
one length above the bound confirms emptiness there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import core, models
from .core import BudgetError, DEFAULT_MAX_LEN, Perm
from .models import Model


@dataclass(frozen=True)
class BasisProbe:
    """Outcome of scanning one extra length above the bound (should be empty)."""

    length: int
    elements: tuple[Perm, ...]


@dataclass(frozen=True)
class BasisReport:
    k: int
    model: Model
    elements: tuple[Perm, ...]
    length_bound_used: int
    probe: BasisProbe | None = None


def _length_bound(k: int, model: Model) -> int:
    return (3 if model is Model.BLOCK else 2) * k + 1


def _ball(n: int, k: int, model: Model, max_len: int, max_states: int | None) -> frozenset[Perm]:
    return frozenset(models.ball(n, k, model, max_len=max_len, max_states=max_states))


def _minimal_nonmembers_at(
    n: int, k: int, model: Model, max_len: int, max_states: int | None
) -> list[Perm]:
    """Basis elements of length n: outside the ball, with every deletion inside."""
    inside = _ball(n, k, model, max_len, max_states)
    inside_shorter = _ball(n - 1, k, model, max_len, max_states)
    found = []
    for p in itertools.permutations(range(1, n + 1)):
        if p in inside:
            continue
        if all(q in inside_shorter for q in core.one_point_deletions(p)):
            found.append(p)
    return found


def basis(
    k: int,
    model: Model | str,
    probe_extra: bool = False,
    *,
    max_len: int = DEFAULT_MAX_LEN,
    max_states: int | None = None,
) -> BasisReport:
    """Compute the basis of B_k by exhaustive filtering up to the length bound.

    For each length from 2 to the bound, keep the permutations outside the
    ball whose one-point deletions all lie inside it. With ``probe_extra``
    the scan also covers one length above the bound and records the (expected
    empty) findings.
    """
    model = Model.coerce(model)
    if k < 1:
        raise ValueError("k must be at least 1")
    bound = _length_bound(k, model)
    top = bound + 1 if probe_extra else bound
    if top > max_len:
        raise BudgetError(f"scan up to length {top} exceeds the cap {max_len}")
    elements: list[Perm] = []
    for n in range(2, bound + 1):
        elements.extend(_minimal_nonmembers_at(n, k, model, max_len, max_states))
    probe = None
    if probe_extra:
        extra = _minimal_nonmembers_at(bound + 1, k, model, max_len, max_states)
        probe = BasisProbe(length=bound + 1, elements=core.perm_set(extra))
    return BasisReport(
        k=k,
        model=model,
        elements=core.perm_set(elements),
        length_bound_used=bound,
        probe=probe,
    )


def basis_via_poset_descent(
    k: int,
    model: Model | str,
    *,
    max_len: int = DEFAULT_MAX_LEN,
    max_states: int | None = None,
) -> BasisReport:
    """Compute the same basis by descending the pattern poset from the top.

    Start from every permutation of the bound length outside the ball; a
    candidate whose deletions all fall inside the ball is a basis element,
    otherwise its outside deletions are the next candidates. Every shorter
    non-member is the deletion of some non-member one level up, so the
    descent reaches the whole basis. Disagreement with basis() signals a bug
    in the distance engine or the pattern machinery.
    """
    model = Model.coerce(model)
    if k < 1:
        raise ValueError("k must be at least 1")
    bound = _length_bound(k, model)
    if bound > max_len:
        raise BudgetError(f"scan up to length {bound} exceeds the cap {max_len}")
    inside = _ball(bound, k, model, max_len, max_states)
    frontier = {
        p for p in itertools.permutations(range(1, bound + 1)) if p not in inside
    }
    found: set[Perm] = set()
    for n in range(bound, 1, -1):
        inside_shorter = _ball(n - 1, k, model, max_len, max_states)
        descend: set[Perm] = set()
        for p in frontier:
            outside = [q for q in core.one_point_deletions(p) if q not in inside_shorter]
            if outside:
                descend.update(outside)
            else:
                found.add(p)
        frontier = descend
    return BasisReport(
        k=k,
        model=model,
        elements=core.perm_set(found),
        length_bound_used=bound,
        probe=None,
    )


def verify_class_closure(
    k: int,
    model: Model | str,
    n_max: int,
    *,
    max_len: int = DEFAULT_MAX_LEN,
    max_states: int | None = None,
) -> bool:
    """Check the down-set property directly: every one-point deletion of a
    ball member is again a ball member, for all lengths up to ``n_max``."""
    model = Model.coerce(model)
    if k < 0:
        raise ValueError("negative radius")
    if n_max > max_len:
        raise BudgetError(f"length {n_max} exceeds the cap {max_len}")
    for n in range(1, n_max + 1):
        shorter = _ball(n - 1, k, model, max_len, max_states)
        for p in models.ball(n, k, model, max_len=max_len, max_states=max_states):
            if any(q not in shorter for q in core.one_point_deletions(p)):
                return False
    return True
