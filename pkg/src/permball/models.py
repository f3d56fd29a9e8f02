"""The two rearrangement models and the exact distance engine.

A block transposition exchanges two adjacent blocks of a permutation, chosen
by cut points 1 <= i < j < k <= n+1; the prefix variant forces i = 1 so the
left block is a prefix. Every operation has an inverse of the same kind, so
the one-step relation is symmetric and distances to the identity can be read
off a breadth-first expansion from the identity.

All distances returned here are exact. Small lengths are answered from a
shared level table (one full or partial BFS per (length, model), grown
lazily and cached for the whole process); longer single queries fall back to
a memoized bidirectional search. Results never depend on which path answered.
State budgets bound new search work only: an answer already in the cache is
returned as-is.
"""

from __future__ import annotations

import enum
import math
from typing import Iterator

from . import core
from .core import BudgetError, DEFAULT_MAX_LEN, Perm


class Model(enum.Enum):
    """Which elementary operation is allowed."""

    BLOCK = "td"
    PREFIX = "ptd"

    @classmethod
    def coerce(cls, value: "Model | str") -> "Model":
        if isinstance(value, Model):
            return value
        return cls(value)


def transposition_triples(n: int, model: Model | str) -> Iterator[tuple[int, int, int]]:
    """All valid cut-point triples for length ``n``, in lexicographic order."""
    model = Model.coerce(model)
    if model is Model.BLOCK:
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 2):
                    yield (i, j, k)
    else:
        for j in range(2, n + 1):
            for k in range(j + 1, n + 2):
                yield (1, j, k)


def apply_transposition(p: Perm, indices: tuple[int, int, int]) -> Perm:
    """Exchange the adjacent blocks p[i..j-1] and p[j..k-1] (1-based cuts).

    >>> apply_transposition((1, 3, 4, 5, 2, 6, 7), (3, 4, 7))
    (1, 3, 5, 2, 6, 4, 7)
    """
    i, j, k = indices
    if not (1 <= i < j < k <= len(p) + 1):
        raise ValueError(f"invalid cut points {indices!r} for length {len(p)}")
    return p[: i - 1] + p[j - 1 : k - 1] + p[i - 1 : j - 1] + p[k - 1 :]


def neighbors(p: Perm, model: Model | str) -> tuple[Perm, ...]:
    """All distinct permutations one operation away from ``p``.

    Both exchanged blocks are nonempty, so the result of any operation
    differs from ``p``; deduplication still runs because distinct triples may
    coincide on some inputs.
    """
    if not p:
        raise ValueError("neighbors of the empty permutation are undefined")
    return core.perm_set(
        apply_transposition(p, t) for t in transposition_triples(len(p), model)
    )


# ---------------------------------------------------------------------------
# Distance engine internals.

#: Frontier sets dominate memory; 4 bits per entry (after the -1 shift) packs
#: any permutation of length <= 16 into one int key.
_PACK_MAX = 16


def _pack(p: Perm) -> int:
    code = 0
    for idx, v in enumerate(p):
        code |= (v - 1) << (4 * idx)
    return code


def _unpack(code: int, n: int) -> Perm:
    return tuple(((code >> (4 * i)) & 0xF) + 1 for i in range(n))


class _LevelTable:
    """Cached level-synchronous BFS from the identity of one length/model."""

    __slots__ = ("n", "model", "dist", "levels", "complete", "_triples")

    def __init__(self, n: int, model: Model):
        self.n = n
        self.model = model
        start = _pack(core.identity(n))
        self.dist: dict[int, int] = {start: 0}
        self.levels: list[list[int]] = [[start]]
        self.complete = n <= 1
        self._triples = list(transposition_triples(n, model))

    def grow(self, max_states: int | None = None) -> bool:
        """Add one BFS level; return False once the graph is exhausted."""
        if self.complete:
            return False
        depth = len(self.levels)
        fresh: dict[int, int] = {}
        for code in self.levels[-1]:
            p = _unpack(code, self.n)
            for t in self._triples:
                child = _pack(apply_transposition(p, t))
                if child not in self.dist and child not in fresh:
                    fresh[child] = depth
        if max_states is not None and len(self.dist) + len(fresh) > max_states:
            raise BudgetError(
                f"BFS over S_{self.n} ({self.model.value}) exceeds the state budget {max_states}"
            )
        if not fresh:
            self.complete = True
            return False
        self.dist.update(fresh)
        self.levels.append(list(fresh))
        return True


_tables: dict[tuple[int, Model], _LevelTable] = {}
_bidi_memo: dict[tuple[Model, Perm], int] = {}

#: Full tables are built on demand up to this length; longer single queries
#: use bidirectional search instead of saturating n!-sized tables.
_FULL_TABLE_MAX = 7


def _table(n: int, model: Model) -> _LevelTable:
    key = (n, model)
    if key not in _tables:
        _tables[key] = _LevelTable(n, model)
    return _tables[key]


def _reset_caches() -> None:
    """Drop all cached search state (test seam; budgets bind only fresh work)."""
    _tables.clear()
    _bidi_memo.clear()


def _bidirectional(p: Perm, model: Model, max_states: int | None) -> int:
    key = (model, p)
    if key in _bidi_memo:
        return _bidi_memo[key]
    n = len(p)
    triples = list(transposition_triples(n, model))
    # No path can be shorter than the breakpoint bound, so meet tests before
    # that combined depth are pure waste and are skipped.
    lower = 0
    if model is Model.BLOCK:
        lower = -(-core.breakpoint_count(p) // 3)
    side_a = ({_pack(p): 0}, [_pack(p)])
    side_b = ({_pack(core.identity(n)): 0}, [_pack(core.identity(n))])
    depths = [0, 0]
    best = math.inf
    while side_a[1] and side_b[1]:
        if best <= depths[0] + depths[1]:
            break
        grow_a = len(side_a[1]) <= len(side_b[1])
        mine, other = (side_a, side_b) if grow_a else (side_b, side_a)
        my_idx = 0 if grow_a else 1
        new_depth = depths[my_idx] + 1
        check_meet = not (best is math.inf and new_depth + depths[1 - my_idx] < lower)
        dist_mine, frontier = mine
        dist_other = other[0]
        fresh = []
        for code in frontier:
            q = _unpack(code, n)
            for t in triples:
                child = _pack(apply_transposition(q, t))
                if child in dist_mine:
                    continue
                dist_mine[child] = new_depth
                fresh.append(child)
                if check_meet and child in dist_other:
                    best = min(best, new_depth + dist_other[child])
        mine = (dist_mine, fresh)
        if grow_a:
            side_a = mine
        else:
            side_b = mine
        depths[my_idx] = new_depth
        if max_states is not None and len(side_a[0]) + len(side_b[0]) > max_states:
            raise BudgetError(f"bidirectional search exceeds the state budget {max_states}")
    if best is math.inf:
        raise RuntimeError(f"search exhausted without reaching the identity from {p!r}")
    _bidi_memo[key] = int(best)
    return int(best)


def distance(p: Perm, model: Model | str, *, max_states: int | None = None) -> int:
    """Exact minimum number of operations transforming ``p`` into the identity.

    Block-model queries are answered on reduce(p): collapsing strips never
    changes the block-transposition distance. Prefix-model queries are never
    reduced (that invariance is an empirical observation, not a guarantee
    this engine relies on).
    """
    model = Model.coerce(model)
    p = tuple(p)
    if model is Model.BLOCK:
        p = core.reduce(p)
    n = len(p)
    if p == core.identity(n):
        return 0
    if n > _PACK_MAX:
        raise BudgetError(f"distance queries support length <= {_PACK_MAX}")
    code = _pack(p)
    cached = _tables.get((n, model))
    if cached is not None and code in cached.dist:
        return cached.dist[code]
    if n <= _FULL_TABLE_MAX:
        table = _table(n, model)
        while code not in table.dist:
            if not table.grow(max_states):
                raise RuntimeError(f"search exhausted without reaching {p!r}")
        return table.dist[code]
    return _bidirectional(p, model, max_states)


def pairwise_distance(
    p: Perm, q: Perm, model: Model | str, *, max_states: int | None = None
) -> int:
    """Exact minimum number of operations transforming ``p`` into ``q``.

    Operations rearrange positions, so relabelling both permutations by any
    fixed permutation preserves the distance; composing with the inverse of
    ``p`` turns the question into a sorting distance.
    """
    if len(p) != len(q):
        raise ValueError(f"length mismatch: {len(p)} vs {len(q)}")
    inv = core.invert(p)
    relabeled = tuple(inv[x - 1] for x in q)
    return distance(relabeled, model, max_states=max_states)


def ball(
    n: int,
    k: int,
    model: Model | str,
    *,
    max_len: int = DEFAULT_MAX_LEN,
    max_states: int | None = None,
) -> tuple[Perm, ...]:
    """All permutations of length ``n`` at distance <= k from the identity,
    via k-level breadth-first expansion from the identity."""
    model = Model.coerce(model)
    if n < 0:
        raise ValueError("negative length")
    if k < 0:
        raise ValueError("negative radius")
    if n > max_len:
        raise BudgetError(f"length {n} exceeds the enumeration cap {max_len}")
    if n > _PACK_MAX:
        raise BudgetError(f"ball construction supports length <= {_PACK_MAX}")
    if n == 0:
        return ((),)
    table = _table(n, model)
    while len(table.levels) - 1 < k and table.grow(max_states):
        pass
    top = min(k, len(table.levels) - 1)
    return core.perm_set(
        _unpack(code, n) for level in table.levels[: top + 1] for code in level
    )
