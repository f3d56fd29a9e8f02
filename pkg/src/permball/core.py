"""Permutations in one-line notation: strips, reductions, patterns, inflations.

A permutation of length n is a tuple containing each of 1..n exactly once
(1-based one-line notation); the empty tuple is the length-0 identity.
Everything in this module is a pure function of immutable values, so the whole
API is safe to call from any number of concurrent workers.

Two text encodings are supported: a compact digit string for n <= 9
("1352647") and comma-separated values for any length ("13,5,2,..."). Both
are accepted on input; the compact form is emitted whenever n <= 9.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Perm = tuple[int, ...]

#: Default cap on permutation length for exhaustive enumerations.
DEFAULT_MAX_LEN = 10


class BudgetError(RuntimeError):
    """An enumeration or search would exceed its configured cap."""


def check_perm(values: Iterable[int]) -> Perm:
    """Return ``values`` as a tuple, raising ValueError unless it is a
    permutation of 1..n.

    >>> check_perm([2, 1, 3])
    (2, 1, 3)
    >>> check_perm(())
    ()
    """
    p = tuple(values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def identity(n: int) -> Perm:
    """The identity permutation 1 2 ... n."""
    if n < 0:
        raise ValueError("negative length")
    return tuple(range(1, n + 1))


def parse_perm(text: str) -> Perm:
    """Parse either text encoding into a permutation.

    >>> parse_perm("1352647")
    (1, 3, 5, 2, 6, 4, 7)
    >>> parse_perm("10,2,3,4,5,6,7,8,9,1")[0]
    10
    """
    s = text.strip()
    if s == "":
        return ()
    if "," in s:
        try:
            values = [int(tok) for tok in s.split(",")]
        except ValueError:
            raise ValueError(f"bad permutation text: {text!r}") from None
    elif s.isdigit():
        values = [int(ch) for ch in s]
    else:
        raise ValueError(f"bad permutation text: {text!r}")
    return check_perm(values)


def format_perm(p: Perm) -> str:
    """Render a permutation in the compact encoding when n <= 9, else with commas."""
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def perm_set(perms: Iterable[Perm]) -> tuple[Perm, ...]:
    """Deduplicate and sort permutations lexicographically (the canonical
    order used for every set-valued result in this package)."""
    return tuple(sorted(set(perms)))


def invert(p: Perm) -> Perm:
    """The inverse permutation: position of each value.

    >>> invert((2, 3, 1))
    (3, 1, 2)
    """
    inv = [0] * len(p)
    for pos, v in enumerate(p, start=1):
        inv[v - 1] = pos
    return tuple(inv)


def strips(p: Perm) -> list[tuple[int, int]]:
    """Decompose ``p`` into its strips, returned as (start, length) pairs
    with 1-based starts.

    A strip is a maximal run of positions whose values increase by exactly 1
    at each step. The strips partition the positions; singletons are allowed.

    >>> strips((4, 3, 5, 6, 1, 2, 7, 8, 9))
    [(1, 1), (2, 1), (3, 2), (5, 2), (7, 3)]
    """
    out = []
    start = 0
    for i in range(1, len(p) + 1):
        if i == len(p) or p[i] != p[i - 1] + 1:
            out.append((start + 1, i - start))
            start = i
    return out


def is_plus_irreducible(p: Perm) -> bool:
    """True when no entry is followed by its successor, i.e. every strip has
    length 1. Vacuously true for n <= 1."""
    return all(p[i + 1] != p[i] + 1 for i in range(len(p) - 1))


def reduce(p: Perm) -> Perm:
    """Collapse each strip of ``p`` to a single point and rescale.

    The result is the canonical plus-irreducible permutation below ``p``;
    reduce is idempotent.

    >>> reduce((4, 3, 5, 6, 1, 2, 7, 8, 9))
    (3, 2, 4, 1, 5)
    """
    mins = [p[start - 1] for start, _ in strips(p)]
    rank = {v: r for r, v in enumerate(sorted(mins), start=1)}
    return tuple(rank[v] for v in mins)


def contains_pattern(text: Perm, patt: Perm) -> bool:
    """True when some subsequence of ``text`` is order-isomorphic to ``patt``.

    Straightforward depth-first subsequence search with pruning; inputs in
    this package never exceed length ~13, so simplicity wins over asymptotics.
    """
    k, n = len(patt), len(text)
    if k == 0:
        return True
    if k > n:
        return False
    if k == n:
        return text == patt

    chosen: list[int] = []

    def extend(start: int) -> bool:
        i = len(chosen)
        if i == k:
            return True
        # leave enough room for the remaining pattern entries
        for pos in range(start, n - (k - i) + 1):
            v = text[pos]
            if all((patt[i] > patt[j]) == (v > chosen[j]) for j in range(i)):
                chosen.append(v)
                if extend(pos + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def one_point_deletions(p: Perm) -> tuple[Perm, ...]:
    """All distinct permutations obtained by deleting one entry and rescaling.

    >>> one_point_deletions((1, 3, 2, 4))
    ((1, 2, 3), (1, 3, 2), (2, 1, 3))
    """
    if not p:
        raise ValueError("cannot delete from the empty permutation")
    out = set()
    for i, removed in enumerate(p):
        out.add(tuple(x - (x > removed) for j, x in enumerate(p) if j != i))
    return tuple(sorted(out))


def monotone_inflate(p: Perm, v: Iterable[int]) -> Perm:
    """Replace each entry of ``p`` by an increasing run of prescribed length.

    ``v`` gives one non-negative run length per position; zero deletes the
    position. Runs keep the relative order of the entries they replace, so the
    result has length sum(v).

    >>> monotone_inflate((4, 1, 3, 5, 2), (0, 2, 1, 3, 2))
    (1, 2, 5, 6, 7, 8, 3, 4)
    """
    lengths = tuple(v)
    if len(lengths) != len(p):
        raise ValueError(f"inflation vector has length {len(lengths)}, permutation {len(p)}")
    if any(x < 0 for x in lengths):
        raise ValueError("inflation lengths must be non-negative")
    offset = [0] * len(p)
    total = 0
    for pos in sorted(range(len(p)), key=lambda i: p[i]):
        offset[pos] = total
        total += lengths[pos]
    out: list[int] = []
    for pos in range(len(p)):
        out.extend(range(offset[pos] + 1, offset[pos] + lengths[pos] + 1))
    return tuple(out)


def mi_member(p: Perm, base: Perm) -> bool:
    """Decide whether ``p`` is a monotone inflation of ``base``.

    ``base`` must be plus irreducible (reduce other bases first; inflations of
    a permutation and of its reduction coincide). The test is equivalent to
    pattern containment of reduce(p) in base: an inflation collapses back to
    its reduction, and conversely an embedding of reduce(p) into base selects
    the points to inflate by the strip lengths of p.
    """
    if not is_plus_irreducible(base):
        raise ValueError(f"base {base!r} is not plus irreducible; reduce it first")
    return contains_pattern(base, reduce(p))


def mi_members(base: Perm, n_max: int) -> tuple[Perm, ...]:
    """Materialize every monotone inflation of ``base`` of length <= n_max,
    by direct enumeration of inflation vectors. The class itself is infinite;
    this is the finite slice below the given length."""
    members = set()
    for total in range(n_max + 1):
        for v in _weak_compositions(len(base), total):
            members.add(monotone_inflate(base, v))
    return tuple(sorted(members))


def _weak_compositions(parts: int, total: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _weak_compositions(parts - 1, total - first):
            yield (first,) + rest


def breakpoint_count(p: Perm) -> int:
    """Number of breakpoints of ``p``: internal positions where the next
    value is not the successor, plus one for each boundary convention
    (position 0 when p does not start with 1, position n when it does not
    end with n).

    >>> breakpoint_count((3, 2, 1))
    4
    """
    n = len(p)
    if n == 0:
        raise ValueError("breakpoints are undefined for the empty permutation")
    count = sum(1 for i in range(n - 1) if p[i + 1] != p[i] + 1)
    if p[0] != 1:
        count += 1
    if p[-1] != n:
        count += 1
    return count


def plus_irreducible_count(n: int) -> int:
    """Value f_n of the recurrence f_n = n*f_{n-1} + (n-1)*f_{n-2} with
    f_0 = f_1 = 1; f_n counts the plus-irreducible permutations of
    length n + 1 (OEIS A000255).

    >>> [plus_irreducible_count(n) for n in range(7)]
    [1, 1, 3, 11, 53, 309, 2119]
    """
    if n < 0:
        raise ValueError("negative index")
    prev2, prev1 = 1, 1
    for m in range(2, n + 1):
        prev2, prev1 = prev1, m * prev1 + (m - 1) * prev2
    return prev1


def enumerate_plus_irreducible(n: int, max_len: int = DEFAULT_MAX_LEN) -> tuple[Perm, ...]:
    """All plus-irreducible permutations of length ``n``, in lexicographic
    order. Guarded by ``max_len``; exceeding it raises BudgetError rather
    than silently truncating."""
    if n < 0:
        raise ValueError("negative length")
    if n > max_len:
        raise BudgetError(f"length {n} exceeds the enumeration cap {max_len}")
    out: list[Perm] = []
    chosen: list[int] = []
    used = [False] * (n + 1)

    def build() -> None:
        if len(chosen) == n:
            out.append(tuple(chosen))
            return
        for v in range(1, n + 1):
            if used[v] or (chosen and v == chosen[-1] + 1):
                continue
            used[v] = True
            chosen.append(v)
            build()
            chosen.pop()
            used[v] = False

    build()
    return tuple(out)
