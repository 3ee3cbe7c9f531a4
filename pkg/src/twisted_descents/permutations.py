"""Permutations of {1..n} as one-line tuples.

A permutation ``p`` of degree n is a tuple of length n with ``p[i-1] = p(i)``.
Composition is right-to-left: ``compose(p, q)(i) = p(q(i))``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .setcomp import as_increasing_partition, check_composition


def check_permutation(values: Iterable[int]) -> tuple[int, ...]:
    """Validate a one-line permutation of {1..n}."""
    p = tuple(values)
    n = len(p)
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{n}")
    return p


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """The permutation i -> p(q(i)); p and q must have equal degree."""
    if len(p) != len(q):
        raise ValueError("cannot compose permutations of different degrees")
    return tuple(p[v - 1] for v in q)


def descent_set(p: tuple[int, ...]) -> frozenset[int]:
    """Positions i with p(i) > p(i+1)."""
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def symmetric_group(n: int) -> Iterator[tuple[int, ...]]:
    """All permutations of {1..n} in lexicographic order."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return itertools.permutations(range(1, n + 1))


def composition_descents(parts: Iterable[int]) -> frozenset[int]:
    """Partial sums n1, n1+n2, ... (excluding the total) of a composition."""
    c = check_composition(parts)
    out = []
    acc = 0
    for p in c[:-1]:
        acc += p
        out.append(acc)
    return frozenset(out)


def descent_class(parts: Iterable[int], n: int | None = None) -> Iterator[tuple[int, ...]]:
    """Permutations whose descent set is contained in the partial sums of ``parts``.

    These are the permutations increasing within each consecutive interval of
    sizes n1, n2, ....  Yields in lexicographic order.
    """
    c = check_composition(parts)
    total = sum(c)
    if n is None:
        n = total
    if n != total:
        raise ValueError(f"composition {c} has weight {total}, not {n}")
    allowed = composition_descents(c)
    for p in symmetric_group(total):
        if descent_set(p) <= allowed:
            yield p


def shuffles(parts: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Inverses of the descent class of ``parts``: the (n1,...,nk)-shuffles.

    A shuffle is a permutation lifting the deck cut into consecutive intervals
    of sizes n1, n2, ... and interleaving them.  Yields in the order induced by
    :func:`descent_class`.
    """
    for p in descent_class(parts):
        yield inverse(p)


def enumerate_shuffles(parts) -> Iterator[tuple[int, ...]]:
    """The shuffles of an increasing partition of [n].

    ``parts`` is a sequence of sets (or block sizes, expanded to consecutive
    intervals).  A shuffle interleaves the blocks while keeping each block's
    internal order; the shuffles are exactly the inverses of the permutations
    whose descent set lies within the type's partial sums.
    """
    blocks = as_increasing_partition(parts)
    yield from shuffles(tuple(len(b) for b in blocks))


def young_subgroup(parts: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Permutations preserving each consecutive interval of sizes n1, n2, ....

    Yields in lexicographic order; the subgroup has order n1! * n2! * ....
    """
    c = check_composition(parts)
    starts = []
    acc = 0
    for p in c:
        starts.append(acc)
        acc += p
    blocks = [list(range(s + 1, s + p + 1)) for s, p in zip(starts, c)]
    for pieces in itertools.product(*(itertools.permutations(b) for b in blocks)):
        yield tuple(x for piece in pieces for x in piece)


def apply_to_set(p: tuple[int, ...], s: frozenset[int]) -> frozenset[int]:
    """The image p(S) of a subset of {1..n}."""
    return frozenset(p[x - 1] for x in s)
