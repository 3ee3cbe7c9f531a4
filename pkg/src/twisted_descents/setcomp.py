"""Set compositions (ordered set partitions) of finite sets of positive integers.

A set composition is an ordered sequence of pairwise-disjoint nonempty finite
sets, e.g. ({3,5},{1,4}).  The empty composition () is legal and acts as the
unit for concatenation.  Set compositions index the basis of the algebra in
:mod:`twisted_descents.algebra`; this module provides the index type itself,
integer compositions, and exact enumeration.

Ground sets are finite sets of positive integers, represented throughout as
``frozenset[int]``.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator

from .limits import ENUMERATION_CAP, MAX_LABEL, SizeLimitError


def check_ground_set(elements: Iterable[int]) -> frozenset[int]:
    """Validate and freeze a ground set of positive integer labels."""
    s = frozenset(elements)
    for x in s:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"ground-set label {x!r} is not an integer")
        if not 1 <= x <= MAX_LABEL:
            raise ValueError(f"ground-set label {x} out of range 1..{MAX_LABEL}")
    return s


class SetComposition:
    """An ordered sequence of pairwise-disjoint nonempty sets of positive integers.

    Instances are immutable and hashable.  ``sets`` holds the blocks as
    frozensets, ``support`` their (disjoint) union.  The total order used for
    deterministic term ordering compares support size, then the flattened
    block sequence, then the block-boundary positions.
    """

    __slots__ = ("sets", "support", "_hash", "_blocks", "_key")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        sets = []
        seen: frozenset[int] = frozenset()
        for block in blocks:
            fs = check_ground_set(block)
            if not fs:
                raise ValueError("set composition blocks must be nonempty")
            if seen & fs:
                raise ValueError(f"set composition blocks overlap on {sorted(seen & fs)}")
            seen |= fs
            sets.append(fs)
        self.sets = tuple(sets)
        self.support = seen
        self._hash = hash(self.sets)
        self._blocks = None
        self._key = None

    @classmethod
    def _make(cls, sets: tuple[frozenset[int], ...], support: frozenset[int]) -> "SetComposition":
        # Fast path for internally produced, already-valid block tuples.
        self = cls.__new__(cls)
        self.sets = sets
        self.support = support
        self._hash = hash(sets)
        self._blocks = None
        self._key = None
        return self

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """The blocks as ascending tuples, in composition order."""
        if self._blocks is None:
            self._blocks = tuple(tuple(sorted(b)) for b in self.sets)
        return self._blocks

    @property
    def sort_key(self) -> tuple:
        if self._key is None:
            flat = tuple(x for b in self.blocks for x in b)
            bounds = tuple(itertools.accumulate(len(b) for b in self.blocks[:-1]))
            self._key = (len(self.support), flat, bounds)
        return self._key

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.sets)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, SetComposition):
            return NotImplemented
        return self.sets == other.sets

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "SetComposition") -> bool:
        return self.sort_key < other.sort_key

    def __repr__(self) -> str:
        inner = "|".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"SetComposition[{inner}]"


EMPTY = SetComposition(())


def support(sc: SetComposition) -> frozenset[int]:
    """The union of all blocks (the grading degree of the basis element)."""
    return sc.support


def type_of(sc: SetComposition) -> tuple[int, ...]:
    """The integer composition of block sizes, e.g. ({3,5},{1,4}) -> (2,2)."""
    return tuple(len(b) for b in sc.sets)


def check_composition(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate an integer composition: a tuple of positive parts (may be empty)."""
    c = tuple(parts)
    for p in c:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"composition part {p!r} is not a positive integer")
    return c


def weight(parts: Iterable[int]) -> int:
    return sum(check_composition(parts))


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All integer compositions of n, in lexicographic order; () for n = 0."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def multinomial(parts: Iterable[int]) -> int:
    """n! / (n1! ... nk!) for a composition (n1,...,nk) of n."""
    c = check_composition(parts)
    out = math.factorial(sum(c))
    for p in c:
        out //= math.factorial(p)
    return out


def enumerate_set_compositions(
    s: Iterable[int], cap: int = ENUMERATION_CAP
) -> Iterator[SetComposition]:
    """Yield every set composition of ``s`` once, in the canonical order.

    The order matches ``SetComposition.sort_key``: flattened block sequence
    first (lexicographically), block boundaries second.  The number of results
    is the Fubini number of ``|s|``.
    """
    ground = check_ground_set(s)
    if len(ground) > cap:
        raise SizeLimitError(
            f"refusing to enumerate set compositions of a {len(ground)}-element set"
            f" (cap {cap})",
            cap,
        )
    n = len(ground)
    if n == 0:
        yield EMPTY
        return
    for word in itertools.permutations(sorted(ground)):
        # A boundary set cuts the word into blocks; every descent of the word
        # must be a boundary so that blocks stay ascending.
        descents = [i for i in range(1, n) if word[i - 1] > word[i]]
        free = [i for i in range(1, n) if word[i - 1] < word[i]]
        cuts_list = []
        for k in range(len(free) + 1):
            for extra in itertools.combinations(free, k):
                cuts_list.append(tuple(sorted(descents + list(extra))))
        cuts_list.sort()
        for cuts in cuts_list:
            edges = (0,) + cuts + (n,)
            sets = tuple(
                frozenset(word[edges[i] : edges[i + 1]]) for i in range(len(edges) - 1)
            )
            yield SetComposition._make(sets, ground)


def count_set_compositions(n: int) -> int:
    """Fubini number: ordered set partitions of an n-set, via k! * Stirling2(n,k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    # Stirling numbers of the second kind by the standard recurrence.
    stirling = [1] + [0] * n
    for row in range(1, n + 1):
        new = [0] * (n + 1)
        for k in range(1, row + 1):
            new[k] = k * stirling[k] + stirling[k - 1]
        stirling = new
    return sum(math.factorial(k) * stirling[k] for k in range(n + 1))


def interval_partition(parts: Iterable[int]) -> tuple[frozenset[int], ...]:
    """The increasing partition of [n] with block sizes ``parts``.

    (2,2) -> ({1,2},{3,4}): consecutive intervals of 1..n.
    """
    c = check_composition(parts)
    out = []
    start = 1
    for p in c:
        out.append(frozenset(range(start, start + p)))
        start += p
    return tuple(out)


def is_increasing_partition(parts: Iterable[frozenset[int]], n: int) -> bool:
    """True iff ``parts`` partitions {1..n} with max(S_i) < min(S_j) for i < j."""
    parts = tuple(parts)
    total: set[int] = set()
    prev_max = 0
    for p in parts:
        if not p:
            return False
        if total & p:
            return False
        if min(p) <= prev_max:
            return False
        prev_max = max(p)
        total |= p
    return total == set(range(1, n + 1))


def as_increasing_partition(parts) -> tuple[frozenset[int], ...]:
    """Normalize ``parts``: a composition gives consecutive intervals of [n].

    Accepts either block sizes (ints) or an explicit sequence of sets, which
    must then form an increasing partition of {1..n}.
    """
    parts = tuple(parts)
    if all(isinstance(p, int) and not isinstance(p, bool) for p in parts):
        return interval_partition(parts)
    out = tuple(frozenset(p) for p in parts)
    n = sum(len(p) for p in out)
    if not is_increasing_partition(out, n):
        raise ValueError(f"{parts!r} is not an increasing partition of [{n}]")
    return out
