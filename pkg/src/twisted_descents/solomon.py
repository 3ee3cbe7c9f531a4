"""The classical descent algebra and its two embeddings into set compositions.

A weight-n descent element is an integer combination of integer compositions
of n; the composition product is Solomon's matrix rule.  The same algebra
appears inside the span of set compositions twice: as sums over all set
compositions of a fixed type (orbit sums, the symmetric-group fixed space)
and as descent classes in the group algebra.  This module implements all
three pictures and the Young/shuffle factorization of permutations.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping

from .algebra import (
    TDElement,
    _Linear,
    act,
    chamber_word,
    compose_basis,
    composition_product,
    permutation_basis,
)
from .limits import DESCENT_CLASS_CAP, MAX_TERMS, SizeLimitError
from .permutations import (
    check_permutation,
    compose,
    descent_class as _descent_class_perms,
    identity,
    inverse,
    symmetric_group,
)
from .setcomp import (
    SetComposition,
    as_increasing_partition,
    check_composition,
    check_ground_set,
    compositions,
    multinomial,
    type_of,
)


class DescentElement(_Linear):
    """A homogeneous integer combination of integer compositions of n."""

    __slots__ = ()

    def __init__(self, terms: Mapping | Iterable = ()):
        super().__init__(terms)
        weights = {sum(c) for c in self.terms}
        if len(weights) > 1:
            raise ValueError(f"mixed weights {sorted(weights)} in one element")

    @staticmethod
    def _check_key(key):
        return check_composition(key)

    @property
    def weight(self) -> int | None:
        for c in self.terms:
            return sum(c)
        return None

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for c in sorted(self.terms):
            yield c, self.terms[c]

    def __repr__(self) -> str:
        from .textio import render_composition

        body = " + ".join(f"{c}*{render_composition(k)}" for k, c in self) or "0"
        return f"<DescentElement {body}>"


class GroupAlgebraElement(_Linear):
    """An integer combination of permutations of a common degree."""

    __slots__ = ()

    def __init__(self, terms: Mapping | Iterable = ()):
        super().__init__(terms)
        degrees = {len(p) for p in self.terms}
        if len(degrees) > 1:
            raise ValueError(f"mixed degrees {sorted(degrees)} in one element")

    @staticmethod
    def _check_key(key):
        return check_permutation(key)

    @property
    def degree(self) -> int | None:
        for p in self.terms:
            return len(p)
        return None

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for p in sorted(self.terms):
            yield p, self.terms[p]

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*({','.join(map(str, p))})" for p, c in self) or "0"
        return f"<GroupAlgebraElement {body}>"


def _row_fill(total: int, capacity: list[int]) -> Iterator[tuple[int, ...]]:
    """Vectors v with sum(v) = total and v[j] <= capacity[j], lexicographically."""
    if not capacity:
        if total == 0:
            yield ()
        return
    for first in range(min(total, capacity[0]) + 1):
        for rest in _row_fill(total - first, capacity[1:]):
            yield (first,) + rest


def _matrices(rows: tuple[int, ...], cols: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Nonnegative integer matrices with the given row and column sums."""

    def rec(i: int, remaining: list[int]):
        if i == len(rows):
            if all(r == 0 for r in remaining):
                yield ()
            return
        for row in _row_fill(rows[i], remaining):
            nxt = [r - v for r, v in zip(remaining, row)]
            for rest in rec(i + 1, nxt):
                yield (row,) + rest

    yield from rec(0, list(cols))


def solomon_compose(a: DescentElement, b: DescentElement) -> DescentElement:
    """Solomon's rule: sum over matrices with prescribed row and column sums.

    Each matrix is flattened row by row, dropping zero entries.  Pairs of
    different weights contribute nothing.
    """
    acc: dict[tuple[int, ...], int] = {}
    for c1, x1 in a.terms.items():
        for c2, x2 in b.terms.items():
            if sum(c1) != sum(c2):
                continue
            coeff = x1 * x2
            for matrix in _matrices(c1, c2):
                key = tuple(v for row in matrix for v in row if v)
                acc[key] = acc.get(key, 0) + coeff
    return DescentElement._make({k: c for k, c in acc.items() if c})


def descent_basis_expand(
    c: Iterable[int], s: Iterable[int], max_terms: int = MAX_TERMS
) -> TDElement:
    """The sum of all set compositions of ``s`` with block sizes ``c``."""
    c = check_composition(c)
    ground = check_ground_set(s)
    if sum(c) != len(ground):
        raise ValueError(f"composition {c} has weight {sum(c)}, set has size {len(ground)}")
    if c and multinomial(c) > max_terms:
        raise SizeLimitError(
            f"type {c} expands to {multinomial(c)} terms (cap {max_terms})", max_terms
        )
    terms: dict[SetComposition, int] = {}

    def rec(blocks: tuple[frozenset[int], ...], left: frozenset[int], i: int):
        if i == len(c):
            terms[SetComposition._make(blocks, ground)] = 1
            return
        for chosen in itertools.combinations(sorted(left), c[i]):
            fs = frozenset(chosen)
            rec(blocks + (fs,), left - fs, i + 1)

    rec((), ground, 0)
    return TDElement._make(terms)


def orbit_sum(c: Iterable[int], max_terms: int = MAX_TERMS) -> TDElement:
    """O_C: the type-C orbit sum over the ground set {1..n}, n = weight."""
    c = check_composition(c)
    return descent_basis_expand(c, range(1, sum(c) + 1), max_terms)


def descent_to_orbit(a: DescentElement, max_terms: int = MAX_TERMS) -> TDElement:
    """The truncation embedding: each composition goes to its orbit sum."""
    out = TDElement({})
    for c, coeff in a.terms.items():
        out = out + coeff * orbit_sum(c, max_terms)
    return out


def truncation_check(a: DescentElement, b: DescentElement, max_terms: int = MAX_TERMS) -> bool:
    """Does Solomon's rule agree with composing the orbit-sum images?"""
    lhs = descent_to_orbit(solomon_compose(a, b), max_terms)
    rhs = composition_product(descent_to_orbit(a, max_terms), descent_to_orbit(b, max_terms))
    return lhs == rhs


def descent_class(c: Iterable[int], cap: int = DESCENT_CLASS_CAP) -> GroupAlgebraElement:
    """D_C: the sum of permutations with descent set inside C's partial sums."""
    c = check_composition(c)
    n = sum(c)
    if n > cap:
        raise SizeLimitError(f"descent class of weight {n} exceeds cap {cap}", cap)
    return GroupAlgebraElement._make({p: 1 for p in _descent_class_perms(c)})


def star(x: GroupAlgebraElement) -> GroupAlgebraElement:
    """Replace every permutation by its inverse."""
    return GroupAlgebraElement._make({inverse(p): c for p, c in x.terms.items()})


def shuffle_test(parts, p: Iterable[int]) -> bool:
    """Is p a shuffle of the given increasing partition?

    Decided by the composition product: p is a shuffle exactly when
    1_(S1,...,Sk) o 1_p is the identity chamber ({1},...,{n}).
    """
    blocks = as_increasing_partition(parts)
    p = check_permutation(p)
    n = sum(len(b) for b in blocks)
    if len(p) != n:
        raise ValueError(f"permutation degree {len(p)} does not match partition of [{n}]")
    source = SetComposition(blocks)
    product = compose_basis(source, permutation_basis(p))
    return product is not None and product == permutation_basis(identity(n))


def young_decompose(parts, p: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Factor p = beta . tau with beta in the Young subgroup, tau a shuffle.

    beta is read off the chamber 1_(S1,...,Sk) o 1_p positionally; then
    tau = beta^{-1} . p.
    """
    blocks = as_increasing_partition(parts)
    p = check_permutation(p)
    n = sum(len(b) for b in blocks)
    if len(p) != n:
        raise ValueError(f"permutation degree {len(p)} does not match partition of [{n}]")
    source = SetComposition(blocks)
    cham = compose_basis(source, permutation_basis(p))
    beta = chamber_word(cham)
    tau = compose(inverse(beta), p)
    return beta, tau


def fixed_space_check(n: int, cap: int = 5, max_terms: int = MAX_TERMS) -> bool:
    """Are the orbit sums an S_n-stable basis closed under composition?

    Checks (i) every orbit sum is fixed by every permutation and (ii) the
    composition product of two orbit sums expands over orbit sums with
    integer coefficients (constant on each type class).
    """
    if n > cap:
        raise SizeLimitError(f"fixed-space check at weight {n} exceeds cap {cap}", cap)
    if n < 1:
        raise ValueError("weight must be positive")
    comps_n = list(compositions(n))
    orbits = {c: orbit_sum(c, max_terms) for c in comps_n}
    perms = list(symmetric_group(n))
    for c, x in orbits.items():
        for s in perms:
            if act(x, s) != x:
                return False
    for c1 in comps_n:
        for c2 in comps_n:
            product = composition_product(orbits[c1], orbits[c2])
            by_type: dict[tuple[int, ...], set[int]] = {}
            counts: dict[tuple[int, ...], int] = {}
            for sc, coeff in product.terms.items():
                t = type_of(sc)
                by_type.setdefault(t, set()).add(coeff)
                counts[t] = counts.get(t, 0) + 1
            for t, coeffs in by_type.items():
                if len(coeffs) != 1 or counts[t] != multinomial(t):
                    return False
    return True
