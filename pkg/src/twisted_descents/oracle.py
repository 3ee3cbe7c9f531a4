"""Brute-force ground truth: graded endomorphisms of a free algebra on letters.

Words α_S1···α_Sk over pairwise-disjoint finite sets span a free twisted
algebra; its coproduct deshuffles letter positions (letters are primitive).
A set composition acts on this algebra as the convolution of the
characteristic projections of its blocks.  Building those endomorphisms as
explicit tables over every word of a small universe gives an independent
model against which the symbolic products are checked.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

from .algebra import TDElement
from .limits import ORACLE_SUPPORT_CAP, SizeLimitError
from .setcomp import (
    SetComposition,
    check_ground_set,
    enumerate_set_compositions,
)

# A word in the letters α_S has exactly the shape of a set composition:
# an ordered sequence of pairwise-disjoint nonempty sets.
BWord = SetComposition

# Sparse integer combination of words.
BElement = dict


def b_product(u: BWord, v: BWord) -> BWord:
    """Concatenate two words; defined only on disjoint supports."""
    if u.support & v.support:
        raise ValueError(
            f"word supports overlap on {sorted(u.support & v.support)}"
        )
    return SetComposition._make(u.sets + v.sets, u.support | v.support)


def b_coproduct(u: BWord) -> dict[tuple[BWord, BWord], int]:
    """Split letter positions into complementary subsequences, all 2^k ways."""
    k = len(u.sets)
    out: dict[tuple[BWord, BWord], int] = {}
    for r in range(k + 1):
        for chosen in itertools.combinations(range(k), r):
            taken = set(chosen)
            lsets = tuple(u.sets[i] for i in range(k) if i in taken)
            rsets = tuple(u.sets[i] for i in range(k) if i not in taken)
            lsup = frozenset().union(*lsets) if lsets else frozenset()
            key = (
                SetComposition._make(lsets, lsup),
                SetComposition._make(rsets, u.support - lsup),
            )
            out[key] = out.get(key, 0) + 1
    return out


@lru_cache(maxsize=None)
def _words_of(universe: tuple[int, ...]) -> tuple[BWord, ...]:
    out = []
    for r in range(len(universe) + 1):
        for sub in itertools.combinations(universe, r):
            out.extend(enumerate_set_compositions(sub, cap=len(universe)))
    return tuple(out)


def all_words(universe: Iterable[int], cap: int = ORACLE_SUPPORT_CAP) -> tuple[BWord, ...]:
    """Every word whose support is a subset of the universe."""
    ground = check_ground_set(universe)
    if len(ground) > cap:
        raise SizeLimitError(
            f"refusing a word table over a {len(ground)}-element universe"
            f" (cap {cap})",
            cap,
        )
    return _words_of(tuple(sorted(ground)))


class Endomorphism:
    """A grading-preserving linear map, tabulated on every universe word."""

    __slots__ = ("universe", "table")

    def __init__(self, universe: frozenset[int], table: dict):
        self.universe = universe
        self.table = table

    def __call__(self, w: BWord) -> BElement:
        return self.table[w]

    def apply(self, x: BElement) -> BElement:
        out: BElement = {}
        for w, c in x.items():
            for w2, c2 in self.table[w].items():
                out[w2] = out.get(w2, 0) + c * c2
        return {w: c for w, c in out.items() if c}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Endomorphism):
            return NotImplemented
        if self.universe != other.universe:
            return False
        keys = set(self.table) | set(other.table)
        return all(self.table.get(k, {}) == other.table.get(k, {}) for k in keys)

    __hash__ = None

    def __repr__(self) -> str:
        size = len(self.table)
        return f"<Endomorphism on {size} words over {sorted(self.universe)}>"


def _require_same_universe(f: Endomorphism, g: Endomorphism):
    if f.universe != g.universe:
        raise ValueError(
            f"universe mismatch: {sorted(f.universe)} vs {sorted(g.universe)}"
        )


def characteristic_endo(s: Iterable[int], universe: Iterable[int]) -> Endomorphism:
    """Identity on words of degree exactly s, zero on every other word."""
    s = check_ground_set(s)
    ground = check_ground_set(universe)
    if not s <= ground:
        raise ValueError(f"degree {sorted(s)} not inside universe {sorted(ground)}")
    table = {
        w: ({w: 1} if w.support == s else {})
        for w in all_words(ground, cap=len(ground))
    }
    return Endomorphism(ground, table)


def endo_convolution(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """m ∘ (f ⊗ g) ∘ δ, tabulated wordwise."""
    _require_same_universe(f, g)
    table = {}
    for w in f.table:
        img: BElement = {}
        for (u, v), c in b_coproduct(w).items():
            for wu, cu in f.table[u].items():
                for wv, cv in g.table[v].items():
                    word = b_product(wu, wv)
                    img[word] = img.get(word, 0) + c * cu * cv
        table[w] = {k: c for k, c in img.items() if c}
    return Endomorphism(f.universe, table)


def endo_compose(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """Plain function composition f(g(w)), extended linearly."""
    _require_same_universe(f, g)
    return Endomorphism(f.universe, {w: f.apply(img) for w, img in g.table.items()})


def represent(sc: SetComposition, universe: Iterable[int]) -> Endomorphism:
    """The endomorphism of a set composition: convolution of its blocks' projections."""
    ground = check_ground_set(universe)
    if not sc.support <= ground:
        raise ValueError(
            f"support {sorted(sc.support)} not inside universe {sorted(ground)}"
        )
    endo = characteristic_endo((), ground)
    for block in sc.sets:
        endo = endo_convolution(endo, characteristic_endo(block, ground))
    return endo


def endo_of(x: TDElement, universe: Iterable[int]) -> Endomorphism:
    """Linear combination of represented basis elements."""
    ground = check_ground_set(universe)
    table: dict = {w: {} for w in all_words(ground, cap=len(ground))}
    for sc, coeff in x.terms.items():
        part = represent(sc, ground)
        for w, img in part.table.items():
            row = table[w]
            for w2, c in img.items():
                row[w2] = row.get(w2, 0) + coeff * c
    return Endomorphism(
        ground, {w: {k: c for k, c in row.items() if c} for w, row in table.items()}
    )


def oracle_check_composition(
    a: SetComposition,
    b: SetComposition,
    universe: Iterable[int] | None = None,
    cap: int = ORACLE_SUPPORT_CAP,
) -> bool:
    """Compare symbolic a ∘ b with endomorphism composition, tablewise."""
    from .algebra import basis, composition_product

    ground = check_ground_set(universe if universe is not None else a.support | b.support)
    if len(ground) > cap:
        raise SizeLimitError(
            f"oracle universe {sorted(ground)} exceeds cap {cap}", cap
        )
    lhs = endo_compose(represent(a, ground), represent(b, ground))
    rhs = endo_of(composition_product(basis(a), basis(b)), ground)
    return lhs == rhs


def _render_word(w: BWord) -> str:
    if not w.sets:
        return "1"
    return "".join("a{" + ",".join(map(str, b)) + "}" for b in w.blocks)


def dump(endo: Endomorphism) -> str:
    """One line per word: ``a{1}a{2} -> 1*a{1}a{2}`` (zero images as ``0``)."""
    lines = []
    for w in sorted(endo.table, key=lambda s: s.sort_key):
        img = endo.table[w]
        if not img:
            body = "0"
        else:
            parts = [
                f"{img[w2]}*{_render_word(w2)}"
                for w2 in sorted(img, key=lambda s: s.sort_key)
            ]
            body = " + ".join(parts)
        lines.append(f"{_render_word(w)} -> {body}")
    return "\n".join(lines)
