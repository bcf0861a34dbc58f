# ncschur, noncommutative Schur functions for (3+1)-free posets.
# Copyright (c) 2024-Present, ncschur Contributors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the following licenses:
# - The Unlicense
# - GNU Affero General Public License v3.0 or later
# - GNU General Public License v2.0 or later
# - BSD 4-Clause "Original" or "Old" License
# - MIT License
# - Apache License 2.0

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
# See the LICENSE file for more details.

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from functools import lru_cache
from itertools import product
from math import ceil, floor
from typing import Any

from .exceptions import MixedDegreeError, NotNuioError, ParamError
from .poset import Content, Poset, chains
from .symfun import (
    Coefficient,
    Composition,
    Partition,
    QSymExpr,
    composition_from_set,
    inverse_kostka,
    partitions,
    poly_from_list,
    poly_to_list,
    simplify,
    t,
    transpose,
)
from .words import Word, des_p, inv_p, weakly_increasing_words, words_of_content


class NCElement:
    r"""
    Finite linear combination of words over a poset, with coefficients in ℤ[t].

    The same type serves as an element of the free algebra on the letters `u_a`
    and as a functional on words through `pair`.
    The product concatenates words; no quotient is applied.

    Args:
        poset: The alphabet.
        terms: Mapping from words to coefficients. Zero coefficients are dropped.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> x = NCElement.monomial(p, (3, 1)) + NCElement.monomial(p, (2,), 2)
        >>> x
        NCElement({(2,): 2, (3, 1): 1})
        >>> x * x - x * x
        NCElement({})
        >>> sorted(len(w) for w in (x * x).terms)
        [2, 3, 3, 4]
    """

    __slots__ = ("poset", "terms")

    def __init__(self, poset: Poset, terms: Mapping[Sequence[int], Coefficient] | None = None):
        self.poset = poset
        self.terms: dict[Word, Coefficient] = {}
        for word, coefficient in (terms or {}).items():
            if coefficient:
                self.terms[tuple(word)] = simplify(coefficient)

    @classmethod
    def monomial(cls, poset: Poset, word: Sequence[int], coefficient: Coefficient = 1) -> NCElement:
        return cls(poset, {tuple(word): coefficient})

    @classmethod
    def one(cls, poset: Poset) -> NCElement:
        return cls(poset, {(): 1})

    @classmethod
    def zero(cls, poset: Poset) -> NCElement:
        return cls(poset)

    @classmethod
    def sum_of(cls, poset: Poset, words: Iterable[Sequence[int]]) -> NCElement:
        terms: dict[Word, Coefficient] = {}
        for word in words:
            word = tuple(word)
            terms[word] = terms.get(word, 0) + 1
        return cls(poset, terms)

    def __getitem__(self, word: Sequence[int]) -> Coefficient:
        return self.terms.get(tuple(word), 0)

    def __iter__(self) -> Iterator[tuple[Word, Coefficient]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: NCElement) -> None:
        if other.poset != self.poset:
            raise ValueError("Elements over different posets cannot be combined.")

    def __add__(self, other: NCElement) -> NCElement:
        self._check(other)
        terms = dict(self.terms)
        for word, coefficient in other.terms.items():
            terms[word] = terms.get(word, 0) + coefficient
        return NCElement(self.poset, terms)

    def __neg__(self) -> NCElement:
        return NCElement(self.poset, {word: -c for word, c in self.terms.items()})

    def __sub__(self, other: NCElement) -> NCElement:
        return self + (-other)

    def __mul__(self, other: Any) -> NCElement:
        if isinstance(other, NCElement):
            self._check(other)
            terms: dict[Word, Coefficient] = {}
            for left, a in self.terms.items():
                for right, b in other.terms.items():
                    word = left + right
                    terms[word] = terms.get(word, 0) + a * b
            return NCElement(self.poset, terms)
        return NCElement(self.poset, {word: c * other for word, c in self.terms.items()})

    def __rmul__(self, scalar: Any) -> NCElement:
        return NCElement(self.poset, {word: scalar * c for word, c in self.terms.items()})

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, NCElement):
            return NotImplemented
        return self.poset == other.poset and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.poset, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({dict(sorted(self.terms.items()))})"

    @property
    def degrees(self) -> set[int]:
        return {len(word) for word in self.terms}

    def contents(self) -> set[Content]:
        return {Content(word) for word in self.terms}

    def restrict(self, content: Iterable[int]) -> NCElement:
        content = Content(content)
        return NCElement(self.poset, {w: c for w, c in self.terms.items() if Content(w) == content})

    def by_content(self) -> dict[Content, NCElement]:
        groups: dict[Content, dict[Word, Coefficient]] = {}
        for word, coefficient in self.terms.items():
            groups.setdefault(Content(word), {})[word] = coefficient
        return {content: NCElement(self.poset, groups[content]) for content in sorted(groups)}

    def commutative_image(self) -> dict[Word, Coefficient]:
        r"""
        Image in the polynomial ring: coefficients summed over rearrangements, keyed by sorted words.
        """

        image: dict[Word, Coefficient] = {}
        for word, coefficient in self.terms.items():
            key = tuple(sorted(word))
            image[key] = image.get(key, 0) + coefficient
        return {key: simplify(value) for key, value in sorted(image.items()) if value}

    def __json__(self) -> dict:
        return {
            "poset": self.poset.__json__(),
            "terms": [{"word": list(word), "coef": poly_to_list(c)} for word, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping, poset: Poset | None = None) -> NCElement:
        if poset is None:
            poset = Poset.from_json(data["poset"])
        terms: dict[Word, Coefficient] = {}
        for term in data["terms"]:
            word = tuple(term["word"])
            terms[word] = terms.get(word, 0) + poly_from_list(term["coef"])
        return cls(poset, terms)


@lru_cache(maxsize=None)
def _e_cached(p: Poset, k: int, support: frozenset[int] | None) -> NCElement:
    if k == 0:
        return NCElement.one(p)
    return NCElement(p, {chain: 1 for chain in chains(p, support, k)})


def e_p(p: Poset, k: int, support: Iterable[int] | None = None) -> NCElement:
    r"""
    Noncommutative P-elementary function: the sum of `u_{a_1} ... u_{a_k}` over chains a_1 > ... > a_k.

    `support` restricts the letters, all of `p` by default.

    Examples:
        >>> from ncschur.poset import p_k
        >>> e_p(p_k(2, 4), 2)
        NCElement({(3, 1): 1, (4, 1): 1, (4, 2): 1})
        >>> e_p(p_k(2, 4), 0, support=())
        NCElement({(): 1})
        >>> e_p(p_k(2, 4), 5)
        NCElement({})
    """

    if k < 0:
        return NCElement.zero(p)
    return _e_cached(p, k, None if support is None else frozenset(support))


@lru_cache(maxsize=None)
def h_p(p: Poset, ell: int) -> NCElement:
    r"""
    Noncommutative P-complete function: the sum of ⩪→-weakly increasing words of length `ell`.

    Examples:
        >>> from ncschur.poset import antichain, p_k
        >>> len(h_p(p_k(2, 3), 2)), len(h_p(antichain(2), 2))
        (8, 4)
        >>> h_p(p_k(2, 3), 0)
        NCElement({(): 1})
    """

    if ell < 0:
        return NCElement.zero(p)
    return NCElement.sum_of(p, weakly_increasing_words(p, ell))


def newton_check(p: Poset, m: int) -> bool:
    r"""
    Whether `h_m - h_{m-1} e_1 + ... + (-1)^m e_m` vanishes in the free algebra.

    Examples:
        >>> from ncschur.poset import antichain, chain, p_k
        >>> newton_check(p_k(2, 4), 2), newton_check(chain(3), 3), newton_check(antichain(3), 2)
        (True, True, True)
    """

    total = NCElement.zero(p)
    for j in range(m + 1):
        total = total + (-1) ** j * (h_p(p, m - j) * e_p(p, j))
    return not total


def j_flagged(p: Poset, alpha: Sequence[int], Z: Sequence[Iterable[int] | None]) -> NCElement:  # pylint: disable=C0103
    r"""
    Column-flagged noncommutative P-Schur function.

    The signed sum over permutations π of `e_{alpha_1 + π(1) - 1}(u_{Z_1}) ... e_{alpha_l + π(l) - l}(u_{Z_l})`,
    expanded along rows so that shared tails are computed once.
    A `None` support stands for the whole poset.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> j_flagged(p, (1,), (None,)) == e_p(p, 1)
        True
        >>> j_flagged(p, (2, 2), (None, None)) == e_p(p, 2) * e_p(p, 2) - e_p(p, 3) * e_p(p, 1)
        True
    """

    if len(alpha) != len(Z):
        raise ValueError(f"alpha and Z must have the same length, but got {len(alpha)} and {len(Z)}.")
    ell = len(alpha)
    supports = [None if z is None else frozenset(z) for z in Z]
    memo: dict[tuple[int, int], NCElement] = {}

    def expand(row: int, used: int) -> NCElement:
        if row == ell:
            return NCElement.one(p)
        if (row, used) in memo:
            return memo[(row, used)]
        total, sign = NCElement.zero(p), 1
        for col in range(ell):
            if used >> col & 1:
                continue
            factor = e_p(p, alpha[row] + col - row, supports[row])
            if factor:
                rest = expand(row + 1, used | 1 << col)
                if rest:
                    total = total + sign * (factor * rest)
            sign = -sign
        memo[(row, used)] = total
        return total

    return expand(0, 0)


@lru_cache(maxsize=None)
def j_schur(p: Poset, shape: Partition) -> NCElement:
    r"""
    Noncommutative P-Schur function J_λ, the flagged function on the conjugate with full supports.
    """

    columns = transpose(shape)
    return j_flagged(p, columns, [None] * len(columns))


def m_p(p: Poset, shape: Partition) -> NCElement:
    r"""
    Noncommutative P-monomial function: the inverse Kostka combination of the J_μ.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> m_p(p, (1, 1, 1)) == e_p(p, 3)
        True
        >>> m_p(p, (2,)) == j_schur(p, (2,)) - j_schur(p, (1, 1))
        True
    """

    shape = tuple(shape)
    total = NCElement.zero(p)
    for mu in partitions(sum(shape)):
        coefficient = inverse_kostka(sum(shape)).get((shape, mu))
        if coefficient:
            total = total + coefficient * j_schur(p, mu)
    return total


def cylindrical_offsets(shape: Partition) -> range:
    columns = transpose(shape)
    if not columns:
        return range(0, 1)
    return range(columns[0] - columns[-1], columns[0] + 1)


def j_cyl(p: Poset, shape: Partition, m: int) -> NCElement:
    r"""
    Noncommutative P-cylindrical Schur function J_{λ/m}.

    Sums the flagged determinants with row offsets `a_i (k + m)` over integer vectors `a` with zero sum,
    where `k = λ_1`. Every factor has degree between 0 and `min(|P|, |λ|)`, which bounds each `a_i`.

    Raises:
        ParamError: If `m` is outside `λ'_1 - λ'_k .. λ'_1`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 3)
        >>> j_cyl(p, (2, 1), 2) == j_schur(p, (2, 1))
        True
    """

    shape = tuple(shape)
    columns = transpose(shape)
    if m not in cylindrical_offsets(shape):
        raise ParamError(f"Offset {m} is outside {list(cylindrical_offsets(shape))} for shape {shape}.")
    if not shape:
        return NCElement.one(p)
    k, period = len(columns), len(columns) + m
    top = min(p.n, sum(shape))
    ranges = []
    for i, column in enumerate(columns):
        low = ceil((-column - (k - 1) + i) / period)
        high = floor((top - column + i) / period)
        ranges.append(range(low, high + 1))
    total = NCElement.zero(p)
    for offsets in product(*ranges):
        if sum(offsets) == 0:
            alpha = [a * period + column for a, column in zip(offsets, columns)]
            total = total + j_flagged(p, alpha, [None] * k)
    return total


def w_beta(p: Poset, beta: Iterable[int], with_t: bool = False) -> NCElement:
    r"""
    Sum of all words of content `beta`, weighted by `t**inv_P(w)` when `with_t`.

    Raises:
        NotNuioError: If `with_t` and `p` carries no total order.

    Examples:
        >>> from ncschur.poset import p_k
        >>> w_beta(p_k(2, 3), [1, 2], with_t=True)
        NCElement({(1, 2): 1, (2, 1): t})
        >>> w_beta(p_k(2, 3), [1, 1], with_t=True)
        NCElement({(1, 1): 1})
    """

    if with_t and p.order is None:
        raise NotNuioError("W_beta(t) needs a natural unit interval order.")
    if not with_t:
        return NCElement(p, {word: 1 for word in words_of_content(p, beta)})
    return NCElement(p, {word: t ** inv_p(p, word) for word in words_of_content(p, beta)})


def pair(f: NCElement, gamma: NCElement) -> Coefficient:
    r"""
    Natural pairing in which words are dual to the monomials they spell.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> pair(NCElement.monomial(p, (3, 1)), NCElement.monomial(p, (3, 1)))
        1
        >>> pair(NCElement.monomial(p, (3, 1)), NCElement.monomial(p, (1, 3)))
        0
    """

    if f.poset != gamma.poset:
        raise ValueError("Elements over different posets cannot be paired.")
    small, large = (f, gamma) if len(f) <= len(gamma) else (gamma, f)
    total: Coefficient = 0
    for word, coefficient in small.terms.items():
        other = large.terms.get(word)
        if other:
            total = total + coefficient * other
    return simplify(total)


def f_gamma(gamma: NCElement, degree: int | None = None) -> QSymExpr:
    r"""
    The quasisymmetric function F_γ: the sum of γ_w Q_{Des_P(w)}.

    `degree` is only consulted when `gamma` is zero.

    Raises:
        MixedDegreeError: If words of different lengths occur.

    Examples:
        >>> from ncschur.poset import p_k
        >>> f_gamma(NCElement.monomial(p_k(2, 3), (3, 1, 2)))
        QSymExpr(3, {(1, 1, 1): 1, (1, 2): 1})
    """

    lengths = gamma.degrees
    if len(lengths) > 1:
        raise MixedDegreeError(f"Words of lengths {sorted(lengths)} occur in one element.")
    n = lengths.pop() if lengths else (degree or 0)
    by_descents: dict[frozenset[int], Coefficient] = {}
    for word, coefficient in gamma.terms.items():
        descents = des_p(gamma.poset, word)
        by_descents[descents] = by_descents.get(descents, 0) + coefficient
    terms: dict[Composition, Coefficient] = {}
    for descents, coefficient in by_descents.items():
        free = [i for i in range(1, n) if i not in descents]
        for mask in range(1 << len(free)):
            cuts = descents.union(free[b] for b in range(len(free)) if mask >> b & 1)
            composition = composition_from_set(n, cuts)
            terms[composition] = terms.get(composition, 0) + coefficient
    return QSymExpr(n, terms)
