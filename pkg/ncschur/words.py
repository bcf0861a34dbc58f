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

from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Tuple

from sympy.utilities.iterables import multiset_permutations

from .exceptions import NotNuioError
from .poset import Content, Poset

Word = Tuple[int, ...]


def as_word(p: Poset, letters: Iterable[int]) -> Word:
    r"""
    Validate `letters` against `p` and return them as a `Word`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> as_word(p_k(2, 5), [3, 1, 4, 2])
        (3, 1, 4, 2)
        >>> as_word(p_k(2, 5), [6])
        Traceback (most recent call last):
        ValueError: Letter 6 is not an element of a poset on 1..5.
    """

    word = tuple(int(a) for a in letters)
    for a in word:
        if not 1 <= a <= p.n:
            raise ValueError(f"Letter {a} is not an element of a poset on 1..{p.n}.")
    return word


def des_p(p: Poset, w: Sequence[int]) -> frozenset[int]:
    r"""
    P-descent set: positions `i` with w_i greater than w_{i+1} in `p`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> sorted(des_p(p_k(2, 5), (3, 1, 4, 2)))
        [1, 3]
        >>> des_p(p_k(2, 5), ())
        frozenset()
    """

    return frozenset(i for i in range(1, len(w)) if p.lt(w[i], w[i - 1]))


def inv_p(p: Poset, w: Sequence[int]) -> int:
    r"""
    Number of pairs `i < j` with w_i after w_j in the total order and w_i ⩪ w_j.

    Raises:
        NotNuioError: If `p` carries no total order.

    Examples:
        >>> from ncschur.poset import p_k
        >>> inv_p(p_k(2, 5), (4, 1, 1, 3, 2))
        2
        >>> inv_p(p_k(2, 5), (2, 1))
        1
    """

    if p.order is None:
        raise NotNuioError("inv_P needs a natural unit interval order.")
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if p.precedes(w[j], w[i]) and p.inc(w[i], w[j]))


@dataclass(frozen=True)
class Classification:
    r"""
    Monotonicity flags of a word.

    Attributes:
        strictly_decreasing: each letter is greater than the next.
        weakly_increasing: no P-descents.
        power: weakly increasing and the last index is the only right-left minimum.
        minima: 1-based indices `i` with w_i less than every later letter.
    """

    strictly_decreasing: bool
    weakly_increasing: bool
    power: bool
    minima: frozenset[int]

    @property
    def other(self) -> bool:
        return not (self.strictly_decreasing or self.weakly_increasing)


def right_left_minima(p: Poset, w: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i in range(len(w)) if all(p.lt(w[i], w[j]) for j in range(i + 1, len(w))))


def classify(p: Poset, w: Sequence[int]) -> Classification:
    r"""
    Classify a word as strictly decreasing, weakly increasing and power.

    Examples:
        >>> from ncschur.poset import p_k
        >>> c = classify(p_k(3, 10), (5, 4, 6, 7))
        >>> c.power, sorted(c.minima)
        (True, [4])
        >>> c = classify(p_k(3, 10), (1, 4, 5, 6))
        >>> c.weakly_increasing, c.power, sorted(c.minima)
        (True, False, [1, 4])
        >>> c = classify(p_k(3, 10), (2,))
        >>> c.strictly_decreasing, c.weakly_increasing, c.power
        (True, True, True)
    """

    descents = des_p(p, w)
    strictly_decreasing = len(descents) == max(len(w) - 1, 0)
    weakly_increasing = not descents
    minima = right_left_minima(p, w)
    power = weakly_increasing and minima <= {len(w)}
    return Classification(strictly_decreasing, weakly_increasing, power, minima)


def is_power_word(p: Poset, w: Sequence[int]) -> bool:
    return classify(p, w).power


def words_of_content(
    p: Poset, beta: Iterable[int], filter: Callable[[Word], bool] | None = None  # pylint: disable=W0622
) -> Iterator[Word]:
    r"""
    Every distinct arrangement of `beta`, in lexicographic order.

    Examples:
        >>> from ncschur.poset import p_k
        >>> list(words_of_content(p_k(2, 3), [1, 1, 2]))
        [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
        >>> len(list(words_of_content(p_k(2, 3), [1, 2, 3], filter=lambda w: w[0] == 1)))
        2
    """

    beta = Content(beta).check(p)
    if not beta:
        if filter is None or filter(()):
            yield ()
        return
    for letters in multiset_permutations(list(beta)):
        word = tuple(letters)
        if filter is None or filter(word):
            yield word


def weakly_increasing_words(p: Poset, ell: int, letters: Iterable[int] | None = None) -> Iterator[Word]:
    r"""
    Words `a_1 ... a_ell` with a_i ⩪→ a_{i+1} throughout, in lexicographic order.

    Examples:
        >>> from ncschur.poset import p_k
        >>> list(weakly_increasing_words(p_k(2, 3), 2))
        [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)]
    """

    alphabet = sorted(p.elements if letters is None else set(letters))

    def extend(prefix: Word) -> Iterator[Word]:
        if len(prefix) == ell:
            yield prefix
            return
        for a in alphabet:
            if not prefix or p.inc_lt(prefix[-1], a):
                yield from extend(prefix + (a,))

    if ell >= 0:
        yield from extend(())


def power_words(p: Poset, ell: int, letters: Iterable[int] | None = None) -> Iterator[Word]:
    for word in weakly_increasing_words(p, ell, letters):
        if right_left_minima(p, word) <= {ell}:
            yield word


def knuth_moves(p: Poset, w: Word) -> Iterator[tuple[int, int, Word]]:
    r"""
    P-Knuth transformations applicable to `w`.

    Yields `(i, kind, partner)` where letters `i - 1, i, i + 1` (1-based) are rewritten
    by relation `kind`:

    1. `bac ~ bca` for a → b, b ⩪→ c and a → c;
    2. `cab ~ acb` for a ⩪→ b, b → c and a → c;
    3. `cab ~ bca` for a ⩪ b ⩪ c and a → c.

    Examples:
        >>> from ncschur.poset import p_k
        >>> list(knuth_moves(p_k(2, 4), (3, 1, 2)))
        [(2, 3, (2, 3, 1))]
        >>> list(knuth_moves(p_k(2, 4), (2, 3, 1)))
        [(2, 3, (3, 1, 2))]
    """

    lt, inc, inc_lt = p.lt, p.inc, p.inc_lt
    for s in range(len(w) - 2):
        x, y, z = w[s], w[s + 1], w[s + 2]
        head, tail = w[:s], w[s + 3 :]
        i = s + 2
        if lt(y, x) and inc_lt(x, z) and lt(y, z):  # bac -> bca
            yield i, 1, head + (x, z, y) + tail
        if lt(z, x) and inc_lt(x, y) and lt(z, y):  # bca -> bac
            yield i, 1, head + (x, z, y) + tail
        if inc_lt(y, z) and lt(z, x) and lt(y, x):  # cab -> acb
            yield i, 2, head + (y, x, z) + tail
        if inc_lt(x, z) and lt(z, y) and lt(x, y):  # acb -> cab
            yield i, 2, head + (y, x, z) + tail
        if inc(y, z) and inc(z, x) and lt(y, x):  # cab -> bca
            yield i, 3, head + (z, x, y) + tail
        if inc(z, x) and inc(x, y) and lt(z, y):  # bca -> cab
            yield i, 3, head + (y, z, x) + tail


def comparable_moves(p: Poset, w: Word) -> Iterator[tuple[int, Word]]:
    r"""
    Swaps of adjacent comparable letters, as `(i, partner)` with `i` the 1-based left position.

    Examples:
        >>> from ncschur.poset import p_k
        >>> list(comparable_moves(p_k(2, 4), (3, 1, 2)))
        [(1, (1, 3, 2))]
    """

    for s in range(len(w) - 1):
        x, y = w[s], w[s + 1]
        if p.comparable(x, y):
            yield s + 1, w[:s] + (y, x) + w[s + 2 :]


def transposition_moves(w: Word) -> Iterator[tuple[int, Word]]:
    for s in range(len(w) - 1):
        x, y = w[s], w[s + 1]
        if x != y:
            yield s + 1, w[:s] + (y, x) + w[s + 2 :]


def local_moves(p: Poset, w: Word, kind: str) -> Iterator[tuple[int | str, Word]]:
    r"""
    Labelled neighbours of `w` under the local rewriting rules of `kind`.

    - `knuth` (or `plac`): P-Knuth transformations, labelled by position;
    - `h`: swaps of adjacent comparable letters, labelled `"comparable"`,
      together with the `cab ~ bca` transformations, labelled `"triple"`;
    - `pol`: every swap of adjacent distinct letters, labelled by position.

    Examples:
        >>> from ncschur.poset import p_k
        >>> list(local_moves(p_k(2, 4), (3, 1, 2), "h"))
        [('comparable', (1, 3, 2)), ('triple', (2, 3, 1))]
        >>> list(local_moves(p_k(2, 4), (1, 2), "pol"))
        [(1, (2, 1))]
    """

    if kind in ("knuth", "plac"):
        for i, _, partner in knuth_moves(p, w):
            yield i, partner
    elif kind == "h":
        for _, partner in comparable_moves(p, w):
            yield "comparable", partner
        for _, move, partner in knuth_moves(p, w):
            if move == 3:
                yield "triple", partner
    elif kind == "pol":
        yield from transposition_moves(w)
    else:
        raise ValueError(f"Unknown kind of moves: {kind}.")
