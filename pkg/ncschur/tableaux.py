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
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations

from strenum import StrEnum

from .exceptions import ShapeError
from .poset import Content, Poset
from .symfun import Partition, is_partition, transpose
from .utils import UnionFind
from .words import Word, is_power_word


def ascending(p: Poset, chain: Iterable[int]) -> tuple[int, ...]:
    r"""
    Sort the elements of a chain from smallest to largest in `p`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> ascending(p_k(2, 8), [7, 1, 3, 5])
        (1, 3, 5, 7)
    """

    return tuple(sorted(chain, key=cmp_to_key(lambda a, b: -1 if p.lt(a, b) else (1 if p.lt(b, a) else 0))))


@dataclass(frozen=True)
class PTableau:
    r"""
    A filling of a diagram, stored column by column, each column listed from top to bottom.

    Columns are top-justified. For a partition shape the column heights weakly decrease;
    flagged diagrams only need `heights[j + 1] <= heights[j] + 1`.

    Examples:
        >>> t = PTableau.from_rows([[1, 2, 1, 1], [3, 4, 3], [5, 6, 7]])
        >>> t.shape, t.heights
        ((4, 3, 3), (3, 3, 3, 1))
        >>> t.columns[0], t[3, 3]
        ((1, 3, 5), 7)
    """

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(tuple(column) for column in self.columns))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> PTableau:
        if not is_partition(len(row) for row in rows):
            raise ShapeError(f"Rows of lengths {[len(row) for row in rows]} do not form a partition shape.")
        width = len(rows[0]) if rows else 0
        return cls(tuple(tuple(row[c] for row in rows if len(row) > c) for c in range(width)))

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(len(column) for column in self.columns)

    @property
    def shape(self) -> Partition:
        top = max(self.heights, default=0)
        return tuple(sum(1 for h in self.heights if h > r) for r in range(top))

    @property
    def is_young(self) -> bool:
        return all(a >= b for a, b in zip(self.heights, self.heights[1:]))

    @property
    def rows(self) -> list[list[int]]:
        return [[column[r] for column in self.columns if len(column) > r] for r in range(len(self.shape))]

    @property
    def content(self) -> Content:
        return Content(a for column in self.columns for a in column)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        row, col = cell
        return self.columns[col - 1][row - 1]

    def __len__(self) -> int:
        return sum(self.heights)

    def __json__(self) -> dict:
        if self.is_young:
            return {"shape": list(self.shape), "rows": self.rows}
        return {"columns": [list(column) for column in self.columns]}

    @classmethod
    def from_json(cls, data: Mapping) -> PTableau:
        if "columns" in data:
            return cls(tuple(tuple(column) for column in data["columns"]))
        tableau = cls.from_rows(data["rows"])
        if "shape" in data and tableau.shape != tuple(data["shape"]):
            raise ShapeError(f"Rows do not have shape {tuple(data['shape'])}.")
        return tableau


def cread(t: PTableau) -> Word:
    r"""
    Column reading word: each column bottom to top, columns left to right.

    Examples:
        >>> cread(PTableau.from_rows([[1, 2, 1, 1], [3, 4, 3], [5, 6, 7]]))
        (5, 3, 1, 6, 4, 2, 7, 3, 1, 1)
    """

    return tuple(a for column in t.columns for a in reversed(column))


def diagread(t: PTableau) -> Word:
    r"""
    Diagonal reading word: diagonals from the southwesternmost one, each read southeast.

    Examples:
        >>> diagread(PTableau(((1, 3, 5), (3,), (2, 4), (1, 3, 7))))
        (5, 3, 1, 3, 4, 7, 2, 3, 1)
    """

    cells = [(c - r, r, a) for c, column in enumerate(t.columns) for r, a in enumerate(column)]
    return tuple(a for _, _, a in sorted(cells))


def _fill(
    p: Poset,
    heights: Sequence[int],
    supports: Sequence[frozenset[int] | None],
    content: Content | None,
) -> Iterator[PTableau]:
    remaining = dict(content.multiplicities) if content is not None else None
    letters = list(p.elements)
    columns: list[tuple[int, ...]] = []

    def place(c: int, partial: list[int]) -> Iterator[PTableau]:
        if c == len(heights):
            yield PTableau(tuple(columns))
            return
        height = heights[c]
        if len(partial) == height:
            columns.append(tuple(reversed(partial)))
            yield from place(c + 1, [])
            columns.pop()
            return
        row = height - len(partial)
        flagged_bottom = not partial and c > 0 and heights[c - 1] < height
        for a in letters:
            if remaining is not None and not remaining.get(a):
                continue
            if supports[c] is not None and a not in supports[c]:
                continue
            if partial and not p.lt(a, partial[-1]):
                continue
            if c > 0 and heights[c - 1] >= row and not p.inc_lt(columns[c - 1][row - 1], a):
                continue
            if flagged_bottom:
                left = supports[c - 1]
                if left is None or a in left:
                    continue
            if remaining is not None:
                remaining[a] -= 1
            partial.append(a)
            yield from place(c, partial)
            partial.pop()
            if remaining is not None:
                remaining[a] += 1

    if content is not None and len(content) != sum(heights):
        return
    yield from place(0, [])


def enumerate_tableaux(p: Poset, shape: Partition, content: Iterable[int] | None = None) -> Iterator[PTableau]:
    r"""
    Every P-tableau of shape `shape`, of content `content` when given.

    Columns are filled left to right and bottom to top, trying candidates in increasing order.

    Examples:
        >>> from ncschur.poset import antichain, p_k
        >>> [cread(t) for t in enumerate_tableaux(p_k(2, 5), (2, 2), (1, 2, 3, 4))]
        [(3, 1, 4, 2), (4, 2, 3, 1)]
        >>> len(list(enumerate_tableaux(antichain(3), (3,), (1, 2, 3))))
        6
        >>> list(enumerate_tableaux(antichain(2), (1, 1)))
        []
    """

    if not is_partition(shape):
        raise ShapeError(f"{tuple(shape)} is not a partition.")
    heights = transpose(tuple(shape))
    if content is not None:
        content = Content(content).check(p)
    yield from _fill(p, heights, [None] * len(heights), content)


def enumerate_flagged(
    p: Poset,
    alpha: Sequence[int],
    Z: Sequence[Iterable[int] | None],  # pylint: disable=C0103
    content: Iterable[int] | None = None,
) -> Iterator[PTableau]:
    r"""
    Column-flagged P-tableaux: column `j` has `alpha[j]` entries, all drawn from `Z[j]`.

    When a column is taller than its left neighbour, its bottom entry must avoid the neighbour's flag.
    A `None` flag admits every element.

    Raises:
        ShapeError: If some `alpha[j + 1] > alpha[j] + 1`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> len(list(enumerate_flagged(p_k(2, 5), (1, 2), ([1, 2, 3], [1, 2, 3, 4, 5]))))
        13
        >>> list(enumerate_flagged(p_k(2, 5), (1,), ([],)))
        []
    """

    if len(alpha) != len(Z):
        raise ValueError(f"alpha and Z must have the same length, but got {len(alpha)} and {len(Z)}.")
    if any(b > a + 1 for a, b in zip(alpha, alpha[1:])):
        raise ShapeError(f"Column heights {tuple(alpha)} grow by more than one.")
    if any(a < 0 for a in alpha):
        raise ShapeError(f"Column heights {tuple(alpha)} must be non-negative.")
    supports = [None if z is None else frozenset(z) for z in Z]
    if content is not None:
        content = Content(content).check(p)
    yield from _fill(p, tuple(alpha), supports, content)


def is_parray(p: Poset, t: PTableau) -> bool:
    r"""
    Whether `t` has a Young diagram shape and every column is a chain increasing downwards.
    """

    if not t.is_young:
        return False
    return all(p.lt(a, b) for column in t.columns for a, b in zip(column, column[1:]))


def is_ptableau(p: Poset, t: PTableau) -> bool:
    r"""
    Whether `t` is a P-array whose rows are ⩪→-weakly increasing.

    Examples:
        >>> from ncschur.poset import p_k
        >>> is_ptableau(p_k(2, 8), PTableau.from_rows([[1, 2, 1, 1], [3, 4, 3], [5, 6, 7]]))
        True
        >>> is_ptableau(p_k(2, 8), PTableau.from_rows([[3, 1]]))
        False
    """

    if not is_parray(p, t):
        return False
    return all(p.inc_lt(a, b) for row in t.rows for a, b in zip(row, row[1:]))


def is_hook(shape: Sequence[int]) -> bool:
    return is_partition(shape) and all(part <= 1 for part in shape[1:])


def is_key(p: Poset, t: PTableau) -> bool:
    r"""
    Whether a hook P-tableau is a key tableau: `v` followed by the arm is a power word for some `v` in the first column.

    A single column always qualifies, since a one-letter word is a power word.

    Raises:
        ShapeError: If `t` is not hook shaped.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(3, 11)
        >>> is_key(p, PTableau(((1, 5, 8), (4,), (6,), (7,))))
        True
        >>> is_key(p, PTableau(((1, 7, 10), (4,), (5,), (6,))))
        False
    """

    if not t.columns or not is_hook(t.shape):
        raise ShapeError(f"Key tableaux are hook shaped, but got shape {t.shape}.")
    arm = tuple(column[0] for column in t.columns[1:])
    return any(is_power_word(p, (v,) + arm) for v in t.columns[0])


class Balance(StrEnum):
    balanced = "balanced"
    left = "left"
    right = "right"


@dataclass(frozen=True)
class Ladder:
    r"""
    A connected component of the incomparability graph between two chains.

    `left` and `right` hold the entries from the first and the second chain.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def balance(self) -> Balance:
        if len(self.left) == len(self.right):
            return Balance.balanced
        return Balance.left if len(self.left) > len(self.right) else Balance.right

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(sorted(self.left + self.right, reverse=True))

    def is_regular(self, p: Poset) -> bool:
        r"""
        Whether the ladder is a path or a 4-cycle whose two sides differ in size by at most one.
        """

        if abs(len(self.left) - len(self.right)) > 1:
            return False
        degree = [0] * (len(self.left) + len(self.right))
        edges = 0
        for i, a in enumerate(self.left):
            for j, b in enumerate(self.right):
                if p.inc(a, b):
                    edges += 1
                    degree[i] += 1
                    degree[len(self.left) + j] += 1
        vertices = len(degree)
        if vertices == 4 and edges == 4:
            return True
        return edges == vertices - 1 and max(degree, default=0) <= 2

    def __json__(self) -> dict:
        return {"left": list(self.left), "right": list(self.right), "balance": str(self.balance)}


@dataclass(frozen=True)
class LadderDecomp:
    r"""
    Ladders of a pair of chains, from the largest ladder to the smallest.
    """

    ladders: tuple[Ladder, ...]

    def __iter__(self) -> Iterator[Ladder]:
        return iter(self.ladders)

    def __len__(self) -> int:
        return len(self.ladders)

    def __getitem__(self, index: int) -> Ladder:
        return self.ladders[index]

    def ladder(self, i: int) -> Ladder:
        r"""
        The ladder H_i, counting from the smallest one as H_1.
        """

        return self.ladders[len(self.ladders) - i]

    @property
    def balances(self) -> tuple[Balance, ...]:
        return tuple(ladder.balance for ladder in self.ladders)

    def is_left(self) -> bool:
        return Balance.right not in self.balances

    def __json__(self) -> list:
        return [ladder.__json__() for ladder in self.ladders]


def ladder_decomposition(p: Poset, C: Sequence[int], D: Sequence[int]) -> LadderDecomp:  # pylint: disable=C0103
    r"""
    Ladders of the pair of chains `(C, D)`, ordered from the largest to the smallest.

    Distinct ladders are totally ordered: every element of the larger one lies above every element of the smaller.

    Examples:
        >>> from ncschur.poset import p_k
        >>> d = ladder_decomposition(p_k(2, 8), (1, 3, 5, 7), (2, 6))
        >>> [ladder.entries for ladder in d], [str(b) for b in d.balances]
        ([(7, 6, 5), (3, 2, 1)], ['left', 'left'])
        >>> ladder_decomposition(p_k(2, 8), (1, 3, 6), (2, 5, 7)).is_left()
        False
    """

    nodes = [("C", i) for i in range(len(C))] + [("D", j) for j in range(len(D))]
    forest = UnionFind(nodes)
    for i, a in enumerate(C):
        for j, b in enumerate(D):
            if p.inc(a, b):
                forest.union(("C", i), ("D", j))
    ladders = []
    for group in forest.groups():
        left = tuple(C[i] for side, i in sorted(group) if side == "C")
        right = tuple(D[j] for side, j in sorted(group) if side == "D")
        ladders.append(Ladder(left, right))

    def compare(first: Ladder, second: Ladder) -> int:
        for a in first.left + first.right:
            for b in second.left + second.right:
                if p.lt(a, b):
                    return 1
                if p.lt(b, a):
                    return -1
        return 0

    return LadderDecomp(tuple(sorted(ladders, key=cmp_to_key(compare))))


def ladders(p: Poset, t: PTableau) -> LadderDecomp:
    r"""
    Ladders of a tableau with at most two columns.

    Raises:
        ShapeError: If `t` has more than two columns.
    """

    if len(t.columns) > 2:
        raise ShapeError(f"Ladders are defined for at most two columns, but got {len(t.columns)}.")
    columns = list(t.columns) + [()] * (2 - len(t.columns))
    return ladder_decomposition(p, columns[0], columns[1])


def is_left(p: Poset, t: PTableau) -> bool:
    r"""
    Whether no ladder of a tableau with at most two columns is right unbalanced.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 8)
        >>> is_left(p, PTableau(((1, 3, 5, 7), (2, 6)))), is_left(p, PTableau(((1, 3, 6), (2, 5, 7))))
        (True, False)
        >>> is_left(p, PTableau(((1, 3),)))
        True
    """

    return ladders(p, t).is_left()


def is_ptableau_ladder_criterion(p: Poset, t: PTableau) -> bool:
    r"""
    Decide whether a P-array is a P-tableau through the ladders of adjacent columns.

    For each pair of adjacent columns, the smallest `k` ladders together must hold
    at least as many entries of the left column as of the right one, for every `k`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 8)
        >>> is_ptableau_ladder_criterion(p, PTableau(((1, 3, 5, 7), (2, 6))))
        True
        >>> is_ptableau_ladder_criterion(p, PTableau(((3,), (1,))))
        False
    """

    for first, second in zip(t.columns, t.columns[1:]):
        balance = 0
        for ladder in reversed(ladder_decomposition(p, first, second).ladders):
            balance += len(ladder.left) - len(ladder.right)
            if balance < 0:
                return False
    return True


def swap_ladder(
    p: Poset, C: Sequence[int], D: Sequence[int], ladder: Ladder  # pylint: disable=C0103
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    r"""
    Exchange the parts of `ladder` between the chains, returning both chains in increasing order.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 8)
        >>> swap_ladder(p, (1, 3, 6), (2, 5, 7), Ladder((6,), (5, 7)))
        ((1, 3, 5, 7), (2, 6))
    """

    left = [a for a in C if a not in ladder.left] + list(ladder.right)
    right = [b for b in D if b not in ladder.right] + list(ladder.left)
    return ascending(p, left), ascending(p, right)


def theta(p: Poset, t: PTableau) -> tuple[PTableau, tuple[int, ...]]:
    r"""
    Split a P-tableau with at most two columns into a left P-tableau and a Yamanouchi word.

    The word records the unbalanced ladders from the largest down, `1` for left and `2` for right;
    the left tableau swaps every right unbalanced ladder.

    Examples:
        >>> from ncschur.poset import p_k
        >>> left, word = theta(p_k(2, 8), PTableau(((1, 3, 6), (2, 5, 7))))
        >>> left.columns, word
        (((1, 3, 5, 7), (2, 6)), (2, 1))
    """

    decomposition = ladders(p, t)
    columns = list(t.columns) + [()] * (2 - len(t.columns))
    left, right = tuple(columns[0]), tuple(columns[1])
    word = []
    for ladder in decomposition:
        if ladder.balance is Balance.balanced:
            continue
        word.append(1 if ladder.balance is Balance.left else 2)
        if ladder.balance is Balance.right:
            left, right = swap_ladder(p, left, right, ladder)
    swapped = tuple(column for column in (left, right) if column)
    return PTableau(swapped), tuple(word)


def is_yamanouchi(word: Sequence[int]) -> bool:
    balance = 0
    for letter in reversed(word):
        balance += 1 if letter == 1 else -1
        if balance < 0:
            return False
    return True


def yamanouchi_words(length: int, ones: int) -> list[tuple[int, ...]]:
    r"""
    Words of `ones` 1's and `length - ones` 2's in which every suffix has at least as many 1's as 2's.

    Examples:
        >>> yamanouchi_words(3, 2)
        [(1, 2, 1), (2, 1, 1)]
        >>> yamanouchi_words(2, 0)
        []
    """

    words = []
    for positions in combinations(range(length), ones):
        word = tuple(1 if i in positions else 2 for i in range(length))
        if is_yamanouchi(word):
            words.append(word)
    return sorted(words)


def phi_hook(p: Poset, v: Sequence[int], w: Sequence[int]) -> PTableau:
    r"""
    Merge a strictly decreasing word `v` and a power word `w` into a key P-tableau of hook shape.

    When some entry of `v` followed by `w` is a power word, the column is `v` and the arm is `w`;
    otherwise `w_1` drops into the column and the arm is the rest of `w`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> phi_hook(p, (3, 1), (2,)).columns
        ((1, 3), (2,))
        >>> phi_hook(p_k(2, 5), (5, 3), (1,)).columns
        ((1, 3, 5),)
    """

    v, w = tuple(v), tuple(w)
    if not w:
        raise ValueError("The power word must not be empty.")
    column = tuple(reversed(v))
    if any(is_power_word(p, (a,) + w) for a in v):
        return PTableau((column,) + tuple((b,) for b in w))
    if not all(p.comparable(w[0], a) for a in v):
        raise ValueError(f"Letter {w[0]} cannot be inserted into the chain {v}.")
    return PTableau((ascending(p, column + (w[0],)),) + tuple((b,) for b in w[1:]))
