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

import logging
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product

from .exceptions import NotThreeOneFreeError
from .ncalg import NCElement
from .poset import Content, Poset, chains, is_31_free
from .quotient import IdealKind, build, member
from .tableaux import Balance, LadderDecomp, ascending, ladder_decomposition
from .utils import Report, UnionFind

logger = logging.getLogger(__name__)


def _descending(p: Poset, elements: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(ascending(p, elements)))


@dataclass(frozen=True)
class ChainPair:
    r"""
    Two chains `a` and `b` of a poset, each written from its largest element down.

    Raises:
        ValueError: If `a` or `b` is not strictly decreasing.

    Examples:
        >>> from ncschur.poset import p_k
        >>> ChainPair(p_k(2, 6), (5, 3, 1), (4,)).word
        (5, 3, 1, 4)
        >>> ChainPair(p_k(2, 6), (3, 4), ())
        Traceback (most recent call last):
        ValueError: (3, 4) is not a strictly decreasing chain.
    """

    poset: Poset
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        for chain in (self.a, self.b):
            if any(not self.poset.lt(y, x) for x, y in zip(chain, chain[1:])):
                raise ValueError(f"{chain} is not a strictly decreasing chain.")

    @property
    def word(self) -> tuple[int, ...]:
        return self.a + self.b

    @property
    def content(self) -> Content:
        return Content(self.word)

    def __json__(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_json(cls, poset: Poset, data: Mapping) -> ChainPair:
        return cls(poset, tuple(data["a"]), tuple(data["b"]))


def ladder_decomp(pair: ChainPair) -> LadderDecomp:
    r"""
    Ladder decomposition H_m, ..., H_1 of the chains, `a` on the left and `b` on the right.

    Examples:
        >>> from ncschur.poset import p_k
        >>> pair = ChainPair(p_k(2, 17), (15, 12, 10, 8, 5, 3, 1), (16, 14, 12, 9, 7, 2))
        >>> [ladder.entries for ladder in ladder_decomp(pair)]
        [(16, 15, 14), (12, 12), (10, 9, 8, 7), (5,), (3, 2, 1)]
    """

    return ladder_decomposition(pair.poset, pair.a, pair.b)


@dataclass
class Lumps:
    r"""
    Pairing of the ladders of a chain pair and the lumps it induces.

    Ladders are numbered from 1 (the smallest) to m (the largest).

    Attributes:
        decomposition: The ladders, largest first.
        pairs: `(i, j, wraparound)` for each ladder H_i of V^a paired with H_j of V^b.
        unpaired: Indices of ladders left unpaired.
        lumps: Sets of ladder indices, from the smallest lump up.
    """

    decomposition: LadderDecomp
    pairs: list[tuple[int, int, bool]] = field(default_factory=list)
    unpaired: list[int] = field(default_factory=list)
    lumps: list[tuple[int, ...]] = field(default_factory=list)

    def __json__(self) -> dict:
        return {
            "pairs": [{"a": i, "b": j, "wraparound": wrap} for i, j, wrap in self.pairs],
            "unpaired": self.unpaired,
            "lumps": [list(lump) for lump in self.lumps],
        }


def pair_and_lump(pair: ChainPair) -> Lumps:
    r"""
    Pair V^a (a-ladders and balanced ladders) with V^b (b-ladders and balanced ladders), then form lumps.

    Scanning ladders from the smallest, every member of V^a opens a parenthesis and every member of V^b
    closes one, a balanced ladder opening before it closes.
    Unmatched openers and closers are then matched around the circle, the largest opener
    with the smallest closer, repeatedly.
    A pair `i <= j` spans `[i, j]`; a wraparound pair spans `[i, m + 1]` and `[0, j]`;
    an unpaired ladder spans `{i}`. Lumps are the connected components of these intervals.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 17)
        >>> lumps = pair_and_lump(ChainPair(p, (15, 12, 10, 8, 5, 3, 1), (16, 14, 12, 9, 7, 2)))
        >>> lumps.pairs, lumps.unpaired, lumps.lumps
        ([(3, 3, False), (4, 4, False), (2, 5, False)], [1], [(1,), (2, 3, 4, 5)])
        >>> lumps = pair_and_lump(ChainPair(p, (15, 13, 11, 9, 6, 3), (17, 10, 7, 5, 1)))
        >>> lumps.pairs, lumps.unpaired, lumps.lumps
        ([(2, 3, False), (6, 7, False), (5, 1, True)], [4], [(1,), (2, 3), (4,), (5, 6, 7)])
    """

    decomposition = ladder_decomp(pair)
    m = len(decomposition)
    opened: list[int] = []
    closers: list[int] = []
    pairs: list[tuple[int, int, bool]] = []
    for i in range(1, m + 1):
        balance = decomposition.ladder(i).balance
        if balance is not Balance.right:
            opened.append(i)
        if balance is not Balance.left:
            if opened:
                pairs.append((opened.pop(), i, False))
            else:
                closers.append(i)
    while opened and closers:
        pairs.append((opened.pop(), closers.pop(0), True))
    unpaired = sorted(opened + closers)

    forest = UnionFind(range(m + 2))
    for i, j, wrap in pairs:
        for low, high in ((i, m + 1), (0, j)) if wrap else ((i, j),):
            for k in range(low, high):
                forest.union(k, k + 1)
    groups: dict[int, list[int]] = {}
    for i in range(1, m + 1):
        groups.setdefault(forest.find(i), []).append(i)
    lumps = sorted(tuple(group) for group in groups.values())
    return Lumps(decomposition, pairs, unpaired, lumps)


def eta(pair: ChainPair) -> ChainPair:
    r"""
    The combinatorial R-matrix: switch every unpaired ladder to the other chain.

    The result `(c, d)` has `|c| = |b|` and `|d| = |a|`, and `eta` is an involution.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 17)
        >>> image = eta(ChainPair(p, (15, 12, 10, 8, 5, 3, 1), (16, 14, 12, 9, 7, 2)))
        >>> image.a, image.b
        ((15, 12, 10, 8, 5, 2), (16, 14, 12, 9, 7, 3, 1))
        >>> eta(ChainPair(p, (), (5, 3))).a
        (5, 3)
    """

    lumps = pair_and_lump(pair)
    a, b = list(pair.a), list(pair.b)
    for i in lumps.unpaired:
        ladder = lumps.decomposition.ladder(i)
        a = [x for x in a if x not in ladder.left] + list(ladder.right)
        b = [y for y in b if y not in ladder.right] + list(ladder.left)
    p = pair.poset
    return ChainPair(p, _descending(p, a), _descending(p, b))


def same_ladders(first: ChainPair, second: ChainPair) -> bool:
    r"""
    Whether two chain pairs have ladders with the same elements, in the same order.
    """

    return [ladder.entries for ladder in ladder_decomp(first)] == [ladder.entries for ladder in ladder_decomp(second)]


def chain_pairs(p: Poset, k: int, ell: int) -> Iterator[ChainPair]:
    for a, b in product(chains(p, k=k), chains(p, k=ell)):
        yield ChainPair(p, a, b)


def eta_image_counts(p: Poset, k: int, ell: int) -> dict[str, int]:
    r"""
    Sizes of W^k × W^ℓ, of its image under `eta`, and of W^ℓ × W^k, which all agree when `eta` is a bijection.

    Examples:
        >>> from ncschur.poset import p_k
        >>> eta_image_counts(p_k(2, 5), 2, 1)
        {'domain': 30, 'image': 30, 'codomain': 30}
    """

    domain = list(chain_pairs(p, k, ell))
    image = {eta(pair) for pair in domain}
    codomain = len(chains(p, k=ell)) * len(chains(p, k=k))
    return {"domain": len(domain), "image": len(image), "codomain": codomain}


def verify_eta_congruence(p: Poset, k: int, ell: int) -> Report:
    r"""
    Check for every pair in W^k × W^ℓ that `u_a u_b ≡ u_c u_d` modulo the plactic relations,
    where `(c, d) = eta(a, b)`.

    Also records failures of the involution, content and ladder invariants.

    Raises:
        NotThreeOneFreeError: If `p` contains an induced 3+1.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(verify_eta_congruence(p_k(2, 5), 2, 1))
        True
    """

    if not is_31_free(p):
        raise NotThreeOneFreeError("The R-matrix is defined over (3+1)-free posets.")
    report = Report(f"eta-{k}-{ell}")
    for pair in chain_pairs(p, k, ell):
        image = eta(pair)
        detail = {"a": list(pair.a), "b": list(pair.b), "c": list(image.a), "d": list(image.b)}
        if eta(image) != pair:
            report.fail(reason="not an involution", **detail)
            continue
        if image.content != pair.content or not same_ladders(pair, image):
            report.fail(reason="content or ladders changed", **detail)
            continue
        difference = NCElement.monomial(p, pair.word) - NCElement.monomial(p, image.word)
        space = build(p, pair.content, IdealKind.plac)
        if not report.check(member(space, difference), **detail):
            logger.warning("eta(%s, %s) = (%s, %s) is not congruent", pair.a, pair.b, image.a, image.b)
    return report
