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

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from itertools import combinations, permutations
from logging import getLogger
from typing import Any

import networkx as nx

from .exceptions import CycleError, NotNuioError

logger = getLogger(__name__)


class Poset:
    r"""
    Finite strict partial order on the elements `1..n`.

    `Poset` closes the given relations transitively.
    It exposes the three relations every other module reasons with:

    - `lt(a, b)`: `a` is less than `b` (written a → b);
    - `inc(a, b)`: `a` and `b` are incomparable or equal (a ⩪ b);
    - `inc_lt(a, b)`: a ⩪ b or a → b, that is, `b` is not less than `a`.

    Posets are immutable and hashable, so they can key caches.

    Args:
        n: Number of elements.
        relations: Pairs `(a, b)` meaning a → b. Need not be transitively closed.

    Raises:
        ValueError: If a relation references an element outside `1..n`.
        CycleError: If the closure is not irreflexive.

    Examples:
        >>> p = Poset(3, [(1, 2), (2, 3)])
        >>> p.relations()
        [(1, 2), (1, 3), (2, 3)]
        >>> p.lt(1, 3), p.inc(1, 1), p.inc_lt(3, 1)
        (True, True, False)
        >>> Poset(2, [(1, 2), (2, 1)])
        Traceback (most recent call last):
        ncschur.exceptions.CycleError: Relations close up into a cycle through element 1.
    """

    order: tuple[int, ...] | None = None

    def __init__(self, n: int, relations: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"Poset size must be non-negative, but got {n}.")
        self.n = n
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, n + 1))
        for a, b in relations:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"Relation ({a}, {b}) references an element outside 1..{n}.")
            graph.add_edge(a, b)
        cyclic = set(nx.nodes_with_selfloops(graph))
        cyclic.update(e for c in nx.strongly_connected_components(graph) if len(c) > 1 for e in c)
        if cyclic:
            raise CycleError(f"Relations close up into a cycle through element {min(cyclic)}.")
        closure = nx.transitive_closure_dag(graph)
        self._up = (frozenset(),) + tuple(frozenset(closure.successors(a)) for a in range(1, n + 1))
        self._down = (frozenset(),) + tuple(frozenset(closure.predecessors(a)) for a in range(1, n + 1))

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def lt(self, a: int, b: int) -> bool:
        return b in self._up[a]

    def gt(self, a: int, b: int) -> bool:
        return a in self._up[b]

    def inc(self, a: int, b: int) -> bool:
        return b not in self._up[a] and a not in self._up[b]

    def inc_lt(self, a: int, b: int) -> bool:
        return a not in self._up[b]

    def comparable(self, a: int, b: int) -> bool:
        return a != b and not self.inc(a, b)

    def above(self, a: int) -> frozenset[int]:
        return self._up[a]

    def below(self, a: int) -> frozenset[int]:
        return self._down[a]

    def relations(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a in self.elements for b in self._up[a])

    def precedes(self, a: int, b: int) -> bool:
        r"""
        Whether `a` comes strictly before `b` in the attached total order.

        Raises:
            NotNuioError: If no total order is attached.
        """

        raise NotNuioError("Poset carries no total order.")

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self._up == other._up and self.order == other.order

    def __hash__(self) -> int:
        return hash((self.n, self._up, self.order))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.n}, {self.relations()})"

    def __json__(self) -> dict:
        ret: dict[str, Any] = {"n": self.n, "relations": [list(r) for r in self.relations()]}
        if self.order is not None:
            ret["order"] = list(self.order)
        return ret

    @classmethod
    def from_json(cls, data: Mapping) -> Poset:
        r"""
        Build a `Poset` (or a `Nuio` when `order` is present) from its JSON form.

        Examples:
            >>> Poset.from_json({"n": 4, "relations": [[1, 3], [1, 4], [2, 4]], "order": [1, 2, 3, 4]})
            Nuio(4, [(1, 3), (1, 4), (2, 4)], order=(1, 2, 3, 4))
        """

        relations = [tuple(r) for r in data.get("relations", [])]
        if data.get("order") is not None:
            return Nuio(data["n"], relations, data["order"])
        return Poset(data["n"], relations)


class Nuio(Poset):
    r"""
    Natural unit interval order: a `Poset` with a compatible total order.

    The order satisfies:

    1. a → b implies a < b;
    2. for every a → c and every b with a ⩪ b ⩪ c, a < b < c.

    Args:
        n: Number of elements.
        relations: Pairs `(a, b)` meaning a → b.
        order: Permutation of `1..n` listing the elements from smallest to largest.
        check: Whether to verify both conditions.

    Raises:
        NotNuioError: If `order` is not a permutation or violates a condition.

    Examples:
        >>> Nuio(3, [(1, 3)], [1, 2, 3]).precedes(1, 2)
        True
        >>> Nuio(3, [(1, 3)], [2, 1, 3])
        Traceback (most recent call last):
        ncschur.exceptions.NotNuioError: Order (2, 1, 3) needs 1 < 2 < 3.
    """

    def __init__(self, n: int, relations: Iterable[Sequence[int]], order: Sequence[int], check: bool = True):
        super().__init__(n, relations)
        order = tuple(order)
        if sorted(order) != list(self.elements):
            raise NotNuioError(f"Order {order} is not a permutation of 1..{n}.")
        self.order = order
        self._rank = {a: i for i, a in enumerate(order)}
        if check:
            self.validate()

    def validate(self) -> None:
        rank = self._rank
        for a, c in self.relations():
            if rank[a] > rank[c]:
                raise NotNuioError(f"Order {self.order} puts {c} before {a} although {a} -> {c}.")
            for b in self.elements:
                if self.inc(a, b) and self.inc(b, c) and not rank[a] < rank[b] < rank[c]:
                    raise NotNuioError(f"Order {self.order} needs {a} < {b} < {c}.")

    def precedes(self, a: int, b: int) -> bool:
        return self._rank[a] < self._rank[b]

    def rank(self, a: int) -> int:
        return self._rank[a]

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.n}, {self.relations()}, order={self.order})"


class Content(tuple):
    r"""
    Multiset of poset elements, stored as a sorted tuple.

    Examples:
        >>> beta = Content([3, 1, 1])
        >>> beta
        Content(1, 1, 3)
        >>> beta.multiplicities, beta.support, len(beta)
        ({1: 2, 3: 1}, (1, 3), 3)
        >>> Content.from_multiplicities({2: 1, 1: 2})
        Content(1, 1, 2)
    """

    def __new__(cls, elements: Iterable[int] = ()):
        elements = sorted(int(e) for e in elements)
        if elements and elements[0] < 1:
            raise ValueError(f"Content elements must be positive, but got {elements[0]}.")
        return super().__new__(cls, elements)

    @classmethod
    def from_multiplicities(cls, multiplicities: Mapping[int, int]) -> Content:
        if any(m < 0 for m in multiplicities.values()):
            raise ValueError(f"Multiplicities must be non-negative, but got {dict(multiplicities)}.")
        return cls(a for a, m in multiplicities.items() for _ in range(m))

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self).items()))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(set(self)))

    def check(self, p: Poset) -> Content:
        for a in self.support:
            if a > p.n:
                raise ValueError(f"Content {self} has element {a} outside 1..{p.n}.")
        return self

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({', '.join(map(str, self))})"

    def __json__(self) -> list[int]:
        return list(self)


def from_relations(n: int, covers: Iterable[Sequence[int]]) -> Poset:
    r"""
    Transitive closure of `covers` as a `Poset`.

    Examples:
        >>> from_relations(3, [(1, 2), (2, 3)]).lt(1, 3)
        True
        >>> from_relations(3, []).relations()
        []
    """

    return Poset(n, covers)


def p_k(k: int, n: int) -> Nuio:
    r"""
    The natural unit interval order on `1..n` with a → c iff c - a ≥ k.

    Examples:
        >>> p_k(2, 4).relations()
        [(1, 3), (1, 4), (2, 4)]
    """

    if k < 1 or n < 0:
        raise ValueError(f"p_k needs k >= 1 and n >= 0, but got k={k}, n={n}.")
    relations = [(a, c) for a in range(1, n + 1) for c in range(a + k, n + 1)]
    return Nuio(n, relations, range(1, n + 1), check=False)


def chain(n: int) -> Nuio:
    return p_k(1, n)


def antichain(n: int) -> Nuio:
    return Nuio(n, [], range(1, n + 1), check=False)


def is_31_free(p: Poset) -> bool:
    r"""
    Whether no four elements of `p` induce a 3-chain plus an element incomparable to all of it.

    Examples:
        >>> is_31_free(p_k(2, 6))
        True
        >>> is_31_free(Poset(4, [(1, 2), (2, 3)]))
        False
    """

    elements = set(p.elements)
    for a in p.elements:
        for b in p.above(a):
            for c in p.above(b):
                related = p.above(a) | p.below(a) | p.above(b) | p.below(b) | p.above(c) | p.below(c)
                if elements - related - {a, b, c}:
                    return False
    return True


def is_nuio(p: Poset) -> Nuio | None:
    r"""
    A witnessing total order for `p`, or `None` if `p` is not a natural unit interval order.

    Both defining conditions only ever force one element before another,
    so the witnesses are the linear extensions of those forced pairs.
    The lexicographically smallest one is returned.

    Examples:
        >>> is_nuio(p_k(3, 5)).order
        (1, 2, 3, 4, 5)
        >>> is_nuio(Poset(4, [(1, 3), (2, 4)])) is None
        True
        >>> is_nuio(antichain(3)).order
        (1, 2, 3)
    """

    forced = nx.DiGraph()
    forced.add_nodes_from(p.elements)
    forced.add_edges_from(p.relations())
    for a, c in p.relations():
        for b in p.elements:
            if p.inc(a, b) and p.inc(b, c):
                forced.add_edges_from([(a, b), (b, c)])
    try:
        order = list(nx.lexicographical_topological_sort(forced))
    except nx.NetworkXUnfeasible:
        return None
    return Nuio(p.n, p.relations(), order, check=False)


def copies(beta: Content) -> list[tuple[int, int]]:
    r"""
    `(element, copy)` for the elements `1..|beta|` of a blowup, in identifier order.

    Examples:
        >>> copies(Content([1, 1, 3]))
        [(1, 1), (1, 2), (3, 1)]
    """

    return [(a, i) for a, m in Content(beta).multiplicities.items() for i in range(1, m + 1)]


def blowup(p: Poset, beta: Content) -> Poset:
    r"""
    The poset P[β]: each element `a` replaced by `n_a` mutually incomparable copies.

    Copies are numbered as listed by `copies`. When `p` is a `Nuio`,
    the result carries the induced total order with `a^(1) < ... < a^(n_a)`.

    Examples:
        >>> blowup(p_k(2, 3), Content([1, 1, 3]))
        Nuio(3, [(1, 3), (2, 3)], order=(1, 2, 3))
        >>> blowup(chain(2), Content([1, 1, 2])).inc(1, 2)
        True
    """

    beta = Content(beta).check(p)
    labels = copies(beta)
    relations = [
        (i + 1, j + 1) for i, (a, _) in enumerate(labels) for j, (b, _) in enumerate(labels) if p.lt(a, b)
    ]
    if p.order is None:
        return Poset(len(labels), relations)
    assert isinstance(p, Nuio)
    order = sorted(range(1, len(labels) + 1), key=lambda i: (p.rank(labels[i - 1][0]), labels[i - 1][1]))
    return Nuio(len(labels), relations, order, check=False)


def chains(p: Poset, support: Iterable[int] | None = None, k: int = 0) -> list[tuple[int, ...]]:
    r"""
    All chains of length `k` inside `support`, written in decreasing order.

    Examples:
        >>> chains(p_k(2, 4), k=2)
        [(3, 1), (4, 1), (4, 2)]
        >>> chains(p_k(2, 4), k=0)
        [()]
        >>> chains(p_k(2, 4), k=5)
        []
    """

    allowed = sorted(p.elements if support is None else set(support))
    if k < 0:
        return []
    ret: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]) -> None:
        if len(prefix) == k:
            ret.append(prefix)
            return
        for a in allowed:
            if not prefix or p.lt(a, prefix[-1]):
                extend(prefix + (a,))

    extend(())
    return sorted(ret)


def dual(p: Poset) -> Poset:
    r"""
    The dual poset, with every relation reversed.

    A total order, if present, is reversed as well.

    Examples:
        >>> dual(chain(2)).relations()
        [(2, 1)]
        >>> dual(dual(p_k(2, 5))) == p_k(2, 5)
        True
    """

    relations = [(b, a) for a, b in p.relations()]
    if p.order is None:
        return Poset(p.n, relations)
    return Nuio(p.n, relations, tuple(reversed(p.order)), check=False)


def incomparability_edges(p: Poset) -> list[tuple[int, int]]:
    return [(a, b) for a, b in combinations(p.elements, 2) if p.inc(a, b)]


def _canonical(n: int, relations: list[tuple[int, int]]) -> tuple:
    return min(
        tuple(sorted((perm[a - 1], perm[b - 1]) for a, b in relations)) for perm in permutations(range(1, n + 1))
    )


def posets(n: int, three_one_free: bool = True) -> Iterator[Poset]:
    r"""
    One naturally labelled representative of every isomorphism class of posets on `n` elements.

    Intended for exhaustive sweeps with `n <= 6`.

    Examples:
        >>> len(list(posets(3, three_one_free=False)))
        5
        >>> len(list(posets(4, three_one_free=False))), len(list(posets(4)))
        (16, 15)
    """

    pairs = list(combinations(range(1, n + 1), 2))
    seen: set[tuple] = set()
    for mask in range(1 << len(pairs)):
        relations = [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
        chosen = set(relations)
        if any((a, c) not in chosen for a, b in relations for b2, c in relations if b == b2):
            continue
        key = _canonical(n, relations)
        if key in seen:
            continue
        seen.add(key)
        poset = Poset(n, relations)
        if three_one_free and not is_31_free(poset):
            continue
        yield poset
    logger.debug("enumerated %d isomorphism classes of posets on %d elements", len(seen), n)
