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
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from strenum import StrEnum
from sympy.polys.domains import QQ
from sympy.polys.matrices.sdm import SDM

from .eqgraph import GraphKind, content_graph
from .exceptions import ContentMismatchError, NotThreeOneFreeError, TCoefficientError
from .ncalg import NCElement, pair
from .poset import Content, Poset, is_31_free
from .symfun import Coefficient, is_nonnegative, is_t_free, poly_to_list, simplify
from .utils import Report
from .words import Word, local_moves, words_of_content

logger = logging.getLogger(__name__)


class IdealKind(StrEnum):
    r"""
    Two-sided ideals of the free algebra handled per content.

    Generated relation spaces satisfy `plac ⊆ h ⊆ pol`.
    """

    plac = "plac"
    h = "h"
    pol = "pol"


class ProbeStatus(StrEnum):
    NEGATIVE = "NEGATIVE"
    INCONCLUSIVE_POSITIVE = "INCONCLUSIVE-POSITIVE"


class ContentSpace:
    r"""
    Words of one content together with the relation subspace an ideal cuts out of their span.

    The relation rows `w - w'` come from every generator instantiated at every position with every padding,
    which amounts to one row per local move.
    They are reduced to echelon form over ℚ with columns indexed by the words in lexicographic order.

    Examples:
        >>> from ncschur.poset import p_k
        >>> cs = build(p_k(2, 4), (1, 2, 3), "plac")
        >>> cs.dim, cs.rank, cs.relations
        (6, 1, [((2, 3, 1), (3, 1, 2))])
        >>> cs.quotient_dim
        5
    """

    def __init__(self, p: Poset, content: Content, kind: IdealKind):
        self.poset = p
        self.content = content
        self.kind = kind
        self.words: tuple[Word, ...] = tuple(words_of_content(p, content))
        self.index = {word: i for i, word in enumerate(self.words)}
        relations: set[tuple[Word, Word]] = set()
        for word in self.words:
            for _, partner in local_moves(p, word, kind):
                if Content(partner) != content:
                    raise AssertionError(f"Relation {word} - {partner} is not content-homogeneous.")
                relations.add((min(word, partner), max(word, partner)))
        self.relations = sorted(relations)
        self.rows: list[dict[int, Any]] = []
        self.pivots: list[int] = []
        if self.relations:
            matrix = SDM(
                {
                    r: {self.index[first]: QQ(1), self.index[second]: QQ(-1)}
                    for r, (first, second) in enumerate(self.relations)
                },
                (len(self.relations), len(self.words)),
                QQ,
            )
            reduced, _ = matrix.rref()
            for _, row in sorted(reduced.items()):
                if row:
                    self.pivots.append(min(row))
                    self.rows.append(dict(row))
        logger.debug(
            "Built %s space over %r for content %s: %d words, rank %d", kind, p, content, self.dim, self.rank
        )

    @property
    def dim(self) -> int:
        return len(self.words)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def quotient_dim(self) -> int:
        return self.dim - self.rank

    def vector(self, v: NCElement) -> dict[int, Any]:
        r"""
        Coordinates of `v` over ℚ in the word basis of this space.

        Raises:
            ContentMismatchError: If `v` has a word of a different content.
            TCoefficientError: If a coefficient depends on `t`.
        """

        coordinates = {}
        for word, coefficient in v.terms.items():
            if word not in self.index:
                raise ContentMismatchError(f"Word {word} does not have content {self.content}.")
            if not is_t_free(coefficient):
                raise TCoefficientError(f"Coefficient {coefficient} of word {word} depends on t.")
            coordinates[self.index[word]] = QQ(int(simplify(coefficient)))
        return coordinates

    def residual(self, v: NCElement) -> dict[int, Any]:
        residual = self.vector(v)
        for pivot, row in zip(self.pivots, self.rows):
            factor = residual.get(pivot)
            if not factor:
                continue
            for column, value in row.items():
                updated = residual.get(column, QQ(0)) - factor * value
                if updated:
                    residual[column] = updated
                else:
                    residual.pop(column, None)
        return residual

    def contains(self, v: NCElement) -> bool:
        return not self.residual(v)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.kind}, content={self.content}, dim={self.dim}, rank={self.rank})"

    def __json__(self) -> dict:
        return {
            "poset": self.poset.__json__(),
            "content": list(self.content),
            "kind": str(self.kind),
            "dim": self.dim,
            "rank": self.rank,
            "relations": [[list(first), list(second)] for first, second in self.relations],
        }


@lru_cache(maxsize=None)
def _build(p: Poset, content: Content, kind: IdealKind) -> ContentSpace:
    return ContentSpace(p, content, kind)


def build(p: Poset, beta: Iterable[int], kind: IdealKind | str) -> ContentSpace:
    r"""
    The relation space of `kind` on words of content `beta`, cached per `(p, beta, kind)`.

    Raises:
        NotThreeOneFreeError: If `kind` is `plac` or `h` and `p` contains an induced 3+1.

    Examples:
        >>> from ncschur.poset import chain, p_k
        >>> build(chain(3), (1, 2, 3), "plac").rank
        2
        >>> build(p_k(2, 4), (1, 2, 3), "pol").rank
        5
    """

    kind = IdealKind(kind)
    if kind is not IdealKind.pol and not is_31_free(p):
        raise NotThreeOneFreeError(f"The {kind} relations are only defined over (3+1)-free posets.")
    return _build(p, Content(beta).check(p), kind)


def member(cs: ContentSpace, v: NCElement) -> bool:
    r"""
    Whether `v` lies in the relation space, that is, `v ≡ 0` modulo the ideal.

    Raises:
        ContentMismatchError: If `v` has a word of another content.
        TCoefficientError: If a coefficient depends on `t`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> cs = build(p, (1, 2, 3), "plac")
        >>> member(cs, NCElement.monomial(p, (3, 1, 2)) - NCElement.monomial(p, (2, 3, 1)))
        True
        >>> member(cs, NCElement.monomial(p, (3, 1, 2)) - NCElement.monomial(p, (1, 2, 3)))
        False
        >>> member(cs, NCElement.zero(p))
        True
    """

    if v.poset != cs.poset:
        raise ValueError("Element and space are over different posets.")
    return cs.contains(v)


def congruent(cs: ContentSpace, f: NCElement, g: NCElement) -> bool:
    return member(cs, f - g)


def congruent_by_content(p: Poset, f: NCElement, g: NCElement, kind: IdealKind | str) -> bool:
    r"""
    Whether `f ≡ g` modulo the ideal, testing each content of `f - g` in its own space.

    Examples:
        >>> from ncschur.ncalg import h_p
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> congruent_by_content(p, h_p(p, 1) * h_p(p, 2), h_p(p, 2) * h_p(p, 1), "plac")
        True
    """

    for content, part in (f - g).by_content().items():
        if not member(build(p, content, kind), part):
            logger.debug("Elements differ modulo %s on content %s", kind, content)
            return False
    return True


def components_perp_check(cs: ContentSpace, components: Iterable[Iterable[Word]]) -> Report:
    r"""
    Check that each component indicator pairs to zero with every relation row of `cs`.

    A relation `w - w'` is annihilated by an indicator iff `w` and `w'` lie on the same side of it.
    """

    report = Report(f"perp-{cs.kind}")
    for component in components:
        members = set(component)
        for first, second in cs.relations:
            if (first in members) != (second in members):
                report.fail(component=min(members), relation=[list(first), list(second)])
                break
        else:
            report.record(component=min(members))
    return report


@dataclass
class Probe:
    r"""
    Pairings of an element with every component indicator, and whether one of them is negative.
    """

    kind: IdealKind
    status: ProbeStatus = ProbeStatus.INCONCLUSIVE_POSITIVE
    pairings: list[dict] = field(default_factory=list)

    @property
    def negative(self) -> bool:
        return self.status is ProbeStatus.NEGATIVE

    def __json__(self) -> dict:
        return {"kind": str(self.kind), "status": str(self.status), "pairings": self.pairings}


def positivity_probe(p: Poset, f: NCElement, kind: IdealKind | str) -> Probe:
    r"""
    Necessary condition for `f` to be monomial positive modulo the ideal.

    A monomial positive representative pairs nonnegatively with every component indicator,
    so a negative pairing disproves positivity. Nonnegative pairings prove nothing.

    Examples:
        >>> from ncschur.ncalg import e_p
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> str(positivity_probe(p, e_p(p, 2), "plac").status)
        'INCONCLUSIVE-POSITIVE'
        >>> str(positivity_probe(p, -e_p(p, 1), "h").status)
        'NEGATIVE'
    """

    kind = IdealKind(kind)
    if kind is IdealKind.pol:
        raise ValueError("Positivity probes run modulo plac or h only.")
    graph_kind = GraphKind.knuth if kind is IdealKind.plac else GraphKind.h
    probe = Probe(kind)
    for content, part in f.by_content().items():
        graph = content_graph(p, content, graph_kind)
        for representative, component in graph.components.items():
            value: Coefficient = pair(part, NCElement(p, {word: 1 for word in component}))
            probe.pairings.append(
                {"content": list(content), "component": list(representative), "pairing": poly_to_list(value)}
            )
            if not is_nonnegative(value):
                probe.status = ProbeStatus.NEGATIVE
    if probe.negative:
        logger.warning("Negative pairing found modulo %s", kind)
    return probe
