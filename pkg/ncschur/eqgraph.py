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
from collections.abc import Iterable, Sequence
from functools import cached_property

from strenum import StrEnum

from .exceptions import NotClosedError, NotThreeOneFreeError
from .ncalg import NCElement, e_p, f_gamma, pair
from .poset import Content, Poset, is_31_free
from .symfun import Basis, Partition, SymExpr, change_basis, detect_symmetric, partitions
from .tableaux import cread, enumerate_tableaux
from .utils import Report, UnionFind
from .words import Word, inv_p, local_moves, words_of_content

logger = logging.getLogger(__name__)


class GraphKind(StrEnum):
    knuth = "knuth"
    h = "h"


class EquivGraph:
    r"""
    Words joined by P-Knuth transformations (`knuth`), or by the moves of an H-graph (`h`).

    Knuth edges are labelled by the middle position of the rewritten factor,
    H-graph edges by `"comparable"` or `"triple"`.
    Each component is identified by its lexicographically least word.

    Args:
        p: A (3+1)-free poset.
        vertices: Words closed under the moves of `kind`.
        kind: `knuth` or `h`.

    Raises:
        NotThreeOneFreeError: If `p` contains an induced 3+1.
        NotClosedError: If a move leads out of `vertices`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> g = content_graph(p_k(2, 4), (1, 2, 3), "knuth")
        >>> g.edges
        [((2, 3, 1), 2, (3, 1, 2))]
        >>> len(g.components), g.component_of((3, 1, 2))
        (5, (2, 3, 1))
    """

    def __init__(self, p: Poset, vertices: Iterable[Sequence[int]], kind: GraphKind | str = GraphKind.knuth):
        kind = GraphKind(kind)
        if not is_31_free(p):
            raise NotThreeOneFreeError("Equivalence graphs are only built over (3+1)-free posets.")
        self.poset = p
        self.kind = kind
        self.vertices: tuple[Word, ...] = tuple(sorted({tuple(v) for v in vertices}))
        members = set(self.vertices)
        edges = set()
        forest = UnionFind(self.vertices)
        for word in self.vertices:
            for label, partner in local_moves(p, word, kind):
                if partner not in members:
                    raise NotClosedError((word, partner))
                if word < partner:
                    edges.add((word, label, partner))
                forest.union(word, partner)
        self.edges: list[tuple[Word, int | str, Word]] = sorted(edges, key=lambda e: (e[0], e[2], str(e[1])))
        components = {}
        for group in forest.groups():
            group = sorted(group)
            components[group[0]] = tuple(group)
        self.components: dict[Word, tuple[Word, ...]] = dict(sorted(components.items()))
        self._representative = {word: rep for rep, group in self.components.items() for word in group}
        logger.debug(
            "Built %s graph on %d vertices: %d edges, %d components",
            kind,
            len(self.vertices),
            len(self.edges),
            len(self.components),
        )

    def component_of(self, word: Sequence[int]) -> Word:
        return self._representative[tuple(word)]

    def indicator(self, representative: Sequence[int]) -> NCElement:
        return NCElement.sum_of(self.poset, self.components[tuple(representative)])

    @cached_property
    def functions(self) -> dict[Word, SymExpr]:
        return {rep: f_of_component(self, rep) for rep in self.components}

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}({self.kind}, vertices={len(self.vertices)}, "
            f"edges={len(self.edges)}, components={len(self.components)})"
        )

    def __json__(self) -> dict:
        return {
            "poset": self.poset.__json__(),
            "kind": str(self.kind),
            "vertices": [list(word) for word in self.vertices],
            "edges": [{"source": list(u), "target": list(v), "label": label} for u, label, v in self.edges],
            "components": [
                {"representative": list(rep), "vertices": [list(word) for word in group], "f": self.functions[rep]}
                for rep, group in self.components.items()
            ],
        }

    def to_dot(self) -> str:
        r"""
        Graphviz source, one cluster per component.
        """

        def name(word: Word) -> str:
            return '"' + "".join(map(str, word)) + '"' if all(a < 10 for a in word) else f'"{word}"'

        lines = [f"graph {self.kind} {{"]
        for i, (rep, group) in enumerate(self.components.items()):
            lines.append(f"  subgraph cluster_{i} {{")
            lines.append(f'    label="{self.functions[rep]}";')
            lines.extend(f"    {name(word)};" for word in group)
            lines.append("  }")
        lines.extend(f'  {name(u)} -- {name(v)} [label="{label}"];' for u, label, v in self.edges)
        lines.append("}")
        return "\n".join(lines)


def build_graph(p: Poset, vertices: Iterable[Sequence[int]], kind: GraphKind | str = GraphKind.knuth) -> EquivGraph:
    r"""
    The P-Knuth graph or H-graph on `vertices`.

    Raises:
        NotThreeOneFreeError: If `p` contains a 3+1.
        NotClosedError: If a move leaves the vertex set.
    """

    return EquivGraph(p, vertices, kind)


def content_graph(
    p: Poset, beta: Iterable[int], kind: GraphKind | str = GraphKind.knuth, inv: int | None = None
) -> EquivGraph:
    r"""
    The graph on all words of content `beta`, or on those with `inv_P(w) = inv` when `inv` is given.

    Examples:
        >>> from ncschur.poset import p_k
        >>> len(content_graph(p_k(2, 5), (1, 2, 3, 4)).components)
        13
        >>> len(content_graph(p_k(2, 5), (1, 1, 2, 3, 4), inv=2).components)
        8
    """

    if inv is None:
        vertices = words_of_content(p, beta)
    else:
        vertices = words_of_content(p, beta, filter=lambda w: inv_p(p, w) == inv)
    return build_graph(p, vertices, kind)


def f_of_component(g: EquivGraph, word: Sequence[int]) -> SymExpr:
    r"""
    The symmetric function F_Γ of the component containing `word`.

    Knuth graph components are expanded in the Schur basis, H-graph components in the h basis.

    Raises:
        NotSymmetric: If F_Γ is not symmetric.

    Examples:
        >>> from ncschur.poset import p_k
        >>> g = content_graph(p_k(2, 5), (1, 2, 3, 4))
        >>> f_of_component(g, (3, 4, 1, 2)).terms
        {(2, 2): 1}
    """

    representative = g.component_of(word)
    quasi = f_gamma(g.indicator(representative), len(representative))
    basis = Basis.s if g.kind is GraphKind.knuth else Basis.h
    return change_basis(detect_symmetric(quasi), basis)


def _tableau_shapes(p: Poset, content: Content) -> dict[Word, list[Partition]]:
    shapes: dict[Word, list[Partition]] = {}
    for shape in partitions(len(content)):
        for tableau in enumerate_tableaux(p, shape, content):
            shapes.setdefault(cread(tableau), []).append(shape)
    return shapes


def verify_schur_theorem(g: EquivGraph) -> Report:
    r"""
    Compare each component's Schur expansion with the P-tableaux whose column reading word lies in it.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(verify_schur_theorem(content_graph(p_k(2, 5), (1, 2, 3, 4))))
        True
    """

    if g.kind is not GraphKind.knuth:
        raise ValueError("The Schur expansion theorem concerns P-Knuth graphs.")
    report = Report("schur")
    by_content: dict[Content, dict[Word, list[Partition]]] = {}
    for rep, group in g.components.items():
        content = Content(rep)
        if content not in by_content:
            by_content[content] = _tableau_shapes(g.poset, content)
        counts: dict[Partition, int] = {}
        for word in group:
            for shape in by_content[content].get(word, ()):
                counts[shape] = counts.get(shape, 0) + 1
        expected = g.functions[rep]
        counted = SymExpr(len(rep), Basis.s, counts)
        if not report.check(expected == counted, component=list(rep), expansion=expected, tableaux=counted):
            logger.warning("Component %s has expansion %r but tableau count %r", rep, expected, counted)
    return report


def verify_e_commute(g: EquivGraph, k: int, ell: int) -> Report:
    r"""
    Check `<e_k e_ℓ, γ> = <e_ℓ e_k, γ>` for every component indicator γ.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(verify_e_commute(content_graph(p_k(2, 4), (1, 2, 3)), 2, 1))
        True
    """

    p = g.poset
    left, right = e_p(p, k) * e_p(p, ell), e_p(p, ell) * e_p(p, k)
    report = Report(f"e-commute-{k}-{ell}")
    for rep in g.components:
        indicator = g.indicator(rep)
        first, second = pair(left, indicator), pair(right, indicator)
        if not report.check(first == second, component=list(rep), left=first, right=second):
            logger.warning("e_%d e_%d and e_%d e_%d differ on component %s", k, ell, ell, k, rep)
    return report
