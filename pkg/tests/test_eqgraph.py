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
from pathlib import Path

import pytest

from ncschur.eqgraph import (
    EquivGraph,
    build_graph,
    content_graph,
    f_of_component,
    verify_e_commute,
    verify_schur_theorem,
)
from ncschur.exceptions import NotClosedError, NotThreeOneFreeError
from ncschur.functional import load
from ncschur.poset import Poset, p_k
from ncschur.symfun import SymExpr

DATA = Path(__file__).parent


def expansions(graph: EquivGraph) -> Counter:
    return Counter(tuple(sorted(f.terms.items())) for f in graph.functions.values())


class TestKnuthGraph:

    def test_distinct_content(self):
        graph = content_graph(p_k(2, 5), (1, 2, 3, 4))
        assert len(graph) == 24
        assert len(graph.components) == 13
        assert expansions(graph) == Counter(
            {
                (((2, 2), 1),): 1,
                (((3, 1), 1),): 3,
                (((2, 2), 1), ((3, 1), 1)): 1,
                (((4,), 1),): 8,
            }
        )

    def test_repeated_letter(self):
        graph = content_graph(p_k(2, 5), (1, 1, 2, 3, 4), inv=2)
        assert len(graph.components) == 8
        assert expansions(graph) == Counter(
            {
                (((3, 2), 1), ((4, 1), 1)): 1,
                (((3, 2), 1),): 1,
                (((4, 1), 1),): 2,
                (((5,), 1),): 4,
            }
        )

    def test_schur_theorem(self):
        assert verify_schur_theorem(content_graph(p_k(2, 5), (1, 2, 3, 4)))
        assert verify_schur_theorem(content_graph(p_k(2, 5), (1, 1, 2, 3, 4), inv=2))

    def test_e_commute(self):
        graph = content_graph(p_k(2, 5), (1, 2, 3, 4))
        assert verify_e_commute(graph, 3, 1)
        assert verify_e_commute(graph, 2, 2)

    def test_component_of(self):
        graph = content_graph(p_k(2, 5), (1, 2, 3, 4))
        assert f_of_component(graph, (3, 4, 1, 2)) == SymExpr(4, "s", {(2, 2): 1})
        for representative, group in graph.components.items():
            assert all(graph.component_of(word) == representative for word in group)
            assert representative == min(group)

    def test_schur_needs_knuth(self):
        with pytest.raises(ValueError):
            verify_schur_theorem(content_graph(p_k(2, 4), (1, 2, 3), "h"))


class TestHGraph:

    def test_component_counts(self):
        p = p_k(3, 6)
        counts = [len(content_graph(p, (1, 2, 3, 4, 5), "h", inv=d).components) for d in range(8)]
        assert counts == [1, 4, 5, 4, 4, 5, 4, 1]

    def test_expansions(self):
        graph = content_graph(p_k(3, 6), (1, 2, 3, 4, 5), "h", inv=3)
        assert expansions(graph) == Counter(
            {
                (((3, 2), 1), ((4, 1), 3), ((5,), 5)): 1,
                (((4, 1), 1), ((5,), 1)): 1,
                (((5,), 1),): 2,
            }
        )

    def test_gap_in_content(self):
        graph = content_graph(p_k(3, 6), (1, 2, 3, 4, 6), "h", inv=3)
        assert [len(group) for group in graph.components.values()] == [22, 22]
        expected = SymExpr(5, "h", {(5,): 2, (4, 1): 2, (3, 2): 1})
        assert all(f == expected for f in graph.functions.values())


class TestInvalid:

    def test_three_plus_one(self):
        p = Poset.from_json(load(DATA / "three_plus_one.json"))
        with pytest.raises(NotThreeOneFreeError):
            content_graph(p, (1, 2, 4))

    def test_not_closed(self):
        with pytest.raises(NotClosedError) as excinfo:
            build_graph(p_k(2, 4), [(3, 1, 2)])
        assert excinfo.value.edge == ((3, 1, 2), (2, 3, 1))

    def test_build_graph(self):
        graph = content_graph(p_k(2, 4), (1, 2, 3))
        rebuilt = build_graph(p_k(2, 4), reversed(graph.vertices))
        assert rebuilt.vertices == graph.vertices
        assert rebuilt.components == graph.components


class TestSerialisation:

    def test_json(self):
        graph = content_graph(p_k(2, 4), (1, 2, 3))
        data = graph.__json__()
        assert data["kind"] == "knuth"
        assert len(data["vertices"]) == 6
        assert data["edges"] == [{"source": [2, 3, 1], "target": [3, 1, 2], "label": 2}]
        assert len(data["components"]) == 5

    def test_dot(self):
        dot = content_graph(p_k(2, 4), (1, 2, 3)).to_dot()
        assert dot.startswith("graph knuth {")
        assert '"231" -- "312" [label="2"];' in dot
        assert dot.count("subgraph cluster_") == 5
