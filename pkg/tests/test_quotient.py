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

from pathlib import Path

import pytest

from ncschur.eqgraph import content_graph
from ncschur.exceptions import ContentMismatchError, NotThreeOneFreeError, TCoefficientError
from ncschur.functional import load
from ncschur.ncalg import NCElement, e_p
from ncschur.poset import Poset, chain, p_k
from ncschur.quotient import IdealKind, build, components_perp_check, congruent_by_content, member, positivity_probe
from ncschur.symfun import t

DATA = Path(__file__).parent


class TestContentSpace:

    def test_nested_ranks(self):
        p = p_k(2, 5)
        plac, h, pol = (build(p, (1, 2, 3, 4), kind) for kind in IdealKind)
        assert plac.dim == h.dim == pol.dim == 24
        assert plac.rank <= h.rank <= pol.rank == 23

    def test_quotient_counts_components(self):
        p = p_k(2, 5)
        assert build(p, (1, 2, 3, 4), "plac").quotient_dim == 13
        assert build(chain(3), (1, 2, 3), "plac").quotient_dim == 4

    def test_cached(self):
        assert build(p_k(2, 4), (1, 2, 3), "plac") is build(p_k(2, 4), [3, 2, 1], IdealKind.plac)

    def test_three_plus_one(self):
        p = Poset.from_json(load(DATA / "three_plus_one.json"))
        with pytest.raises(NotThreeOneFreeError):
            build(p, (1, 2, 3, 4), "plac")
        assert build(p, (1, 2), "pol").rank == 1

    def test_invalid_vectors(self):
        p = p_k(2, 4)
        cs = build(p, (1, 2, 3), "plac")
        with pytest.raises(ContentMismatchError):
            member(cs, NCElement.monomial(p, (1, 2)))
        with pytest.raises(TCoefficientError):
            member(cs, NCElement.monomial(p, (1, 2, 3), t))
        with pytest.raises(ValueError):
            member(cs, NCElement.monomial(p_k(2, 5), (1, 2, 3)))

    def test_json(self):
        data = build(p_k(2, 4), (1, 2, 3), "plac").__json__()
        assert data["kind"] == "plac"
        assert data["relations"] == [[[2, 3, 1], [3, 1, 2]]]


class TestCongruence:

    def test_elementary_commute(self):
        p = p_k(2, 4)
        left, right = e_p(p, 2) * e_p(p, 1), e_p(p, 1) * e_p(p, 2)
        assert left != right
        assert congruent_by_content(p, left, right, "plac")

    def test_not_congruent(self):
        p = p_k(2, 4)
        assert not congruent_by_content(p, NCElement.monomial(p, (1, 2)), NCElement.monomial(p, (2, 1)), "plac")
        assert congruent_by_content(p, NCElement.monomial(p, (1, 2)), NCElement.monomial(p, (2, 1)), "pol")

    def test_components_perp(self):
        p = p_k(2, 5)
        cs = build(p, (1, 2, 3, 4), "plac")
        graph = content_graph(p, (1, 2, 3, 4))
        assert components_perp_check(cs, graph.components.values())
        word = graph.edges[0][0]
        assert not components_perp_check(cs, [[word]])


class TestPositivityProbe:

    def test_statuses(self):
        p = p_k(2, 4)
        assert not positivity_probe(p, e_p(p, 2), "plac").negative
        probe = positivity_probe(p, -e_p(p, 1), "h")
        assert probe.negative
        assert probe.__json__()["status"] == "NEGATIVE"

    def test_pol(self):
        p = p_k(2, 4)
        with pytest.raises(ValueError):
            positivity_probe(p, e_p(p, 1), "pol")
