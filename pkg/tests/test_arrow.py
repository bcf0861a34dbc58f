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

from itertools import product
from pathlib import Path

import pytest

from ncschur.arrow import (
    ALLOWED,
    FREE,
    ArrowDiagram,
    ArrowElement,
    E,
    L,
    N,
    PrimitiveStatus,
    R,
    classify_primitive,
    d_lambda,
    d_tilde,
    e_alpha,
    eval_p,
    fill,
    j_arrow,
    j_cyl_arrow,
    m_arrow,
    mask_from_str,
    mask_to_str,
    named_diagram,
    orig,
    reading_boxes,
    rev,
    verify_plactic_diagram,
    verify_rectangle,
)
from ncschur.exceptions import EdgeTypeError, ParamError
from ncschur.functional import load
from ncschur.ncalg import e_p, j_cyl, j_schur
from ncschur.poset import Poset, p_k, posets
from ncschur.tableaux import cread, enumerate_tableaux

DATA = Path(__file__).parent


class TestMasks:

    def test_rev(self):
        assert rev(R) == L
        assert rev(L) == R
        assert rev(E) == E
        assert rev(FREE) == FREE
        assert rev(R | E | N) == L | E | N

    def test_spelling(self):
        assert mask_from_str("ren") == R | E | N
        assert mask_to_str(L | E | N) == "len"
        assert mask_to_str(FREE) == "rlen"
        with pytest.raises(EdgeTypeError):
            mask_from_str("rl")


class TestArrowDiagram:

    def test_edges(self):
        m = ArrowDiagram.from_edges(3, {(1, 2): "en", (3, 2): "l", (1, 3): "en"})
        assert m[2, 3] == R
        assert m[3, 2] == L
        assert m[2, 1] == E | N
        assert not m.is_primitive
        with pytest.raises(ValueError):
            m[2, 2]

    def test_invalid(self):
        with pytest.raises(ValueError):
            ArrowDiagram(3, (R,))
        with pytest.raises(EdgeTypeError):
            ArrowDiagram(2, (R | L,))
        with pytest.raises(ValueError):
            ArrowDiagram.from_edges(2, {(1, 3): "r"})
        with pytest.raises(ValueError):
            ArrowDiagram.from_edges(2, {(1, 1): "r"})

    def test_primitives(self):
        m = ArrowDiagram.from_edges(3, {(1, 2): "en", (2, 3): "r", (1, 3): "en"})
        primitives = list(m.primitives())
        assert len(primitives) == 4
        assert all(k.is_primitive for k in primitives)
        assert len(ArrowElement.diagram(ArrowDiagram.from_edges(3, {})).expand()) == 64

    def test_concat(self):
        left = ArrowDiagram.from_edges(2, {(1, 2): "r"})
        right = ArrowDiagram.from_edges(1, {})
        m = left.concat(right)
        assert m.d == 3
        assert m[1, 2] == R
        assert m[1, 3] == FREE
        assert m[2, 3] == FREE
        assert ArrowDiagram.empty().concat(left) == left

    def test_swap(self):
        edges = {(1, 2): "en", (1, 3): "r", (1, 4): "r", (2, 3): "ren", (2, 4): "ren", (3, 4): "r"}
        m = ArrowDiagram.from_edges(4, edges)
        swapped = m.swap(2)
        assert swapped[2, 3] == L | E | N
        assert swapped[1, 2] == R
        assert swapped[1, 3] == E | N
        assert swapped.swap(2) == m
        with pytest.raises(ParamError):
            m.swap(0)
        with pytest.raises(ParamError):
            m.swap(4)

    def test_json(self):
        m = ArrowDiagram.from_edges(3, {(1, 2): "en", (2, 3): "r", (1, 3): "en"})
        assert m.__json__() == {"d": 3, "edges": {"1,2": "en", "1,3": "en", "2,3": "r"}}
        assert ArrowDiagram.from_json(m.__json__()) == m


class TestArrowElement:

    def test_algebra(self):
        one = ArrowElement.one()
        two = e_alpha((2,))
        assert two * one == two
        assert one * two == two
        assert two * two == e_alpha((2, 2))
        assert not two - two
        assert 3 * two == two + two + two
        assert two.degrees == {2}

    def test_e_alpha(self):
        (m,) = e_alpha((3, 2, 1)).terms
        assert m.d == 6
        assert m[1, 2] == L
        assert m[3, 4] == FREE
        assert m[4, 5] == L
        assert e_alpha(()) == ArrowElement.one()
        assert e_alpha((2, -1)) == ArrowElement.zero()

    def test_json(self):
        z = j_arrow((2, 2))
        assert sorted(term["coef"] for term in z.__json__()["terms"]) == [-1, 1]
        assert ArrowElement.from_json(z.__json__()) == z

    def test_normal_form(self):
        free = ArrowElement.diagram(ArrowDiagram.from_edges(2, {}))
        expanded = free.expand()
        assert free == expanded
        assert hash(free) == hash(expanded)
        assert len({free, expanded}) == 1
        assert not free - expanded
        assert free != ArrowElement.zero()
        pieces = [ArrowDiagram.from_edges(2, {(1, 2): "en"}), ArrowDiagram(2, (R,)), ArrowDiagram(2, (L,))]
        assert free == sum((ArrowElement.diagram(m) for m in pieces), ArrowElement.zero())
        assert free != ArrowElement.diagram(pieces[0])


class TestFill:

    def test_two_plus_two(self):
        p = Poset.from_json(load(DATA / "two_plus_two.json"))
        edges = {(1, 2): "n", (1, 3): "n", (1, 4): "r", (2, 3): "l", (2, 4): "n", (3, 4): "n"}
        m = ArrowDiagram.from_edges(4, edges)
        assert list(fill(p, m)) == [(1, 4, 3, 2), (3, 2, 1, 4)]
        assert orig(p, (1, 4, 3, 2)) == m
        assert orig(p, (3, 2, 1, 4)) == m

    def test_empty(self):
        p = p_k(2, 3)
        assert list(fill(p, ArrowDiagram.empty())) == [()]

    def test_orig(self):
        p = p_k(2, 4)
        for w in [(1, 3, 2), (4, 4, 1), (2, 1, 4, 3)]:
            m = orig(p, w)
            assert m.is_primitive
            assert w in list(fill(p, m))
        with pytest.raises(ValueError):
            orig(p, (1, 5))

    def test_fibers(self):
        for p in posets(3, three_one_free=False):
            for d in range(4):
                fibers: dict[ArrowDiagram, set] = {}
                for w in product(p.elements, repeat=d):
                    fibers.setdefault(orig(p, w), set()).add(w)
                for m in ArrowDiagram.from_function(d, lambda i, j: FREE).primitives():
                    assert set(fill(p, m)) == fibers.get(m, set())

    def test_fill_splits_over_primitives(self):
        p = p_k(2, 4)
        m = ArrowDiagram.from_edges(3, {(1, 2): "en", (2, 3): "r", (1, 3): "len"})
        words = [set(fill(p, primitive)) for primitive in m.primitives()]
        assert set(fill(p, m)) == set().union(*words)
        assert sum(len(w) for w in words) == len(list(fill(p, m)))

    def test_swap_moves_fillings(self):
        def moved(w, i):
            return w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]

        for p in posets(3):
            for edges in product(sorted(ALLOWED), repeat=3):
                m = ArrowDiagram(3, edges)
                for i in (1, 2):
                    assert set(fill(p, m.swap(i))) == {moved(w, i) for w in fill(p, m)}
        p = Poset.from_json(load(DATA / "two_plus_two.json"))
        for m in [*d_lambda((2, 2)).terms, *e_alpha((2, 2)).terms, *e_alpha((1, 2, 1)).terms]:
            for i in (1, 2, 3):
                assert set(fill(p, m.swap(i))) == {moved(w, i) for w in fill(p, m)}

    def test_eval(self):
        p = p_k(2, 4)
        assert eval_p(p, e_alpha((1, 1, 1))) == e_p(p, 1) * e_p(p, 1) * e_p(p, 1)
        assert eval_p(p, e_alpha((2, 1))) == e_p(p, 2) * e_p(p, 1)
        assert eval_p(p, e_alpha((1, 2))) == e_p(p, 1) * e_p(p, 2)
        assert not eval_p(p, e_alpha((3,)))
        assert eval_p(p, ArrowElement.one()) == e_p(p, 0)


class TestClassify:

    def test_closed(self):
        closed = ArrowDiagram.from_edges(3, {(1, 2): "r", (2, 3): "r", (1, 3): "n"})
        report = classify_primitive(closed)
        assert report.status == PrimitiveStatus.closed
        assert report.poset is None
        unequal = ArrowDiagram.from_edges(3, {(1, 2): "e", (2, 3): "r", (1, 3): "n"})
        assert classify_primitive(unequal).status == PrimitiveStatus.closed

    def test_cliques(self):
        p = p_k(2, 4)
        report = classify_primitive(orig(p, (1, 2, 3, 4)))
        assert report.status == PrimitiveStatus.ok
        assert report.poset.relations() == [(1, 3), (1, 4), (2, 4)]
        report = classify_primitive(orig(p, (3, 1, 3)))
        assert report.cliques == ((1, 3), (2,))
        assert report.poset.relations() == [(2, 1)]
        assert report.__json__()["status"] == "ok"

    def test_three_plus_one(self):
        p = Poset.from_json(load(DATA / "three_plus_one.json"))
        assert classify_primitive(orig(p, (1, 2, 3, 4))).status == PrimitiveStatus.not31free

    def test_not_primitive(self):
        with pytest.raises(EdgeTypeError):
            classify_primitive(ArrowDiagram.from_edges(2, {}))


class TestTableauDiagrams:

    def test_reading_boxes(self):
        assert reading_boxes((2, 1)) == [(2, 1), (1, 1), (1, 2)]
        assert reading_boxes((2, 2)) == [(2, 1), (1, 1), (2, 2), (1, 2)]

    def test_d_lambda(self):
        p = p_k(2, 4)
        for shape in [(2, 1), (2, 2), (3, 1), (1, 1, 1)]:
            words = sorted(eval_p(p, d_lambda(shape)).terms)
            assert words == sorted(cread(t) for t in enumerate_tableaux(p, shape))

    def test_d_tilde(self):
        (m,) = d_tilde((2, 2), 0).terms
        assert mask_to_str(m[2, 4]) == "en"
        assert mask_to_str(m[1, 3]) == "en"
        assert d_tilde((2, 1), 2) == d_lambda((2, 1))
        with pytest.raises(ParamError):
            d_tilde((2, 1), 0)

    def test_named(self):
        assert named_diagram("Dtilde", shape=(2, 1), m=2) == d_lambda((2, 1))
        assert named_diagram("E", alpha=(2, 2)) == e_alpha((2, 2))
        with pytest.raises(KeyError):
            named_diagram("nope")


class TestArrowSchur:

    def test_jacobi_trudi(self):
        assert j_arrow((1, 1)) == e_alpha((2,))
        assert j_arrow((2,)) == e_alpha((1, 1)) - e_alpha((2,))
        assert j_arrow((2, 2)) == e_alpha((2, 2)) - e_alpha((3, 1))

    def test_eval_matches_schur(self):
        p = p_k(2, 4)
        for shape in [(2,), (2, 1), (2, 2), (3, 1)]:
            assert eval_p(p, j_arrow(shape)) == j_schur(p, shape)

    def test_monomial(self):
        assert m_arrow((1,)) == e_alpha((1,))
        assert m_arrow((1, 1)) == j_arrow((1, 1))

    def test_cylindrical(self):
        p = p_k(2, 4)
        assert j_cyl_arrow((2, 1), 2) == j_arrow((2, 1))
        assert eval_p(p, j_cyl_arrow((2, 2), 0)) == j_cyl(p, (2, 2), 0)
        with pytest.raises(ParamError):
            j_cyl_arrow((2, 1), 0)

    def test_plactic(self):
        p = p_k(2, 4)
        assert verify_plactic_diagram(p, (2, 1))
        assert verify_plactic_diagram(p, (2, 2))

    def test_rectangle(self):
        p = p_k(2, 4)
        assert verify_rectangle(p, (2, 2))
        with pytest.raises(ParamError):
            verify_rectangle(p, (2, 1))
