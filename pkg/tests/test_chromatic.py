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

from itertools import combinations_with_replacement
from pathlib import Path

import pytest

from ncschur.chromatic import (
    e_coeff_hook,
    e_coeff_twocol,
    e_expansion,
    m_coefficient_by_pairing,
    schur_expansion_gasharov,
    x_direct,
    x_via_f,
)
from ncschur.exceptions import NotNuioError, NotThreeOneFreeError, ShapeError
from ncschur.functional import load
from ncschur.poset import Poset, antichain, is_nuio, p_k, posets
from ncschur.symfun import SymExpr, omega, partitions, t

DATA = Path(__file__).parent


class TestChromatic:

    def test_distinct_content(self):
        x = x_direct(p_k(2, 5), (1, 2, 3, 4))
        assert omega(x).to("s") == SymExpr(4, "s", {(4,): 8, (3, 1): 4, (2, 2): 2})

    def test_path_with_t(self):
        x = x_direct(p_k(2, 3), (1, 2, 3), with_t=True)
        assert x == SymExpr(3, "m", {(2, 1): t, (1, 1, 1): 1 + 4 * t + t**2})
        assert omega(x).to("s") == SymExpr(3, "s", {(2, 1): t, (3,): 1 + 2 * t + t**2})

    def test_copies(self):
        assert x_direct(antichain(1), (1, 1)) == SymExpr(2, "e", {(2,): 1})

    def test_routes_agree(self):
        p = p_k(2, 4)
        for beta in [(1, 2, 3), (1, 1, 2), (1, 3, 4), (2, 2, 3, 4)]:
            assert x_direct(p, beta) == x_via_f(p, beta)
            assert x_direct(p, beta, with_t=True) == x_via_f(p, beta, with_t=True)

    def test_routes_agree_over_nuio_posets(self):
        for n in range(1, 6):
            for p in posets(n):
                q = is_nuio(p)
                if q is None:
                    continue
                contents = [tuple(q.elements)]
                contents += [c for size in (1, 2, 3) for c in combinations_with_replacement(q.elements, size)]
                for beta in contents:
                    assert x_direct(q, beta, with_t=True) == x_via_f(q, beta, with_t=True)
                full = contents[0]
                expected = omega(x_direct(q, full, with_t=True)).to("s")
                assert schur_expansion_gasharov(q, full, with_t=True) == expected

    def test_t_needs_order(self):
        p = Poset.from_json(load(DATA / "two_plus_two.json"))
        with pytest.raises(NotNuioError):
            x_direct(p, (1, 2, 3, 4), with_t=True)
        assert x_direct(p, (1, 2, 3, 4)) == x_via_f(p, (1, 2, 3, 4))


class TestGasharov:

    def test_schur_expansion(self):
        p = p_k(2, 5)
        assert schur_expansion_gasharov(p, (1, 2, 3, 4)) == SymExpr(4, "s", {(4,): 8, (3, 1): 4, (2, 2): 2})

    def test_with_t(self):
        p = p_k(2, 3)
        expected = SymExpr(3, "s", {(2, 1): t, (3,): 1 + 2 * t + t**2})
        assert schur_expansion_gasharov(p, (1, 2, 3), with_t=True) == expected
        q = p_k(2, 4)
        assert schur_expansion_gasharov(q, (1, 2, 3, 4), with_t=True) == omega(x_direct(q, (1, 2, 3, 4), True))

    def test_three_plus_one(self):
        p = Poset.from_json(load(DATA / "three_plus_one.json"))
        with pytest.raises(NotThreeOneFreeError):
            schur_expansion_gasharov(p, (1, 2, 3, 4))


class TestElementaryCoefficients:

    def test_hook_example(self):
        assert e_coeff_hook(p_k(2, 8), (3, 1, 1), (1, 3, 4, 5, 7)) == 3

    def test_hooks_match_expansion(self):
        p = p_k(2, 5)
        beta = (1, 2, 3, 4)
        expansion = e_expansion(p, beta)
        for shape in [(4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)]:
            assert e_coeff_hook(p, shape, beta) == expansion[shape]

    def test_two_columns_match_expansion(self):
        p = p_k(2, 5)
        beta = (1, 2, 3, 4)
        expansion = e_expansion(p, beta, with_t=True)
        for shape in [(2, 2), (2, 1, 1), (1, 1, 1, 1)]:
            assert e_coeff_twocol(p, shape, beta, with_t=True) == expansion[shape]

    def test_invalid_shapes(self):
        p = p_k(2, 5)
        with pytest.raises(ShapeError):
            e_coeff_hook(p, (2, 2), (1, 2, 3, 4))
        with pytest.raises(ShapeError):
            e_coeff_twocol(p, (3, 1), (1, 2, 3, 4))


class TestPairing:

    def test_monomial_coefficients(self):
        p = p_k(2, 4)
        dual = omega(x_direct(p, (1, 2, 3)))
        for shape in partitions(3):
            assert m_coefficient_by_pairing(p, shape, (1, 2, 3)) == dual[shape]
