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

import pytest

from ncschur.exceptions import NotSymmetric
from ncschur.symfun import (
    QSymExpr,
    SymExpr,
    change_basis,
    composition_from_set,
    compositions,
    detect_symmetric,
    fundamental,
    is_positive,
    kostka,
    kostka_matrix,
    omega,
    partitions,
    poly_from_list,
    poly_to_list,
    set_from_composition,
    t,
    transpose,
)


class TestPartitions:

    def test_counts(self):
        assert [len(partitions(n)) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]
        assert len(list(compositions(4))) == 8

    def test_transpose(self):
        for n in range(6):
            for shape in partitions(n):
                assert transpose(transpose(shape)) == shape

    def test_compositions(self):
        assert composition_from_set(4, {1, 3}) == (1, 2, 1)
        assert set_from_composition((1, 2, 1)) == frozenset({1, 3})

    def test_kostka(self):
        assert kostka((2, 1), (1, 1, 1)) == 2
        assert kostka((3,), (1, 1, 1)) == 1
        assert kostka((1, 1, 1), (3,)) == 0

    def test_kostka_matrix(self):
        assert kostka_matrix(2) == {((2,), (2,)): 1, ((2,), (1, 1)): 1, ((1, 1), (1, 1)): 1}
        assert all(shape >= content for shape, content in kostka_matrix(4))


class TestCoefficients:

    def test_poly_lists(self):
        assert poly_to_list(t**2 + 3) == [3, 0, 1]
        assert poly_to_list(0) == []
        assert poly_from_list([3, 0, 1]) == t**2 + 3
        assert poly_from_list([]) == 0


class TestSymExpr:

    def test_invalid_partition(self):
        with pytest.raises(ValueError):
            SymExpr(3, "m", {(2,): 1})
        with pytest.raises(ValueError):
            SymExpr(3, "m", {(1, 2): 1})

    def test_complete_and_elementary(self):
        h4 = SymExpr(4, "h", {(4,): 1}).to("m")
        assert h4.terms == {shape: 1 for shape in partitions(4)}
        e4 = SymExpr(4, "e", {(4,): 1}).to("m")
        assert e4.terms == {(1, 1, 1, 1): 1}

    def test_change_basis(self):
        f = SymExpr(3, "s", {(2, 1): 1})
        assert change_basis(f, "e") == SymExpr(3, "e", {(2, 1): 1, (3,): -1})
        for basis in "mehs":
            assert f.to(basis).to("s").terms == f.terms

    def test_arithmetic(self):
        f = SymExpr(2, "s", {(2,): 1})
        g = SymExpr(2, "m", {(1, 1): 1})
        assert (f + g).to("s") == SymExpr(2, "s", {(2,): 1, (1, 1): 1})
        assert (f - f).terms == {}
        assert (3 * f)[(2,)] == 3
        assert f[(1, 1)] == 0

    def test_mixed_degrees(self):
        with pytest.raises(ValueError):
            SymExpr(2, "m", {(2,): 1}) + SymExpr(3, "m", {(3,): 1})

    def test_omega(self):
        assert omega(SymExpr(4, "h", {(3, 1): 1})) == SymExpr(4, "e", {(3, 1): 1})
        f = SymExpr(4, "s", {(3, 1): 2, (2, 2): 1})
        assert omega(omega(f)) == f

    def test_specialize(self):
        f = SymExpr(2, "m", {(2,): 1 + 2 * t, (1, 1): t**2})
        assert f.specialize().terms == {(2,): 3, (1, 1): 1}
        assert f.specialize(1).terms == {(2,): 2}

    def test_json(self):
        f = SymExpr(2, "s", {(2,): 1 + t, (1, 1): 4})
        assert f.__json__() == {"degree": 2, "basis": "s", "terms": {"[2]": [1, 1], "[1,1]": [4]}}
        assert SymExpr.from_json(f.__json__()) == f

    def test_positivity(self):
        assert not is_positive(SymExpr(2, "m", {(2,): 1}), "s")
        assert is_positive(SymExpr(2, "m", {(2,): 1}), "m")
        assert is_positive(SymExpr(3, "s", {(2, 1): 1 + t}), "s")


class TestQSym:

    def test_fundamental(self):
        assert fundamental(2, ()) == QSymExpr(2, {(2,): 1, (1, 1): 1})
        assert fundamental(3, {1, 2}) == QSymExpr(3, {(1, 1, 1): 1})

    def test_detect_symmetric(self):
        assert detect_symmetric(fundamental(2, ()) + fundamental(2, {1})) == SymExpr(2, "s", {(2,): 1, (1, 1): 1})
        with pytest.raises(NotSymmetric) as excinfo:
            detect_symmetric(QSymExpr(3, {(2, 1): 1}))
        assert set(excinfo.value.witness) == {(2, 1), (1, 2)}
