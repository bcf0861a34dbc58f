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
from itertools import combinations

import pytest

from ncschur.exceptions import ShapeError
from ncschur.poset import chains, p_k
from ncschur.tableaux import (
    Balance,
    Ladder,
    PTableau,
    cread,
    diagread,
    enumerate_flagged,
    enumerate_tableaux,
    is_key,
    is_left,
    is_parray,
    is_ptableau,
    is_ptableau_ladder_criterion,
    is_yamanouchi,
    ladders,
    phi_hook,
    theta,
    yamanouchi_words,
)


class TestPTableau:

    def test_rows_and_columns(self):
        t = PTableau.from_rows([[1, 2, 1, 1], [3, 4, 3], [5, 6, 7]])
        assert t.rows == [[1, 2, 1, 1], [3, 4, 3], [5, 6, 7]]
        assert len(t) == 10
        assert t.content.multiplicities[1] == 3
        assert t.is_young

    def test_invalid_rows(self):
        with pytest.raises(ShapeError):
            PTableau.from_rows([[1], [2, 3]])

    def test_parray(self):
        p = p_k(2, 8)
        assert is_parray(p, PTableau.from_rows([[1, 3], [3]]))
        assert not is_parray(p, PTableau.from_rows([[2], [1]]))
        assert not is_parray(p, PTableau(((1,), (2, 4))))

    def test_json(self):
        t = PTableau.from_rows([[1, 2], [3]])
        assert t.__json__() == {"shape": [2, 1], "rows": [[1, 2], [3]]}
        assert PTableau.from_json(t.__json__()) == t
        flagged = PTableau(((1,), (2, 4)))
        assert not flagged.is_young
        assert PTableau.from_json(flagged.__json__()) == flagged
        with pytest.raises(ShapeError):
            PTableau.from_json({"shape": [3], "rows": [[1, 2]]})

    def test_reading_words(self):
        column = PTableau(((1, 3, 5),))
        assert cread(column) == diagread(column) == (5, 3, 1)
        t = PTableau.from_rows([[1, 2], [3]])
        assert cread(t) == (3, 1, 2)
        assert diagread(t) == (3, 1, 2)


class TestEnumerate:

    def test_counts(self):
        p = p_k(2, 5)
        counts = {shape: len(list(enumerate_tableaux(p, shape, (1, 2, 3, 4)))) for shape in [(4,), (3, 1), (2, 2)]}
        assert counts == {(4,): 8, (3, 1): 4, (2, 2): 2}
        assert not list(enumerate_tableaux(p, (2, 1, 1), (1, 2, 3, 4)))

    def test_all_are_ptableaux(self):
        p = p_k(2, 6)
        for shape in [(3, 2), (2, 2, 1), (3, 1, 1)]:
            for t in enumerate_tableaux(p, shape, (1, 2, 3, 4, 5)):
                assert t.shape == shape
                assert is_ptableau(p, t)

    def test_invalid_shape(self):
        with pytest.raises(ShapeError):
            list(enumerate_tableaux(p_k(2, 5), (1, 2)))

    def test_flagged(self):
        p = p_k(2, 5)
        tableaux = list(enumerate_flagged(p, (1, 2), ([1, 2, 3], [1, 2, 3, 4, 5])))
        assert len(tableaux) == 13
        assert all(t.columns[0][0] in (1, 2, 3) for t in tableaux)
        assert all(t.columns[1][-1] in (4, 5) for t in tableaux)
        with pytest.raises(ShapeError):
            list(enumerate_flagged(p, (1, 3), (None, None)))
        with pytest.raises(ValueError):
            list(enumerate_flagged(p, (1, 2), (None,)))


class TestLadders:

    def test_criterion_matches_rows(self):
        p = p_k(2, 6)
        pairs = [(first, second) for height in (2, 3) for first in chains(p, k=height) for second in chains(p, k=2)]
        for first, second in pairs:
            if set(first) & set(second):
                continue
            t = PTableau((tuple(reversed(first)), tuple(reversed(second))))
            assert is_ptableau_ladder_criterion(p, t) == is_ptableau(p, t)

    def test_regular(self):
        p = p_k(2, 8)
        assert Ladder((6,), (5, 7)).is_regular(p)
        assert Ladder((6,), (5, 7)).balance is Balance.right
        assert not Ladder((1, 3, 5), (2,)).is_regular(p)

    def test_three_columns(self):
        with pytest.raises(ShapeError):
            ladders(p_k(2, 5), PTableau(((1,), (2,), (3,))))

    def test_theta(self):
        p = p_k(2, 6)
        words = Counter()
        for shape in [(2, 2, 1), (2, 2), (2, 1, 1)]:
            for content in combinations(range(1, 7), sum(shape)):
                for t in enumerate_tableaux(p, shape, content):
                    left, word = theta(p, t)
                    assert is_left(p, left)
                    assert is_ptableau(p, left)
                    assert left.content == t.content
                    assert is_yamanouchi(word)
                    words[word] += 1
        assert words

    def test_yamanouchi(self):
        assert yamanouchi_words(4, 2) == [(2, 1, 2, 1), (2, 2, 1, 1)]
        assert is_yamanouchi(())
        assert not is_yamanouchi((1, 2))


class TestHooks:

    def test_key(self):
        p = p_k(3, 11)
        assert is_key(p, PTableau(((1, 5, 8), (4,), (6,), (7,))))
        assert is_key(p, PTableau(((1, 5),)))
        with pytest.raises(ShapeError):
            is_key(p, PTableau(((1, 5), (2, 6))))

    def test_phi(self):
        p = p_k(2, 4)
        t = phi_hook(p, (3, 1), (2,))
        assert is_ptableau(p, t)
        assert is_key(p, t)
        with pytest.raises(ValueError):
            phi_hook(p, (3, 1), ())
