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

from ncschur.exceptions import NotThreeOneFreeError
from ncschur.functional import load
from ncschur.poset import Poset, p_k
from ncschur.rmatrix import (
    ChainPair,
    chain_pairs,
    eta,
    eta_image_counts,
    ladder_decomp,
    pair_and_lump,
    same_ladders,
    verify_eta_congruence,
)

DATA = Path(__file__).parent


class TestChainPair:

    def test_word(self):
        pair = ChainPair(p_k(2, 6), (5, 3, 1), (4,))
        assert pair.word == (5, 3, 1, 4)
        assert tuple(pair.content) == (1, 3, 4, 5)
        assert ChainPair.from_json(pair.poset, pair.__json__()) == pair

    def test_not_a_chain(self):
        with pytest.raises(ValueError):
            ChainPair(p_k(2, 6), (4, 3), ())
        with pytest.raises(ValueError):
            ChainPair(p_k(2, 6), (), (1, 3))


class TestEta:

    def test_worked_example(self):
        p = Poset.from_json(load(DATA / "p2_17.json"))
        pair = ChainPair(p, (15, 12, 10, 8, 5, 3, 1), (16, 14, 12, 9, 7, 2))
        assert [ladder.entries for ladder in ladder_decomp(pair)] == [
            (16, 15, 14),
            (12, 12),
            (10, 9, 8, 7),
            (5,),
            (3, 2, 1),
        ]
        lumps = pair_and_lump(pair)
        assert lumps.lumps == [(1,), (2, 3, 4, 5)]
        image = eta(pair)
        assert image.a == (15, 12, 10, 8, 5, 2)
        assert image.b == (16, 14, 12, 9, 7, 3, 1)
        assert same_ladders(pair, image)
        assert eta(image) == pair

    def test_wraparound(self):
        p = p_k(2, 17)
        lumps = pair_and_lump(ChainPair(p, (15, 13, 11, 9, 6, 3), (17, 10, 7, 5, 1)))
        assert (5, 1, True) in lumps.pairs
        assert lumps.unpaired == [4]
        assert lumps.__json__()["lumps"] == [[1], [2, 3], [4], [5, 6, 7]]

    def test_empty_chain(self):
        p = p_k(2, 6)
        image = eta(ChainPair(p, (), (5, 3)))
        assert image.a == (5, 3) and image.b == ()

    def test_involution(self):
        p = p_k(2, 7)
        for k, ell in [(1, 1), (2, 1), (1, 2), (3, 2), (2, 2)]:
            for pair in chain_pairs(p, k, ell):
                image = eta(pair)
                assert (len(image.a), len(image.b)) == (ell, k)
                assert image.content == pair.content
                assert eta(image) == pair

    def test_bijection(self):
        assert eta_image_counts(p_k(2, 5), 2, 1) == {"domain": 30, "image": 30, "codomain": 30}
        counts = eta_image_counts(p_k(3, 7), 2, 1)
        assert counts["domain"] == counts["image"] == counts["codomain"]


class TestCongruence:

    def test_plactic(self):
        assert verify_eta_congruence(p_k(2, 5), 2, 1)
        assert verify_eta_congruence(p_k(2, 6), 2, 2)
        assert verify_eta_congruence(p_k(3, 7), 2, 1)

    def test_three_plus_one(self):
        p = Poset.from_json(load(DATA / "three_plus_one.json"))
        with pytest.raises(NotThreeOneFreeError):
            verify_eta_congruence(p, 1, 1)
