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

import pytest

from ncschur import checks
from ncschur.checks import (
    CHECKS,
    Scope,
    check_names,
    flagged_instances,
    lower_ideals,
    run_check,
    sweep,
)
from ncschur.exceptions import ParamError
from ncschur.poset import Poset, antichain, chain, p_k


class TestScope:

    def test_contents(self):
        p = p_k(2, 3)
        assert len(Scope(max_content=2).contents(p)) == 9
        assert len(Scope(max_content=1).contents(p)) == 3
        assert Scope(content=(2, 1, 2)).contents(p) == [(1, 2, 2)]
        with pytest.raises(ValueError):
            Scope(content=(1, 4)).contents(p)

    def test_shapes(self):
        assert Scope(shape=[2, 1]).shapes() == [(2, 1)]
        assert len(Scope(max_degree=4).shapes()) == 1 + 2 + 3 + 5

    def test_degree_pairs(self):
        assert Scope(max_degree=4).degree_pairs() == [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]
        assert Scope(k=2, ell=3).degree_pairs() == [(2, 3)]
        with pytest.raises(ParamError):
            Scope(ell=1).degree_pairs()

    def test_t_for(self):
        p = p_k(2, 4)
        assert Scope(with_t=True).t_for(p) is p
        assert Scope().t_for(p) is None
        plain = Poset(3, [(1, 3)])
        assert plain.order is None
        assert Scope(with_t=True).t_for(plain).order == (1, 2, 3)
        assert Scope(with_t=True).t_for(Poset(4, [(1, 3), (2, 4)])) is None


class TestInstances:

    def test_lower_ideals(self):
        assert [sorted(z) for z in lower_ideals(antichain(2))] == [[], [1], [2], [1, 2]]
        assert len(lower_ideals(p_k(2, 3))) == 6

    def test_flagged_instances(self):
        instances = list(flagged_instances(chain(1), Scope(max_degree=2)))
        assert len(instances) == 2 + 2 + 3
        assert all(len(alpha) == len(flags) for alpha, flags in instances)
        for _, flags in instances:
            assert all(low <= high for low, high in zip(flags, flags[1:]))

    def test_pinned(self):
        scope = Scope(alpha=(1, 2), flags=([1, 2, 3], [1, 2, 3, 4, 5]))
        ((alpha, flags),) = flagged_instances(p_k(2, 5), scope)
        assert alpha == (1, 2)
        assert flags == (frozenset({1, 2, 3}), frozenset({1, 2, 3, 4, 5}))
        with pytest.raises(ParamError):
            list(flagged_instances(p_k(2, 5), Scope(alpha=(1, 2))))


class TestChecks:

    def test_names(self):
        assert check_names("all") == sorted(CHECKS)
        assert check_names(" newton , eta ") == ["newton", "eta"]
        assert check_names(["gasharov"]) == ["gasharov"]
        assert {"schur", "e-commute", "eta", "flagged", "positivity", "arrow"} <= set(CHECKS)
        with pytest.raises(KeyError):
            check_names("newton,nope")

    def test_newton(self):
        report = run_check("newton", p_k(2, 4), Scope(max_degree=3))
        assert report.passed
        assert [detail["m"] for detail in report.details] == [1, 2, 3]

    def test_e_commute(self):
        report = run_check("e-commute", p_k(2, 5), Scope(k=2, ell=1, content=(1, 2, 3)))
        assert report
        assert report.details[0] == {"k": 2, "ell": 1}

    def test_eta(self):
        report = run_check("eta", p_k(2, 6), Scope(k=2, ell=2))
        assert report
        with pytest.raises(ParamError):
            run_check("eta", p_k(2, 6), Scope(k=2))

    def test_chromatic(self):
        assert run_check("chromatic", p_k(2, 4), Scope(content=(1, 1, 2, 3), with_t=True))
        assert run_check("gasharov", p_k(2, 4), Scope(content=(1, 2, 3, 4), with_t=True))

    def test_failure(self, monkeypatch, caplog):
        monkeypatch.setattr(checks, "x_via_f", lambda p, content, with_t: None)
        with caplog.at_level(logging.WARNING, logger="ncschur.checks"):
            report = run_check("chromatic", p_k(2, 3), Scope(content=(1, 2)))
        assert not report
        assert report.status == "FAIL"
        assert report.failures[0]["content"] == [1, 2]
        assert "Chromatic routes disagree" in caplog.text

    def test_tableaux(self):
        p = p_k(2, 4)
        assert run_check("hook", p, Scope(shape=(2, 1, 1), max_content=4))
        assert run_check("twocol", p, Scope(shape=(2, 2), max_content=4))
        assert run_check("reading", p_k(2, 5), Scope(shape=(2, 2)))

    def test_flagged(self):
        report = run_check("flagged", p_k(2, 5), Scope(alpha=(1, 2), flags=([1, 2, 3], [1, 2, 3, 4, 5])))
        assert report.details == [{"alpha": [1, 2], "flags": [[1, 2, 3], [1, 2, 3, 4, 5]], "tableaux": 13}]
        assert run_check("flagged", chain(2), Scope(max_degree=2))

    def test_positivity(self):
        report = run_check("positivity", p_k(2, 4), Scope(max_degree=3))
        assert report.passed
        assert len(report.details) == 6
        assert report.notes == []

    def test_arrow(self):
        assert run_check("arrow", p_k(2, 4), Scope(shape=(2, 2)))
        assert run_check("rectangle", p_k(2, 4), Scope(max_degree=2))


class TestSweep:

    def test_sweep(self):
        report = sweep(2, "newton,reading", Scope(max_degree=2))
        assert report.status == "PASS"
        assert [detail["check"] for detail in report.details] == ["newton", "reading"] * 3
        assert report.details[0]["poset"] == {"n": 1, "relations": []}

    def test_threads(self):
        serial = sweep(3, "newton", Scope(max_degree=2))
        parallel = sweep(3, "newton", Scope(max_degree=2), threads=2)
        assert parallel.details == serial.details
        assert len(serial.details) == 1 + 2 + 5

    def test_with_t(self):
        report = sweep(3, "chromatic,gasharov", Scope(max_content=2, with_t=True))
        assert report.status == "PASS"
        assert len(report.details) == 2 * (1 + 2 + 5)

    def test_arrow_suite(self):
        report = sweep(5, "arrow,rectangle", Scope(max_degree=4))
        assert report.status == "PASS"
        assert {detail["check"] for detail in report.details} == {"arrow", "rectangle"}
        assert all(detail["checked"] for detail in report.details)

    def test_unknown(self):
        with pytest.raises(KeyError):
            sweep(1, "nope")
