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
from typing import List, Optional

import pytest

from ncschur.config import Config
from ncschur.exceptions import ParamError
from ncschur.parser import ConfigParser

DATA = Path(__file__).parent


class TestConfig(Config):
    __test__ = False

    t: bool
    true: bool
    y: bool
    yes: Optional[bool]
    f: bool
    false: bool
    n: bool
    no: Optional[bool]


class SweepConfig(Config):
    __test__ = False

    max_size: int = 4
    checks: str = "all"
    content: Optional[List[int]] = None
    positionals = ("check",)
    check: str = "schur"


class Test:

    def test_parse_bool(self):
        config = TestConfig()
        config.parse(["--t", "t", "--true", "true", "--y", "y", "--yes", "yes"])
        config.parse(["--f", "f", "--false", "false", "--n", "n", "--no", "no"])
        assert config.t and config.true and config.y and config.yes
        assert not config.f and not config.false and not config.n and not config.no

        config = TestConfig()
        config.parse(["--t", "T", "--true", "True", "--y", "Y", "--yes", "Yes", "--f", "F", "--false", "False"])
        assert config.t and config.true and config.y and config.yes
        assert not config.f and not config.false

    def test_bare_flag(self):
        config = TestConfig().parse(["--t"])
        assert config.t is True
        assert config.f is None

    def test_bad_bool(self):
        with pytest.raises(ParamError):
            TestConfig().parse(["--t", "maybe"])

    def test_names(self):
        assert SweepConfig().parse(["--max_size", "5"]).max_size == 5
        assert SweepConfig().parse(["--max-size", "6"]).max_size == 6
        with pytest.raises(ParamError):
            SweepConfig().parse(["--max-size", "six"])

    def test_lists(self):
        config = SweepConfig().parse(["--content", "1", "2", "2"])
        assert config.content == [1, 2, 2]
        config = SweepConfig().parse(["--content", "1,2,2"])
        assert config.content == (1, 2, 2)

    def test_positional(self):
        config = SweepConfig().parse(["newton", "--checks", "newton,eta"])
        assert config.check == "newton"
        assert config.checks == "newton,eta"
        assert SweepConfig().parse([]).check == "schur"

    def test_config_file(self):
        class Chromatic(Config):
            __test__ = False
            poset: str = "p.json"
            basis: str = "m"

        with pytest.warns(UserWarning):
            config = Chromatic().parse(["--config", str(DATA / "chromatic.yaml")])
        assert config.dict() == {"poset": "tests/p2_5.json", "basis": "e"}
        with pytest.warns(UserWarning):
            config = Chromatic().parse(["--basis", "s", "--config", str(DATA / "chromatic.yaml")])
        assert config.basis == "s"

    def test_unrecognized(self):
        with pytest.raises(ParamError):
            SweepConfig().parse(["--colour", "red"])

    def test_parse_args(self):
        parser = ConfigParser()
        parser.add_argument("--basis")
        parser.add_argument("--content", nargs="+")
        assert parser.parse_args([]) == {}
        assert parser.parse_args(["--basis", "s"]) == {"basis": "s"}
        assert parser.parse_args(["--content", "3"]) == {"content": [3]}
        assert parser.parse_args(["--basis", "s"], eval_str=False) == {"basis": "s"}
        assert parser.parse_args(["--content", "1", "2"], eval_str=False) == {"content": ["1", "2"]}
        assert "--basis" in parser
        assert "--colour" not in parser

    def test_no_config(self):
        with pytest.raises(ValueError):
            ConfigParser().parse_config([], None)
