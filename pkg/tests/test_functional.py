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

from io import StringIO

import pytest

from ncschur.functional import dumps, load, save
from ncschur.poset import p_k
from ncschur.quotient import IdealKind
from ncschur.utils import Report


class TestDumps:

    def test_json(self):
        assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
        assert dumps({"kind": IdealKind.plac, "support": {3, 1}}) == '{"kind":"plac","support":[1,3]}'
        assert dumps(p_k(2, 3)) == '{"n":3,"order":[1,2,3],"relations":[[1,3]]}'

    def test_yaml(self):
        assert dumps({"kind": IdealKind.h}, "yaml") == "kind: h\n"
        assert dumps({"b": (1, 2)}, "yml") == "b:\n- 1\n- 2\n"

    def test_report(self):
        report = Report("newton")
        report.record(m=1)
        assert dumps(report) == '{"checked":1,"failures":[],"name":"newton","notes":[],"status":"PASS"}'

    def test_unsupported(self):
        with pytest.raises(TypeError):
            dumps({}, "toml")
        with pytest.raises(TypeError):
            dumps(object())


class TestSaveLoad:

    def test_json(self, tmp_path):
        path = tmp_path / "poset.json"
        save(p_k(2, 4), path)
        assert load(path) == {"n": 4, "order": [1, 2, 3, 4], "relations": [[1, 3], [1, 4], [2, 4]]}

    def test_yaml(self, tmp_path):
        path = tmp_path / "scope.yaml"
        save({"max_degree": 4, "shapes": [[2, 1]]}, path)
        assert load(path) == {"max_degree": 4, "shapes": [[2, 1]]}

    def test_io(self):
        buffer = StringIO()
        save({"a": 1}, buffer, method="json")
        assert buffer.getvalue() == '{"a":1}'
        assert load(StringIO(buffer.getvalue()), method="json") == {"a": 1}
        with pytest.raises(ValueError):
            save({"a": 1}, StringIO())
        with pytest.raises(ValueError):
            load(StringIO("{}"))

    def test_extension(self, tmp_path):
        with pytest.raises(TypeError):
            save({"a": 1}, tmp_path / "a.conf")
        with pytest.raises(TypeError):
            load(tmp_path / "a.toml")

    def test_include(self, tmp_path):
        (tmp_path / "poset.yaml").write_text("n: 3\nrelations: [[1, 3]]\n")
        (tmp_path / "other.yaml").write_text("n: 2\n")
        (tmp_path / "run.yaml").write_text("poset: !include poset.yaml\nposets: !includes [poset.yaml, other.yaml]\n")
        data = load(tmp_path / "run.yaml")
        assert data["poset"] == {"n": 3, "relations": [[1, 3]]}
        assert data["posets"][1] == {"n": 2}

    def test_env(self, tmp_path, monkeypatch):
        path = tmp_path / "env.yaml"
        path.write_text("poset: !env NCSCHUR_POSET\n")
        monkeypatch.setenv("NCSCHUR_POSET", "tests/p2_5.json")
        assert load(path) == {"poset": "tests/p2_5.json"}
        monkeypatch.delenv("NCSCHUR_POSET")
        with pytest.raises(ValueError):
            load(path)

    def test_missing_include(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text("poset: !include nowhere.yaml\n")
        with pytest.raises(FileNotFoundError):
            load(path)
