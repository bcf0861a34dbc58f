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

from ncschur.cli import COMMANDS
from ncschur.registry import CHECKS, DIAGRAMS, Registry


class Shape:

    def __init__(self, rows, columns=1):
        self.rows = rows
        self.columns = columns


class TestRegistry:

    def test_register(self):
        registry = Registry()
        registry.register(Shape)
        registry.register(Shape, "box")

        @registry.register("double")
        def double(x):
            return 2 * x

        assert sorted(registry) == ["Shape", "box", "double"]
        assert registry.lookup("double")(3) == 6

    def test_duplicate(self):
        registry = Registry()
        registry.register(Shape)
        with pytest.raises(ValueError):
            registry.register(Shape)
        registry.register(Shape, override=True)
        assert Registry(override=True).register(Shape) is Shape

    def test_lookup(self):
        registry = Registry()
        with pytest.raises(KeyError):
            registry.lookup("Shape")
        registry.register(Shape, default=True)
        assert registry.lookup("missing") is Shape

    def test_build(self):
        registry = Registry(key="kind")
        registry.register(Shape)
        shape = registry.build({"kind": "Shape", "rows": 3})
        assert (shape.rows, shape.columns) == (3, 1)
        shape = registry.build({"kind": "Shape", "rows": 3}, columns=2)
        assert shape.columns == 2
        shape = registry.build("Shape", 4, columns=5)
        assert (shape.rows, shape.columns) == (4, 5)
        shape = registry.build(kind="Shape", rows=2)
        assert shape.rows == 2

    def test_builtin(self):
        assert DIAGRAMS.key == "family"
        assert {"E", "D", "Dtilde", "J", "m", "Jcyl"} <= set(DIAGRAMS)
        assert "newton" in CHECKS
        assert "chromatic" in COMMANDS
        assert repr(Registry()) == "Registry([])"
