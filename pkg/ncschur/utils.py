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

import os
from argparse import ArgumentTypeError
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field
from io import IOBase
from json import JSONEncoder
from os import PathLike
from typing import IO, Any, Union

from yaml import SafeDumper, SafeLoader
from yaml.constructor import ConstructorError
from yaml.nodes import ScalarNode, SequenceNode

PathStr = Union[PathLike, str, bytes]
File = Union[PathStr, IO, IOBase]

YAML = ("yml", "yaml")
JSON = ("json",)


class Singleton(type):
    r"""
    Metaclass for Singleton Classes.
    """

    __instances__: Mapping[type, object] = {}

    def __call__(cls, *args: Any, **kwargs: Any):
        if cls not in cls.__instances__:
            cls.__instances__[cls] = super().__call__(*args, **kwargs)  # type: ignore[index]
        return cls.__instances__[cls]


class NULL(metaclass=Singleton):
    r"""
    NULL class.

    Several lookups in `ncschur` accept `None` as a legitimate value, for example an absent total order.
    `Null` marks "nothing was passed" and is recommended to be used as `obj is Null`.
    """

    def __repr__(self):
        return "Null"

    def __bool__(self):
        return False

    def __len__(self):
        return 0

    def __contains__(self, name):
        return False

    def __iter__(self):
        return iter(())


Null = NULL()


class JsonEncoder(JSONEncoder):
    r"""
    JSON encoder for `ncschur` values.

    Objects exposing `__json__` are serialised through it, sets and frozensets become sorted lists.
    """

    def default(self, o: Any) -> Any:
        if hasattr(o, "__json__"):
            return o.__json__()
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        return super().default(o)


class YamlDumper(SafeDumper):  # pylint: disable=R0903
    r"""
    YAML Dumper for `ncschur` values.
    """

    def increase_indent(self, flow: bool = False, indentless: bool = False):  # pylint: disable=W0235
        return super().increase_indent(flow, indentless)


class YamlLoader(SafeLoader):
    r"""
    YAML Loader for configuration and data files.

    Supports `!include` and `!includes` relative to the including file, and `!env` for environment variables.
    """

    def __init__(self, stream):
        super().__init__(stream)
        self._root = os.path.abspath(os.path.dirname(stream.name)) if hasattr(stream, "name") else os.getcwd()
        self.add_constructor("!include", self._include)
        self.add_constructor("!includes", self._includes)
        self.add_constructor("!env", self._env)

    @staticmethod
    def _include(loader: YamlLoader, node):
        relative_path = loader.construct_scalar(node)
        include_path = os.path.join(loader._root, relative_path)

        if not os.path.exists(include_path):
            raise FileNotFoundError(f"Included file not found: {include_path}")
        from .functional import load  # pylint: disable=C0415

        return load(include_path)

    @staticmethod
    def _includes(loader: YamlLoader, node):
        if not isinstance(node, SequenceNode):
            raise ConstructorError(None, None, f"!includes tag expects a sequence, got {node.id}", node.start_mark)
        files = loader.construct_sequence(node)
        return [YamlLoader._include(loader, ScalarNode("tag:yaml.org,2002:str", file)) for file in files]

    @staticmethod
    def _env(loader: YamlLoader, node):
        env_var = loader.construct_scalar(node)
        value = os.getenv(env_var)
        if value is None:
            raise ValueError(f"Environment variable '{env_var}' not set.")
        return value


def parse_bool(value):
    if isinstance(value, bool):
        return value
    if value.lower() in ("yes", "true", "t", "y", "1"):
        return True
    if value.lower() in ("no", "false", "f", "n", "0"):
        return False
    raise ArgumentTypeError(f"Boolean value is expected, but got {value}.")


def parse_ints(value: str | Iterable[int] | int) -> tuple[int, ...]:
    r"""
    Parse a comma separated list of integers.

    Examples:
        >>> parse_ints("15,12,10")
        (15, 12, 10)
        >>> parse_ints("")
        ()
        >>> parse_ints([3, 1])
        (3, 1)
        >>> parse_ints("1,x")
        Traceback (most recent call last):
        argparse.ArgumentTypeError: Comma separated integers are expected, but got 1,x.
    """

    if isinstance(value, int):
        return (value,)
    if not isinstance(value, str):
        return tuple(int(i) for i in value)
    value = value.strip().strip("[]()")
    if not value:
        return ()
    try:
        return tuple(int(i) for i in value.split(","))
    except ValueError:
        raise ArgumentTypeError(f"Comma separated integers are expected, but got {value}.") from None


def parse_subsets(value: str | Iterable) -> tuple[tuple[int, ...], ...]:
    r"""
    Parse a `/` separated list of comma separated integer sets, as used for flags.

    Examples:
        >>> parse_subsets("1,2,3/1,2,3,4,5")
        ((1, 2, 3), (1, 2, 3, 4, 5))
        >>> parse_subsets([[1], []])
        ((1,), ())
    """

    if isinstance(value, str):
        return tuple(parse_ints(part) for part in value.split("/"))
    return tuple(parse_ints(part) for part in value)


class UnionFind:
    r"""
    Disjoint sets over arbitrary hashable items with path compression and union by size.

    Examples:
        >>> uf = UnionFind("abcd")
        >>> uf.union("a", "c")
        True
        >>> uf.union("c", "a")
        False
        >>> uf.connected("a", "c"), uf.connected("a", "b")
        (True, False)
        >>> sorted(sorted(group) for group in uf.groups())
        [['a', 'c'], ['b'], ['d']]
    """

    def __init__(self, items: Iterable[Hashable] = ()):
        self.parents: dict[Hashable, Hashable] = {}
        self.sizes: dict[Hashable, int] = {}
        for item in items:
            self.add(item)

    def add(self, item: Hashable) -> None:
        if item not in self.parents:
            self.parents[item] = item
            self.sizes[item] = 1

    def find(self, item: Hashable) -> Hashable:
        root = item
        while self.parents[root] != root:
            root = self.parents[root]
        while self.parents[item] != root:
            self.parents[item], item = root, self.parents[item]
        return root

    def union(self, first: Hashable, second: Hashable) -> bool:
        first, second = self.find(first), self.find(second)
        if first == second:
            return False
        if self.sizes[first] < self.sizes[second]:
            first, second = second, first
        self.parents[second] = first
        self.sizes[first] += self.sizes[second]
        return True

    def connected(self, first: Hashable, second: Hashable) -> bool:
        return self.find(first) == self.find(second)

    def groups(self) -> list[list[Hashable]]:
        r"""
        Disjoint sets, each listed in insertion order, ordered by their first inserted member.
        """

        collection: dict[Hashable, list[Hashable]] = {}
        for item in self.parents:
            collection.setdefault(self.find(item), []).append(item)
        return list(collection.values())

    def __len__(self) -> int:
        return sum(1 for item, parent in self.parents.items() if item == parent)


@dataclass
class Report:
    r"""
    Outcome of a verification check.

    A `Report` is truthy iff the check passed.
    `details` collects one mapping per checked instance; failing instances are also collected in `failures`.

    Examples:
        >>> report = Report("newton")
        >>> report.record(m=2)
        >>> bool(report)
        True
        >>> report.fail(m=3, reason="nonzero")
        >>> bool(report), len(report.details), report.failures
        (False, 2, [{'m': 3, 'reason': 'nonzero'}])
    """

    name: str
    passed: bool = True
    details: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def record(self, **detail: Any) -> None:
        self.details.append(detail)

    def fail(self, **detail: Any) -> None:
        self.passed = False
        self.details.append(detail)
        self.failures.append(detail)

    def check(self, condition: bool, **detail: Any) -> bool:
        if condition:
            self.record(**detail)
        else:
            self.fail(**detail)
        return condition

    def extend(self, other: Report) -> Report:
        self.passed = self.passed and other.passed
        self.details.extend(other.details)
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)
        return self

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def __bool__(self) -> bool:
        return self.passed

    def __json__(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "checked": len(self.details),
            "failures": self.failures,
            "notes": self.notes,
        }
