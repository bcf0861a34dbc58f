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

from contextlib import contextmanager
from io import IOBase
from json import dumps as json_dumps
from json import loads as json_loads
from os import fspath
from os.path import splitext
from typing import IO, Any, Iterator

from yaml import dump as yaml_dump
from yaml import load as yaml_load

from .utils import JSON, YAML, File, JsonEncoder, YamlDumper, YamlLoader


def _extension(file: File, method: str | None, action: str) -> str:
    if method is None:
        if isinstance(file, IOBase):
            raise ValueError(f"`method` must be specified when {action} IO.")
        method = splitext(fspath(file))[-1][1:]  # type: ignore[arg-type]
    extension = method.lower()
    if extension not in YAML + JSON:
        raise TypeError(f"`file={file!r}` should be in {JSON} or {YAML}, but got {extension}.")
    return extension


@contextmanager
def open_file(file: File, *args: Any, encoding: str = "utf-8", **kwargs: Any) -> Iterator[IO]:
    r"""
    Open a path, or pass an already open stream through untouched.
    """

    if isinstance(file, (IOBase, IO)):
        yield file  # type: ignore[misc]
        return
    with open(file, *args, encoding=encoding, **kwargs) as fp:  # pylint: disable=W1514
        yield fp


def dumps(obj: Any, method: str = "json", **kwargs: Any) -> str:
    r"""
    Serialise `obj` to a string, converting values through their `__json__`.

    JSON output is canonical: keys are sorted and separators are compact.

    Examples:
        >>> from ncschur.poset import p_k
        >>> dumps({"poset": p_k(2, 3), "b": [1, 2]})
        '{"b":[1,2],"poset":{"n":3,"order":[1,2,3],"relations":[[1,3]]}}'
        >>> print(dumps({"b": (1, 2)}, "yaml"), end="")
        b:
        - 1
        - 2
    """

    if method.lower() in JSON:
        kwargs.setdefault("sort_keys", True)
        kwargs.setdefault("separators", (",", ":"))
        return json_dumps(obj, cls=JsonEncoder, **kwargs)
    if method.lower() in YAML:
        data = json_loads(json_dumps(obj, cls=JsonEncoder))
        return yaml_dump(data, Dumper=YamlDumper, **kwargs)
    raise TypeError(f"`method={method!r}` should be in {JSON} or {YAML}.")


def save(  # pylint: disable=W1113
    obj: Any, file: File, method: str = None, **kwargs: Any  # type: ignore[assignment]
) -> None:
    r"""
    Save `obj` to file.

    Values are converted through their `__json__` first, so posets, elements and reports can be saved directly.

    Raises:
        ValueError: If save to `IO` and `method` is not specified.
        TypeError: If save to unsupported extension.

    Examples:
        >>> obj = {"a": 1, "b": 2, "c": 3}
        >>> save(obj, "test.yaml")
        >>> save(obj, "test.json")
        >>> save(obj, "test.conf")
        Traceback (most recent call last):
        TypeError: `file='test.conf'` should be in ('json',) or ('yml', 'yaml'), but got conf.
        >>> with open("test.yaml", "w") as f:
        ...     save(obj, f)
        Traceback (most recent call last):
        ValueError: `method` must be specified when saving to IO.
    """

    extension = _extension(file, method, "saving to")
    with open_file(file, mode="w") as fp:  # pylint: disable=C0103
        fp.write(dumps(obj, extension, **kwargs))


def load(file: File, method: str = None, **kwargs: Any) -> Any:  # type: ignore[assignment]
    r"""
    Load a JSON or YAML file into plain Python values.

    YAML files may use the `!include`, `!includes` and `!env` tags.

    Raises:
        ValueError: If load from `IO` and `method` is not specified.
        TypeError: If load from unsupported extension.

    Examples:
        >>> load("tests/p2_5.json")["n"]
        5
        >>> load("tests/p2_5.conf")
        Traceback (most recent call last):
        TypeError: `file='tests/p2_5.conf'` should be in ('json',) or ('yml', 'yaml'), but got conf.
    """

    extension = _extension(file, method, "loading from")
    with open_file(file) as fp:  # pylint: disable=C0103
        if extension in JSON:
            return json_loads(fp.read(), **kwargs)
        return yaml_load(fp, Loader=YamlLoader)
