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

from collections.abc import Callable, Iterable, Mapping
from contextlib import contextmanager
from copy import deepcopy
from functools import wraps
from os import PathLike
from typing import Any

from typing_extensions import Self, get_type_hints

from .functional import load, save
from .parser import ConfigParser
from .utils import File, Null


def frozen_check(func: Callable):
    r"""
    Decorator check if the object is frozen.
    """

    @wraps(func)
    def decorator(self, *args: Any, **kwargs: Any):
        if self.getattr("frozen", False):
            raise ValueError("Attempting to alter a frozen config. Run config.defrost() to defrost first.")
        return func(self, *args, **kwargs)

    return decorator


class Config(dict):
    r"""
    Settings with attribute access.

    Fields are declared on subclasses as annotated class attributes with defaults.
    Every instance starts from a copy of those defaults, and values are read and written as
    attributes or items alike.

    `post` derives values and validates them; `boot` runs it once settings are final.
    A frozen `Config` refuses every change; `freeze`(`lock`) & `defrost`(`unlock`) toggle it,
    `locked` & `unlocked` change it temporarily.

    Attributes:
        frozen (bool): If `True`, the config is frozen and cannot be altered.

    Examples:
        >>> class Sweep(Config):
        ...     max_size: int = 4
        ...     check: str = "all"
        >>> c = Sweep(check="newton")
        >>> c.max_size, c["check"]
        (4, 'newton')
        >>> c.freeze().dict()
        {'max_size': 4, 'check': 'newton'}
        >>> c.max_size = 5
        Traceback (most recent call last):
        ValueError: Attempting to alter a frozen config. Run config.defrost() to defrost first.
        >>> c.threads
        Traceback (most recent call last):
        AttributeError: 'Sweep' object has no attribute 'threads'
        >>> with c.unlocked():
        ...     c.max_size = 5
        >>> c.dict()
        {'max_size': 5, 'check': 'newton'}
    """

    __defaults__: dict[str, Any] = {}
    positionals: tuple[str, ...] = ()

    def __init_subclass__(cls, **kwargs: Any):
        super().__init_subclass__(**kwargs)
        defaults = dict(getattr(cls, "__defaults__", {}))
        for name in vars(cls).get("__annotations__", {}):
            if name.startswith("_") or name == "positionals":
                continue
            defaults[name] = vars(cls).get(name)
            if name in vars(cls):
                delattr(cls, name)
        cls.__defaults__ = defaults

    def __init__(self, *args: Any, **kwargs: Any):
        super().__init__(deepcopy(self.__defaults__))
        self.setattr("frozen", False)
        for key, value in dict(*args, **kwargs).items():
            self.set(key, value)

    def getattr(self, name: str, default: Any = Null) -> Any:
        r"""
        Get an attribute of the `Config` object itself, as opposed to one of its values.
        """

        if default is Null:
            return self.__dict__[name]
        return self.__dict__.get(name, default)

    def setattr(self, name: str, value: Any) -> None:
        self.__dict__[name] = value

    @classmethod
    def fields(cls) -> dict[str, Any]:
        r"""
        Resolved annotations of every declared field.

        Annotations are resolved against the globals of the module defining each class,
        so methods such as `dict` never shadow the builtins of the same name.

        Examples:
            >>> class Verify(Config):
            ...     content: str = "1,2,3"
            ...     t: bool = False
            >>> Verify.fields()
            {'content': <class 'str'>, 't': <class 'bool'>}
        """

        hints = get_type_hints(cls, localns={})
        return {name: hints.get(name, Any) for name in cls.__defaults__}

    def post(self) -> Self | None:
        r"""
        Post process of `Config`.

        Some settings depend on others; derive and validate them here.
        `post` runs once, from `boot`, after every source of settings has been merged.

        Examples:
            >>> class Bounds(Config):
            ...     max_degree: int = 4
            ...     max_content: int = 0
            ...     def post(self):
            ...         if not self.max_content:
            ...             self.max_content = self.max_degree
            >>> Bounds().boot().max_content
            4
        """

        return self

    def boot(self) -> Self:
        r"""
        Apply `post` to every nested `Config`, then to this one.
        """

        for value in self.values():
            if isinstance(value, Config):
                value.boot()
        self.post()
        return self

    def parse(
        self, args: Iterable[str] | None = None, default_config: str | None = "config", boot: bool = True
    ) -> Self:
        r"""
        Parse command-line arguments with `ConfigParser`.

        Only declared fields are accepted. By default a `--config FILE` flag is merged below the other flags.

        Examples:
            >>> class Sweep(Config):
            ...     max_size: int = 4
            ...     t: bool = False
            >>> Sweep().parse(["--max-size", "5", "--t"]).dict()
            {'max_size': 5, 't': True}
        """

        parser = self.getattr("parser", None)
        if parser is None:
            parser = ConfigParser(prog=type(self).__name__.lower())
            self.setattr("parser", parser)
        parser.parse_config(args, self, default_config)
        if boot:
            self.boot()
        return self

    @frozen_check
    def set(self, name: str, value: Any) -> None:
        super().__setitem__(name, value)

    @frozen_check
    def delete(self, name: str) -> None:
        super().__delitem__(name)

    @frozen_check
    def pop(self, name: str, default: Any = Null) -> Any:  # type: ignore[override]
        if default is Null:
            return super().pop(name)
        return super().pop(name, default)

    def merge(self, other: Mapping | File) -> Self:
        r"""
        Merge another mapping, or the contents of a YAML/JSON file, into this `Config`.

        Examples:
            >>> class Arrow(Config):
            ...     family: str = "D"
            ...     shape: tuple = (2, 1)
            >>> Arrow().merge({"shape": [2, 2]}).dict()
            {'family': 'D', 'shape': [2, 2]}
        """

        if isinstance(other, (str, bytes, PathLike)):
            other = load(other)
        for key, value in other.items():  # type: ignore[union-attr]
            self.set(key, value)
        return self

    def dict(self) -> dict:
        return {key: value.dict() if isinstance(value, Config) else value for key, value in self.items()}

    def save(self, file: File, method: str = None, **kwargs: Any) -> None:  # type: ignore[assignment]
        save(self.dict(), file, method, **kwargs)

    @classmethod
    def load(cls, file: File, method: str = None, **kwargs: Any) -> Self:  # type: ignore[assignment]
        return cls(load(file, method, **kwargs))

    def freeze(self, recursive: bool = True) -> Self:
        r"""
        Freeze `Config`.

        **Alias**:

        + `lock`
        """

        self.setattr("frozen", True)
        if recursive:
            for value in self.values():
                if isinstance(value, Config):
                    value.freeze()
        return self

    def lock(self, recursive: bool = True) -> Self:
        r"""
        Alias of [`freeze`][ncschur.Config.freeze].
        """
        return self.freeze(recursive=recursive)

    @contextmanager
    def locked(self):
        """
        Context manager which temporarily locks `Config`.

        Examples:
            >>> c = Config()
            >>> with c.locked():
            ...     c.content = (1, 2)
            Traceback (most recent call last):
            ValueError: Attempting to alter a frozen config. Run config.defrost() to defrost first.
            >>> c.content = (1, 2)
            >>> c.dict()
            {'content': (1, 2)}
        """

        was_frozen = self.getattr("frozen", False)
        try:
            self.freeze()
            yield self
        finally:
            if not was_frozen:
                self.defrost()

    def defrost(self, recursive: bool = True) -> Self:
        r"""
        Defrost `Config`.

        **Alias**:

        + `unlock`
        """

        self.setattr("frozen", False)
        if recursive:
            for value in self.values():
                if isinstance(value, Config):
                    value.defrost()
        return self

    def unlock(self, recursive: bool = True) -> Self:
        r"""
        Alias of [`defrost`][ncschur.Config.defrost].
        """
        return self.defrost(recursive=recursive)

    @contextmanager
    def unlocked(self):
        """
        Context manager which temporarily unlocks `Config`.
        """

        was_frozen = self.getattr("frozen", False)
        try:
            self.defrost()
            yield self
        finally:
            if was_frozen:
                self.freeze()

    def __getattr__(self, name: str) -> Any:
        if name.startswith("__"):
            raise AttributeError(name)
        try:
            return self[name]
        except KeyError:
            raise AttributeError(f"'{type(self).__name__}' object has no attribute '{name}'") from None

    def __setattr__(self, name: str, value: Any) -> None:
        self.set(name, value)

    def __delattr__(self, name: str) -> None:
        try:
            self.delete(name)
        except KeyError:
            raise AttributeError(f"'{type(self).__name__}' object has no attribute '{name}'") from None

    @frozen_check
    def __setitem__(self, name: str, value: Any) -> None:
        super().__setitem__(name, value)

    @frozen_check
    def __delitem__(self, name: str) -> None:
        super().__delitem__(name)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({super().__repr__()})"
