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

from collections.abc import Callable, MutableMapping
from copy import deepcopy
from functools import wraps
from typing import Any

from .utils import NULL, Null


class Registry(dict):
    """
    `Registry` for named components.

    `Registry` provides 3 core functionalities:

    - Register a new component.
    - Lookup for a component.
    - Build a component.

    `register` works both as a plain call and as a decorator.
    Without a name the component is registered under its `__name__`.

    `build` constructs a component from a mapping that carries its name under `key`,
    or from a name and keyword arguments.
    It is a shorthand for `registry.init(registry.lookup(name), *args, **kwargs)`.

    Examples:
        >>> registry = Registry()
        >>> @registry.register
        ... @registry.register("shifted", default=True)
        ... def offset(a, b=1):
        ...     return a + b
        >>> sorted(registry)
        ['offset', 'shifted']
        >>> registry.register(offset, "offset")
        Traceback (most recent call last):
        ValueError: Component with name offset already registered.
        >>> registry.build({"name": "offset", "a": 2})
        3
        >>> registry.build("offset", a=2, b=5)
        7
        >>> registry.lookup("missing").__name__
        'offset'
    """

    override = False
    key = "name"
    default: Any = Null

    def __init__(self, override: bool | None = None, key: str | None = None, default: Any = None):
        super().__init__()
        if override is not None:
            self.override = override
        if key is not None:
            self.key = key
        if default is not None:
            self.default = default

    def register(
        self, component: Any = Null, name: Any = Null, override: bool = False, default: bool = False
    ) -> Callable:
        r"""
        Register a new component.

        Args:
            component: The component to register.
            name: The name of the component.
            override: Whether to replace a component registered under the same name.
            default: Whether `lookup` falls back to this component for unknown names.

        Returns:
            component: The registered component.

        Raises:
            ValueError: If the component with the same name already registered and `Registry.override=False`.
        """

        if isinstance(component, str) and name is Null:
            component, name = Null, component

        def add(key: Any, value: Any) -> Any:
            if key in self and not (override or self.override):
                raise ValueError(f"Component with name {key} already registered.")
            self[key] = value
            if default:
                self.default = value
            return value

        # Registry.register(component, name)
        if component is not Null and name is not Null:
            return add(name, component)
        # @Registry.register
        if component is not Null and callable(component):
            return add(component.__name__, component)

        # @Registry.register(name)
        @wraps(self.register)
        def wrapper(component):
            return add(component.__name__ if name is Null else name, component)

        return wrapper

    def lookup(self, name: str, default: Any = Null) -> Any:
        r"""
        Lookup for a component.

        Raises:
            KeyError: If the component is not registered and no default is set.

        Examples:
            >>> registry = Registry()
            >>> registry.lookup("E")
            Traceback (most recent call last):
            KeyError: 'Component E is not registered.'
        """

        if default is Null:
            default = self.default
        component = self.get(name, default)
        if component is Null:
            raise KeyError(f"Component {name} is not registered.")
        return component

    @staticmethod
    def init(cls: Callable, *args: Any, **kwargs: Any) -> Any:  # pylint: disable=W0211
        return cls(*args, **kwargs)

    def build(self, name: str | MutableMapping | NULL = Null, *args: Any, **kwargs: Any) -> Any:
        r"""
        Build a component.

        Args:
            name (str | MutableMapping):
                If its a `MutableMapping`, it must contain `key` as a member, the rest will be treated as `**kwargs`.
                Note that values in `kwargs` will override values in `name` if its a `MutableMapping`.
            *args: The arguments to pass to the component.
            **kwargs: The keyword arguments to pass to the component.

        Raises:
            KeyError: If the component is not registered.
        """

        if isinstance(name, MutableMapping):
            name = deepcopy(dict(name))
            name, kwargs = name.pop(self.key), dict(name, **kwargs)
        if name is Null:
            name, kwargs = kwargs.pop(self.key, None), dict(**kwargs)
        return self.init(self.lookup(name), *args, **kwargs)  # type: ignore[arg-type]

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({sorted(self)})"


DIAGRAMS = Registry(key="family")
CHECKS = Registry(key="check")
COMMANDS = Registry(key="command")
