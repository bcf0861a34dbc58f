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

import sys
from argparse import ArgumentParser, Namespace, _StoreAction
from ast import literal_eval
from collections.abc import Sequence
from contextlib import suppress
from inspect import isclass
from typing import TYPE_CHECKING, Any, Union
from warnings import warn

from typing_extensions import get_args, get_origin

from .exceptions import ParamError
from .functional import load
from .utils import Null, parse_bool

if TYPE_CHECKING:
    from .config import Config

NoneType = type(None)


def _evaluate(value: Any) -> Any:
    if isinstance(value, str):
        with suppress(TypeError, ValueError, SyntaxError, MemoryError, RecursionError):
            return literal_eval(value)
        return value
    if isinstance(value, list):
        values = [_evaluate(item) for item in value]
        if len(values) == 1 and isinstance(values[0], (list, tuple)):
            return values[0]
        return values
    return value


class ConfigParser(ArgumentParser):  # pylint: disable=C0115
    r"""
    Parser to parse command-line arguments into a `Config`.

    `ConfigParser` is a subclass of `argparse.ArgumentParser`.
    Flags are derived from the fields a `Config` declares: `--max_size` and `--max-size` both set `max_size`,
    `bool` fields accept a bare flag or an explicit value, `list`/`tuple` fields take one or more values.

    String values are evaluated with `ast.literal_eval` where possible, so `--content 1,2,3` gives `(1, 2, 3)`.

    Errors raise `ParamError` instead of exiting, so callers decide how to report them.
    """

    def __init__(self, *args: Any, **kwargs: Any):
        super().__init__(*args, **kwargs)
        self._registries["action"][None] = StoreAction
        self._registries["action"]["store"] = StoreAction

    def parse_config(
        self,
        args: Sequence[str] | None = None,
        config: Config | None = None,
        default_config: str | None = "config",
    ) -> Config:
        r"""
        Parse the arguments for `Config`.

        There are three levels of config:

        1. The field defaults of the `Config` passed into this method,
        2. The config file given by `--<default_config>` (if specified),
        3. The other command-line arguments.

        Higher levels override lower levels (i.e. 3 > 2 > 1).

        Args:
            args (Sequence[str] | None, optional): Command-line arguments. Defaults to `None`.
            config (Config): existing configuration.
            default_config (str | None, optional): Name of the flag carrying a config file. Defaults to `config`.

        Returns:
            config: The parsed `Config`.

        Raises:
            ValueError: If `config` is not specified.
            ParamError: If an argument is unrecognised or malformed.

        Examples:
            >>> from ncschur.config import Config
            >>> class Chromatic(Config):
            ...     poset: str = "p.json"
            ...     basis: str = "m"
            >>> ConfigParser().parse_config(["--basis", "s", "--config", "tests/chromatic.yaml"], Chromatic()).dict()
            {'poset': 'tests/p2_5.json', 'basis': 's'}
            >>> ConfigParser().parse_config(["--colour", "s"], Chromatic())
            Traceback (most recent call last):
            ncschur.exceptions.ParamError: unrecognized arguments: --colour s
        """

        if args is None:
            args = sys.argv[1:]
        if config is None:
            raise ValueError("config must be specified")
        self.add_config_arguments(config)
        if default_config is not None and "--" + default_config not in self:
            self.add_argument("--" + default_config, dest=default_config)

        parsed = self.parse_args(args)

        if default_config is not None:
            parsed = self.merge_default_config(parsed, default_config)

        if config.getattr("parser", None) is not self:
            config.setattr("parser", self)
        return config.merge(parsed)

    def parse_args(  # type: ignore[override]
        self, args: Sequence[str] | None = None, namespace: Namespace | None = None, eval_str: bool = True
    ) -> dict:
        r"""
        Parse command line arguments and convert types.

        Arguments left unset are dropped, so they never override lower levels.
        If `eval_str` is specified, it also performs `literal_eval` on all `str` values.

        Examples:
            >>> p = ConfigParser()
            >>> _ = p.add_argument("--content", nargs="+")
            >>> _ = p.add_argument("--basis")
            >>> p.parse_args(["--content", "1,2,4"])
            {'content': (1, 2, 4)}
            >>> p.parse_args(["--content", "1", "2", "4", "--basis", "s"])
            {'content': [1, 2, 4], 'basis': 's'}
        """

        parsed = vars(super().parse_args(args, namespace))
        parsed = {key: value for key, value in parsed.items() if value is not Null}
        if eval_str:
            parsed = {key: _evaluate(value) for key, value in parsed.items()}
        return parsed

    def add_config_arguments(self, config: Config) -> None:
        fields = config.fields()
        for key in type(config).positionals:
            if key not in self._option_string_actions and all(action.dest != key for action in self._actions):
                self.add_argument(key, nargs="?")
        for key, dtype in fields.items():
            if key not in type(config).positionals:
                self.add_config_argument(key, dtype)

    def add_config_argument(self, key: str, dtype: Any = None) -> Any:
        if get_origin(dtype) is Union:
            args = [arg for arg in get_args(dtype) if arg is not NoneType]
            if len(args) == 1:
                dtype = args[0]
        origin = get_origin(dtype) or dtype
        names = ["--" + key]
        if "_" in key:
            names.append("--" + key.replace("_", "-"))
        if any(name in self for name in names):
            return None
        if origin is None or not isclass(origin):
            return self.add_argument(*names, dest=key)
        if issubclass(origin, (list, tuple, set)):
            return self.add_argument(*names, nargs="+", dest=key)
        if issubclass(origin, bool):
            return self.add_argument(*names, type=parse_bool, nargs="?", const=True, dest=key)
        if origin in (int, float):
            return self.add_argument(*names, type=origin, dest=key)
        return self.add_argument(*names, dest=key)

    def merge_default_config(self, parsed: dict, default_config: str) -> dict:
        path = parsed.pop(default_config, None)
        if path is None:
            return parsed
        warn(
            f"{self.__class__.__name__} has '{default_config}={path}' specified, "
            "its values will override values in Config"
        )
        merged = load(str(path))
        if not isinstance(merged, dict):
            raise ParamError(f"Config file {path} must hold a mapping, but got {type(merged).__name__}.")
        merged.update(parsed)
        return merged

    def error(self, message: str):
        raise ParamError(message)

    def __contains__(self, name: str):
        if name in self._option_string_actions:
            return True
        return False


class StoreAction(_StoreAction):  # pylint: disable=R0903
    def __init__(  # pylint: disable=R0913
        self,
        option_strings,
        dest,
        nargs=None,
        const=None,
        default=Null,
        type=None,  # pylint: disable=W0622
        choices=None,
        required=False,
        help=None,  # pylint: disable=W0622
        metavar=None,
    ):
        super().__init__(
            option_strings=option_strings,
            dest=dest,
            nargs=nargs,
            const=const,
            default=default,
            type=type,
            choices=choices,
            required=required,
            help=help,
            metavar=metavar,
        )
        if self.default is not Null:
            warn(
                f"Default value for argument {self.dest} is set to {self.default}, "
                "Default value defined in argument will be overwritten by default value defined in Config",
            )
