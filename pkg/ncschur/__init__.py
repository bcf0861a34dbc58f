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

from strenum import StrEnum
from yaml import add_multi_representer
from yaml.representer import SafeRepresenter

from . import utils
from .arrow import ArrowDiagram, ArrowElement, eval_p, fill, named_diagram
from .checks import CHECKS, Scope, run_check, run_checks, sweep
from .config import Config
from .exceptions import NcSchurError
from .functional import dumps, load, save
from .ncalg import NCElement, e_p, h_p, j_schur, m_p
from .parser import ConfigParser
from .poset import Nuio, Poset, p_k
from .quotient import IdealKind, build
from .registry import COMMANDS, DIAGRAMS, Registry
from .rmatrix import ChainPair, eta
from .symfun import QSymExpr, SymExpr
from .tableaux import PTableau

try:
    from ._version import __version__, __version_tuple__, version
except ImportError:  # not installed
    __version__ = version = "0.0.0"
    __version_tuple__ = (0, 0, 0)

__all__ = [
    "Poset",
    "Nuio",
    "p_k",
    "NCElement",
    "e_p",
    "h_p",
    "j_schur",
    "m_p",
    "SymExpr",
    "QSymExpr",
    "IdealKind",
    "build",
    "PTableau",
    "ChainPair",
    "eta",
    "ArrowDiagram",
    "ArrowElement",
    "eval_p",
    "fill",
    "named_diagram",
    "Scope",
    "run_check",
    "run_checks",
    "sweep",
    "Config",
    "ConfigParser",
    "Registry",
    "CHECKS",
    "COMMANDS",
    "DIAGRAMS",
    "NcSchurError",
    "dumps",
    "load",
    "save",
    "utils",
    "version",
    "__version__",
    "__version_tuple__",
]


add_multi_representer(StrEnum, SafeRepresenter.represent_str)
SafeRepresenter.add_multi_representer(StrEnum, SafeRepresenter.represent_str)
