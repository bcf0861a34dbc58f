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

r"""
The `ncschur` command.

`ncschur <command> [flags]` writes one JSON document (or TSV rows with `--tsv`) to standard output.
Every command is a `Config` registered in `COMMANDS`; its fields are its flags.

Exit status is 0 on success, 1 when a verification fails and 2 on malformed input,
in which case `{"error": ..., "message": ...}` is written to standard error.
"""

from __future__ import annotations

import logging
import sys
from collections.abc import Sequence
from json import loads
from typing import Any, Optional, Tuple

from .arrow import ArrowDiagram, ArrowElement, classify_primitive, eval_p, fill, named_diagram
from .checks import Scope, run_checks, sweep
from .chromatic import x_direct
from .config import Config
from .eqgraph import GraphKind, content_graph
from .exceptions import NcSchurError, ParamError
from .functional import dumps, load
from .ncalg import NCElement, pair
from .poset import Poset
from .registry import COMMANDS
from .rmatrix import ChainPair, eta, pair_and_lump
from .symfun import omega, poly_to_list
from .utils import Report, parse_ints, parse_subsets

logger = logging.getLogger(__name__)

Ints = Optional[Tuple[int, ...]]


class Command(Config):
    r"""
    Flags shared by every command.

    Output is canonical JSON unless `--tsv` (or `--json false`) asks for TSV rows.
    `--threads` sizes the worker pool of `verify` and `sweep`; the other commands run serially.
    """

    poset: Optional[str] = None
    json: Optional[bool] = None
    tsv: bool = False
    threads: int = 1
    log_level: str = "WARNING"

    def post(self) -> None:
        if self.json and self.tsv:
            raise ParamError("--json and --tsv are mutually exclusive.")
        if self.json is False:
            self.tsv = True
        self.json = not self.tsv
        if self.threads < 1:
            raise ParamError(f"--threads must be positive, but got {self.threads}.")
        self.log_level = str(self.log_level).upper()
        if not isinstance(logging.getLevelName(self.log_level), int):
            raise ParamError(f"Unknown log level {self.log_level}.")

    def load_poset(self) -> Poset:
        if self.poset is None:
            raise ParamError("--poset is required.")
        return Poset.from_json(load(self.poset))

    def require(self, name: str) -> Any:
        value = self.get(name)
        if value is None:
            raise ParamError(f"--{name} is required.")
        return value

    def run(self) -> tuple[Any, int]:
        raise NotImplementedError


@COMMANDS.register("chromatic")
class ChromaticCommand(Command):
    r"""
    The (t-)chromatic symmetric function of a poset with multiplicities.

    Keys are partitions written as JSON lists, values are coefficient lists in increasing powers of `t`.
    """

    beta: Ints = None
    t: bool = False
    basis: str = "m"
    omega: bool = False

    def run(self) -> tuple[Any, int]:
        p = self.load_poset()
        beta = tuple(p.elements) if self.beta is None else parse_ints(self.beta)
        x = x_direct(p, beta, self.t)
        if self.omega:
            x = omega(x)
        x = x.to(self.basis)
        return {dumps(list(shape)): poly_to_list(c) for shape, c in x.terms.items()}, 0


@COMMANDS.register("knuth-graph")
class KnuthGraphCommand(Command):
    r"""
    The P-Knuth graph on the words of a content, optionally restricted to one inversion number.
    """

    content: Ints = None
    inv: Optional[int] = None
    dot: Optional[str] = None
    kind = GraphKind.knuth

    def run(self) -> tuple[Any, int]:
        p = self.load_poset()
        graph = content_graph(p, parse_ints(self.require("content")), self.kind, self.inv)
        if self.dot is not None:
            with open(self.dot, "w", encoding="utf-8") as fp:
                fp.write(graph.to_dot())
            logger.info("wrote %d components to %s", len(graph.components), self.dot)
        return graph, 0


@COMMANDS.register("h-graph")
class HGraphCommand(KnuthGraphCommand):
    kind = GraphKind.h


@COMMANDS.register("verify")
class VerifyCommand(Command):
    r"""
    Run one check, a comma separated list of checks, or `all`, on one poset.
    """

    positionals = ("check",)

    check: str = "all"
    content: Ints = None
    shape: Ints = None
    k: Optional[int] = None
    ell: Optional[int] = None
    alpha: Ints = None
    flags: Optional[str] = None
    max_content: int = 3
    max_degree: int = 4
    t: bool = False

    def scope(self) -> Scope:
        flags = self.flags
        if flags is not None:
            if isinstance(flags, (list, tuple)) and all(isinstance(z, int) for z in flags):
                flags = [flags]
            flags = parse_subsets(flags)
        return Scope(
            content=None if self.content is None else parse_ints(self.content),
            shape=None if self.shape is None else parse_ints(self.shape),
            k=self.k,
            ell=self.ell,
            alpha=None if self.alpha is None else parse_ints(self.alpha),
            flags=flags,
            max_content=self.max_content,
            max_degree=self.max_degree,
            with_t=self.t,
        )

    def run(self) -> tuple[Any, int]:
        p, scope = self.load_poset(), self.scope()
        reports = run_checks(self.check, p, scope, self.threads)
        status = 0 if all(reports) else 1
        if len(reports) == 1:
            return reports[0], status
        return {"status": "PASS" if status == 0 else "FAIL", "reports": reports}, status


@COMMANDS.register("eta")
class EtaCommand(Command):
    r"""
    Apply the ladder R-matrix to a pair of strictly decreasing chains.
    """

    a: Ints = None
    b: Ints = None

    def run(self) -> tuple[Any, int]:
        p = self.load_poset()
        chains = ChainPair(p, parse_ints(self.require("a")), parse_ints(self.require("b")))
        return {"input": chains, "output": eta(chains), "lumps": pair_and_lump(chains)}, 0


@COMMANDS.register("arrow")
class ArrowCommand(Command):
    r"""
    `eval`, `fill` or `clique` on an arrow diagram read from `--diagram`, or on a named family.
    """

    positionals = ("action",)

    action: str = "eval"
    diagram: Optional[str] = None
    family: Optional[str] = None
    shape: Ints = None
    alpha: Ints = None
    m: Optional[int] = None

    def element(self) -> ArrowElement:
        if self.diagram is not None:
            return ArrowElement.diagram(ArrowDiagram.from_json(load(self.diagram)))
        if self.family is None:
            raise ParamError("Either --diagram or --family is required.")
        params = {key: self[key] for key in ("shape", "alpha", "m") if self[key] is not None}
        for key in ("shape", "alpha"):
            if key in params:
                params[key] = parse_ints(params[key])
        return named_diagram(self.family, **params)

    def single(self) -> ArrowDiagram:
        terms = list(self.element())
        if len(terms) != 1 or terms[0][1] != 1:
            raise ParamError(f"`{self.action}` needs a single diagram, but got {len(terms)} terms.")
        return terms[0][0]

    def run(self) -> tuple[Any, int]:
        if self.action == "eval":
            return eval_p(self.load_poset(), self.element()), 0
        if self.action == "fill":
            return [list(word) for word in fill(self.load_poset(), self.single())], 0
        if self.action == "clique":
            return classify_primitive(self.single()), 0
        raise ParamError(f"Unknown arrow action {self.action}, expected one of eval, fill, clique.")


@COMMANDS.register("pair")
class PairCommand(Command):
    r"""
    Pair two elements of the free algebra saved as JSON.
    """

    f: Optional[str] = None
    gamma: Optional[str] = None

    def run(self) -> tuple[Any, int]:
        f = NCElement.from_json(load(self.require("f")))
        gamma = NCElement.from_json(load(self.require("gamma")))
        return {"pairing": poly_to_list(pair(f, gamma))}, 0


@COMMANDS.register("sweep")
class SweepCommand(Command):
    r"""
    Run checks over every (3+1)-free poset up to a size.
    """

    max_size: int = 4
    check: str = "all"
    max_content: int = 3
    max_degree: int = 4
    t: bool = False

    def run(self) -> tuple[Any, int]:
        scope = Scope(max_content=self.max_content, max_degree=self.max_degree, with_t=self.t)
        report = sweep(self.max_size, self.check, scope, self.threads)
        return report, 0 if report else 1


def render(payload: Any, tsv: bool = False) -> str:
    r"""
    Canonical JSON, or one `key<TAB>value` row per entry.

    Examples:
        >>> render({"b": [1, 2], "a": "x"})
        '{"a":"x","b":[1,2]}'
        >>> print(render({"b": [1, 2], "a": "x"}, tsv=True))  # doctest: +NORMALIZE_WHITESPACE
        a	"x"
        b	[1,2]
    """

    if not tsv:
        return dumps(payload)
    data = loads(dumps(payload))
    if isinstance(data, dict):
        return "\n".join(f"{key}\t{dumps(value)}" for key, value in sorted(data.items()))
    if isinstance(data, list):
        return "\n".join(dumps(item) for item in data)
    return dumps(data)


def run(argv: Sequence[str] | None = None) -> int:
    r"""
    Run one command and return its exit status.

    Examples:
        >>> run(["chromatic", "--poset", "tests/p2_5.json", "--beta", "1,2,3,4", "--basis", "s", "--omega"])
        {"[2,2]":[2],"[3,1]":[4],"[4]":[8]}
        0
        >>> run(["colour"])
        2
    """

    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if not argv:
            raise ParamError(f"A command is required, one of {sorted(COMMANDS)}.")
        name, *rest = argv
        command = COMMANDS.build(name)
        command.parse(rest)
        logging.basicConfig(
            level=command.log_level,
            stream=sys.stderr,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
            force=True,
        )
        payload, status = command.run()
    except (NcSchurError, ValueError, KeyError, TypeError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        sys.stderr.write(dumps({"error": type(exc).__name__, "message": message}) + "\n")
        return 2
    sys.stdout.write(render(payload, command.tsv) + "\n")
    if isinstance(payload, Report) and not payload:
        logger.warning("%s failed on %d instances", payload.name, len(payload.failures))
    return status


def main() -> None:
    sys.exit(run())
