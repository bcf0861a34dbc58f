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

from typing import Any


class NcSchurError(ValueError):
    r"""
    Base class of every domain error raised by `ncschur`.

    Domain errors are `ValueError`s so callers validating input may catch either.
    """


class CycleError(NcSchurError):
    r"""
    Relations close up into a cycle, so they do not describe a strict partial order.
    """


class NotNuioError(NcSchurError):
    r"""
    A total order was required but the poset carries none, or none exists.
    """


class NotThreeOneFreeError(NcSchurError):
    r"""
    The operation is only defined for (3+1)-free posets.
    """


class NotSymmetric(NcSchurError):  # pylint: disable=C0103
    r"""
    A quasisymmetric expression is not symmetric.

    Attributes:
        witness: two compositions that rearrange each other but carry different coefficients.
    """

    def __init__(self, witness: tuple[tuple[int, ...], tuple[int, ...]], message: str | None = None):
        self.witness = witness
        if message is None:
            message = f"Coefficients of {witness[0]} and {witness[1]} differ."
        super().__init__(message)


class MixedDegreeError(NcSchurError):
    r"""
    Words of more than one length were found where a homogeneous element was expected.
    """


class ContentMismatchError(NcSchurError):
    r"""
    An element has support outside the content its space was built for.
    """


class TCoefficientError(NcSchurError):
    r"""
    Coefficients depend on `t` where only integers are supported.
    """


class NotClosedError(NcSchurError):
    r"""
    A vertex set is not closed under the edges of a graph.

    Attributes:
        edge: a vertex inside the set and its neighbour outside it.
    """

    def __init__(self, edge: tuple[Any, Any], message: str | None = None):
        self.edge = edge
        if message is None:
            message = f"Edge {edge[0]} -- {edge[1]} leaves the vertex set."
        super().__init__(message)


class ShapeError(NcSchurError):
    r"""
    A tableau or partition has a shape the operation does not accept.
    """


class ParamError(NcSchurError):
    r"""
    A family parameter is outside its admissible range.
    """


class EdgeTypeError(NcSchurError):
    r"""
    An arrow-diagram edge is not one of the eight allowed edge types.
    """
