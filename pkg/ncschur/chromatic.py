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

import logging
from collections.abc import Iterable

from .exceptions import NotNuioError, NotThreeOneFreeError, ShapeError
from .ncalg import NCElement, e_p, f_gamma, pair, w_beta
from .poset import Content, Poset, blowup, copies, is_31_free
from .symfun import (
    Basis,
    Coefficient,
    Partition,
    SymExpr,
    change_basis,
    detect_symmetric,
    omega,
    partitions,
    simplify,
    t,
)
from .tableaux import PTableau, cread, enumerate_tableaux, is_hook, is_key, is_left
from .words import inv_p

logger = logging.getLogger(__name__)


def _check(p: Poset, with_t: bool) -> None:
    if with_t and p.order is None:
        raise NotNuioError("t-chromatic functions need a natural unit interval order.")


def _colorings(q: Poset, previous_copy: list[bool], shape: Partition, with_t: bool) -> Coefficient:
    n = q.n
    capacity = list(shape)
    colors = [0] * (n + 1)
    weights: dict[int, int] = {}

    def ascents() -> int:
        return sum(
            1
            for x in q.elements
            for y in q.elements
            if x != y and q.inc(x, y) and q.precedes(x, y) and colors[x] < colors[y]
        )

    def assign(v: int) -> None:
        if v > n:
            asc = ascents() if with_t else 0
            weights[asc] = weights.get(asc, 0) + 1
            return
        for color in range(1, len(capacity) + 1):
            if not capacity[color - 1]:
                continue
            if previous_copy[v] and colors[v - 1] <= color:
                continue
            if any(colors[u] == color and q.inc(u, v) for u in range(1, v)):
                continue
            capacity[color - 1] -= 1
            colors[v] = color
            assign(v + 1)
            colors[v] = 0
            capacity[color - 1] += 1

    assign(1)
    if not with_t:
        return weights.get(0, 0)
    return sum((count * t**asc for asc, count in weights.items()), 0)


def x_direct(p: Poset, beta: Iterable[int], with_t: bool = False) -> SymExpr:
    r"""
    Multicolored (t-)chromatic symmetric function of inc(P), in the monomial basis, by enumerating colorings.

    Copies of an element receive decreasing colors; with `with_t`, each coloring is weighted by
    `t` to the number of incomparable pairs whose colors increase along the total order.
    The coefficient of `m_λ` is read off the colorings with exactly `λ_i` vertices of color `i`.

    Raises:
        NotNuioError: If `with_t` and `p` carries no total order.

    Examples:
        >>> from ncschur.poset import antichain, chain
        >>> x_direct(antichain(3), (1, 2, 3)).to("e")
        SymExpr(3, 'e', {(3,): 6})
        >>> x_direct(chain(2), (1, 2))
        SymExpr(2, 'm', {(1, 1): 2, (2,): 1})
    """

    _check(p, with_t)
    beta = Content(beta).check(p)
    q = blowup(p, beta)
    labels = copies(beta)
    previous_copy = [False] + [copy > 1 for _, copy in labels]
    terms = {shape: _colorings(q, previous_copy, shape, with_t) for shape in partitions(len(beta))}
    return SymExpr(len(beta), Basis.m, terms)


def x_via_f(p: Poset, beta: Iterable[int], with_t: bool = False) -> SymExpr:
    r"""
    The same function as `x_direct`, computed as ω F_{W_β} (or ω F_{W_β(t)}).

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> x_via_f(p, (1, 2, 3), with_t=True) == x_direct(p, (1, 2, 3), with_t=True)
        True
    """

    _check(p, with_t)
    beta = Content(beta).check(p)
    quasi = f_gamma(w_beta(p, beta, with_t), len(beta))
    return omega(detect_symmetric(quasi))


def _weight(p: Poset, tableau: PTableau, with_t: bool) -> Coefficient:
    return t ** inv_p(p, cread(tableau)) if with_t else 1


def schur_expansion_gasharov(p: Poset, beta: Iterable[int], with_t: bool = False) -> SymExpr:
    r"""
    ω X^β as a sum of `s_{sh(T)}` over the P-tableaux `T` of content β, weighted by `t^{inv_P(cread(T))}`.

    Raises:
        NotThreeOneFreeError: If `p` contains an induced 3+1.
        NotNuioError: If `with_t` and `p` carries no total order.

    Examples:
        >>> from ncschur.poset import p_k
        >>> schur_expansion_gasharov(p_k(2, 5), (1, 2, 3, 4))
        SymExpr(4, 's', {(2, 2): 2, (3, 1): 4, (4,): 8})
    """

    if not is_31_free(p):
        raise NotThreeOneFreeError("The Schur expansion through P-tableaux needs a (3+1)-free poset.")
    _check(p, with_t)
    beta = Content(beta).check(p)
    terms: dict[Partition, Coefficient] = {}
    for shape in partitions(len(beta)):
        for tableau in enumerate_tableaux(p, shape, beta):
            terms[shape] = terms.get(shape, 0) + _weight(p, tableau, with_t)
    return SymExpr(len(beta), Basis.s, terms)


def e_coeff_hook(p: Poset, shape: Partition, beta: Iterable[int], with_t: bool = False) -> Coefficient:
    r"""
    Coefficient of `e_λ` in X^β for a hook λ, counted by key P-tableaux of shape λ and content β.

    Raises:
        ShapeError: If `shape` is not a hook.

    Examples:
        >>> from ncschur.poset import p_k
        >>> e_coeff_hook(p_k(2, 8), (3, 1, 1), (1, 3, 4, 5, 7))
        3
    """

    shape = tuple(shape)
    if not shape or not is_hook(shape):
        raise ShapeError(f"{shape} is not a hook.")
    if not is_31_free(p):
        raise NotThreeOneFreeError("Key tableaux count e-coefficients over (3+1)-free posets only.")
    _check(p, with_t)
    total: Coefficient = 0
    for tableau in enumerate_tableaux(p, shape, beta):
        if is_key(p, tableau):
            total = total + _weight(p, tableau, with_t)
    return simplify(total)


def e_coeff_twocol(p: Poset, shape: Partition, beta: Iterable[int], with_t: bool = False) -> Coefficient:
    r"""
    Coefficient of `e_λ` in X^β for λ with at most two columns, counted by left P-tableaux.

    Raises:
        ShapeError: If `shape` has more than two columns.

    Examples:
        >>> from ncschur.poset import p_k
        >>> e_coeff_twocol(p_k(2, 3), (2, 1), (1, 2, 3))
        1
    """

    shape = tuple(shape)
    if not shape or shape[0] > 2:
        raise ShapeError(f"{shape} has more than two columns.")
    if not is_31_free(p):
        raise NotThreeOneFreeError("Left tableaux count e-coefficients over (3+1)-free posets only.")
    _check(p, with_t)
    total: Coefficient = 0
    for tableau in enumerate_tableaux(p, shape, beta):
        if is_left(p, tableau):
            total = total + _weight(p, tableau, with_t)
    return simplify(total)


def e_expansion(p: Poset, beta: Iterable[int], with_t: bool = False) -> SymExpr:
    return change_basis(x_via_f(p, beta, with_t), Basis.e)


def m_coefficient_by_pairing(p: Poset, shape: Partition, beta: Iterable[int], with_t: bool = False) -> Coefficient:
    r"""
    Coefficient of `m_λ` in ω X^β, as the pairing of `e_{λ_1} e_{λ_2} ...` with W_β (or W_β(t)).

    Examples:
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> m_coefficient_by_pairing(p, (2, 1), (1, 2, 3)) == omega(x_direct(p, (1, 2, 3)))[(2, 1)]
        True
    """

    product = NCElement.one(p)
    for part in shape:
        product = product * e_p(p, part)
    return pair(product, w_beta(p, beta, with_t))
