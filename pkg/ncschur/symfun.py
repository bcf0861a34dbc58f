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

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Tuple, Union

from strenum import StrEnum
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices.sdm import SDM
from sympy.polys.rings import PolyElement, ring
from sympy.utilities.iterables import multiset_permutations
from sympy.utilities.iterables import partitions as _partitions

from .exceptions import NotSymmetric

Partition = Tuple[int, ...]
Composition = Tuple[int, ...]

ZZt, t = ring("t", ZZ)
# Integers stand for constant polynomials; arithmetic mixes freely with `PolyElement`.
Coefficient = Union[int, PolyElement]


class Basis(StrEnum):
    m = "m"
    e = "e"
    h = "h"
    s = "s"


def simplify(coefficient: Coefficient) -> Coefficient:
    r"""
    Collapse constant polynomials to `int`.

    Examples:
        >>> simplify(ZZt(3)), simplify(2 * t + 1)
        (3, 2*t + 1)
    """

    if isinstance(coefficient, PolyElement):
        if coefficient.is_ground:
            return int(coefficient.LC)
        return coefficient
    return int(coefficient)


def poly_to_list(coefficient: Coefficient) -> list[int]:
    r"""
    Ascending coefficient list with trailing zeros trimmed.

    Examples:
        >>> poly_to_list(t**2 + 3), poly_to_list(0), poly_to_list(8)
        ([3, 0, 1], [], [8])
    """

    if not isinstance(coefficient, PolyElement):
        return [int(coefficient)] if coefficient else []
    terms = {k: int(v) for (k,), v in coefficient.items()}
    if not terms:
        return []
    return [terms.get(k, 0) for k in range(max(terms) + 1)]


def poly_from_list(coefficients: Iterable[int]) -> Coefficient:
    r"""
    Inverse of `poly_to_list`.

    Examples:
        >>> poly_from_list([3, 0, 1]), poly_from_list([2])
        (t**2 + 3, 2)
    """

    return simplify(ZZt.from_dict({(k,): int(c) for k, c in enumerate(coefficients) if c}))


def is_t_free(coefficient: Coefficient) -> bool:
    return not isinstance(coefficient, PolyElement) or coefficient.is_ground


def is_nonnegative(coefficient: Coefficient) -> bool:
    return all(c >= 0 for c in poly_to_list(coefficient))


def at_one(coefficient: Coefficient) -> int:
    return sum(poly_to_list(coefficient))


def t_coefficient(coefficient: Coefficient, degree: int) -> int:
    coefficients = poly_to_list(coefficient)
    return coefficients[degree] if degree < len(coefficients) else 0


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    r"""
    Partitions of `n` in reverse lexicographic order, which refines dominance.

    Examples:
        >>> partitions(4)
        ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
        >>> partitions(0)
        ((),)
    """

    if n == 0:
        return ((),)
    found = {tuple(sorted((k for k, m in part.items() for _ in range(m)), reverse=True)) for part in _partitions(n)}
    return tuple(sorted(found, reverse=True))


def transpose(partition: Iterable[int]) -> Partition:
    r"""
    Conjugate partition.

    Examples:
        >>> transpose((4, 3, 3))
        (3, 3, 3, 1)
        >>> transpose(())
        ()
    """

    parts = tuple(partition)
    if not parts:
        return ()
    return tuple(sum(1 for part in parts if part > i) for i in range(parts[0]))


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    return all(part > 0 for part in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def composition_from_set(n: int, subset: Iterable[int]) -> Composition:
    r"""
    Composition of `n` whose partial sums are `subset`.

    Examples:
        >>> composition_from_set(4, {1, 3})
        (1, 2, 1)
    """

    cuts = [0, *sorted(subset), n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:])) if n else ()


def set_from_composition(composition: Iterable[int]) -> frozenset[int]:
    total, cuts = 0, []
    for part in tuple(composition)[:-1]:
        total += part
        cuts.append(total)
    return frozenset(cuts)


def compositions(n: int) -> Iterator[Composition]:
    for size in range(n):
        for subset in combinations(range(1, n), size):
            yield composition_from_set(n, subset)


def _clean(terms: Mapping[Any, Coefficient]) -> dict[Any, Coefficient]:
    return {key: simplify(value) for key, value in sorted(terms.items()) if value}


class QSymExpr:
    r"""
    Homogeneous quasisymmetric expression in the monomial basis `M_alpha`.

    Args:
        degree: Degree shared by every composition.
        terms: Mapping from compositions to coefficients.

    Examples:
        >>> fundamental(2, ()) + fundamental(2, {1})
        QSymExpr(2, {(1, 1): 2, (2,): 1})
    """

    def __init__(self, degree: int, terms: Mapping[Composition, Coefficient] | None = None):
        self.degree = degree
        terms = {tuple(key): value for key, value in (terms or {}).items()}
        for composition in terms:
            if sum(composition) != degree:
                raise ValueError(f"Composition {composition} does not have degree {degree}.")
        self.terms = _clean(terms)

    def __getitem__(self, composition: Composition) -> Coefficient:
        return self.terms.get(tuple(composition), 0)

    def __add__(self, other: QSymExpr) -> QSymExpr:
        if other.degree != self.degree and other.terms and self.terms:
            raise ValueError(f"Cannot add degree {self.degree} and degree {other.degree}.")
        degree = self.degree if self.terms else other.degree
        terms = dict(self.terms)
        for key, value in other.terms.items():
            terms[key] = terms.get(key, 0) + value
        return QSymExpr(degree, terms)

    def __neg__(self) -> QSymExpr:
        return QSymExpr(self.degree, {key: -value for key, value in self.terms.items()})

    def __sub__(self, other: QSymExpr) -> QSymExpr:
        return self + (-other)

    def __mul__(self, scalar: Coefficient) -> QSymExpr:
        return QSymExpr(self.degree, {key: value * scalar for key, value in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, QSymExpr):
            return NotImplemented
        return self.terms == other.terms and (self.degree == other.degree or not self.terms)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.degree}, {self.terms})"


def fundamental(n: int, descents: Iterable[int]) -> QSymExpr:
    r"""
    Fundamental quasisymmetric function Q_S in the monomial basis: the sum of `M_comp(T)` over `T ⊇ S`.

    Examples:
        >>> fundamental(2, ())
        QSymExpr(2, {(1, 1): 1, (2,): 1})
        >>> fundamental(2, {1})
        QSymExpr(2, {(1, 1): 1})
        >>> fundamental(3, {1, 2})
        QSymExpr(3, {(1, 1, 1): 1})
    """

    descents = frozenset(descents)
    if any(not 1 <= i < n for i in descents):
        raise ValueError(f"Descent set {sorted(descents)} is not a subset of 1..{n - 1}.")
    free = [i for i in range(1, n) if i not in descents]
    terms = {}
    for size in range(len(free) + 1):
        for extra in combinations(free, size):
            terms[composition_from_set(n, descents.union(extra))] = 1
    return QSymExpr(n, terms)


class SymExpr:
    r"""
    Homogeneous symmetric function expanded in one of the bases m, e, h, s.

    Equality converts the right operand to the basis of the left one.

    Args:
        degree: Degree shared by every partition.
        basis: One of `m`, `e`, `h`, `s`.
        terms: Mapping from partitions to coefficients.

    Examples:
        >>> f = SymExpr(2, "m", {(2,): 1})
        >>> f.to("s")
        SymExpr(2, 's', {(1, 1): -1, (2,): 1})
        >>> f == SymExpr(2, "s", {(2,): 1, (1, 1): -1})
        True
    """

    def __init__(self, degree: int, basis: Basis | str, terms: Mapping[Partition, Coefficient] | None = None):
        self.degree = degree
        self.basis = Basis(basis)
        terms = {tuple(key): value for key, value in (terms or {}).items()}
        for partition in terms:
            if sum(partition) != degree or not is_partition(partition):
                raise ValueError(f"{partition} is not a partition of {degree}.")
        self.terms = _clean(terms)

    def __getitem__(self, partition: Partition) -> Coefficient:
        return self.terms.get(tuple(partition), 0)

    def coefficient(self, partition: Partition) -> Coefficient:
        return self[partition]

    def to(self, basis: Basis | str) -> SymExpr:
        return change_basis(self, basis)

    def _aligned(self, other: SymExpr) -> SymExpr:
        if other.degree != self.degree and other.terms and self.terms:
            raise ValueError(f"Cannot combine degree {self.degree} and degree {other.degree}.")
        return other if other.basis == self.basis else change_basis(other, self.basis)

    def __add__(self, other: SymExpr) -> SymExpr:
        other = self._aligned(other)
        terms = dict(self.terms)
        for key, value in other.terms.items():
            terms[key] = terms.get(key, 0) + value
        return SymExpr(self.degree if self.terms else other.degree, self.basis, terms)

    def __neg__(self) -> SymExpr:
        return SymExpr(self.degree, self.basis, {key: -value for key, value in self.terms.items()})

    def __sub__(self, other: SymExpr) -> SymExpr:
        return self + (-other)

    def __mul__(self, scalar: Coefficient) -> SymExpr:
        return SymExpr(self.degree, self.basis, {key: value * scalar for key, value in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SymExpr):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == self._aligned(other).terms

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.degree}, {str(self.basis)!r}, {self.terms})"

    def specialize(self, degree: int | None = None) -> SymExpr:
        r"""
        Set `t = 1`, or extract the coefficient of `t**degree` when given.
        """

        if degree is None:
            return SymExpr(self.degree, self.basis, {key: at_one(value) for key, value in self.terms.items()})
        terms = {key: t_coefficient(value, degree) for key, value in self.terms.items()}
        return SymExpr(self.degree, self.basis, terms)

    def __json__(self) -> dict:
        return {
            "degree": self.degree,
            "basis": str(self.basis),
            "terms": {"[" + ",".join(map(str, key)) + "]": poly_to_list(value) for key, value in self.terms.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SymExpr:
        terms = {
            tuple(int(i) for i in key.strip("[]").split(",") if i): poly_from_list(value)
            for key, value in data["terms"].items()
        }
        return cls(data["degree"], data["basis"], terms)


def detect_symmetric(q: QSymExpr) -> SymExpr:
    r"""
    The monomial expansion of `q`, provided its coefficients are constant on rearrangements.

    Raises:
        NotSymmetric: With a witness pair `(partition, rearrangement)` of unequal coefficients.

    Examples:
        >>> detect_symmetric(fundamental(2, ()) + fundamental(2, {1}))
        SymExpr(2, 'm', {(1, 1): 2, (2,): 1})
        >>> detect_symmetric(QSymExpr(3, {(2, 1): 1}))
        Traceback (most recent call last):
        ncschur.exceptions.NotSymmetric: Coefficients of (2, 1) and (1, 2) differ.
    """

    terms = {}
    for partition in partitions(q.degree):
        coefficient = q[partition]
        for arrangement in multiset_permutations(list(partition)):
            arrangement = tuple(arrangement)
            if q[arrangement] != coefficient:
                raise NotSymmetric((partition, arrangement))
        terms[partition] = coefficient
    return SymExpr(q.degree, Basis.m, terms)


def _horizontal_strips(partition: Partition, size: int) -> Iterator[Partition]:
    parts = list(partition)

    def shrink(i: int, left: int) -> Iterator[list[int]]:
        if i == len(parts):
            if left == 0:
                yield []
            return
        floor = parts[i + 1] if i + 1 < len(parts) else 0
        for removed in range(min(left, parts[i] - floor) + 1):
            for rest in shrink(i + 1, left - removed):
                yield [parts[i] - removed, *rest]

    for smaller in shrink(0, size):
        yield tuple(part for part in smaller if part)


@lru_cache(maxsize=None)
def kostka(shape: Partition, content: Composition) -> int:
    r"""
    Number of semistandard Young tableaux of `shape` and `content`.

    Tableaux are counted by peeling off the horizontal strip holding the largest entry.

    Examples:
        >>> kostka((2, 1), (1, 1, 1)), kostka((2, 2), (2, 1, 1)), kostka((3, 1), (3, 1))
        (2, 1, 1)
    """

    shape, content = tuple(shape), tuple(content)
    if sum(shape) != sum(content):
        raise ValueError(f"Shape {shape} and content {content} have different sizes.")
    if not content:
        return 1
    return sum(kostka(smaller, content[:-1]) for smaller in _horizontal_strips(shape, content[-1]))


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> dict[tuple[Partition, Partition], int]:
    r"""
    Nonzero Kostka numbers `K[shape, content]` over partitions of `n`.
    """

    parts = partitions(n)
    return {(shape, content): k for shape in parts for content in parts if (k := kostka(shape, content))}


@lru_cache(maxsize=None)
def inverse_kostka(n: int) -> dict[tuple[Partition, Partition], int]:
    r"""
    Nonzero entries of the inverse of the Kostka matrix over partitions of `n`.

    Examples:
        >>> inverse_kostka(2)
        {((2,), (2,)): 1, ((2,), (1, 1)): -1, ((1, 1), (1, 1)): 1}
    """

    parts = partitions(n)
    index = {part: i for i, part in enumerate(parts)}
    rows: dict[int, dict[int, Any]] = {}
    for (shape, content), k in kostka_matrix(n).items():
        rows.setdefault(index[shape], {})[index[content]] = QQ(k)
    inverse = SDM(rows, (len(parts), len(parts)), QQ).inv()
    ret = {}
    for i, row in sorted(inverse.items()):
        for j, value in sorted(row.items()):
            if value:
                ret[(parts[i], parts[j])] = int(value.numerator) // int(value.denominator)
    return ret


def _to_s(f: SymExpr) -> dict[Partition, Coefficient]:
    n, out = f.degree, {}

    def add(key: Partition, value: Coefficient) -> None:
        out[key] = out.get(key, 0) + value

    if f.basis == Basis.s:
        return dict(f.terms)
    if f.basis == Basis.m:
        inverse = inverse_kostka(n)
        for mu, c in f.terms.items():
            for lam in partitions(n):
                if (k := inverse.get((mu, lam))) is not None:
                    add(lam, k * c)
        return out
    table = kostka_matrix(n)
    for mu, c in f.terms.items():
        for lam in partitions(n):
            if (k := table.get((lam, mu))) is not None:
                add(transpose(lam) if f.basis == Basis.e else lam, k * c)
    return out


def _from_s(n: int, terms: Mapping[Partition, Coefficient], basis: Basis) -> dict[Partition, Coefficient]:
    out: dict[Partition, Coefficient] = {}

    def add(key: Partition, value: Coefficient) -> None:
        out[key] = out.get(key, 0) + value

    if basis == Basis.s:
        return dict(terms)
    if basis == Basis.m:
        table = kostka_matrix(n)
        for lam, c in terms.items():
            for mu in partitions(n):
                if (k := table.get((lam, mu))) is not None:
                    add(mu, k * c)
        return out
    inverse = inverse_kostka(n)
    for lam, c in terms.items():
        column = transpose(lam) if basis == Basis.e else lam
        for mu in partitions(n):
            if (k := inverse.get((mu, column))) is not None:
                add(mu, k * c)
    return out


def change_basis(f: SymExpr, target: Basis | str) -> SymExpr:
    r"""
    Re-expand `f` in the `target` basis, routing through Schur functions.

    Examples:
        >>> change_basis(SymExpr(4, "s", {(2, 2): 1}), "m")
        SymExpr(4, 'm', {(1, 1, 1, 1): 2, (2, 1, 1): 1, (2, 2): 1})
        >>> change_basis(SymExpr(3, "s", {(2, 1): 1}), "e")
        SymExpr(3, 'e', {(2, 1): 1, (3,): -1})
        >>> change_basis(SymExpr(3, "h", {(3,): 1}), "s")
        SymExpr(3, 's', {(3,): 1})
    """

    target = Basis(target)
    if f.basis == target:
        return SymExpr(f.degree, target, f.terms)
    return SymExpr(f.degree, target, _from_s(f.degree, _to_s(f), target))


def omega(f: SymExpr) -> SymExpr:
    r"""
    The involution sending h_λ to e_λ and s_λ to s_λ'.

    Examples:
        >>> omega(SymExpr(4, "h", {(3, 1): 1}))
        SymExpr(4, 'e', {(3, 1): 1})
        >>> omega(SymExpr(3, "s", {(2, 1): 1, (3,): 2}))
        SymExpr(3, 's', {(1, 1, 1): 2, (2, 1): 1})
    """

    if f.basis == Basis.h:
        return SymExpr(f.degree, Basis.e, f.terms)
    if f.basis == Basis.e:
        return SymExpr(f.degree, Basis.h, f.terms)
    if f.basis == Basis.s:
        return SymExpr(f.degree, Basis.s, {transpose(key): value for key, value in f.terms.items()})
    return change_basis(omega(change_basis(f, Basis.s)), Basis.m)


@dataclass(frozen=True)
class Positivity:
    r"""
    Result of a positivity test; truthy iff positive, `witness` is a partition with a negative coefficient.
    """

    positive: bool
    witness: Partition | None = None

    def __bool__(self) -> bool:
        return self.positive


def is_positive(f: SymExpr, basis: Basis | str) -> Positivity:
    r"""
    Whether every coefficient of `f` in `basis` is a polynomial with nonnegative coefficients.

    Examples:
        >>> is_positive(SymExpr(2, "m", {(2,): 1}), "s")
        Positivity(positive=False, witness=(1, 1))
        >>> bool(is_positive(SymExpr(4, "s", {(4,): 8, (3, 1): 4, (2, 2): 2}), "s"))
        True
    """

    expanded = change_basis(f, basis)
    for partition, coefficient in expanded.terms.items():
        if not is_nonnegative(coefficient):
            return Positivity(False, partition)
    return Positivity(True)
