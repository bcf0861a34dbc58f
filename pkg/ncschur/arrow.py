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
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import ceil, floor
from typing import Any

from strenum import StrEnum
from sympy.combinatorics import Permutation

from .exceptions import EdgeTypeError, ParamError
from .ncalg import NCElement, cylindrical_offsets
from .poset import Poset, is_31_free
from .quotient import IdealKind, congruent_by_content
from .registry import DIAGRAMS
from .symfun import Partition, inverse_kostka, partitions, transpose
from .utils import Report, UnionFind
from .words import Word

logger = logging.getLogger(__name__)

R, L, E, N = 1, 2, 4, 8
FREE = R | L | E | N
ALLOWED = frozenset({R, L, E, N, E | N, R | E | N, L | E | N, FREE})
LETTERS = (("r", R), ("l", L), ("e", E), ("n", N))


def rev(mask: int) -> int:
    r"""
    Reverse an edge type: swap r and ℓ, keep e and n.

    Examples:
        >>> rev(R | E | N) == L | E | N, rev(E | N) == E | N
        (True, True)
    """

    return (mask & (E | N)) | (L if mask & R else 0) | (R if mask & L else 0)


def mask_from_str(spelling: str) -> int:
    r"""
    Parse an edge type spelled as a subset of `"rlen"`.

    Raises:
        EdgeTypeError: If the spelling uses other letters or names a disallowed subset.

    Examples:
        >>> mask_from_str("en") == E | N
        True
        >>> mask_from_str("rl")
        Traceback (most recent call last):
        ncschur.exceptions.EdgeTypeError: Edge type 'rl' is not one of r, l, e, n, en, ren, len, rlen.
    """

    bits = dict(LETTERS)
    mask = 0
    for letter in spelling:
        if letter not in bits:
            raise EdgeTypeError(f"Edge type {spelling!r} uses {letter!r}, which is not one of r, l, e, n.")
        mask |= bits[letter]
    if mask not in ALLOWED:
        raise EdgeTypeError(f"Edge type {spelling!r} is not one of r, l, e, n, en, ren, len, rlen.")
    return mask


def mask_to_str(mask: int) -> str:
    return "".join(letter for letter, bit in LETTERS if mask & bit)


def relation(p: Poset, a: int, b: int) -> int:
    r"""
    The primitive edge type realised by the letters `a` then `b`.
    """

    if a == b:
        return E
    if p.lt(a, b):
        return R
    if p.lt(b, a):
        return L
    return N


@lru_cache(maxsize=None)
def _pairs(d: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1))


@lru_cache(maxsize=None)
def _index(d: int) -> dict[tuple[int, int], int]:
    return {pair: index for index, pair in enumerate(_pairs(d))}


@dataclass(frozen=True)
class ArrowDiagram:
    r"""
    An arrow diagram on vertices `1..d`.

    `edges` lists the edge type of every pair `i < j` in lexicographic order, as a 4-bit mask
    (`R`, `L`, `E`, `N`). The edge from `j` to `i` is `rev` of the edge from `i` to `j`.

    Raises:
        ValueError: If the number of edges does not match `d`.
        EdgeTypeError: If an edge is not one of the eight allowed edge types.

    Examples:
        >>> m = ArrowDiagram.from_edges(3, {(1, 2): "en", (2, 3): "r", (1, 3): "en"})
        >>> m
        ArrowDiagram(3, {'1,2': 'en', '1,3': 'en', '2,3': 'r'})
        >>> m[3, 2] == L, m.is_primitive
        (True, False)
        >>> ArrowDiagram(2, (R | L,))
        Traceback (most recent call last):
        ncschur.exceptions.EdgeTypeError: Edge type 'rl' is not one of r, l, e, n, en, ren, len, rlen.
    """

    d: int
    edges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.d < 0 or len(self.edges) != self.d * (self.d - 1) // 2:
            raise ValueError(f"A diagram on {self.d} vertices needs {max(self.d, 0) * (self.d - 1) // 2} edges.")
        for mask in self.edges:
            if mask not in ALLOWED:
                raise EdgeTypeError(f"Edge type {mask_to_str(mask)!r} is not one of r, l, e, n, en, ren, len, rlen.")

    @classmethod
    def from_function(cls, d: int, edge: Callable[[int, int], int]) -> ArrowDiagram:
        return cls(d, tuple(edge(i, j) for i, j in _pairs(d)))

    @classmethod
    def from_edges(cls, d: int, edges: Mapping[tuple[int, int], int | str], default: int = FREE) -> ArrowDiagram:
        r"""
        Build a diagram from a partial edge map; pairs `(j, i)` with `j > i` are reversed, missing pairs get `default`.
        """

        masks = {}
        for (i, j), mask in edges.items():
            if isinstance(mask, str):
                mask = mask_from_str(mask)
            if not (1 <= i <= d and 1 <= j <= d) or i == j:
                raise ValueError(f"Edge ({i}, {j}) is not a pair of distinct vertices in 1..{d}.")
            masks[(i, j) if i < j else (j, i)] = mask if i < j else rev(mask)
        return cls.from_function(d, lambda i, j: masks.get((i, j), default))

    @classmethod
    def empty(cls) -> ArrowDiagram:
        return cls(0, ())

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        if i < j:
            return self.edges[_index(self.d)[(i, j)]]
        if i > j:
            return rev(self.edges[_index(self.d)[(j, i)]])
        raise ValueError(f"Vertex {i} has no edge to itself.")

    @property
    def is_primitive(self) -> bool:
        return all(mask in (R, L, E, N) for mask in self.edges)

    def primitives(self) -> Iterator[ArrowDiagram]:
        r"""
        The primitive diagrams whose sum is this diagram.

        Examples:
            >>> m = ArrowDiagram.from_edges(3, {(1, 2): "en", (2, 3): "r", (1, 3): "en"})
            >>> len(list(m.primitives()))
            4
        """

        choices = [[bit for _, bit in LETTERS if mask & bit] for mask in self.edges]
        for edges in product(*choices):
            yield ArrowDiagram(self.d, edges)

    def concat(self, other: ArrowDiagram) -> ArrowDiagram:
        r"""
        Place `other` to the right of this diagram; edges between the two parts are free.
        """

        d = self.d

        def edge(i: int, j: int) -> int:
            if j <= d:
                return self[i, j]
            if i > d:
                return other[i - d, j - d]
            return FREE

        return ArrowDiagram.from_function(d + other.d, edge)

    def swap(self, i: int) -> ArrowDiagram:
        r"""
        Swap_i: exchange the roles of vertices `i` and `i + 1` and reverse the edge between them.

        Raises:
            ParamError: If `i` is not in `1..d - 1`.

        Examples:
            >>> edges = {(1, 2): "en", (1, 3): "r", (1, 4): "r", (2, 3): "ren", (2, 4): "ren", (3, 4): "r"}
            >>> m = ArrowDiagram.from_edges(4, edges)
            >>> m.swap(2)
            ArrowDiagram(4, {'1,2': 'r', '1,3': 'en', '1,4': 'r', '2,3': 'len', '2,4': 'r', '3,4': 'ren'})
            >>> m.swap(2).swap(2) == m
            True
        """

        if not 1 <= i < self.d:
            raise ParamError(f"Swap position {i} is outside 1..{self.d - 1}.")

        def moved(a: int) -> int:
            return i + 1 if a == i else i if a == i + 1 else a

        return ArrowDiagram.from_function(self.d, lambda a, b: self[moved(a), moved(b)])

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.d}, {self.__json__()['edges']})"

    def __json__(self) -> dict:
        return {"d": self.d, "edges": {f"{i},{j}": mask_to_str(self[i, j]) for i, j in _pairs(self.d)}}

    @classmethod
    def from_json(cls, data: Mapping) -> ArrowDiagram:
        r"""
        Examples:
            >>> ArrowDiagram.from_json({"d": 3, "edges": {"1,2": "en", "1,3": "en", "2,3": "r"}})[1, 3] == E | N
            True
        """

        edges = {}
        for key, spelling in data.get("edges", {}).items():
            i, j = (int(v) for v in str(key).split(","))
            edges[(i, j)] = spelling
        return cls.from_edges(int(data["d"]), edges)


class ArrowElement:
    r"""
    Integer combination of arrow diagrams.

    Terms are kept as given; `expand` rewrites them over primitive diagrams, the unique normal form.
    Equality, hashing and truth compare normal forms, so two elements written with different diagrams
    are equal exactly when they are equal in the arrow algebra.
    Multiplication of two elements is the star product.

    Examples:
        >>> two = e_alpha((2,))
        >>> two * two == e_alpha((2, 2))
        True
        >>> (two - two).terms
        {}
        >>> two * ArrowElement.one() == two
        True
    """

    __slots__ = ("terms", "_normal")

    def __init__(self, terms: Mapping[ArrowDiagram, int] | None = None):
        self.terms = {m: int(c) for m, c in (terms or {}).items() if c}
        self._normal: dict[ArrowDiagram, int] | None = None

    @classmethod
    def diagram(cls, m: ArrowDiagram, coefficient: int = 1) -> ArrowElement:
        return cls({m: coefficient})

    @classmethod
    def one(cls) -> ArrowElement:
        return cls.diagram(ArrowDiagram.empty())

    @classmethod
    def zero(cls) -> ArrowElement:
        return cls()

    def __getitem__(self, m: ArrowDiagram) -> int:
        return self.terms.get(m, 0)

    def __iter__(self) -> Iterator[tuple[ArrowDiagram, int]]:
        return iter(sorted(self.terms.items(), key=lambda item: (item[0].d, item[0].edges)))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.normal_form())

    def __add__(self, other: ArrowElement) -> ArrowElement:
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return ArrowElement(terms)

    def __neg__(self) -> ArrowElement:
        return ArrowElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: ArrowElement) -> ArrowElement:
        return self + (-other)

    def __mul__(self, other: Any) -> ArrowElement:
        if isinstance(other, ArrowElement):
            return star(self, other)
        if isinstance(other, int):
            return ArrowElement({m: other * c for m, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, scalar: Any) -> ArrowElement:
        if isinstance(scalar, int):
            return self * scalar
        return NotImplemented

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ArrowElement):
            return NotImplemented
        return self.terms == other.terms or self.normal_form() == other.normal_form()

    def __hash__(self) -> int:
        return hash(frozenset(self.normal_form().items()))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({dict(iter(self))})"

    @property
    def degrees(self) -> set[int]:
        return {m.d for m in self.terms}

    @property
    def is_expanded(self) -> bool:
        return all(m.is_primitive for m in self.terms)

    def normal_form(self) -> dict[ArrowDiagram, int]:
        r"""
        Coefficients of the primitive diagrams in this element, computed once.

        Examples:
            >>> free = ArrowElement.diagram(ArrowDiagram.from_edges(2, {}))
            >>> sorted(mask_to_str(m[1, 2]) for m in free.normal_form())
            ['e', 'l', 'n', 'r']
        """

        if self._normal is None:
            self._normal = self.terms if self.is_expanded else self.expand().terms
        return self._normal

    def expand(self) -> ArrowElement:
        r"""
        Rewrite every diagram as the sum of its primitive diagrams.

        Examples:
            >>> len(ArrowElement.diagram(ArrowDiagram.from_edges(2, {})).expand())
            4
        """

        terms: dict[ArrowDiagram, int] = {}
        for m, c in self.terms.items():
            for primitive in m.primitives():
                terms[primitive] = terms.get(primitive, 0) + c
        return ArrowElement(terms)

    def __json__(self) -> dict:
        return {"terms": [{"diagram": m.__json__(), "coef": c} for m, c in self]}

    @classmethod
    def from_json(cls, data: Mapping) -> ArrowElement:
        total = cls.zero()
        for term in data["terms"]:
            total = total + cls.diagram(ArrowDiagram.from_json(term["diagram"]), int(term["coef"]))
        return total


def _as_element(z: ArrowElement | ArrowDiagram) -> ArrowElement:
    return ArrowElement.diagram(z) if isinstance(z, ArrowDiagram) else z


def star(left: ArrowElement | ArrowDiagram, right: ArrowElement | ArrowDiagram) -> ArrowElement:
    r"""
    The concatenation product, extended bilinearly.
    """

    terms: dict[ArrowDiagram, int] = {}
    for m, a in _as_element(left).terms.items():
        for k, b in _as_element(right).terms.items():
            product_ = m.concat(k)
            terms[product_] = terms.get(product_, 0) + a * b
    return ArrowElement(terms)


def fill(p: Poset, m: ArrowDiagram) -> Iterator[Word]:
    r"""
    P-fillings of `m`: words whose letters realise, pair by pair, one of the edge types allowed by `m`.

    Examples:
        >>> from ncschur.poset import Poset
        >>> p = Poset(4, [(1, 2), (3, 4)])
        >>> edges = {(1, 2): "n", (1, 3): "n", (1, 4): "r", (2, 3): "l", (2, 4): "n", (3, 4): "n"}
        >>> m = ArrowDiagram.from_edges(4, edges)
        >>> list(fill(p, m))
        [(1, 4, 3, 2), (3, 2, 1, 4)]
        >>> list(fill(p, ArrowDiagram.empty()))
        [()]
    """

    word: list[int] = []

    def extend(j: int) -> Iterator[Word]:
        if j > m.d:
            yield tuple(word)
            return
        for a in p.elements:
            if all(relation(p, word[i - 1], a) & m[i, j] for i in range(1, j)):
                word.append(a)
                yield from extend(j + 1)
                word.pop()

    yield from extend(1)


@lru_cache(maxsize=None)
def _eval_diagram(p: Poset, m: ArrowDiagram) -> NCElement:
    return NCElement.sum_of(p, fill(p, m))


def eval_p(p: Poset, z: ArrowElement | ArrowDiagram) -> NCElement:
    r"""
    Eval_P: the sum of `u_w` over P-fillings, extended linearly.

    Examples:
        >>> from ncschur.ncalg import e_p
        >>> from ncschur.poset import p_k
        >>> p = p_k(2, 4)
        >>> eval_p(p, e_alpha((2, 1))) == e_p(p, 2) * e_p(p, 1)
        True
    """

    total = NCElement.zero(p)
    for m, c in _as_element(z).terms.items():
        total = total + c * _eval_diagram(p, m)
    return total


def orig(p: Poset, w: Sequence[int]) -> ArrowDiagram:
    r"""
    The origin of a word: the primitive diagram recording how each pair of its letters relate.

    Raises:
        ValueError: If a letter is outside `1..n`.

    Examples:
        >>> from ncschur.poset import Poset
        >>> p = Poset(4, [(1, 2), (3, 4)])
        >>> orig(p, (1, 4, 3, 2)) == orig(p, (3, 2, 1, 4))
        True
    """

    w = tuple(w)
    for a in w:
        if not 1 <= a <= p.n:
            raise ValueError(f"Letter {a} is outside 1..{p.n}.")
    return ArrowDiagram.from_function(len(w), lambda i, j: relation(p, w[i - 1], w[j - 1]))


class PrimitiveStatus(StrEnum):
    closed = "closed"
    not31free = "not31free"
    ok = "ok"


@dataclass
class CliqueReport:
    r"""
    Classification of a primitive diagram.

    Attributes:
        status: `closed` when no poset fills it, `not31free` when its clique poset contains a 3+1, `ok` otherwise.
        poset: The clique poset, numbered by the smallest vertex of each clique; `None` when closed.
        cliques: The vertex sets joined by e edges.
    """

    status: PrimitiveStatus
    poset: Poset | None = None
    cliques: tuple[tuple[int, ...], ...] = ()

    def __json__(self) -> dict:
        return {
            "status": str(self.status),
            "poset": None if self.poset is None else self.poset.__json__(),
            "cliques": [list(clique) for clique in self.cliques],
        }


def _closed(m: ArrowDiagram) -> bool:
    vertices = range(1, m.d + 1)
    for i, j, k in permutations(vertices, 3):
        if m[i, j] == R and m[j, k] == R and m[i, k] != R:
            return True
        if m[i, j] == E and m[i, k] != m[j, k]:
            return True
    return False


def classify_primitive(m: ArrowDiagram) -> CliqueReport:
    r"""
    Decide whether a primitive diagram has fillings at all, and over which clique poset.

    Raises:
        EdgeTypeError: If `m` is not primitive.

    Examples:
        >>> closed = ArrowDiagram.from_edges(3, {(1, 2): "r", (2, 3): "r", (1, 3): "n"})
        >>> str(classify_primitive(closed).status)
        'closed'
        >>> report = classify_primitive(ArrowDiagram.from_edges(3, {(1, 2): "n", (2, 3): "r", (1, 3): "n"}))
        >>> str(report.status), report.poset.relations()
        ('ok', [(2, 3)])
    """

    if not m.is_primitive:
        raise EdgeTypeError(f"{m} is not primitive.")
    if _closed(m):
        return CliqueReport(PrimitiveStatus.closed)
    forest = UnionFind(range(1, m.d + 1))
    for i, j in _pairs(m.d):
        if m[i, j] == E:
            forest.union(i, j)
    cliques = sorted(tuple(sorted(group)) for group in forest.groups())
    label = {v: index for index, clique in enumerate(cliques, 1) for v in clique}
    relations = {(label[i], label[j]) for i in range(1, m.d + 1) for j in range(1, m.d + 1) if i != j and m[i, j] == R}
    q = Poset(len(cliques), sorted(relations))
    status = PrimitiveStatus.ok if is_31_free(q) else PrimitiveStatus.not31free
    return CliqueReport(status, q, tuple(cliques))


def _e_diagram(d: int) -> ArrowDiagram:
    return ArrowDiagram.from_function(d, lambda i, j: L if j == i + 1 else FREE)


@DIAGRAMS.register("E")
def e_alpha(alpha: Sequence[int]) -> ArrowElement:
    r"""
    E_α = E_{α_1} * ⋯ * E_{α_ℓ}, zero when some part is negative.

    Examples:
        >>> (m,) = e_alpha((3, 2, 1)).terms
        >>> sorted(pair for pair in _pairs(m.d) if m[pair] == L)
        [(1, 2), (2, 3), (4, 5)]
        >>> e_alpha((2, -1))
        ArrowElement({})
    """

    alpha = tuple(alpha)
    if any(part < 0 for part in alpha):
        return ArrowElement.zero()
    m = ArrowDiagram.empty()
    for part in alpha:
        m = m.concat(_e_diagram(part))
    return ArrowElement.diagram(m)


def reading_boxes(shape: Partition) -> list[tuple[int, int]]:
    r"""
    Boxes `(row, column)` in column reading order: columns left to right, each from bottom to top.

    Examples:
        >>> reading_boxes((2, 1))
        [(2, 1), (1, 1), (1, 2)]
    """

    return [(row, c) for c, height in enumerate(transpose(shape), 1) for row in range(height, 0, -1)]


def _tableau_diagram(shape: Partition, wraps: Iterable[tuple[tuple[int, int], tuple[int, int]]] = ()) -> ArrowDiagram:
    boxes = reading_boxes(shape)
    position = {box: index for index, box in enumerate(boxes, 1)}
    constraints: dict[tuple[int, int], int] = {}

    def constrain(a: int, b: int, mask: int) -> None:
        if a > b:
            a, b, mask = b, a, rev(mask)
        constraints[(a, b)] = constraints.get((a, b), FREE) & mask

    for (row, col), index in position.items():
        if (row - 1, col) in position:
            constrain(index, position[row - 1, col], L)
        if (row, col + 1) in position:
            constrain(index, position[row, col + 1], R | E | N)
    for low, high in wraps:
        if low != high:
            constrain(position[low], position[high], L | E | N)
    return ArrowDiagram.from_function(len(boxes), lambda i, j: constraints.get((i, j), FREE))


@DIAGRAMS.register("D")
def d_lambda(shape: Partition) -> ArrowElement:
    r"""
    D_λ: fillings are exactly the column reading words of P-tableaux of shape λ.

    Examples:
        >>> from ncschur.poset import p_k
        >>> from ncschur.tableaux import cread, enumerate_tableaux
        >>> p = p_k(2, 4)
        >>> sorted(eval_p(p, d_lambda((2, 1))).terms) == sorted(cread(t) for t in enumerate_tableaux(p, (2, 1)))
        True
    """

    return ArrowElement.diagram(_tableau_diagram(tuple(shape)))


@DIAGRAMS.register("Dtilde")
def d_tilde(shape: Partition, m: int) -> ArrowElement:
    r"""
    D̃^m_λ: D_λ plus an ℓ+e+n edge from box `(r + m, 1)` to box `(r, λ_1)` for every `r` in `1..λ'_1 - m`.

    Edges forced twice keep the common edge types. For `λ_1 = 2` and `m = 0` this turns each west edge
    of the wrapped rows into e+n.

    Raises:
        ParamError: If `m` is outside `λ'_1 - λ'_k .. λ'_1` with `k = λ_1`.

    Examples:
        >>> (m,) = d_tilde((2, 2), 0).terms
        >>> mask_to_str(m[2, 4]), mask_to_str(m[1, 3])
        ('en', 'en')
        >>> d_tilde((2, 1), 2) == d_lambda((2, 1))
        True
    """

    shape = tuple(shape)
    if m not in cylindrical_offsets(shape):
        raise ParamError(f"Offset {m} is outside {list(cylindrical_offsets(shape))} for shape {shape}.")
    if not shape:
        return ArrowElement.one()
    k, height = shape[0], len(shape)
    wraps = [((r + m, 1), (r, k)) for r in range(1, height - m + 1)]
    return ArrowElement.diagram(_tableau_diagram(shape, wraps))


def _sign(perm: Sequence[int]) -> int:
    return Permutation(list(perm)).signature() if len(perm) > 1 else 1


def _determinant(columns: Sequence[int], shifts: Sequence[int] = ()) -> ArrowElement:
    k = len(columns)
    shifts = tuple(shifts) or (0,) * k
    total = ArrowElement.zero()
    for perm in permutations(range(k)):
        total = total + _sign(perm) * e_alpha([columns[i] + shifts[i] + perm[i] - i for i in range(k)])
    return total


@DIAGRAMS.register("J")
def j_arrow(shape: Partition) -> ArrowElement:
    r"""
    Noncommutative arrow Schur function: the Jacobi-Trudi alternant in the E_d over the conjugate shape.

    Examples:
        >>> j_arrow((2, 2)) == e_alpha((2, 2)) - e_alpha((3, 1))
        True
        >>> j_arrow((1, 1)) == e_alpha((2,))
        True
    """

    return _determinant(transpose(tuple(shape)))


@DIAGRAMS.register("m")
def m_arrow(shape: Partition) -> ArrowElement:
    r"""
    Noncommutative arrow monomial function: the inverse Kostka combination of the arrow Schur functions.
    """

    shape = tuple(shape)
    n = sum(shape)
    total = ArrowElement.zero()
    for mu in partitions(n):
        coefficient = inverse_kostka(n).get((shape, mu))
        if coefficient:
            total = total + coefficient * j_arrow(mu)
    return total


@DIAGRAMS.register("Jcyl")
def j_cyl_arrow(shape: Partition, m: int) -> ArrowElement:
    r"""
    Arrow cylindrical Schur function: the alternant summed over row shifts `a_i (k + m)` with zero total.

    The total degree is fixed, so only finitely many shift vectors give nonzero terms.

    Raises:
        ParamError: If `m` is outside `λ'_1 - λ'_k .. λ'_1` with `k = λ_1`.

    Examples:
        >>> j_cyl_arrow((2, 1), 2) == j_arrow((2, 1))
        True
    """

    shape = tuple(shape)
    if m not in cylindrical_offsets(shape):
        raise ParamError(f"Offset {m} is outside {list(cylindrical_offsets(shape))} for shape {shape}.")
    columns = transpose(shape)
    if not columns:
        return ArrowElement.one()
    k, total_degree = len(columns), sum(shape)
    period = k + m
    ranges = [range(ceil((-column - k) / period), floor(total_degree / period) + 1) for column in columns]
    total = ArrowElement.zero()
    for offsets in product(*ranges):
        if sum(offsets) == 0:
            total = total + _determinant(columns, [a * period for a in offsets])
    return total


def named_diagram(family: str, **params: Any) -> ArrowElement:
    r"""
    Build a named family, for instance `named_diagram("Dtilde", shape=(2, 2), m=0)`.

    Raises:
        KeyError: If the family is not registered.
    """

    return DIAGRAMS.build(family, **params)


def verify_plactic_diagram(p: Poset, shape: Partition) -> Report:
    r"""
    Check that Eval_P of the arrow Schur function minus D_λ lies in the plactic ideal, content by content.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(verify_plactic_diagram(p_k(2, 4), (2, 1)))
        True
    """

    shape = tuple(shape)
    report = Report(f"arrow-plactic-{shape}")
    difference = eval_p(p, j_arrow(shape) - d_lambda(shape))
    if not report.check(congruent_by_content(p, difference, NCElement.zero(p), IdealKind.plac), shape=list(shape)):
        logger.warning("Arrow Schur function of %s is not congruent to its tableau diagram over %r", shape, p)
    return report


def verify_rectangle(p: Poset, shape: Partition) -> Report:
    r"""
    Check that the commutative images of Eval_P of the arrow monomial function and of D̃^0_λ agree.

    Raises:
        ParamError: If `shape` is not a rectangle.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(verify_rectangle(p_k(2, 4), (2, 2)))
        True
    """

    shape = tuple(shape)
    if len(set(shape)) > 1:
        raise ParamError(f"Shape {shape} is not a rectangle.")
    report = Report(f"arrow-rectangle-{shape}")
    left = eval_p(p, m_arrow(shape)).commutative_image()
    right = eval_p(p, d_tilde(shape, 0)).commutative_image()
    if not report.check(left == right, shape=list(shape)):
        logger.warning("Rectangle %s: monomial and wrapped diagram differ over %r", shape, p)
    return report
