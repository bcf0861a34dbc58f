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
Verification checks.

Every check is registered in `CHECKS` under the name used by `ncschur verify <name>`,
takes a poset and a `Scope`, and returns a `Report`.
A `Scope` either pins a single instance (a content, a shape, a pair `k, ell`, a flagged shape)
or bounds the instances swept through (`max_content`, `max_degree`).
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations, combinations_with_replacement

from .arrow import verify_plactic_diagram, verify_rectangle
from .chromatic import (
    e_coeff_hook,
    e_coeff_twocol,
    e_expansion,
    schur_expansion_gasharov,
    x_direct,
    x_via_f,
)
from .eqgraph import GraphKind, content_graph, verify_e_commute, verify_schur_theorem
from .exceptions import NotSymmetric, ParamError
from .ncalg import NCElement, e_p, j_flagged, m_p, newton_check
from .poset import Content, Nuio, Poset, is_nuio, posets
from .quotient import IdealKind, congruent_by_content, positivity_probe
from .registry import CHECKS
from .rmatrix import eta_image_counts, verify_eta_congruence
from .symfun import Partition, omega, partitions
from .tableaux import cread, diagread, enumerate_flagged, enumerate_tableaux, is_hook, is_key, is_left
from .utils import Report

logger = logging.getLogger(__name__)


@dataclass
class Scope:
    r"""
    Which instances a check covers.

    Pinned fields (`content`, `shape`, `k`/`ell`, `alpha`/`flags`) select one instance;
    left as `None`, the check runs over every instance within `max_content` and `max_degree`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> Scope(content=(1, 2, 3, 4)).contents(p_k(2, 5))
        [Content(1, 2, 3, 4)]
        >>> len(Scope(max_content=2).contents(p_k(2, 3)))
        9
        >>> Scope(max_degree=3).shapes()
        [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]
        >>> Scope(k=2).degree_pairs()
        Traceback (most recent call last):
        ncschur.exceptions.ParamError: k and ell must be given together, but got k=2 and ell=None.
    """

    content: Sequence[int] | None = None
    shape: Sequence[int] | None = None
    k: int | None = None
    ell: int | None = None
    alpha: Sequence[int] | None = None
    flags: Sequence[Sequence[int]] | None = None
    max_content: int = 3
    max_degree: int = 4
    with_t: bool = False

    def contents(self, p: Poset) -> list[Content]:
        if self.content is not None:
            return [Content(self.content).check(p)]
        sizes = range(1, self.max_content + 1)
        return [Content(c) for size in sizes for c in combinations_with_replacement(p.elements, size)]

    def shapes(self) -> list[Partition]:
        if self.shape is not None:
            return [tuple(self.shape)]
        return [shape for n in range(1, self.max_degree + 1) for shape in partitions(n)]

    def degree_pairs(self) -> list[tuple[int, int]]:
        if (self.k is None) != (self.ell is None):
            raise ParamError(f"k and ell must be given together, but got k={self.k} and ell={self.ell}.")
        if self.k is not None:
            return [(self.k, self.ell)]  # type: ignore[list-item]
        return [(k, ell) for k in range(1, self.max_degree) for ell in range(1, self.max_degree - k + 1)]

    def t_for(self, p: Poset) -> Nuio | None:
        r"""
        The poset to take t-statistics over: `p` with a witnessing order, or `None` without `with_t` or one.
        """

        if not self.with_t:
            return None
        return p if isinstance(p, Nuio) else is_nuio(p)


def lower_ideals(p: Poset) -> list[frozenset[int]]:
    r"""
    Every lower order ideal of `p`, ordered by size and then lexicographically.

    Examples:
        >>> from ncschur.poset import chain
        >>> [sorted(z) for z in lower_ideals(chain(3))]
        [[], [1], [1, 2], [1, 2, 3]]
    """

    ideals = []
    for size in range(p.n + 1):
        for subset in combinations(p.elements, size):
            chosen = frozenset(subset)
            if all(p.below(a) <= chosen for a in chosen):
                ideals.append(chosen)
    return ideals


def flagged_instances(p: Poset, scope: Scope) -> Iterator[tuple[Partition, tuple[frozenset[int], ...]]]:
    r"""
    Partitions `α` with `|α| <= max_degree` paired with every nested chain of lower order ideals.
    """

    if scope.alpha is not None:
        if scope.flags is None or len(scope.flags) != len(scope.alpha):
            raise ParamError("alpha and flags must be given together and have the same length.")
        yield tuple(scope.alpha), tuple(frozenset(z) for z in scope.flags)
        return
    ideals = lower_ideals(p)
    for alpha in scope.shapes():

        def nested(prefix: tuple[frozenset[int], ...], alpha: Partition = alpha) -> Iterator[tuple[frozenset, ...]]:
            if len(prefix) == len(alpha):
                yield prefix
                return
            for ideal in ideals:
                if not prefix or prefix[-1] <= ideal:
                    yield from nested(prefix + (ideal,))

        for flags in nested(()):
            yield alpha, flags


def _t_poset(p: Poset, scope: Scope) -> tuple[Poset, bool]:
    nuio = scope.t_for(p)
    return (p, False) if nuio is None else (nuio, True)


@CHECKS.register("schur")
def check_schur(p: Poset, scope: Scope) -> Report:
    r"""
    Every P-Knuth component has a symmetric F_Γ whose Schur coefficients count the P-tableaux read in it.

    Examples:
        >>> from ncschur.poset import p_k
        >>> report = check_schur(p_k(2, 5), Scope(content=(1, 2, 3, 4)))
        >>> str(report.status), len(report.details)
        ('PASS', 13)
    """

    report = Report("schur")
    for content in scope.contents(p):
        try:
            report.extend(verify_schur_theorem(content_graph(p, content, GraphKind.knuth)))
        except NotSymmetric as exc:
            logger.warning("F of a P-Knuth component of %s is not symmetric over %r", content, p)
            report.fail(content=list(content), witness=[list(w) for w in exc.witness])
    return report


@CHECKS.register("e-commute")
def check_e_commute(p: Poset, scope: Scope) -> Report:
    r"""
    `e_k e_ℓ ≡ e_ℓ e_k` modulo the plactic ideal, and their pairings agree on P-Knuth components.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(check_e_commute(p_k(2, 4), Scope(max_degree=3)))
        True
    """

    report = Report("e-commute")
    for k, ell in scope.degree_pairs():
        left, right = e_p(p, k) * e_p(p, ell), e_p(p, ell) * e_p(p, k)
        if not report.check(congruent_by_content(p, left, right, IdealKind.plac), k=k, ell=ell):
            logger.warning("e_%d e_%d and e_%d e_%d are not plactic congruent over %r", k, ell, ell, k, p)
        if scope.content is not None and len(scope.content) == k + ell:
            report.extend(verify_e_commute(content_graph(p, scope.content), k, ell))
    return report


@CHECKS.register("eta")
def check_eta(p: Poset, scope: Scope) -> Report:
    r"""
    The ladder R-matrix is a content preserving involution giving plactic congruences `u_a u_b ≡ u_c u_d`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(check_eta(p_k(2, 5), Scope(k=2, ell=1)))
        True
    """

    report = Report("eta")
    for k, ell in scope.degree_pairs():
        report.extend(verify_eta_congruence(p, k, ell))
        counts = eta_image_counts(p, k, ell)
        report.check(counts["image"] == counts["codomain"], k=k, ell=ell, **counts)
    return report


@CHECKS.register("newton")
def check_newton(p: Poset, scope: Scope) -> Report:
    report = Report("newton")
    for m in range(1, scope.max_degree + 1):
        if not report.check(newton_check(p, m), m=m):
            logger.warning("Newton identity fails in degree %d over %r", m, p)
    return report


@CHECKS.register("chromatic")
def check_chromatic(p: Poset, scope: Scope) -> Report:
    r"""
    Counting colorings and expanding ω F_{W_β} give the same (t-)chromatic function.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(check_chromatic(p_k(2, 4), Scope(max_content=2, with_t=True)))
        True
    """

    report = Report("chromatic")
    q, with_t = _t_poset(p, scope)
    for content in scope.contents(p):
        direct, via_f = x_direct(q, content, with_t), x_via_f(q, content, with_t)
        if not report.check(direct == via_f, content=list(content), direct=direct, via_f=via_f):
            logger.warning("Chromatic routes disagree on %s over %r", content, p)
    return report


@CHECKS.register("gasharov")
def check_gasharov(p: Poset, scope: Scope) -> Report:
    r"""
    ω X^β expanded in Schur functions equals the weighted P-tableau count.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(check_gasharov(p_k(2, 5), Scope(content=(1, 2, 3, 4))))
        True
    """

    report = Report("gasharov")
    q, with_t = _t_poset(p, scope)
    for content in scope.contents(p):
        expected = omega(x_direct(q, content, with_t)).to("s")
        counted = schur_expansion_gasharov(q, content, with_t)
        if not report.check(expected == counted, content=list(content), expansion=expected, tableaux=counted):
            logger.warning("Schur expansion of %s disagrees with P-tableaux over %r", content, p)
    return report


def _tableau_sum(p: Poset, shape: Partition, keep) -> NCElement:
    return NCElement.sum_of(p, (cread(t) for t in enumerate_tableaux(p, shape) if keep(p, t)))


def _e_coefficients(report: Report, p: Poset, scope: Scope, shape: Partition, counter) -> None:
    q, with_t = _t_poset(p, scope)
    for content in scope.contents(p):
        if len(content) != sum(shape):
            continue
        expected = e_expansion(q, content, with_t)[shape]
        counted = counter(q, shape, content, with_t)
        if not report.check(expected == counted, shape=list(shape), content=list(content)):
            logger.warning("e_%s coefficient of %s: expansion %r, tableaux %r", shape, content, expected, counted)


@CHECKS.register("hook")
def check_hook(p: Poset, scope: Scope) -> Report:
    r"""
    For hooks λ, `m_λ ≡ Σ u_{cread(T)}` over key P-tableaux modulo I_H, and key tableaux count e_λ coefficients.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(check_hook(p_k(2, 4), Scope(max_degree=3, max_content=3)))
        True
    """

    report = Report("hook")
    for shape in scope.shapes():
        if not is_hook(shape):
            continue
        key_sum = _tableau_sum(p, shape, is_key)
        if not report.check(congruent_by_content(p, m_p(p, shape), key_sum, IdealKind.h), shape=list(shape)):
            logger.warning("m_%s is not congruent to its key tableaux modulo I_H over %r", shape, p)
        _e_coefficients(report, p, scope, shape, e_coeff_hook)
    return report


@CHECKS.register("twocol")
def check_twocol(p: Poset, scope: Scope) -> Report:
    r"""
    For `λ_1 <= 2`, `m_λ ≡ Σ u_{cread(T)}` over left P-tableaux modulo I_H.

    Left tableaux of content β also count the e_λ coefficient of X^β.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(check_twocol(p_k(2, 4), Scope(max_degree=3, max_content=3)))
        True
    """

    report = Report("twocol")
    for shape in scope.shapes():
        if shape[0] > 2:
            continue
        left_sum = _tableau_sum(p, shape, is_left)
        if not report.check(congruent_by_content(p, m_p(p, shape), left_sum, IdealKind.h), shape=list(shape)):
            logger.warning("m_%s is not congruent to its left tableaux modulo I_H over %r", shape, p)
        _e_coefficients(report, p, scope, shape, e_coeff_twocol)
    return report


@CHECKS.register("flagged")
def check_flagged(p: Poset, scope: Scope) -> Report:
    r"""
    `J_α(Z) ≡ Σ u_{diagread(T)}` over flagged P-tableaux modulo the plactic ideal.

    Without a pinned `alpha`, α runs over partitions and Z over nested chains of lower order ideals.

    Examples:
        >>> from ncschur.poset import p_k
        >>> report = check_flagged(p_k(2, 5), Scope(alpha=(1, 2), flags=([1, 2, 3], [1, 2, 3, 4, 5])))
        >>> str(report.status), report.details[0]["tableaux"]
        ('PASS', 13)
    """

    report = Report("flagged")
    for alpha, flags in flagged_instances(p, scope):
        tableaux = list(enumerate_flagged(p, alpha, flags))
        reading = NCElement.sum_of(p, (diagread(t) for t in tableaux))
        congruent = congruent_by_content(p, j_flagged(p, alpha, flags), reading, IdealKind.plac)
        if not report.check(
            congruent, alpha=list(alpha), flags=[sorted(z) for z in flags], tableaux=len(tableaux)
        ):
            logger.warning("Flagged function %s with flags %s is not plactic positive over %r", alpha, flags, p)
    return report


@CHECKS.register("reading")
def check_reading(p: Poset, scope: Scope) -> Report:
    r"""
    Column and diagonal reading words of every P-tableau are plactic congruent.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(check_reading(p_k(2, 5), Scope(max_degree=4)))
        True
    """

    report = Report("reading")
    for shape in scope.shapes():
        for tableau in enumerate_tableaux(p, shape):
            column, diagonal = cread(tableau), diagread(tableau)
            if column == diagonal:
                continue
            difference = NCElement.monomial(p, column) - NCElement.monomial(p, diagonal)
            if not report.check(
                congruent_by_content(p, difference, NCElement.zero(p), IdealKind.plac),
                shape=list(shape),
                cread=list(column),
                diagread=list(diagonal),
            ):
                logger.warning("Reading words %s and %s are not plactic congruent over %r", column, diagonal, p)
    return report


@CHECKS.register("positivity")
def check_positivity(p: Poset, scope: Scope) -> Report:
    r"""
    Probe monomial positivity of `m_λ` modulo I_H.

    A negative pairing disproves positivity for that instance; it is recorded as a note, never as a failure.

    Examples:
        >>> from ncschur.poset import p_k
        >>> report = check_positivity(p_k(2, 4), Scope(max_degree=3))
        >>> str(report.status), report.notes
        ('PASS', [])
    """

    report = Report("positivity")
    for shape in scope.shapes():
        probe = positivity_probe(p, m_p(p, shape), IdealKind.h)
        report.record(shape=list(shape), status=str(probe.status))
        if probe.negative:
            report.notes.append(f"m_{list(shape)} has a negative pairing modulo I_H over {p!r}")
    return report


@CHECKS.register("rectangle")
def check_rectangle(p: Poset, scope: Scope) -> Report:
    report = Report("rectangle")
    for shape in scope.shapes():
        if len(set(shape)) == 1:
            report.extend(verify_rectangle(p, shape))
    return report


@CHECKS.register("arrow")
def check_arrow(p: Poset, scope: Scope) -> Report:
    r"""
    Eval_P of the arrow Schur function agrees with its tableau diagram modulo the plactic ideal.

    Examples:
        >>> from ncschur.poset import p_k
        >>> bool(check_arrow(p_k(2, 4), Scope(max_degree=3)))
        True
    """

    report = Report("arrow")
    for shape in scope.shapes():
        report.extend(verify_plactic_diagram(p, shape))
    return report


def check_names(checks: str | Iterable[str] = "all") -> list[str]:
    r"""
    Resolve `all` or a comma separated list into registered check names.

    Examples:
        >>> check_names("newton,eta")
        ['newton', 'eta']
        >>> check_names("nope")
        Traceback (most recent call last):
        KeyError: 'Component nope is not registered.'
    """

    if isinstance(checks, str):
        checks = [name.strip() for name in checks.split(",") if name.strip()]
    checks = list(checks)
    if checks == ["all"]:
        return sorted(CHECKS)
    for name in checks:
        CHECKS.lookup(name)
    return checks


def run_check(name: str, p: Poset, scope: Scope | None = None) -> Report:
    return CHECKS.build(name, p, scope or Scope())


def _task(task: tuple[str, Poset, dict]) -> Report:
    name, p, scope = task
    return run_check(name, p, Scope(**scope))


def _run(tasks: list[tuple[str, Poset, dict]], threads: int) -> list[Report]:
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(_task, tasks))
    return [_task(task) for task in tasks]


def run_checks(
    checks: str | Iterable[str], p: Poset, scope: Scope | None = None, threads: int = 1
) -> list[Report]:
    r"""
    Run several checks on one poset, in a pool of `threads` worker processes when `threads > 1`.

    Examples:
        >>> from ncschur.poset import p_k
        >>> [report.name for report in run_checks("newton,eta", p_k(2, 4), Scope(max_degree=2))]
        ['newton', 'eta']
    """

    scope = scope or Scope()
    return _run([(name, p, asdict(scope)) for name in check_names(checks)], threads)


def sweep(
    max_size: int, checks: str | Iterable[str] = "all", scope: Scope | None = None, threads: int = 1
) -> Report:
    r"""
    Run checks over every (3+1)-free poset with at most `max_size` elements.

    Tasks are independent; with `threads > 1` they run in a pool of that many worker processes.
    Results are collected in task order, so the report does not depend on `threads`.

    Examples:
        >>> report = sweep(2, "newton,reading", Scope(max_degree=2))
        >>> str(report.status), len(report.details)
        ('PASS', 6)
    """

    names = check_names(checks)
    scope = scope or Scope()
    tasks = [(name, p, asdict(scope)) for n in range(1, max_size + 1) for p in posets(n) for name in names]
    logger.debug("sweeping %d tasks over posets with at most %d elements", len(tasks), max_size)
    results = _run(tasks, threads)
    report = Report("sweep")
    for (name, p, _), result in zip(tasks, results):
        report.check(
            result.passed, check=name, poset=p.__json__(), checked=len(result.details), failures=result.failures
        )
        report.notes.extend(f"{name}: {note}" for note in result.notes)
    return report
