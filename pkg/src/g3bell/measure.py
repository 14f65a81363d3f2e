"""Expectation functionals over the orientation distribution, under two
measure kinds: conventional scalar weights p(lambda), and the directed
variant that assigns each atom the trivector weight p(lambda)*I.

The directed total is I rather than the scalar 1 for every distribution,
so its valid-probability flag is always false.  Grade support of a
functional is reported from a sweep over a distribution family, never from
a single evaluation, because the isotropic point hides the non-scalar
grades inside an exact zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .ga import (
    DEFAULT_TOLERANCE,
    GradeSupport,
    I,
    Multivector,
    Vector3,
    ZERO,
    grade_audit,
    gp,
)
from .model import ORIENTATIONS, HiddenVariable, OrientationDistribution, ProductForm


class MeasureKind(Enum):
    SCALAR_WEIGHTS = "scalar_weights"
    DIRECTED_TRIVECTOR = "directed_trivector"


def atom_weight(dist: OrientationDistribution, hv: HiddenVariable,
                kind: MeasureKind) -> Multivector:
    """Measure weight of one orientation atom: p(lambda)*1 or p(lambda)*I."""
    p = dist.weight(hv)
    if kind is MeasureKind.DIRECTED_TRIVECTOR:
        return I.scale(p)
    return Multivector.scalar(p)


def measure_total(dist: OrientationDistribution, kind: MeasureKind) -> Multivector:
    """Total weight of the measure: scalar 1, or the trivector I."""
    total = ZERO
    for hv in ORIENTATIONS:
        total = total + atom_weight(dist, hv, kind)
    return total


def is_valid_probability_measure(total: Multivector,
                                 tol: float = DEFAULT_TOLERANCE) -> bool:
    """True iff the measure total is the scalar 1 within tolerance."""
    return total.max_abs_diff(Multivector.scalar(1.0)) <= tol


@dataclass(frozen=True)
class ExpectationResult:
    """Outcome of one expectation evaluation.

    ``support`` audits the summed value; ``term_support`` is the union over
    the per-atom contributions before they cancel, which is what
    distinguishes a zero bivector (or zero vector) from a zero scalar.
    """

    value: Multivector
    support: GradeSupport
    term_support: GradeSupport
    measure_total: Multivector
    valid_probability_measure: bool


def expectation(product_fn: ProductForm, a: Vector3, b: Vector3,
                dist: OrientationDistribution, kind: MeasureKind,
                tol: float = DEFAULT_TOLERANCE) -> ExpectationResult:
    """Sum of product_fn(a, b, lambda) times the atom weight, over lambda.

    The weight multiplies on the right; I is central in G3, so the side
    does not matter for the directed kind.
    """
    value = ZERO
    term_support = GradeSupport.empty()
    for hv in ORIENTATIONS:
        term = gp(product_fn(a, b, hv), atom_weight(dist, hv, kind))
        term_support = term_support.union(grade_audit(term, tol))
        value = value + term
    total = measure_total(dist, kind)
    return ExpectationResult(
        value=value,
        support=grade_audit(value, tol),
        term_support=term_support,
        measure_total=total,
        valid_probability_measure=is_valid_probability_measure(total, tol),
    )


def p_grid(step: float = 0.05) -> tuple[float, ...]:
    """Distribution family grid: p = 0, step, 2*step, ... capped at 1."""
    if not 0.0 < step <= 1.0:
        raise ValueError(f"p-grid step must lie in (0, 1], got {step!r}")
    count = int(math.floor(1.0 / step + 1e-9))
    points = [i * step for i in range(count + 1)]
    points = [p for p in points if p <= 1.0 + 1e-12]
    points[-1] = min(points[-1], 1.0)
    if points[-1] < 1.0 - 1e-12:
        points.append(1.0)
    points[0] = 0.0
    if abs(points[-1] - 1.0) <= 1e-12:
        points[-1] = 1.0
    return tuple(points)


DEFAULT_P_GRID = p_grid(0.05)


def codomain_support(product_fn: ProductForm, a: Vector3, b: Vector3,
                     kind: MeasureKind, grid: tuple[float, ...] = DEFAULT_P_GRID,
                     tol: float = DEFAULT_TOLERANCE) -> GradeSupport:
    """Attainable grade support of the expectation as the family varies.

    Union of the per-point audits over the grid, so a grade that only shows
    away from the isotropic point is still counted.
    """
    if not grid:
        raise ValueError("p-grid must not be empty")
    support = GradeSupport.empty()
    for p in grid:
        result = expectation(product_fn, a, b, OrientationDistribution(p), kind, tol)
        support = support.union(result.support)
    return support


def functional_range_probe(product_fn: ProductForm, a: Vector3, b: Vector3,
                           kind: MeasureKind,
                           grid: tuple[float, ...] = DEFAULT_P_GRID,
                           ) -> list[tuple[float, Multivector]]:
    """Raw sweep data: (p, expectation value) at every grid point."""
    if not grid:
        raise ValueError("p-grid must not be empty")
    out = []
    for p in grid:
        result = expectation(product_fn, a, b, OrientationDistribution(p), kind)
        out.append((p, result.value))
    return out
