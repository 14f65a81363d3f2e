"""Arithmetic kernel for G3, the geometric algebra of 3-D Euclidean space.

A multivector is stored as 8 real coefficients over the fixed basis

    (1, e1, e2, e3, e12, e13, e23, e123)

with e_i e_i = +1, e_i e_j = -e_j e_i for i != j, and pseudoscalar
I = e123 (central, I*I = -1).  Note the bivector ordering uses e13,
not e31.  Every operation is a pure function on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

BLADE_NAMES = ("1", "e1", "e2", "e3", "e12", "e13", "e23", "e123")
BLADE_GRADES = (0, 1, 1, 1, 2, 2, 2, 3)
GRADES = (0, 1, 2, 3)

# Slot indices of each grade in the coefficient tuple.
GRADE_SLOTS = {0: (0,), 1: (1, 2, 3), 2: (4, 5, 6), 3: (7,)}

DEFAULT_TOLERANCE = 1e-12
UNIT_TOLERANCE = 1e-9

# Geometric product of basis blades: _CAYLEY[i][j] = (sign, slot) such that
# blade_i * blade_j = sign * blade_slot.  Written out explicitly; the test
# suite regenerates this table independently by sign-counting blade
# concatenations and compares all 64 entries.
_CAYLEY = (
    ((+1, 0), (+1, 1), (+1, 2), (+1, 3), (+1, 4), (+1, 5), (+1, 6), (+1, 7)),
    ((+1, 1), (+1, 0), (+1, 4), (+1, 5), (+1, 2), (+1, 3), (+1, 7), (+1, 6)),
    ((+1, 2), (-1, 4), (+1, 0), (+1, 6), (-1, 1), (-1, 7), (+1, 3), (-1, 5)),
    ((+1, 3), (-1, 5), (-1, 6), (+1, 0), (+1, 7), (-1, 1), (-1, 2), (+1, 4)),
    ((+1, 4), (-1, 2), (+1, 1), (+1, 7), (-1, 0), (-1, 6), (+1, 5), (-1, 3)),
    ((+1, 5), (-1, 3), (-1, 7), (+1, 1), (+1, 6), (-1, 0), (-1, 4), (+1, 2)),
    ((+1, 6), (+1, 7), (-1, 3), (+1, 2), (-1, 5), (+1, 4), (-1, 0), (-1, 1)),
    ((+1, 7), (+1, 6), (-1, 5), (+1, 4), (-1, 3), (+1, 2), (-1, 1), (-1, 0)),
)


class NonUnitVectorError(ValueError):
    """A direction argument was not a unit vector within tolerance."""


@dataclass(frozen=True)
class Vector3:
    """A vector of 3-D Euclidean space, components along e1, e2, e3."""

    x: float
    y: float
    z: float

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def normalized(self) -> Vector3:
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return Vector3(self.x / n, self.y / n, self.z / n)

    def as_multivector(self) -> Multivector:
        """Embed as the grade-1 element x*e1 + y*e2 + z*e3."""
        return Multivector((0.0, self.x, self.y, self.z, 0.0, 0.0, 0.0, 0.0))

    def components(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Multivector:
    """An element of G3 as 8 coefficients in the fixed basis order."""

    coeffs: tuple[float, float, float, float, float, float, float, float] = (
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
    )

    @classmethod
    def scalar(cls, value: float) -> Multivector:
        return cls((float(value), 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0))

    @classmethod
    def blade(cls, slot: int, value: float = 1.0) -> Multivector:
        c = [0.0] * 8
        c[slot] = float(value)
        return cls(tuple(c))

    def __add__(self, other: Multivector) -> Multivector:
        return Multivector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Multivector) -> Multivector:
        return Multivector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Multivector:
        return Multivector(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return gp(self, other)
        if isinstance(other, (int, float)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor: float) -> Multivector:
        return Multivector(tuple(factor * a for a in self.coeffs))

    def grade(self, k: int) -> Multivector:
        return grade_project(self, k)

    def grade_norm(self, k: int) -> float:
        """Euclidean magnitude of the grade-k component."""
        if k not in GRADE_SLOTS:
            raise ValueError(f"grade index must be 0..3, got {k!r}")
        return math.sqrt(sum(self.coeffs[i] ** 2 for i in GRADE_SLOTS[k]))

    def max_abs_coeff(self) -> float:
        return max(abs(a) for a in self.coeffs)

    def max_abs_diff(self, other: Multivector) -> float:
        return max(abs(a - b) for a, b in zip(self.coeffs, other.coeffs))

    def is_zero(self, tol: float = 0.0) -> bool:
        return all(abs(a) <= tol for a in self.coeffs)

    def approx_eq(self, other: Multivector, tol: float = DEFAULT_TOLERANCE) -> bool:
        return self.max_abs_diff(other) <= tol

    def __str__(self) -> str:
        terms = []
        for c, name in zip(self.coeffs, BLADE_NAMES):
            if c == 0.0:
                continue
            mag = f"{abs(c):.12g}"
            body = mag if name == "1" else (name if mag == "1" else f"{mag}*{name}")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


ZERO = Multivector()
ONE = Multivector.blade(0)
E1 = Multivector.blade(1)
E2 = Multivector.blade(2)
E3 = Multivector.blade(3)
E12 = Multivector.blade(4)
E13 = Multivector.blade(5)
E23 = Multivector.blade(6)
I = Multivector.blade(7)

BASIS = (ONE, E1, E2, E3, E12, E13, E23, I)


@dataclass(frozen=True)
class GradeSupport:
    """Which grades a value (or a family of values) occupies.

    ``present`` holds the grades whose observed magnitude exceeded the audit
    tolerance; ``max_magnitude`` records the largest magnitude seen per grade,
    so a support merged over a family sweep remembers how big each grade got.
    """

    present: frozenset[int]
    max_magnitude: tuple[float, float, float, float]

    @classmethod
    def empty(cls) -> GradeSupport:
        return cls(frozenset(), (0.0, 0.0, 0.0, 0.0))

    def union(self, other: GradeSupport) -> GradeSupport:
        return GradeSupport(
            self.present | other.present,
            tuple(max(a, b) for a, b in zip(self.max_magnitude, other.max_magnitude)),
        )

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted(self.present))

    def __str__(self) -> str:
        if not self.present:
            return "{}"
        return "{" + ", ".join(str(g) for g in self.grades()) + "}"


def gp(x: Multivector, y: Multivector) -> Multivector:
    """Geometric product, expanded through the basis Cayley table."""
    out = [0.0] * 8
    for i, xi in enumerate(x.coeffs):
        if xi == 0.0:
            continue
        row = _CAYLEY[i]
        for j, yj in enumerate(y.coeffs):
            if yj == 0.0:
                continue
            sign, slot = row[j]
            out[slot] += sign * xi * yj
    return Multivector(tuple(out))


def grade_project(x: Multivector, k: int) -> Multivector:
    """Component of x in the grade-k subspace."""
    if k not in GRADE_SLOTS:
        raise ValueError(f"grade index must be 0..3, got {k!r}")
    slots = GRADE_SLOTS[k]
    return Multivector(tuple(c if i in slots else 0.0 for i, c in enumerate(x.coeffs)))


def dot(a: Vector3, b: Vector3) -> float:
    return a.x * b.x + a.y * b.y + a.z * b.z


def cross(a: Vector3, b: Vector3) -> Vector3:
    """Right-handed cross product; satisfies I*(a x b) = wedge(a, b)."""
    return Vector3(
        a.y * b.z - a.z * b.y,
        a.z * b.x - a.x * b.z,
        a.x * b.y - a.y * b.x,
    )


def wedge(a: Vector3, b: Vector3) -> Multivector:
    """Outer product a ^ b: the grade-2 part of the geometric product."""
    return Multivector((
        0.0, 0.0, 0.0, 0.0,
        a.x * b.y - a.y * b.x,
        a.x * b.z - a.z * b.x,
        a.y * b.z - a.z * b.y,
        0.0,
    ))


def grade_audit(x: Multivector, tol: float = DEFAULT_TOLERANCE) -> GradeSupport:
    """Grade support of a single multivector at the given tolerance."""
    if tol <= 0.0:
        raise ValueError("audit tolerance must be positive")
    mags = tuple(x.grade_norm(k) for k in GRADES)
    present = frozenset(k for k in GRADES if mags[k] > tol)
    return GradeSupport(present, mags)


def ensure_unit(v: Vector3, tol: float = UNIT_TOLERANCE) -> Vector3:
    """Validate that v is a unit vector within tol; returns v unchanged."""
    if abs(v.norm() - 1.0) > tol:
        raise NonUnitVectorError(f"expected a unit vector, got norm {v.norm()!r}")
    return v
