"""CHSH machinery: scalarization maps with genuinely real codomain, the
correlation they induce, the brute-force deterministic bound of 2, and the
grade-0 projection target that reproduces the quantum curve -a.b.

A scalarizer sees one local setting and the hidden variable only.  That
factorization is enforced at registration, because a map acting jointly on
both settings would not be the kind of function the classical bound
constrains.
"""

from __future__ import annotations

import inspect
import itertools
import math
import random
from dataclasses import dataclass
from typing import Callable

from .ga import Vector3, dot, ensure_unit
from .model import ORIENTATIONS, HiddenVariable, OrientationDistribution, observable

CorrelationFn = Callable[[Vector3, Vector3], float]
ScalarizerFn = Callable[[Vector3, HiddenVariable], float]

# Deterministic probe settings used to vet scalarizers at registration.
_PROBE_SETTINGS = (
    Vector3(1.0, 0.0, 0.0),
    Vector3(0.0, 0.0, 1.0),
    Vector3(0.6, 0.8, 0.0),
    Vector3(0.0, -0.6, 0.8),
)


@dataclass(frozen=True)
class ChshScenario:
    """Four unit measurement settings entering the CHSH combination."""

    a: Vector3
    a_prime: Vector3
    b: Vector3
    b_prime: Vector3

    def __post_init__(self):
        for v in (self.a, self.a_prime, self.b, self.b_prime):
            ensure_unit(v)

    @classmethod
    def from_angles(cls, angles_deg: tuple[float, float, float, float]) -> ChshScenario:
        """Coplanar settings in the e1-e2 plane at the given angles."""
        vectors = []
        for deg in angles_deg:
            rad = math.radians(deg)
            vectors.append(Vector3(math.cos(rad), math.sin(rad), 0.0))
        return cls(*vectors)


DEFAULT_ANGLES_DEG = (0.0, 90.0, 45.0, 135.0)


@dataclass(frozen=True)
class Scalarizer:
    """A named map (setting, hidden variable) -> real in [-1, 1]."""

    name: str
    fn: ScalarizerFn


def make_scalarizer(name: str, fn: ScalarizerFn) -> Scalarizer:
    """Register a scalarizer, rejecting joint (nonfactorizing) maps and maps
    whose probed outputs leave [-1, 1]."""
    params = [
        p for p in inspect.signature(fn).parameters.values()
        if p.kind in (p.POSITIONAL_ONLY, p.POSITIONAL_OR_KEYWORD)
    ]
    if len(params) != 2:
        raise ValueError(
            f"scalarizer {name!r} must take exactly (setting, hidden_variable); "
            "joint maps over both settings are not admissible"
        )
    for setting in _PROBE_SETTINGS:
        for hv in ORIENTATIONS:
            value = fn(setting, hv)
            if not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ValueError(f"scalarizer {name!r} returned a non-real value: {value!r}")
            if abs(value) > 1.0 + 1e-12:
                raise ValueError(f"scalarizer {name!r} left [-1, 1]: {value!r}")
    return Scalarizer(name, fn)


def _sign(x: float) -> float:
    # Ties at zero resolve to +1.
    return 1.0 if x >= 0.0 else -1.0


def default_scalarizers(axis: Vector3 = Vector3(0.0, 0.0, 1.0)) -> tuple[Scalarizer, ...]:
    """The three registered scalarizations.

    Qualitatively different choices, all factorizing: the grade-0 projection
    of the observable (identically zero, since observables are bivectors),
    the bare orientation sign, and the orientation sign keyed to the
    setting's component along a reference axis.
    """
    def grade0_projection(a: Vector3, hv: HiddenVariable) -> float:
        return observable(a, hv).coeffs[0]

    def orientation_sign(a: Vector3, hv: HiddenVariable) -> float:
        return float(hv.orientation)

    def component_sign(a: Vector3, hv: HiddenVariable) -> float:
        return float(hv.orientation) * _sign(dot(a, axis))

    return (
        make_scalarizer("grade0_projection", grade0_projection),
        make_scalarizer("orientation_sign", orientation_sign),
        make_scalarizer("component_sign", component_sign),
    )


def scalar_correlation(s: Scalarizer, a: Vector3, b: Vector3,
                       dist: OrientationDistribution) -> float:
    """Correlation from scalarized observables: sum of p(l)*s(a,l)*s(b,l)."""
    ensure_unit(a)
    ensure_unit(b)
    return sum(dist.weight(hv) * s.fn(a, hv) * s.fn(b, hv) for hv in ORIENTATIONS)


def chsh(corr: CorrelationFn, sc: ChshScenario) -> float:
    """CHSH combination S = E(a,b) - E(a,b') + E(a',b) + E(a',b')."""
    return (
        corr(sc.a, sc.b)
        - corr(sc.a, sc.b_prime)
        + corr(sc.a_prime, sc.b)
        + corr(sc.a_prime, sc.b_prime)
    )


@dataclass(frozen=True)
class DeterministicStrategy:
    """One local deterministic assignment: a sign for each setting."""

    a: int
    a_prime: int
    b: int
    b_prime: int

    def __post_init__(self):
        for s in (self.a, self.a_prime, self.b, self.b_prime):
            if s not in (+1, -1):
                raise ValueError(f"strategy entries must be +1 or -1, got {s!r}")

    def chsh_combination(self) -> float:
        return float(
            self.a * self.b
            - self.a * self.b_prime
            + self.a_prime * self.b
            + self.a_prime * self.b_prime
        )


def all_strategies() -> tuple[DeterministicStrategy, ...]:
    return tuple(
        DeterministicStrategy(*signs)
        for signs in itertools.product((+1, -1), repeat=4)
    )


def lhv_bruteforce_bound(sc: ChshScenario | None = None) -> float:
    """Max |S| over all 16 deterministic strategies; scenario-independent."""
    return max(abs(st.chsh_combination()) for st in all_strategies())


def quantum_target(a: Vector3, b: Vector3) -> float:
    """The grade-0 projection of the model's expectation: -a.b."""
    ensure_unit(a)
    ensure_unit(b)
    return -dot(a, b)


def random_unit_vector(rng: random.Random) -> Vector3:
    """Uniform direction via a normalized Gaussian triple."""
    while True:
        v = Vector3(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        if v.norm() > 1e-6:
            return v.normalized()


def scalarizer_audit(s: Scalarizer, trials: int = 10000, seed: int = 42) -> float:
    """Max |S| for the scalarized correlation over seeded random scenarios
    and random distribution weights."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials!r}")
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(trials):
        scenario = ChshScenario(
            random_unit_vector(rng),
            random_unit_vector(rng),
            random_unit_vector(rng),
            random_unit_vector(rng),
        )
        dist = OrientationDistribution(rng.random())
        value = abs(chsh(lambda a, b: scalar_correlation(s, a, b, dist), scenario))
        if value > worst:
            worst = value
    return worst
