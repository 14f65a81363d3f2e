import math

import pytest
from hypothesis import given, assume
from hypothesis import strategies as st

from g3bell.ga import NonUnitVectorError, Vector3
from g3bell.model import ORIENTATIONS, OrientationDistribution
from g3bell.bell import (
    DEFAULT_ANGLES_DEG,
    ChshScenario,
    DeterministicStrategy,
    all_strategies,
    chsh,
    default_scalarizers,
    lhv_bruteforce_bound,
    make_scalarizer,
    quantum_target,
    scalar_correlation,
    scalarizer_audit,
)

TOL = 1e-12

E1V = Vector3(1, 0, 0)
E2V = Vector3(0, 1, 0)
E3V = Vector3(0, 0, 1)

DEFAULT_SCENARIO = ChshScenario.from_angles(DEFAULT_ANGLES_DEG)

GRADE0, ORIENT_SIGN, COMPONENT_SIGN = default_scalarizers()

coords = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)


def unit_vectors():
    def build(xyz):
        v = Vector3(*xyz)
        assume(v.norm() > 1e-3)
        return v.normalized()
    return st.tuples(coords, coords, coords).map(build)


# --- scenario -------------------------------------------------------------------

def test_from_angles_gives_unit_settings():
    sc = DEFAULT_SCENARIO
    for v in (sc.a, sc.a_prime, sc.b, sc.b_prime):
        assert abs(v.norm() - 1.0) <= TOL
    assert sc.a == Vector3(1.0, 0.0, 0.0)


def test_scenario_rejects_non_unit():
    with pytest.raises(NonUnitVectorError):
        ChshScenario(E1V, E2V, E3V, Vector3(1, 1, 0))


# --- scalar correlations -----------------------------------------------------------

def test_orientation_sign_correlation_is_one():
    value = scalar_correlation(ORIENT_SIGN, E1V, E2V, OrientationDistribution(0.5))
    assert value == 1.0


def test_grade0_correlation_is_zero():
    for pair in ((E1V, E2V), (E1V, E3V), (E2V, E3V)):
        assert scalar_correlation(GRADE0, *pair, OrientationDistribution(0.5)) == 0.0


def test_component_sign_antipodal_correlation():
    value = scalar_correlation(COMPONENT_SIGN, E3V, Vector3(0, 0, -1),
                               OrientationDistribution(0.5))
    assert value == -1.0


@given(unit_vectors(), unit_vectors(),
       st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
       st.sampled_from(default_scalarizers()))
def test_scalar_correlation_bounded_by_one(a, b, p, s):
    value = scalar_correlation(s, a, b, OrientationDistribution(p))
    assert abs(value) <= 1.0 + TOL


def test_scalar_correlation_rejects_non_unit():
    with pytest.raises(NonUnitVectorError):
        scalar_correlation(ORIENT_SIGN, Vector3(1, 1, 0), E2V, OrientationDistribution(0.5))


# --- chsh combination ---------------------------------------------------------------

def test_chsh_constant_correlations():
    assert chsh(lambda a, b: 1.0, DEFAULT_SCENARIO) == 2.0
    assert chsh(lambda a, b: 0.0, DEFAULT_SCENARIO) == 0.0


def test_chsh_quantum_target_at_default_angles():
    s = chsh(quantum_target, DEFAULT_SCENARIO)
    assert abs(s + 2.0 * math.sqrt(2.0)) <= TOL


@given(st.floats(min_value=-2.0, max_value=2.0, allow_nan=False))
def test_chsh_linear_in_correlation_scale(c):
    base = chsh(quantum_target, DEFAULT_SCENARIO)
    scaled = chsh(lambda a, b: c * quantum_target(a, b), DEFAULT_SCENARIO)
    assert abs(scaled - c * base) <= 1e-9


# --- deterministic strategies ---------------------------------------------------------

def test_lhv_bruteforce_bound_is_exactly_two():
    assert lhv_bruteforce_bound() == 2.0
    assert lhv_bruteforce_bound(DEFAULT_SCENARIO) == 2.0


def test_all_sixteen_strategies_enumerated():
    strategies = all_strategies()
    assert len(strategies) == 16
    assert len(set(strategies)) == 16


@pytest.mark.parametrize("signs, expected", [
    ((+1, +1, +1, +1), 2.0),
    ((+1, +1, +1, -1), 2.0),
])
def test_strategy_combination_examples(signs, expected):
    assert abs(DeterministicStrategy(*signs).chsh_combination()) == expected


def test_strategy_rejects_bad_sign():
    with pytest.raises(ValueError):
        DeterministicStrategy(1, 1, 0, 1)


def test_every_strategy_within_bound():
    for strategy in all_strategies():
        assert abs(strategy.chsh_combination()) <= 2.0


# --- quantum target --------------------------------------------------------------------

def test_quantum_target_examples():
    assert quantum_target(E1V, E1V) == -1.0
    assert quantum_target(E1V, E2V) == 0.0
    s2 = 1.0 / math.sqrt(2.0)
    assert abs(quantum_target(E1V, Vector3(s2, s2, 0)) + s2) <= TOL


def test_quantum_target_rejects_non_unit():
    with pytest.raises(NonUnitVectorError):
        quantum_target(Vector3(0.5, 0, 0), E1V)


# --- scalarizer registration --------------------------------------------------------------

def test_joint_scalarizer_rejected():
    with pytest.raises(ValueError, match="joint"):
        make_scalarizer("joint", lambda a, b, hv: 1.0)


def test_out_of_range_scalarizer_rejected():
    with pytest.raises(ValueError, match=r"\[-1, 1\]"):
        make_scalarizer("big", lambda a, hv: 2.0)


def test_non_real_scalarizer_rejected():
    with pytest.raises(ValueError, match="non-real"):
        make_scalarizer("nan", lambda a, hv: float("nan"))


def test_registered_names():
    names = [s.name for s in default_scalarizers()]
    assert names == ["grade0_projection", "orientation_sign", "component_sign"]


# --- scalarizer audit ------------------------------------------------------------------------

def test_orientation_sign_audit_saturates_classical_bound():
    assert scalarizer_audit(ORIENT_SIGN, trials=200, seed=7) == 2.0


def test_grade0_audit_is_zero():
    assert scalarizer_audit(GRADE0, trials=50, seed=7) == 0.0


def test_component_sign_audit_obeys_classical_bound():
    assert scalarizer_audit(COMPONENT_SIGN, trials=2000, seed=11) <= 2.0 + TOL


def test_scalarizer_audit_deterministic_per_seed():
    first = scalarizer_audit(COMPONENT_SIGN, trials=300, seed=123)
    second = scalarizer_audit(COMPONENT_SIGN, trials=300, seed=123)
    assert first == second


def test_scalarizer_audit_rejects_bad_trials():
    with pytest.raises(ValueError):
        scalarizer_audit(ORIENT_SIGN, trials=0, seed=1)
