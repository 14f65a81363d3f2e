"""Audit pipeline: runs every check over the configured setting pairs, the
distribution grid and the CHSH scenario, then assembles a structured report
whose claim verdicts drive the CLI exit code.

The claim map is compiled in (see CLAIM_MAP) and printed in the report
header, so every verdict line is traceable to the check that produced it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .ga import (
    DEFAULT_TOLERANCE,
    GRADES,
    GradeSupport,
    I,
    Multivector,
    Vector3,
    cross,
    dot,
    grade_audit,
)
from .model import ORIENTATIONS, PRODUCT_FORMS, OrientationDistribution
from .measure import (
    ExpectationResult,
    MeasureKind,
    expectation,
    measure_total,
    p_grid,
)
from .bell import (
    DEFAULT_ANGLES_DEG,
    ChshScenario,
    chsh,
    default_scalarizers,
    lhv_bruteforce_bound,
    quantum_target,
    scalarizer_audit,
)

TOOL_NAME = "g3bell"
TOOL_VERSION = "0.1.0"

CONFIRMED = "confirmed"
REFUTED = "refuted"
INFORMATIONAL = "informational"

OUTPUT_FORMATS = ("text", "json")

_SQRT1_2 = 1.0 / math.sqrt(2.0)

# Always audited; configured pairs are appended after these.
DEFAULT_PAIRS = (
    (Vector3(1.0, 0.0, 0.0), Vector3(0.0, 1.0, 0.0)),
    (Vector3(1.0, 0.0, 0.0), Vector3(1.0, 0.0, 0.0)),
    (Vector3(1.0, 0.0, 0.0), Vector3(_SQRT1_2, _SQRT1_2, 0.0)),
)

_KINDS = (MeasureKind.SCALAR_WEIGHTS, MeasureKind.DIRECTED_TRIVECTOR)
_FORMS = ("identity", "raw")

# claim id -> (one-line statement, what is checked).  Statements double as
# the verdict lines of the text report.
CLAIM_MAP = (
    ("observable_product_splits",
     "the observable product splits into a scalar part -a.b and a bivector part of magnitude |a x b|",
     "both product forms, every audited pair, both orientations: grade-0 equals "
     "-dot(a,b), grade-2 magnitude equals |cross(a,b)|, grades 1 and 3 vanish"),
    ("scalar_weight_codomain",
     "under conventional scalar weights the expectation family sweeps scalar and bivector grades",
     "identity-form sweep support over the p-grid equals {0,2}, dropping grade 0 "
     "when a.b = 0 and grade 2 when a x b = 0"),
    ("directed_codomain",
     "under the directed trivector measure the expectation family sweeps vector and trivector grades",
     "identity-form sweep support over the p-grid equals {1,3}, dropping grade 3 "
     "when a.b = 0 and grade 1 when a x b = 0"),
    ("orthogonal_zero_graded",
     "the isotropic average at orthogonal settings is the zero element of a non-scalar subspace",
     "for orthogonal pairs the isotropic identity-form expectation is zero while its "
     "contributing terms occupy grade 2 (scalar weights) and grade 1 (directed)"),
    ("nonisotropic_leak",
     "non-isotropic distributions leak a non-scalar component of magnitude |2p-1|*|a x b|",
     "identity form, every pair and grid point: the grade-2 leak (scalar weights) and "
     "grade-1 leak (directed) match |2p-1|*|cross(a,b)| within tolerance"),
    ("directed_total_trivector",
     "directed measure normalizes to trivector",
     "the directed total equals e123 for every p on the grid, so the valid-probability "
     "flag is false; scalar weights total exactly 1 with the flag true"),
    ("directed_scalar_range_empty",
     "the directed-measure functional attains no nonzero scalar value",
     "both forms, every pair and grid point: the grade-0 component of the directed "
     "expectation stays within tolerance of zero"),
    ("lhv_bound_two",
     "deterministic strategies bound the CHSH combination by 2",
     "exhaustive enumeration of the 16 sign strategies returns exactly 2"),
    ("scalarized_chsh_classical",
     "every registered scalarization keeps CHSH within the classical bound",
     "seeded random scenarios and weights: max |S| <= 2 + tolerance for each "
     "registered scalarizer"),
    ("projection_reproduces_violation",
     "the grade-0 projection alone reproduces the quantum-style CHSH violation while the unprojected expectation is not scalar-valued",
     "chsh of -a.b at the configured settings exceeds 2 in magnitude (and equals "
     "-2*sqrt(2) at the default settings) while the sweeps above show non-scalar grades"),
)


@dataclass(frozen=True)
class AuditConfig:
    tolerance: float = DEFAULT_TOLERANCE
    p_step: float = 0.05
    angles_deg: tuple[float, float, float, float] = DEFAULT_ANGLES_DEG
    trials: int = 10000
    seed: int = 42
    output_format: str = "text"
    extra_pairs: tuple[tuple[Vector3, Vector3], ...] = ()

    def __post_init__(self):
        if not (isinstance(self.tolerance, (int, float))
                and math.isfinite(self.tolerance) and self.tolerance > 0.0):
            raise ValueError(f"tolerance must be a positive real, got {self.tolerance!r}")
        if not 0.0 < self.p_step <= 1.0:
            raise ValueError(f"p-step must lie in (0, 1], got {self.p_step!r}")
        if len(self.angles_deg) != 4 or not all(math.isfinite(x) for x in self.angles_deg):
            raise ValueError(f"angles must be four finite degrees, got {self.angles_deg!r}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")


@dataclass(frozen=True)
class AuditReport:
    config: AuditConfig
    pair_keys: tuple[str, ...]
    degenerate_tolerance: bool
    identity_check: dict
    grade_support: dict
    normalization: dict
    functional_range: dict
    chsh: dict
    claims: tuple[dict, ...]
    notes: tuple[str, ...]

    def all_confirmed(self) -> bool:
        return all(c["verdict"] == CONFIRMED for c in self.claims)

    def to_dict(self) -> dict:
        return {
            "tool": {"name": TOOL_NAME, "version": TOOL_VERSION},
            "config": {
                "tolerance": self.config.tolerance,
                "p_step": self.config.p_step,
                "angles_deg": list(self.config.angles_deg),
                "trials": self.config.trials,
                "seed": self.config.seed,
                "output_format": self.config.output_format,
                "pairs": list(self.pair_keys),
            },
            "claim_map": [
                {"id": cid, "statement": statement, "check": check}
                for cid, statement, check in CLAIM_MAP
            ],
            "degenerate_tolerance": self.degenerate_tolerance,
            "identity_check": self.identity_check,
            "grade_support": self.grade_support,
            "normalization": self.normalization,
            "functional_range": self.functional_range,
            "chsh": self.chsh,
            "claims": list(self.claims),
            "notes": list(self.notes),
        }


def _fmt_comp(c: float) -> str:
    return f"{c:.9g}"


def pair_key(a: Vector3, b: Vector3) -> str:
    """Label a setting pair the way the --pair flag spells it."""
    return (f"{_fmt_comp(a.x)},{_fmt_comp(a.y)},{_fmt_comp(a.z)}"
            f":{_fmt_comp(b.x)},{_fmt_comp(b.y)},{_fmt_comp(b.z)}")


_MV_KEYS = ("scalar", "e1", "e2", "e3", "e12", "e13", "e23", "e123")


def _mv_dict(mv: Multivector) -> dict:
    return dict(zip(_MV_KEYS, mv.coeffs))


def _vec_list(v: Vector3) -> list[float]:
    return [v.x, v.y, v.z]


def _support_dict(gs: GradeSupport) -> dict:
    return {"present": list(gs.grades()), "max_magnitude": list(gs.max_magnitude)}


def format_value(mv: Multivector, family_support: GradeSupport, tol: float) -> str:
    """Render a value, annotating an exact zero with the grade support of the
    family that produced it (a zero bivector is not a zero scalar)."""
    if mv.is_zero(tol) and family_support.present:
        grades = family_support.grades()
        if len(grades) == 1:
            return f"0 [as grade-{grades[0]}]"
        return "0 [as grades " + ", ".join(str(g) for g in grades) + "]"
    return str(mv)


def audited_pairs(config: AuditConfig) -> list[tuple[str, Vector3, Vector3]]:
    """Default pairs plus configured ones, deduplicated by label."""
    out: list[tuple[str, Vector3, Vector3]] = []
    seen: set[str] = set()
    for a, b in DEFAULT_PAIRS + tuple(config.extra_pairs):
        key = pair_key(a, b)
        if key in seen:
            continue
        seen.add(key)
        out.append((key, a, b))
    return out


def run_audit(config: AuditConfig) -> AuditReport:
    tol = config.tolerance
    grid = p_grid(config.p_step)
    pairs = audited_pairs(config)
    # A tolerance that swallows unit-magnitude blades cannot distinguish any
    # grade; every verdict is then informational.
    degenerate = not grade_audit(I, tol).present

    # Expectation sweep for every pair, product form and measure kind.
    sweeps: dict[str, dict[str, dict[MeasureKind, list[tuple[float, ExpectationResult]]]]] = {}
    for key, a, b in pairs:
        sweeps[key] = {}
        for form in _FORMS:
            fn = PRODUCT_FORMS[form]
            sweeps[key][form] = {
                kind: [(p, expectation(fn, a, b, OrientationDistribution(p), kind, tol))
                       for p in grid]
                for kind in _KINDS
            }

    identity_check = _identity_check_section(pairs, tol)
    grade_support = _grade_support_section(pairs, sweeps, grid, tol)
    normalization = _normalization_section(grid, tol)
    functional_range = _functional_range_section(pairs, sweeps)
    chsh_section = _chsh_section(config)

    claims = _evaluate_claims(
        config, pairs, sweeps, grid, tol, degenerate,
        identity_check, normalization, functional_range, chsh_section,
    )

    notes = [
        "the identity form and the literal observable product agree at orientation +1 "
        "and differ by the sign of the bivector term at orientation -1; the audit "
        "reports both and does not adjudicate between them",
        "under scalar weights the raw form keeps an orientation-independent bivector "
        "part of magnitude |a x b| at every p, including the isotropic point where "
        "the identity form's expectation is purely scalar",
        "orientations {+1, -1} exhaust the unit trivectors: the grade-3 subspace of "
        "G3 is one-dimensional",
        "scalarizers are factorizing by construction: each sees one local setting and "
        "the hidden variable; joint maps are rejected at registration",
    ]
    if degenerate:
        notes.insert(0, f"tolerance {tol:g} swallows unit-magnitude components; all "
                        "grade supports are empty and every verdict is informational")

    return AuditReport(
        config=config,
        pair_keys=tuple(key for key, _, _ in pairs),
        degenerate_tolerance=degenerate,
        identity_check=identity_check,
        grade_support=grade_support,
        normalization=normalization,
        functional_range=functional_range,
        chsh=chsh_section,
        claims=tuple(claims),
        notes=tuple(notes),
    )


def _identity_check_section(pairs, tol: float) -> dict:
    section: dict = {}
    for key, a, b in pairs:
        d = dot(a, b)
        c_norm = cross(a, b).norm()
        per_orientation = {}
        scalar_ok = True
        bivector_ok = True
        for hv in ORIENTATIONS:
            label = "orientation_plus" if hv.orientation == +1 else "orientation_minus"
            values = {form: PRODUCT_FORMS[form](a, b, hv) for form in _FORMS}
            for mv in values.values():
                if abs(mv.coeffs[0] - (-d)) > tol:
                    scalar_ok = False
                if abs(mv.grade_norm(2) - c_norm) > tol:
                    bivector_ok = False
            per_orientation[label] = {
                "identity": _mv_dict(values["identity"]),
                "raw": _mv_dict(values["raw"]),
                "max_coeff_diff": values["identity"].max_abs_diff(values["raw"]),
            }
        id_plus = PRODUCT_FORMS["identity"](a, b, ORIENTATIONS[0])
        id_minus = PRODUCT_FORMS["identity"](a, b, ORIENTATIONS[1])
        raw_plus = PRODUCT_FORMS["raw"](a, b, ORIENTATIONS[0])
        raw_minus = PRODUCT_FORMS["raw"](a, b, ORIENTATIONS[1])
        section[key] = {
            "dot": d,
            "cross_norm": c_norm,
            **per_orientation,
            "scalar_parts_match_minus_dot": scalar_ok,
            "bivector_magnitudes_match_cross_norm": bivector_ok,
            "raw_orientation_independent": raw_plus.max_abs_diff(raw_minus) <= tol,
            "identity_bivector_flips_with_orientation":
                (id_plus.grade(2) + id_minus.grade(2)).max_abs_coeff() <= tol,
        }
    return section


def _grade_support_section(pairs, sweeps, grid, tol: float) -> dict:
    section: dict = {}
    iso_index = _isotropic_index(grid)
    for key, a, b in pairs:
        entry: dict = {}
        for form in _FORMS:
            entry[form] = {}
            for kind in _KINDS:
                union = GradeSupport.empty()
                for _, result in sweeps[key][form][kind]:
                    union = union.union(result.support)
                entry[form][kind.value] = _support_dict(union)
        iso: dict = {}
        for form in _FORMS:
            iso[form] = {}
            for kind in _KINDS:
                if iso_index is None:
                    result = expectation(PRODUCT_FORMS[form], a, b,
                                         OrientationDistribution(0.5), kind, tol)
                else:
                    result = sweeps[key][form][kind][iso_index][1]
                iso[form][kind.value] = {
                    "value": _mv_dict(result.value),
                    "rendered": format_value(result.value, result.term_support, tol),
                    "term_support": _support_dict(result.term_support),
                }
        entry["isotropic"] = iso
        # The forms disagree away from orientation +1; quantify what that does
        # to the scalar-weight expectation across the grid.
        grade0_diff = 0.0
        raw_g2_min, raw_g2_max = math.inf, -math.inf
        for (p, res_id), (_, res_raw) in zip(sweeps[key]["identity"][MeasureKind.SCALAR_WEIGHTS],
                                             sweeps[key]["raw"][MeasureKind.SCALAR_WEIGHTS]):
            grade0_diff = max(grade0_diff, abs(res_id.value.coeffs[0] - res_raw.value.coeffs[0]))
            g2 = res_raw.value.grade_norm(2)
            raw_g2_min, raw_g2_max = min(raw_g2_min, g2), max(raw_g2_max, g2)
        entry["raw_vs_identity"] = {
            "grade0_max_diff_over_grid": grade0_diff,
            "raw_scalar_weight_grade2_range": [raw_g2_min, raw_g2_max],
        }
        section[key] = entry
    return section


def _isotropic_index(grid) -> int | None:
    for i, p in enumerate(grid):
        if p == 0.5:
            return i
    return None


def _normalization_section(grid, tol: float) -> dict:
    scalar_totals = [measure_total(OrientationDistribution(p), MeasureKind.SCALAR_WEIGHTS)
                     for p in grid]
    directed_totals = [measure_total(OrientationDistribution(p), MeasureKind.DIRECTED_TRIVECTOR)
                       for p in grid]
    one = Multivector.scalar(1.0)
    constant = all(t.max_abs_diff(scalar_totals[0]) <= tol for t in scalar_totals) and \
        all(t.max_abs_diff(directed_totals[0]) <= tol for t in directed_totals)
    return {
        "scalar_total": _mv_dict(scalar_totals[0]),
        "scalar_valid_probability_measure":
            all(t.max_abs_diff(one) <= tol for t in scalar_totals),
        "directed_total": _mv_dict(directed_totals[0]),
        "directed_valid_probability_measure":
            all(t.max_abs_diff(one) <= tol for t in directed_totals),
        "directed_total_is_unit_trivector":
            all(t.max_abs_diff(I) == 0.0 for t in directed_totals),
        "totals_constant_over_grid": constant,
    }


def _functional_range_section(pairs, sweeps) -> dict:
    section: dict = {}
    for key, _, _ in pairs:
        entry: dict = {}
        for form in _FORMS:
            directed = sweeps[key][form][MeasureKind.DIRECTED_TRIVECTOR]
            max_scalar = max(abs(res.value.coeffs[0]) for _, res in directed)
            entry[form] = {
                "max_abs_scalar_component": max_scalar,
                "nonzero_scalar_attained": max_scalar > 0.0,
            }
            if form == "identity":
                entry[form]["probe"] = [
                    {"p": p, "value": _mv_dict(res.value)} for p, res in directed
                ]
        section[key] = entry
    return section


def _chsh_section(config: AuditConfig) -> dict:
    scenario = ChshScenario.from_angles(config.angles_deg)
    maxima = {
        s.name: scalarizer_audit(s, trials=config.trials, seed=config.seed)
        for s in default_scalarizers()
    }
    s_value = chsh(quantum_target, scenario)
    return {
        "angles_deg": list(config.angles_deg),
        "scenario": {
            "a": _vec_list(scenario.a),
            "a_prime": _vec_list(scenario.a_prime),
            "b": _vec_list(scenario.b),
            "b_prime": _vec_list(scenario.b_prime),
        },
        "lhv_bruteforce_bound": lhv_bruteforce_bound(scenario),
        "trials": config.trials,
        "seed": config.seed,
        "scalarizer_maxima": maxima,
        "quantum_target_s": s_value,
        "quantum_target_exceeds_lhv_bound": abs(s_value) > 2.0,
    }


def _expected_support(d: float, c_norm: float, kind: MeasureKind, tol: float) -> frozenset[int]:
    """Grades the sweep must reach, given the pair geometry: the dot part
    feeds grade 0 (scalar weights) or 3 (directed), the cross part feeds
    grade 2 or 1."""
    if kind is MeasureKind.SCALAR_WEIGHTS:
        dot_grade, cross_grade = 0, 2
    else:
        dot_grade, cross_grade = 3, 1
    expected = set()
    if abs(d) > tol:
        expected.add(dot_grade)
    if c_norm > tol:
        expected.add(cross_grade)
    return frozenset(expected)


def _evaluate_claims(config, pairs, sweeps, grid, tol, degenerate,
                     identity_check, normalization, functional_range, chsh_section):
    geometry = {key: (dot(a, b), cross(a, b).norm()) for key, a, b in pairs}
    claims = []

    def add(cid: str, ok: bool, observed: dict, verdict: str | None = None):
        statement, check = next((s, c) for i, s, c in CLAIM_MAP if i == cid)
        if degenerate:
            verdict = INFORMATIONAL
            observed = {**observed, "reason": "degenerate tolerance"}
        elif verdict is None:
            verdict = CONFIRMED if ok else REFUTED
        claims.append({"id": cid, "statement": statement, "check": check,
                       "verdict": verdict, "observed": observed})

    # observable_product_splits
    ok = all(identity_check[key]["scalar_parts_match_minus_dot"]
             and identity_check[key]["bivector_magnitudes_match_cross_norm"]
             for key, _, _ in pairs)
    grade13 = 0.0
    for key, a, b in pairs:
        for form in _FORMS:
            for hv in ORIENTATIONS:
                mv = PRODUCT_FORMS[form](a, b, hv)
                grade13 = max(grade13, mv.grade_norm(1), mv.grade_norm(3))
    ok = ok and grade13 <= tol
    add("observable_product_splits", ok, {"max_offgrade_magnitude": grade13})

    # codomain sweeps
    for cid, kind in (("scalar_weight_codomain", MeasureKind.SCALAR_WEIGHTS),
                      ("directed_codomain", MeasureKind.DIRECTED_TRIVECTOR)):
        observed_supports = {}
        ok = True
        for key, _, _ in pairs:
            union = GradeSupport.empty()
            for _, result in sweeps[key]["identity"][kind]:
                union = union.union(result.support)
            expected = _expected_support(*geometry[key], kind, tol)
            observed_supports[key] = {
                "observed": list(union.grades()),
                "expected": sorted(expected),
            }
            ok = ok and union.present == expected
        add(cid, ok, {"supports": observed_supports})

    # orthogonal_zero_graded
    orth = {}
    ok = True
    iso = _isotropic_index(grid)
    for key, a, b in pairs:
        d, c_norm = geometry[key]
        if abs(d) > tol or c_norm <= tol:
            continue
        for kind, want in ((MeasureKind.SCALAR_WEIGHTS, frozenset({2})),
                           (MeasureKind.DIRECTED_TRIVECTOR, frozenset({1}))):
            if iso is None:
                result = expectation(PRODUCT_FORMS["identity"], a, b,
                                     OrientationDistribution(0.5), kind, tol)
            else:
                result = sweeps[key]["identity"][kind][iso][1]
            zero = result.value.max_abs_coeff() <= tol
            graded = result.term_support.present == want
            ok = ok and zero and graded
            orth[f"{key}|{kind.value}"] = {
                "value_is_zero": zero,
                "term_support": list(result.term_support.grades()),
            }
    add("orthogonal_zero_graded", ok and bool(orth), {"cases": orth})

    # nonisotropic_leak
    worst = 0.0
    for key, _, _ in pairs:
        _, c_norm = geometry[key]
        for kind, g in ((MeasureKind.SCALAR_WEIGHTS, 2), (MeasureKind.DIRECTED_TRIVECTOR, 1)):
            for p, result in sweeps[key]["identity"][kind]:
                target = abs(2.0 * p - 1.0) * c_norm
                worst = max(worst, abs(result.value.grade_norm(g) - target))
    add("nonisotropic_leak", worst <= tol, {"max_leak_error": worst})

    # directed_total_trivector
    ok = (normalization["directed_total_is_unit_trivector"]
          and not normalization["directed_valid_probability_measure"]
          and normalization["scalar_valid_probability_measure"]
          and normalization["totals_constant_over_grid"])
    add("directed_total_trivector", ok, {
        "directed_total_e123": normalization["directed_total"]["e123"],
        "scalar_total": normalization["scalar_total"]["scalar"],
    })

    # directed_scalar_range_empty
    worst = max(functional_range[key][form]["max_abs_scalar_component"]
                for key, _, _ in pairs for form in _FORMS)
    add("directed_scalar_range_empty", worst <= tol, {"max_abs_scalar_component": worst})

    # lhv_bound_two
    bound = chsh_section["lhv_bruteforce_bound"]
    add("lhv_bound_two", bound == 2.0, {"bound": bound})

    # scalarized_chsh_classical
    maxima = chsh_section["scalarizer_maxima"]
    ok = all(v <= 2.0 + tol for v in maxima.values())
    add("scalarized_chsh_classical", ok, {"maxima": dict(maxima)})

    # projection_reproduces_violation
    s_value = chsh_section["quantum_target_s"]
    union = GradeSupport.empty()
    for key, _, _ in pairs:
        for kind in _KINDS:
            for _, result in sweeps[key]["identity"][kind]:
                union = union.union(result.support)
    non_scalar = bool(union.present - {0})
    observed = {"s": s_value, "abs_s": abs(s_value), "non_scalar_grades": list(union.grades())}
    if degenerate:
        add("projection_reproduces_violation", False, observed)
    elif abs(s_value) <= 2.0:
        observed["reason"] = "configured settings do not probe the violation"
        add("projection_reproduces_violation", False, observed, verdict=INFORMATIONAL)
    else:
        ok = non_scalar
        if tuple(config.angles_deg) == DEFAULT_ANGLES_DEG:
            ok = ok and abs(s_value + 2.0 * math.sqrt(2.0)) <= tol
        add("projection_reproduces_violation", ok, observed)

    return claims


# ---------------------------------------------------------------------------
# Emission


def _round15(x: float) -> float:
    if x == 0.0:
        return 0.0
    return float(f"{x:.15g}")


def _round_tree(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return _round15(obj)
    if isinstance(obj, dict):
        return {k: _round_tree(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_tree(v) for v in obj]
    return obj


def emit(report: AuditReport, output_format: str | None = None) -> str:
    """Render the report as a text or json document (no trailing I/O)."""
    fmt = output_format or report.config.output_format
    if fmt == "json":
        return json.dumps(_round_tree(report.to_dict()), indent=2) + "\n"
    if fmt == "text":
        return _render_text(report)
    raise ValueError(f"unknown output format {fmt!r}")


def _num(x: float) -> str:
    return f"{x:.12g}"


def _mv_str(d: dict) -> str:
    return str(Multivector(tuple(d[k] for k in _MV_KEYS)))


def _render_text(report: AuditReport) -> str:
    cfg = report.config
    lines: list[str] = []
    push = lines.append

    push(f"{TOOL_NAME} audit report (v{TOOL_VERSION})")
    push("=" * 72)
    push(f"config: tolerance={cfg.tolerance:g} | p-step={cfg.p_step:g} | "
         f"angles={'/'.join(_num(x) for x in cfg.angles_deg)} deg | "
         f"trials={cfg.trials} | seed={cfg.seed}")
    push(f"audited pairs: {', '.join(report.pair_keys)}")
    push("")
    push("claim map (id: statement | check)")
    push("-" * 72)
    for cid, statement, check in CLAIM_MAP:
        push(f"  {cid}:")
        push(f"    {statement}")
        push(f"    check: {check}")
    push("")

    push("identity check (quoted product identity vs literal observable product)")
    push("-" * 72)
    for key in report.pair_keys:
        info = report.identity_check[key]
        push(f"pair {key}  (a.b = {_num(info['dot'])}, |a x b| = {_num(info['cross_norm'])})")
        for label, tag in (("orientation_plus", "+1"), ("orientation_minus", "-1")):
            row = info[label]
            push(f"  orientation {tag}: identity = {_mv_str(row['identity'])} | "
                 f"raw = {_mv_str(row['raw'])} | max coeff diff = {_num(row['max_coeff_diff'])}")
        push(f"  scalar parts equal -a.b: {_yn(info['scalar_parts_match_minus_dot'])} | "
             f"bivector magnitude equals |a x b|: {_yn(info['bivector_magnitudes_match_cross_norm'])}")
        push(f"  raw form orientation-independent: {_yn(info['raw_orientation_independent'])} | "
             f"identity bivector flips with orientation: {_yn(info['identity_bivector_flips_with_orientation'])}")
    push("")

    push("grade support (family sweep over the p-grid)")
    push("-" * 72)
    for key in report.pair_keys:
        entry = report.grade_support[key]
        push(f"pair {key}")
        for form in _FORMS:
            for kind in _KINDS:
                support = entry[form][kind.value]["present"]
                rendered = "{" + ", ".join(str(g) for g in support) + "}"
                push(f"  {form:8s} | {kind.value:18s}: {rendered}")
        for kind in _KINDS:
            iso = entry["isotropic"]["identity"][kind.value]
            push(f"  isotropic expectation | {kind.value:18s}: {iso['rendered']}")
    push("")

    push("normalization")
    push("-" * 72)
    n = report.normalization
    push(f"scalar weights total: {_mv_str(n['scalar_total'])} | "
         f"valid probability measure: {_yn(n['scalar_valid_probability_measure'])}")
    push(f"directed trivector total: {_mv_str(n['directed_total'])} | "
         f"valid probability measure: {_yn(n['directed_valid_probability_measure'])}")
    push(f"totals constant over p-grid: {_yn(n['totals_constant_over_grid'])}")
    push("")

    push("functional range under the directed measure")
    push("-" * 72)
    for key in report.pair_keys:
        entry = report.functional_range[key]
        push(f"pair {key}: max |scalar component| = "
             f"{_num(entry['identity']['max_abs_scalar_component'])} (identity), "
             f"{_num(entry['raw']['max_abs_scalar_component'])} (raw) | "
             f"nonzero scalar attained: {_yn(entry['identity']['nonzero_scalar_attained'])}")
    push("")

    push("chsh")
    push("-" * 72)
    c = report.chsh
    push(f"scenario angles: {'/'.join(_num(x) for x in c['angles_deg'])} deg (e1-e2 plane)")
    push(f"lhv brute-force bound: {_num(c['lhv_bruteforce_bound'])}")
    push(f"scalarizer maxima over {c['trials']} trials (seed {c['seed']}):")
    for name, value in c["scalarizer_maxima"].items():
        push(f"  {name}: {_num(value)}")
    push(f"quantum-target S: {_num(c['quantum_target_s'])} | "
         f"exceeds classical bound: {_yn(c['quantum_target_exceeds_lhv_bound'])}")
    push("")

    push("verdicts")
    push("-" * 72)
    for claim in report.claims:
        push(f"{claim['statement']}: {claim['verdict']}")
    push("")

    push("notes")
    push("-" * 72)
    for note in report.notes:
        push(f"- {note}")
    push("")
    return "\n".join(lines)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"
