"""Sweep harness and model-to-model correlation analysis.

Four system variants are compared throughout: Mamdani engines with triangular
or Gaussian membership, and Sugeno engines with constant or affine
consequents. Sweeps hold every other input at the universe midpoint and are
deterministic, so repeated runs are byte-identical.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import Mapping, Sequence

import numpy as np

from .catalog import DECISION_INPUTS, standard_catalog, sugeno_levels
from .engine import AndOp, EngineConfig, FuzzySystem, Rule, SugenoConsequent
from .membership import normalize_label
from .ruledsl import DecisionId, builtin_rulebase

__all__ = [
    "VariantId",
    "SweepSpec",
    "SweepResult",
    "DegenerateSeriesError",
    "build_system",
    "run_sweep",
    "surface_grid",
    "pearson",
    "correlation_report",
    "CORRELATION_PAIRS",
    "STANDARD_SWEEPS",
    "MONOTONE_TRENDS",
    "trend_violations",
    "load_golden_sweeps",
    "load_golden_correlations",
]

DEFAULT_FIXED = 50.0
DEFAULT_GRID = tuple(float(x) for x in range(10, 101, 10))
SURFACE_GRID = tuple(float(x) for x in range(0, 101, 2))


class VariantId(Enum):
    GAUSSIAN_MAMDANI = "gaussian-mamdani"
    TRIANGULAR_MAMDANI = "triangular-mamdani"
    CONSTANT_SUGENO = "constant-sugeno"
    LINEAR_SUGENO = "linear-sugeno"

    @staticmethod
    def parse(text: str) -> "VariantId":
        key = normalize_label(text)
        for member in VariantId:
            if normalize_label(member.value) == key:
                return member
        valid = ", ".join(m.value for m in VariantId)
        raise ValueError(f"unknown variant {text!r}; valid: {valid}")


ALL_VARIANTS = tuple(VariantId)


class DegenerateSeriesError(ValueError):
    """A correlation operand has zero variance."""


def build_system(
    decision: DecisionId,
    variant: VariantId,
    resolution: int = 1001,
    and_op: AndOp | None = None,
    sugeno_input_family: str = "gaussian",
    linear_coefficients: Mapping[str, Sequence[float]] | None = None,
) -> FuzzySystem:
    """Assemble one decision system from the catalog and its built-in rules.

    ``linear_coefficients`` maps consequent labels to per-input slopes (in
    decision input order) for the affine Sugeno variant; it defaults to all
    zeros, which makes the affine and constant variants coincide.
    """
    base = builtin_rulebase(decision)
    if variant is VariantId.TRIANGULAR_MAMDANI:
        catalog = standard_catalog("triangular")
        config = EngineConfig.mamdani(
            and_op=and_op or AndOp.MIN, resolution=resolution
        )
        rules: Sequence[Rule] = base.rules
    elif variant is VariantId.GAUSSIAN_MAMDANI:
        catalog = standard_catalog("gaussian")
        config = EngineConfig.mamdani(
            and_op=and_op or AndOp.MIN, resolution=resolution
        )
        rules = base.rules
    else:
        catalog = standard_catalog(sugeno_input_family)
        config = EngineConfig.sugeno(
            and_op=and_op or AndOp.PRODUCT, resolution=resolution
        )
        levels = sugeno_levels(decision)
        input_names = DECISION_INPUTS[decision]
        slopes = linear_coefficients or {}
        converted = []
        for rule in base.rules:
            label = rule.consequent
            coefficients: tuple[tuple[str, float], ...] = ()
            if variant is VariantId.LINEAR_SUGENO and label in slopes:
                coefficients = tuple(zip(input_names, slopes[label]))
            converted.append(
                Rule(rule.antecedents, SugenoConsequent(levels[label], coefficients))
            )
        rules = converted
    return FuzzySystem(
        inputs=catalog.decision_inputs(decision),
        output=catalog.decision_output(decision),
        rules=rules,
        config=config,
    )


@dataclass(frozen=True)
class SweepSpec:
    """One-dimensional sweep: vary one input, pin the rest."""

    decision: DecisionId
    varied: str
    fixed_value: float = DEFAULT_FIXED
    grid: tuple[float, ...] = DEFAULT_GRID
    variants: tuple[VariantId, ...] = ALL_VARIANTS

    def __post_init__(self) -> None:
        if self.varied not in DECISION_INPUTS[self.decision]:
            raise ValueError(
                f"{self.varied!r} is not an input of {self.decision.value}; "
                f"inputs: {DECISION_INPUTS[self.decision]}"
            )
        if not self.grid:
            raise ValueError("sweep grid must be nonempty")
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError("sweep grid must be strictly increasing")
        if not self.variants:
            raise ValueError("sweep needs at least one variant")


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple[tuple[float, dict[VariantId, float]], ...]

    def column(self, variant: VariantId) -> list[float]:
        return [values[variant] for _, values in self.rows]

    def grid_values(self) -> list[float]:
        return [x for x, _ in self.rows]


def run_sweep(spec: SweepSpec, resolution: int = 1001) -> SweepResult:
    """Evaluate every variant across the grid with the other inputs pinned."""
    systems = {v: build_system(spec.decision, v, resolution) for v in spec.variants}
    input_names = DECISION_INPUTS[spec.decision]
    rows = []
    for x in spec.grid:
        assignments = {name: spec.fixed_value for name in input_names}
        assignments[spec.varied] = x
        values = {}
        for variant, system in systems.items():
            try:
                values[variant] = system.evaluate(assignments)
            except Exception as exc:
                raise RuntimeError(
                    f"{spec.decision.value}/{variant.value} failed at "
                    f"{spec.varied}={x:g}: {exc}"
                ) from exc
        rows.append((x, values))
    return SweepResult(spec, tuple(rows))


def surface_grid(
    decision: DecisionId,
    input_a: str,
    input_b: str,
    fixed_value: float = DEFAULT_FIXED,
    variants: tuple[VariantId, ...] = ALL_VARIANTS,
    grid: tuple[float, ...] = SURFACE_GRID,
    resolution: int = 1001,
) -> dict[VariantId, np.ndarray]:
    """Outputs over the Cartesian grid of two inputs.

    Result arrays are indexed ``[i, j]`` with ``i`` running over ``input_a``
    values and ``j`` over ``input_b`` values, both in grid order.
    """
    names = DECISION_INPUTS[decision]
    if input_a == input_b:
        raise ValueError("surface needs two distinct inputs")
    for name in (input_a, input_b):
        if name not in names:
            raise ValueError(f"{name!r} is not an input of {decision.value}")
    systems = {v: build_system(decision, v, resolution) for v in variants}
    out = {v: np.empty((len(grid), len(grid))) for v in variants}
    for i, a in enumerate(grid):
        for j, b in enumerate(grid):
            assignments = {name: fixed_value for name in names}
            assignments[input_a] = a
            assignments[input_b] = b
            for variant, system in systems.items():
                out[variant][i, j] = system.evaluate(assignments)
    return out


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample correlation coefficient of two equal-length series.

    Computed from centered sums, which is the numerically stable equivalent
    of (N*sum(xy) - sum(x)sum(y)) / sqrt((N*sum(x^2) - sum(x)^2)(N*sum(y^2) - sum(y)^2)).
    """
    xs = [float(v) for v in x]
    ys = [float(v) for v in y]
    n = len(xs)
    if n != len(ys):
        raise ValueError(f"series lengths differ: {n} vs {len(ys)}")
    if n < 2:
        raise ValueError("correlation needs at least two samples")
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    dx = [v - mx for v in xs]
    dy = [v - my for v in ys]
    var_x = math.fsum(d * d for d in dx)
    var_y = math.fsum(d * d for d in dy)
    if var_x <= 0 or var_y <= 0:
        raise DegenerateSeriesError("degenerate series: zero variance")
    cov = math.fsum(a * b for a, b in zip(dx, dy))
    return cov / math.sqrt(var_x * var_y)


# The fourteen standard sweeps, keyed for reports and table files. Table
# numbering starts at 09 to match the shipped CSV names.
STANDARD_SWEEPS: tuple[tuple[str, DecisionId, str], ...] = (
    ("signal_strength", DecisionId.CHANNEL_SELECTION, "signal_strength"),
    ("spectrum_demand", DecisionId.CHANNEL_SELECTION, "spectrum_demand"),
    ("snr_for_channel_selection", DecisionId.CHANNEL_SELECTION, "snr"),
    ("snr_for_handoff", DecisionId.HANDOFF_STATUS, "snr"),
    ("interference", DecisionId.HANDOFF_STATUS, "interference"),
    ("channel_quality", DecisionId.CHANNEL_GAIN, "channel_quality"),
    ("susceptibility", DecisionId.CHANNEL_GAIN, "susceptibility"),
    (
        "spectrum_utilisation_efficiency",
        DecisionId.ACCESS_SPECTRUM,
        "spectrum_utilisation_efficiency",
    ),
    ("degree_of_mobility", DecisionId.ACCESS_SPECTRUM, "degree_of_mobility"),
    ("distance_to_primary_user", DecisionId.ACCESS_SPECTRUM, "distance_to_primary_user"),
    ("su_traffic_intensity", DecisionId.ACCESS_LATENCY, "su_traffic_intensity"),
    ("ba_traffic_intensity", DecisionId.ACCESS_LATENCY, "ba_traffic_intensity"),
    ("access_latency", DecisionId.BANDWIDTH_ALLOCATION, "access_latency"),
    ("traffic_priority", DecisionId.BANDWIDTH_ALLOCATION, "traffic_priority"),
)

CORRELATION_PAIRS = (
    ("gaussian_vs_triangular_mamdani", VariantId.GAUSSIAN_MAMDANI, VariantId.TRIANGULAR_MAMDANI),
    ("constant_vs_linear_sugeno", VariantId.CONSTANT_SUGENO, VariantId.LINEAR_SUGENO),
    ("gaussian_mamdani_vs_linear_sugeno", VariantId.GAUSSIAN_MAMDANI, VariantId.LINEAR_SUGENO),
)


def standard_sweep_results(resolution: int = 1001) -> dict[str, SweepResult]:
    """All fourteen standard sweeps, keyed by sweep name."""
    return {
        key: run_sweep(SweepSpec(decision, varied), resolution)
        for key, decision, varied in STANDARD_SWEEPS
    }


def correlation_report(
    sweeps: Mapping[str, SweepResult],
    pairs=CORRELATION_PAIRS,
) -> list[tuple[str, dict[str, float]]]:
    """Per-sweep correlation between the variant pairs."""
    report = []
    for key, result in sweeps.items():
        row = {}
        for pair_name, left, right in pairs:
            row[pair_name] = pearson(result.column(left), result.column(right))
        report.append((key, row))
    return report


# Expected qualitative behaviour of the generated sweeps: +1 for
# nondecreasing, -1 for nonincreasing. Plateaus are fine; moves against the
# trend larger than the tolerance are violations.
MONOTONE_TRENDS: tuple[tuple[str, int], ...] = (
    ("spectrum_demand", -1),
    ("snr_for_channel_selection", +1),
    ("degree_of_mobility", -1),
    ("su_traffic_intensity", +1),
    ("ba_traffic_intensity", +1),
    ("access_latency", -1),
    ("traffic_priority", +1),
)

TREND_TOLERANCE = 0.5


def trend_violations(
    values: Sequence[float], direction: int, tolerance: float = TREND_TOLERANCE
) -> list[tuple[int, float]]:
    """Steps moving against the expected direction by more than tolerance."""
    bad = []
    for i, (a, b) in enumerate(zip(values, values[1:])):
        step = (b - a) * direction
        if step < -tolerance:
            bad.append((i, step))
    return bad


# --- golden regression data --------------------------------------------------

def _read_packaged_csv(name: str) -> list[dict[str, str]]:
    text = resources.files("fuzzycr.data").joinpath(name).read_text(encoding="utf-8")
    return list(csv.DictReader(text.splitlines()))


def load_golden_sweeps() -> list[dict[str, str]]:
    """Published sweep values with per-cell tolerance and check status."""
    return _read_packaged_csv("golden_sweeps.csv")


def load_golden_correlations() -> list[dict[str, str]]:
    """Published correlation table values."""
    return _read_packaged_csv("golden_correlations.csv")
