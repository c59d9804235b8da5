"""Command-line frontend.

Subcommands: ``eval``, ``sweep``, ``surface``, ``tables``, ``correlate``,
``plot``, ``check-rules``. All output is deterministic for a given
configuration; CSV files use '.' decimals, comma separators, a header row,
and LF line endings.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .analysis import (
    ALL_VARIANTS,
    CORRELATION_PAIRS,
    DEFAULT_FIXED,
    DEFAULT_GRID,
    STANDARD_SWEEPS,
    SweepResult,
    SweepSpec,
    VariantId,
    build_system,
    correlation_report,
    run_sweep,
    standard_sweep_results,
    surface_grid,
)
from .catalog import DECISION_INPUTS, standard_catalog
from .engine import AndOp
from .metrics import CalibrationRange
from .ruledsl import DecisionId, RuleParseError, parse_rules
from .svgplot import write_line_chart

OUTPUT_DIR_ENV = "FUZZYCR_OUTPUT_DIR"

# CSV cells carry full precision so downstream correlation is stable; the
# terminal prints 4 significant digits.
CSV_FORMAT = "%.17g"


class CliError(Exception):
    pass


@dataclass
class CliConfig:
    """Options loadable from a ``key = value`` config file."""

    resolution: int = 1001
    fixed_value: float = DEFAULT_FIXED
    grid: tuple[float, ...] | None = None
    variant: VariantId | None = None
    decision: DecisionId | None = None
    mamdani_and_op: AndOp | None = None
    sugeno_and_op: AndOp | None = None
    output_dir: Path | None = None
    calibration: dict[str, CalibrationRange] = field(default_factory=dict)
    sugeno_coefficients: dict[DecisionId, dict[str, tuple[float, ...]]] = field(
        default_factory=dict
    )


def _parse_grid(text: str) -> tuple[float, ...]:
    """Grid spec: either ``lo:hi:step`` or a comma list of values."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise CliError(f"grid must be lo:hi:step or a comma list, got {text!r}")
        lo, hi, step = (float(p) for p in parts)
        if step <= 0 or hi < lo:
            raise CliError(f"bad grid range {text!r}")
        values = []
        x = lo
        while x <= hi + 1e-9:
            values.append(round(x, 9))
            x += step
        return tuple(values)
    return tuple(float(p) for p in text.split(","))


_SCALAR_KEYS = {
    "resolution", "fixed_value", "grid", "variant", "decision",
    "mamdani_and_op", "sugeno_and_op", "output_dir",
}


def load_config(path: Path) -> CliConfig:
    """Parse the line-oriented config format.

    Top-level ``key = value`` pairs, a ``[calibration]`` section mapping
    input names to ``raw_lo, raw_hi``, and ``[sugeno.<decision>]`` sections
    mapping consequent labels to ``constant, slope...`` (slopes follow the
    decision's input order). Unknown keys are rejected.
    """
    config = CliConfig()
    section: str | None = None
    for line_no, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section != "calibration" and not section.startswith("sugeno."):
                raise CliError(f"{path}:{line_no}: unknown section [{section}]")
            continue
        if "=" not in line:
            raise CliError(f"{path}:{line_no}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        try:
            if section is None:
                _apply_scalar(config, key, value)
            elif section == "calibration":
                lo, hi = (float(p) for p in value.split(","))
                config.calibration[key] = CalibrationRange(lo, hi)
            else:
                decision = DecisionId.parse(section.split(".", 1)[1])
                numbers = tuple(float(p) for p in value.split(","))
                if not numbers:
                    raise CliError("empty coefficient list")
                config.sugeno_coefficients.setdefault(decision, {})[key] = numbers
        except CliError:
            raise
        except Exception as exc:
            raise CliError(f"{path}:{line_no}: {exc}") from exc
    return config


def _apply_scalar(config: CliConfig, key: str, value: str) -> None:
    if key not in _SCALAR_KEYS:
        raise CliError(f"unknown config key {key!r}")
    if key == "resolution":
        config.resolution = int(value)
    elif key == "fixed_value":
        config.fixed_value = float(value)
    elif key == "grid":
        config.grid = _parse_grid(value)
    elif key == "variant":
        config.variant = VariantId.parse(value)
    elif key == "decision":
        config.decision = DecisionId.parse(value)
    elif key in ("mamdani_and_op", "sugeno_and_op"):
        op = AndOp.MIN if value.lower() == "min" else AndOp.PRODUCT
        if value.lower() not in ("min", "product"):
            raise CliError(f"and op must be min or product, got {value!r}")
        setattr(config, key, op)
    elif key == "output_dir":
        config.output_dir = Path(value)


def _output_dir(config: CliConfig, flag: str | None) -> Path:
    if flag:
        return Path(flag)
    env = os.environ.get(OUTPUT_DIR_ENV)
    if env:
        return Path(env)
    return config.output_dir or Path(".")


def _system_for(config: CliConfig, decision: DecisionId, variant: VariantId):
    and_op = None
    if variant in (VariantId.TRIANGULAR_MAMDANI, VariantId.GAUSSIAN_MAMDANI):
        and_op = config.mamdani_and_op
    else:
        and_op = config.sugeno_and_op
    # Build label -> (constant, slopes...) into slope mapping for the affine
    # variant; the constant in column 0 replaces the catalog level.
    coeffs = config.sugeno_coefficients.get(decision, {})
    slopes = {label: values[1:] for label, values in coeffs.items() if len(values) > 1}
    system = build_system(
        decision,
        variant,
        resolution=config.resolution,
        and_op=and_op,
        linear_coefficients=slopes or None,
    )
    return system


def _format_value(value: float) -> str:
    return f"{value:.4g}"


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[float]]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(CSV_FORMAT % v for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _variant_list(text: str | None) -> tuple[VariantId, ...]:
    if not text:
        return ALL_VARIANTS
    return tuple(VariantId.parse(part) for part in text.split(","))


# --- subcommands --------------------------------------------------------------

def cmd_eval(args: argparse.Namespace, config: CliConfig) -> int:
    decision = DecisionId.parse(args.decision)
    variant = VariantId.parse(args.variant) if args.variant else (
        config.variant or VariantId.TRIANGULAR_MAMDANI
    )
    system = _system_for(config, decision, variant)
    assignments = {name: config.fixed_value for name in DECISION_INPUTS[decision]}
    for item in args.inputs or ():
        if "=" not in item:
            raise CliError(f"--in expects name=value, got {item!r}")
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in assignments:
            raise CliError(
                f"{name!r} is not an input of {decision.value}; "
                f"inputs: {', '.join(DECISION_INPUTS[decision])}"
            )
        assignments[name] = float(value)
    print(_format_value(system.evaluate(assignments)))
    return 0


def _sweep_rows(result: SweepResult) -> list[list[float]]:
    return [[x, *(values[v] for v in result.spec.variants)] for x, values in result.rows]


def _sweep_header(result: SweepResult) -> list[str]:
    return [result.spec.varied, *(v.value for v in result.spec.variants)]


def cmd_sweep(args: argparse.Namespace, config: CliConfig) -> int:
    decision = DecisionId.parse(args.decision)
    spec = SweepSpec(
        decision,
        args.vary,
        fixed_value=args.fixed if args.fixed is not None else config.fixed_value,
        grid=_parse_grid(args.grid) if args.grid else (config.grid or DEFAULT_GRID),
        variants=_variant_list(args.variants),
    )
    result = run_sweep(spec, resolution=config.resolution)
    out = Path(args.out)
    _write_csv(out, _sweep_header(result), _sweep_rows(result))
    print(f"wrote {out}")
    return 0


def cmd_surface(args: argparse.Namespace, config: CliConfig) -> int:
    decision = DecisionId.parse(args.decision)
    variants = _variant_list(args.variants)
    step = args.step
    grid = tuple(float(x) for x in _float_range(0.0, 100.0, step))
    grids = surface_grid(
        decision, args.vary_a, args.vary_b,
        fixed_value=args.fixed if args.fixed is not None else config.fixed_value,
        variants=variants, grid=grid, resolution=config.resolution,
    )
    outdir = _output_dir(config, args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for variant, values in grids.items():
        path = outdir / f"surface_{decision.value}_{args.vary_a}_{args.vary_b}_{variant.value}.csv"
        # rows run over vary_a values, columns over vary_b values
        header = [f"{args.vary_a}\\{args.vary_b}", *(CSV_FORMAT % b for b in grid)]
        rows = [[a, *values[i]] for i, a in enumerate(grid)]
        _write_csv(path, header, rows)
        print(f"wrote {path}")
    return 0


def _float_range(lo: float, hi: float, step: float) -> list[float]:
    if step <= 0:
        raise CliError(f"step must be positive, got {step}")
    values = []
    x = lo
    while x <= hi + 1e-9:
        values.append(round(x, 9))
        x += step
    return values


def cmd_tables(args: argparse.Namespace, config: CliConfig) -> int:
    outdir = _output_dir(config, args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    sweeps = standard_sweep_results(resolution=config.resolution)
    for number, (key, decision, varied) in enumerate(STANDARD_SWEEPS, start=9):
        result = sweeps[key]
        path = outdir / f"table{number:02d}.csv"
        _write_csv(path, _sweep_header(result), _sweep_rows(result))
    _write_correlation_csv(outdir / "table23.csv", sweeps)
    print(f"wrote table09.csv..table23.csv to {outdir}")
    return 0


def _write_correlation_csv(path: Path, sweeps) -> None:
    report = correlation_report(sweeps)
    header = ["input_parameter", *(name for name, _, _ in CORRELATION_PAIRS)]
    lines = [",".join(header)]
    for key, row in report:
        cells = [key] + [CSV_FORMAT % row[name] for name, _, _ in CORRELATION_PAIRS]
        lines.append(",".join(cells))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def cmd_correlate(args: argparse.Namespace, config: CliConfig) -> int:
    sweeps = standard_sweep_results(resolution=config.resolution)
    report = correlation_report(sweeps)
    if args.out:
        _write_correlation_csv(Path(args.out), sweeps)
        print(f"wrote {args.out}")
        return 0
    width = max(len(key) for key, _ in report)
    header = "  ".join(f"{name:>34s}" for name, _, _ in CORRELATION_PAIRS)
    print(f"{'input_parameter':{width}s}  {header}")
    for key, row in report:
        cells = "  ".join(f"{row[name]:>34.6f}" for name, _, _ in CORRELATION_PAIRS)
        print(f"{key:{width}s}  {cells}")
    return 0


def _read_sweep_csv(path: Path) -> tuple[list[str], list[list[float]]]:
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise CliError(f"{path}: empty file")
    header = lines[0].split(",")
    if len(header) < 2:
        raise CliError(f"{path}: header needs an input column and at least one series")
    rows = []
    for row_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.split(",")
        if len(cells) != len(header):
            raise CliError(
                f"{path}: row {row_no} has {len(cells)} cells, expected {len(header)}"
            )
        try:
            rows.append([float(c) for c in cells])
        except ValueError as exc:
            raise CliError(f"{path}: row {row_no}: {exc}") from exc
    if not rows:
        raise CliError(f"{path}: no data rows")
    return header, rows


def cmd_plot(args: argparse.Namespace, config: CliConfig) -> int:
    path = Path(args.csv)
    header, rows = _read_sweep_csv(path)
    out = Path(args.out) if args.out else path.with_suffix(".svg")
    xs = [row[0] for row in rows]
    series = {
        name: [row[i] for row in rows] for i, name in enumerate(header) if i > 0
    }
    write_line_chart(
        out,
        xs,
        series,
        x_label=header[0],
        y_label=args.y_label or "output",
        title=args.title or path.stem,
    )
    print(f"wrote {out}")
    return 0


def cmd_check_rules(args: argparse.Namespace, config: CliConfig) -> int:
    path = Path(args.path)
    text = path.read_text(encoding="utf-8")
    catalog = standard_catalog("triangular")
    # Bind against every referenced variable; the output is whichever catalog
    # output the THEN clauses assign.
    try:
        rulebase = _parse_against_catalog(text, catalog)
    except RuleParseError as exc:
        print(f"{path}: {exc}")
        return 1
    count = len(rulebase.rules)
    if count == 0:
        print(f"{path}: 0 rules")
        return 0
    antecedent_names = rulebase.variable_order[:-1]
    labels = [catalog.inputs[name].labels for name in antecedent_names]
    expected = 1
    for ls in labels:
        expected *= len(ls)
    seen = {
        tuple(rule.antecedent_map()[name] for name in antecedent_names)
        for rule in rulebase.rules
    }
    missing = []
    from itertools import product
    for combo in product(*labels):
        if combo not in seen:
            missing.append(combo)
    if missing:
        print(f"{path}: {count} rules, {len(missing)} missing combinations:")
        for combo in missing:
            clauses = ", ".join(f"{n}={l}" for n, l in zip(antecedent_names, combo))
            print(f"  {clauses}")
        return 1
    print(f"{path}: {count} rules, complete, no conflicts")
    return 0


def _parse_against_catalog(text: str, catalog):
    """Resolve the file's variables against the catalog, then parse."""
    from .membership import normalize_label

    referenced_inputs: list[str] = []
    output_name: str | None = None
    input_keys = {normalize_label(n): n for n in catalog.inputs}
    output_keys = {normalize_label(n): n for n in catalog.outputs}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        lowered = [t.lower() for t in tokens]
        then_at = lowered.index("then") if "then" in lowered else len(tokens)
        tail = tokens[then_at + 1 :]
        if "is" in [t.lower() for t in tail]:
            is_at = [t.lower() for t in tail].index("is")
            key = normalize_label(" ".join(tail[:is_at]))
            if key in output_keys:
                output_name = output_keys[key]
        # only the IF part names input variables; the consequent variable may
        # share an input's name (access latency is both)
        for token in tokens[:then_at]:
            key = normalize_label(token)
            if key in input_keys and input_keys[key] not in referenced_inputs:
                referenced_inputs.append(input_keys[key])
    if output_name is None:
        # empty or headerless file: bind something harmless so parse still
        # reports per-line errors
        output_name = next(iter(catalog.outputs))
    inputs = [catalog.inputs[name] for name in referenced_inputs] or list(
        catalog.inputs.values()
    )
    return parse_rules(text, inputs, catalog.outputs[output_name])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzycr",
        description="Fuzzy spectrum-decision toolkit: evaluate, sweep, and compare engines.",
    )
    parser.add_argument("--config", help="path to a key = value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one decision at given inputs")
    p.add_argument("--decision", required=True)
    p.add_argument("--variant", help="default: triangular-mamdani")
    p.add_argument("--in", dest="inputs", action="append", metavar="NAME=VALUE",
                   help="crisp input; unset inputs default to 50")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", help="vary one input, write a CSV")
    p.add_argument("--decision", required=True)
    p.add_argument("--vary", required=True)
    p.add_argument("--fixed", type=float, default=None)
    p.add_argument("--grid", help="lo:hi:step or comma list (default 10:100:10)")
    p.add_argument("--variants", help="comma list (default all four)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("surface", help="vary two inputs, write one CSV grid per variant")
    p.add_argument("--decision", required=True)
    p.add_argument("--vary-a", required=True)
    p.add_argument("--vary-b", required=True)
    p.add_argument("--fixed", type=float, default=None)
    p.add_argument("--step", type=float, default=2.0)
    p.add_argument("--variants", help="comma list (default all four)")
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("tables", help="write the fourteen standard sweeps plus correlations")
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("correlate", help="print or write the correlation report")
    p.add_argument("--out")
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("plot", help="render a sweep CSV as an SVG line chart")
    p.add_argument("csv")
    p.add_argument("--out")
    p.add_argument("--title")
    p.add_argument("--y-label")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("check-rules", help="validate a rule file for gaps and conflicts")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_rules)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(Path(args.config)) if args.config else CliConfig()
        return args.func(args, config)
    except (CliError, RuleParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
