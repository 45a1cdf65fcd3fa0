"""Latency sweeps over a wireless variable, with CSV output.

Each grid point re-evaluates the four handover scenarios with the
swept variable substituted into the wireless-hop parameters; every
other parameter keeps its scenario value.  The CSV layout is part of
the package's external interface, so the column list is pinned here.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .mipv6 import DUAL_INTER, DUAL_INTRA, SINGLE_INTER, SINGLE_INTRA, reduction_percent, total_latency
from .scenario import Scenario, SweepSpec, sweep_default

__all__ = ["SweepRow", "CSV_COLUMNS", "grid_values", "run_sweep", "emit_csv"]

CSV_COLUMNS = (
    "swept_var",
    "value",
    "single_inter_ms",
    "dual_inter_ms",
    "single_intra_ms",
    "dual_intra_ms",
    "t_md_ms",
    "t_reg_ms",
    "t_dad_ms",
    "reduction_pct",
)


@dataclass(frozen=True)
class SweepRow:
    """Latency results at one grid point, in ms except the percentage."""

    swept_var: str
    value: float
    single_inter_ms: float
    dual_inter_ms: float
    single_intra_ms: float
    dual_intra_ms: float
    t_md_ms: float
    t_reg_ms: float
    t_dad_ms: float
    reduction_pct: float


def grid_values(spec: SweepSpec) -> list[float]:
    """Evaluation points lo, lo+step, ... not exceeding hi.

    Points are built as lo + i*step (no running accumulation), with a
    half-ulp slack so hi itself survives float rounding.
    """
    count = int((spec.hi - spec.lo) / spec.step + 1e-9) + 1
    return [spec.lo + i * spec.step for i in range(count)]


def _at_point(scenario: Scenario, variable: str, value: float) -> SweepRow:
    if variable == "sigma_f":
        wireless = replace(scenario.wireless, frame_error_rate=value)
    else:
        wireless = replace(scenario.wireless, link_delay_ms=value)
    args = (scenario.timers, scenario.messages, scenario.topology, wireless, scenario.wired)
    single_inter = total_latency(SINGLE_INTER, *args)
    dual_inter = total_latency(DUAL_INTER, *args)
    single_intra = total_latency(SINGLE_INTRA, *args)
    dual_intra = total_latency(DUAL_INTRA, *args)
    return SweepRow(
        swept_var=variable,
        value=value,
        single_inter_ms=single_inter.total,
        dual_inter_ms=dual_inter.total,
        single_intra_ms=single_intra.total,
        dual_intra_ms=dual_intra.total,
        t_md_ms=single_inter.t_md,
        t_reg_ms=single_inter.t_reg,
        t_dad_ms=single_inter.t_dad,
        reduction_pct=reduction_percent(single_inter.total, dual_inter.total),
    )


def run_sweep(scenario: Scenario, variable: str | None = None) -> list[SweepRow]:
    """Evaluate the latency model across the sweep grid.

    ``variable`` overrides the scenario's sweep choice; when it names
    a different variable than the scenario grid was written for, the
    built-in grid of that variable is used instead.
    """
    spec = scenario.sweep
    if variable is not None and variable != spec.variable:
        spec = sweep_default(variable)
    return [_at_point(scenario, spec.variable, v) for v in grid_values(spec)]


def emit_csv(rows: list[SweepRow], path: str) -> None:
    """Write sweep rows as CSV; numbers are formatted with %.6g."""
    if not rows:
        raise ValueError("rows must be non-empty")
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        cells = [row.swept_var] + [
            format(getattr(row, col), ".6g") for col in CSV_COLUMNS[1:]
        ]
        lines.append(",".join(cells))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
