"""Checks for the sweep grid, rows and CSV output."""

import pytest

from specmob.scenario import SweepSpec, default_scenario, scenario_from_mapping
from specmob.sweep import CSV_COLUMNS, emit_csv, grid_values, run_sweep


class TestGrid:
    def test_error_rate_grid(self):
        values = grid_values(SweepSpec("sigma_f", 0.0, 0.4, 0.05))
        assert len(values) == 9
        assert values[0] == 0.0
        assert values[-1] == pytest.approx(0.4, abs=1e-12)

    def test_link_delay_grid(self):
        values = grid_values(SweepSpec("d_wl", 10.0, 40.0, 2.5))
        assert len(values) == 13
        assert values[-1] == pytest.approx(40.0, abs=1e-12)

    def test_degenerate_grid(self):
        assert grid_values(SweepSpec("d_wl", 25.0, 25.0, 1.0)) == [25.0]

    def test_step_past_hi_excluded(self):
        assert grid_values(SweepSpec("d_wl", 10.0, 19.0, 4.0)) == [10.0, 14.0, 18.0]


class TestRows:
    def test_row_count_and_variable(self):
        rows = run_sweep(default_scenario())
        assert len(rows) == 9
        assert all(r.swept_var == "sigma_f" for r in rows)

    def test_variable_override_uses_builtin_grid(self):
        rows = run_sweep(default_scenario(), variable="d_wl")
        assert len(rows) == 13
        assert rows[0].value == 10.0

    def test_scenario_grid_respected_when_it_matches(self):
        s = scenario_from_mapping({"sweep": {"variable": "d_wl", "min": 20.0, "max": 30.0, "step": 5.0}})
        rows = run_sweep(s, variable="d_wl")
        assert [r.value for r in rows] == [20.0, 25.0, 30.0]

    def test_reference_row(self):
        rows = run_sweep(default_scenario())
        mid = next(r for r in rows if abs(r.value - 0.2) < 1e-9)
        assert mid.single_inter_ms == pytest.approx(2548.30296, abs=1e-9)
        assert mid.dual_inter_ms == pytest.approx(2002.95296, abs=1e-9)
        assert mid.single_intra_ms == 200.0
        assert mid.dual_intra_ms == 0.0
        assert mid.reduction_pct == pytest.approx(21.400516679539546, rel=1e-12)

    def test_intra_rows_flat_across_grid(self):
        for rows in (run_sweep(default_scenario()), run_sweep(default_scenario(), variable="d_wl")):
            assert all(r.single_intra_ms == 200.0 for r in rows)
            assert all(r.dual_intra_ms == 0.0 for r in rows)


class TestCsv:
    def test_layout(self, tmp_path):
        out = tmp_path / "sweep.csv"
        emit_csv(run_sweep(default_scenario()), str(out))
        lines = out.read_text().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 10
        first = lines[1].split(",")
        assert first[0] == "sigma_f"
        assert first[1] == "0"
        # error-free corner by hand: 45.35 + 500 + 230 + 1000 + 723.35296
        assert first[2] == "2498.7"

    def test_rejects_empty(self, tmp_path):
        with pytest.raises(ValueError):
            emit_csv([], str(tmp_path / "x.csv"))

    def test_unwritable_path_raises_oserror(self, tmp_path):
        with pytest.raises(OSError):
            emit_csv(run_sweep(default_scenario()), str(tmp_path / "missing" / "x.csv"))
