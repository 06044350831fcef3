import math

import pytest

from unruhlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConcurrenceCommand:
    def test_noiseless_bell_is_one(self, capsys):
        code, out, _ = run(capsys, "concurrence", "--state", "bell", "--p", "0", "--r", "0")
        assert code == 0
        assert float(out.strip()) == pytest.approx(1.0)

    def test_unruh_only_is_cos_r(self, capsys):
        code, out, _ = run(capsys, "concurrence", "--state", "bell", "--p", "0",
                           "--r", "0.5", "--method", "xform")
        assert code == 0
        assert float(out.strip()) == pytest.approx(math.cos(0.5), abs=1e-10)

    def test_accel_omega_pair(self, capsys):
        code, out, _ = run(capsys, "concurrence", "--state", "bell", "--p", "0",
                           "--accel", "1e30", "--omega", "1.0")
        assert code == 0
        # enormous acceleration sits at the r = pi/4 saturation point
        assert float(out.strip()) == pytest.approx(math.cos(math.pi / 4), abs=1e-6)

    def test_custom_state(self, capsys):
        code, out, _ = run(capsys, "concurrence", "--state", "custom:-0.8,-0.8,-0.8",
                           "--p", "0", "--r", "0")
        assert code == 0
        assert float(out.strip()) == pytest.approx(0.7, abs=1e-10)

    def test_strict_rejects_general(self, capsys):
        code, _, err = run(capsys, "concurrence", "--state", "general", "--strict")
        assert code == 3

    def test_general_warns_but_runs_with_xform(self, capsys):
        code, out, err = run(capsys, "concurrence", "--state", "general",
                             "--p", "0.2", "--mu", "0.5", "--method", "xform")
        assert code == 0
        assert "not positive" in err
        assert 0.0 <= float(out.strip()) <= 1.0

    def test_wootters_on_unphysical_state_is_validation_error(self, capsys):
        code, _, err = run(capsys, "concurrence", "--state", "general",
                           "--method", "wootters")
        assert code == 2
        assert "error" in err


class TestBadArguments:
    def test_unknown_channel(self, capsys):
        code, _, _ = run(capsys, "concurrence", "--channel", "phaseflip")
        assert code == 3

    def test_unknown_subcommand(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 3

    def test_bad_probability(self, capsys):
        code, _, _ = run(capsys, "concurrence", "--p", "1.4")
        assert code == 3

    def test_bad_custom_state(self, capsys):
        code, _, _ = run(capsys, "concurrence", "--state", "custom:1,2")
        assert code == 3

    def test_svg_for_surface_figure(self, capsys, tmp_path):
        code, _, _ = run(capsys, "figure", "fig6", "--out", str(tmp_path / "f6.csv"),
                         "--format", "svg")
        assert code == 3


class TestSweepCommand:
    def test_writes_csv(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run(capsys, "sweep", "--channel", "bf", "--state", "bell",
                         "--mu", "0:1:5", "--p", "0.3", "--r", "0",
                         "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert lines[0] == "mu,p,r,channel,state,c_closed,c_oracle,delta"
        assert len(lines) == 6

    def test_svg_output(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.svg"
        code, _, _ = run(capsys, "sweep", "--channel", "ad", "--state", "bell",
                         "--mu", "0:1:11", "--p", "0.3", "--r", "0",
                         "--out", str(out_path), "--format", "svg")
        assert code == 0
        assert out_path.read_text().count("<polyline") == 1


class TestFigureCommand:
    def test_fig3_shape(self, capsys, tmp_path):
        out_path = tmp_path / "fig3.csv"
        code, out, _ = run(capsys, "figure", "fig3", "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert len(lines) == 1 + 101 * 3 * 9
        assert "max |closed - oracle|" in out

    def test_both_modes_writes_two_files(self, capsys, tmp_path):
        out_path = tmp_path / "fig3.csv"
        code, _, _ = run(capsys, "figure", "fig3", "--out", str(out_path),
                         "--application", "both")
        assert code == 0
        assert (tmp_path / "fig3-single.csv").exists()
        assert (tmp_path / "fig3-double.csv").exists()


class TestEsdCommand:
    def test_no_boundary(self, capsys):
        code, out, _ = run(capsys, "esd", "--channel", "dep", "--state", "bell",
                           "--scan", "p", "--mu", "0.8", "--r", str(math.pi / 4))
        assert code == 0
        assert out.strip().endswith("NoBoundary")

    def test_boundary_value(self, capsys):
        code, out, _ = run(capsys, "esd", "--channel", "bf", "--state", "bell",
                           "--scan", "p", "--mu", "0", "--r", "0",
                           "--lo", "0", "--hi", "0.5")
        assert code == 0
        assert float(out.strip()) == pytest.approx(0.5, abs=1e-3)


def test_validate_fast(capsys):
    code, out, _ = run(capsys, "validate", "--fast")
    assert code == 0
    assert "[PASS]" in out and "[FAIL]" not in out
    assert "closed-form vs oracle" in out
