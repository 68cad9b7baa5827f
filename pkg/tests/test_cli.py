"""Command-line interface tests (in-process via run(), plus one subprocess)."""

import subprocess
import sys

import pytest

from pointforge import load_config
from pointforge.cli import run


@pytest.fixture()
def in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


FAST = ["--step", "0.1"]


class TestReferenceInvocation:
    def test_reference_invocation(self, in_tmp):
        code = run(
            [
                "--verbose",
                "--no-display",
                "--color=red",
                "--bgcolor=black",
                "--rotation=30",
                "--projection=polar",
                "--mode",
                "f2_vs_f1",
                "--save-image",
                "test.png",
            ]
        )
        assert code == 0
        out = in_tmp / "test.png"
        assert out.exists() and out.stat().st_size > 0
        assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_console_script_exists(self, in_tmp):
        proc = subprocess.run(
            [sys.executable, "-m", "pointforge.cli", "--no-display", "--step", "0.2",
             "--save-image", "tiny.svg"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert (in_tmp / "tiny.svg").exists()


class TestDeterminism:
    def test_fixed_seeds_byte_identical_svg(self, in_tmp):
        argv = [
            "--seed", "123", "--func-seed", "456", *FAST,
            "--no-display", "--save-image",
        ]
        assert run(argv + ["a.svg"]) == 0
        assert run(argv + ["b.svg"]) == 0
        assert (in_tmp / "a.svg").read_bytes() == (in_tmp / "b.svg").read_bytes()

    def test_config_regenerates_identical_image(self, in_tmp):
        assert run(
            ["--seed", "9", "--func-seed", "8", *FAST, "--no-display",
             "--save-config", "cfg.json", "--save-image", "first.svg"]
        ) == 0
        assert run(
            ["--load-config", "cfg.json", "--no-display", "--save-image", "second.svg"]
        ) == 0
        assert (in_tmp / "first.svg").read_bytes() == (in_tmp / "second.svg").read_bytes()

    def test_saved_config_contains_seeds(self, in_tmp):
        assert run(
            ["--seed", "11", "--func-seed", "22", *FAST, "--no-display",
             "--save-config", "cfg.json"]
        ) == 0
        cfg = load_config((in_tmp / "cfg.json").read_bytes())
        assert cfg.generate.seed == "11"
        assert cfg.func_seed == "22"

    def test_omitted_seeds_logged_and_embedded(self, in_tmp, capsys):
        assert run([*FAST, "--no-display", "--verbose", "--save-config", "c.json"]) == 0
        err = capsys.readouterr().err
        assert "func_seed=" in err and "seed=" in err
        cfg = load_config((in_tmp / "c.json").read_bytes())
        assert cfg.func_seed is not None


class TestFlagHandling:
    def test_load_config_conflicts_exit_2(self, in_tmp):
        assert run(["--seed", "1", *FAST, "--no-display", "--save-config", "c.json"]) == 0
        with pytest.raises(SystemExit) as exc_info:
            run(["--load-config", "c.json", "--seed", "5"])
        assert exc_info.value.code == 2

    def test_plot_flags_allowed_with_load_config(self, in_tmp):
        assert run(["--seed", "1", *FAST, "--no-display", "--save-config", "c.json"]) == 0
        assert run(
            ["--load-config", "c.json", "--rotation", "90", "--no-display",
             "--save-image", "r.svg"]
        ) == 0

    def test_unknown_extension_exits_1(self, in_tmp, capsys):
        code = run([*FAST, "--no-display", "--save-image", "art.gif"])
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_missing_config_file_exits_1(self, in_tmp, capsys):
        assert run(["--load-config", "absent.json", "--no-display"]) == 1
        assert "error" in capsys.readouterr().err

    def test_bad_mode_rejected_by_parser(self, in_tmp):
        with pytest.raises(SystemExit) as exc_info:
            run([*FAST, "--mode", "sideways"])
        assert exc_info.value.code == 2

    def test_preview_written_unless_suppressed(self, in_tmp):
        assert run(["--seed", "2", "--func-seed", "3", *FAST]) == 0
        assert (in_tmp / "preview.png").exists()

    def test_no_display_suppresses_preview(self, in_tmp):
        assert run(["--seed", "2", "--func-seed", "3", *FAST, "--no-display"]) == 0
        assert not (in_tmp / "preview.png").exists()

    def test_verbose_logs_equations_and_drops(self, in_tmp, capsys):
        assert run(["--seed", "2", "--func-seed", "3", *FAST, "--no-display",
                    "--verbose"]) == 0
        err = capsys.readouterr().err
        assert "f1 =" in err and "f2 =" in err
        assert "dropped" in err

    def test_save_data_writes_replottable_file(self, in_tmp):
        assert run(["--seed", "4", "--func-seed", "5", *FAST, "--no-display",
                    "--save-data", "d.json"]) == 0
        from pointforge import load_data

        data = load_data((in_tmp / "d.json").read_bytes())
        assert len(data.points) > 0

    def test_width_height_flags(self, in_tmp):
        assert run(["--seed", "6", "--func-seed", "7", *FAST, "--no-display",
                    "--width", "320", "--height", "200",
                    "--save-image", "sized.svg"]) == 0
        svg = (in_tmp / "sized.svg").read_text()
        assert 'width="320"' in svg and 'height="200"' in svg
