import subprocess
import sys
from pathlib import Path

import pytest

from hitomezashi.cli import main


def run_cli(*args, capsys=None):
    return main(list(args))


def test_loops_fig1(capsys):
    assert main(["loops", "--symmetric", "--x", "---+++++"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("#hitomezashi-report v1\n")
    assert "counts total=8 trivial=6 nontrivial=2" in out
    assert "classes (1,1)x2" in out
    assert "loop 8x8:---+++++:---+++++ 0 20 0 0 1 W@(0,0)" in out


def test_loops_general(capsys):
    assert main(["loops", "--M", "4", "--N", "4", "--x", "++--", "--y", "+-+-"]) == 0
    assert "counts total=6" in capsys.readouterr().out


def test_loops_size_error(capsys):
    assert main(["loops", "--M", "2", "--N", "4", "--x", "++++", "--y", "++"]) == 2
    assert "torus sides" in capsys.readouterr().err


def test_loops_missing_args(capsys):
    assert main(["loops", "--x", "++--"]) == 2


def test_render_svg_byte_stable(tmp_path, capsys):
    out1, out2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["render", "--symmetric", "--x", "---+++++", "--out", str(out1)]) == 0
    assert main(["render", "--symmetric", "--x", "---+++++", "--out", str(out2)]) == 0
    data = out1.read_bytes()
    assert data == out2.read_bytes()
    assert data.startswith(b"<?xml")
    # 8 loops -> 8 color groups
    assert data.count(b"<g stroke=") == 8


def test_render_ascii_rows(capsys):
    assert main(["render", "--symmetric", "--x", "+++", "--target", "ascii"]) == 0
    out = capsys.readouterr().out
    rows = out.rstrip("\n").split("\n")
    assert len(rows) == 2 * 3 + 1
    assert all(len(r) == 2 * 3 + 1 for r in rows)


def test_render_bad_path(capsys):
    code = main(
        ["render", "--symmetric", "--x", "+++", "--out", "/nonexistent-dir/x.svg"]
    )
    assert code == 2


def test_verify_counts_exit_zero(tmp_path, capsys):
    code = main(
        [
            "verify",
            "--theorem",
            "counts",
            "--symmetric",
            "--n-max",
            "6",
            "--out-dir",
            str(tmp_path),
            "--no-figures",
        ]
    )
    assert code == 0
    report = (tmp_path / "report.txt").read_text()
    assert "theorem loop-counts" in report and "violations 0" in report


def test_verify_excursions_writes_harvest(tmp_path, capsys):
    code = main(
        [
            "verify",
            "--theorem",
            "excursions",
            "--n-max",
            "4",
            "--m-max",
            "4",
            "--out-dir",
            str(tmp_path),
            "--no-figures",
        ]
    )
    assert code == 0
    harvest = (tmp_path / "excursions.txt").read_text()
    assert harvest.startswith("#hitomezashi-excursions v1")
    assert "record " in harvest


def test_verify_writes_figures(tmp_path, capsys):
    code = main(
        [
            "verify",
            "--theorem",
            "counts",
            "--symmetric",
            "--n-max",
            "4",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 0
    assert (tmp_path / "summary.png").exists()
    assert (tmp_path / "summary.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_verify_range_ceiling_is_usage_error(capsys):
    assert main(["verify", "--theorem", "counts", "--symmetric", "--n-max", "20"]) == 2


def test_verify_exit_code_mapping():
    from hitomezashi.cli import _verify_exit_code
    from hitomezashi.verify import TheoremReport, Violation

    ok = TheoremReport("loop-counts", 1, (), 0.0)
    bad = TheoremReport(
        "loop-counts", 1, (Violation("loop-counts", "p", "-", "a", "b"),), 0.0
    )
    sched = TheoremReport(
        "triple-moves",
        0,
        (Violation("triple-moves", "p", "-", "move schedule", "failure: x"),),
        0.0,
    )
    assert _verify_exit_code([ok]) == 0
    assert _verify_exit_code([ok, bad]) == 1
    assert _verify_exit_code([ok, bad, sched]) == 3


def test_linklike_seifert_matches_loops(capsys):
    assert main(["linklike", "seifert", "--x", "+-++-"]) == 0
    out = capsys.readouterr().out
    assert "seifert-circles 9" in out
    assert main(["loops", "--symmetric", "--x", "+-++-"]) == 0
    assert "counts total=9" in capsys.readouterr().out


def test_linklike_swap_two_block(capsys):
    assert main(["linklike", "swap", "--x", "+++--"]) == 0
    out = capsys.readouterr().out
    assert "final seifert=5" in out


def test_linklike_dump_ingest_roundtrip(tmp_path, capsys):
    dump = tmp_path / "map.txt"
    assert main(["linklike", "dump", "--x", "+-++-", "--out", str(dump)]) == 0
    capsys.readouterr()
    assert main(["linklike", "ingest", "--in", str(dump)]) == 0
    again = capsys.readouterr().out
    assert again == dump.read_text()


def test_cli_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "hitomezashi.cli", "loops", "--symmetric", "--x", "+++"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "counts total=3" in proc.stdout
