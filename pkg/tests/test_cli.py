"""The four subcommands: exit codes, outputs, diagnostics on stderr."""

from pathlib import Path

import pytest

from movables.cli import main
from movables.demo import build_demo_scene
from movables.layout import format_trace, serialize_scene
from movables.scene import random_trace

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden.layout"


@pytest.fixture
def layout_file(tmp_path):
    path = tmp_path / "scene.layout"
    path.write_text(GOLDEN.read_text(encoding="utf-8"), encoding="utf-8")
    return path


def test_validate_accepts_the_golden_layout(layout_file, capsys):
    assert main(["validate", str(layout_file)]) == 0
    assert capsys.readouterr().err == ""


def test_validate_rejects_corruption_with_a_diagnostic(tmp_path, capsys):
    bad = tmp_path / "bad.layout"
    bad.write_text(
        GOLDEN.read_text(encoding="utf-8").replace("radius 26.0", "radius -26.0", 1),
        encoding="utf-8",
    )
    assert main(["validate", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "bad.layout" in err and err.strip()


def test_validate_rejects_invariant_breakage(tmp_path, capsys):
    # well-formed document, but the comment sits outside its region
    doc = GOLDEN.read_text(encoding="utf-8").replace(
        "pair dot label limited-radius 90.0", "pair dot label limited-radius 30.0"
    )
    bad = tmp_path / "strayed.layout"
    bad.write_text(doc, encoding="utf-8")
    assert main(["validate", str(bad)]) == 1
    assert "label" in capsys.readouterr().err


def test_validate_missing_file(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "nope.layout")]) == 1
    assert capsys.readouterr().err


def test_replay_writes_the_final_layout(layout_file, tmp_path, capsys):
    trace = tmp_path / "session.trace"
    trace.write_text((DATA / "golden.trace").read_text(encoding="utf-8"), encoding="utf-8")
    out = tmp_path / "after.layout"
    assert main(["replay", str(layout_file), str(trace), "-o", str(out)]) == 0
    assert out.read_text(encoding="utf-8") == (DATA / "golden-after.layout").read_text(
        encoding="utf-8"
    )


def test_replay_defaults_to_stdout(layout_file, tmp_path, capsys):
    trace = tmp_path / "empty.trace"
    trace.write_text("", encoding="utf-8")
    assert main(["replay", str(layout_file), str(trace)]) == 0
    assert capsys.readouterr().out == GOLDEN.read_text(encoding="utf-8")


def test_replay_rejects_bad_traces(layout_file, tmp_path, capsys):
    trace = tmp_path / "bad.trace"
    trace.write_text("1 press wheel 0.0 0.0\n", encoding="utf-8")
    assert main(["replay", str(layout_file), str(trace)]) == 1
    assert "line 1" in capsys.readouterr().err


def test_render_writes_svg(layout_file, tmp_path, capsys):
    out = tmp_path / "scene.svg"
    assert main(["render", str(layout_file), "-o", str(out)]) == 0
    body = out.read_text(encoding="utf-8")
    assert body.startswith("<svg ") and "cover-node" not in body
    assert main(["render", str(layout_file), "--covers", "-o", str(out)]) == 0
    assert "cover-node" in out.read_text(encoding="utf-8")


def test_fuzz_clean_run_exits_zero(layout_file, capsys):
    assert main(["fuzz", str(layout_file), "--events", "120", "--seed", "4"]) == 0
    out = capsys.readouterr().out
    assert "120 events" in out and "seed 4" in out


def test_fuzz_can_save_its_trace(layout_file, tmp_path):
    saved = tmp_path / "fuzz.trace"
    assert (
        main(
            [
                "fuzz",
                str(layout_file),
                "--events",
                "80",
                "--seed",
                "9",
                "--trace-out",
                str(saved),
            ]
        )
        == 0
    )
    scene = build_demo_scene()
    assert saved.read_text(encoding="utf-8") == format_trace(random_trace(scene, 80, 9))


def test_fuzz_rejects_a_broken_starting_point(tmp_path, capsys):
    doc = GOLDEN.read_text(encoding="utf-8").replace(
        "pair dot label limited-radius 90.0", "pair dot label limited-radius 30.0"
    )
    bad = tmp_path / "broken.layout"
    bad.write_text(doc, encoding="utf-8")
    assert main(["fuzz", str(bad), "--events", "10", "--seed", "1"]) == 1
    assert "initial layout invalid" in capsys.readouterr().err
