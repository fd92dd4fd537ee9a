"""End-to-end tests of the command-line interface."""
import shutil

import pytest

from spinekit.config import Settings
from spinekit.main import run
from spinekit.services.ograph_builder import ograph_builder
from spinekit.services.ograph_io import serialize
from spinekit.services.triangulate import triangulator


@pytest.fixture
def corrupted_fixtures(tmp_path, fixtures_dir):
    """Fixture directory whose G_5 has one recolored double edge."""
    text = (fixtures_dir / "g5.og").read_text(encoding="utf-8")
    assert "edge 2.2 3.1 color 0" in text
    (tmp_path / "g5.og").write_text(text.replace("edge 2.2 3.1 color 0", "edge 2.2 3.1 color 1"), encoding="utf-8")
    shutil.copy(fixtures_dir / "g9.og", tmp_path / "g9.og")
    return tmp_path


def test_generate(tmp_path, capsys):
    out = tmp_path / "g9.og"
    assert run(["generate", "--s", "1", "--out", str(out)]) == 0
    assert out.read_bytes() == serialize(ograph_builder.generate_Gn(1))
    assert "wrote G_9" in capsys.readouterr().out


def test_generate_negative_s(tmp_path, capsys):
    assert run(["generate", "--s", "-1", "--out", str(tmp_path / "x.og")]) == 2
    assert "error: SpineKitError" in capsys.readouterr().err


def test_analyze_g5(fixtures_dir, capsys):
    assert run(["analyze", str(fixtures_dir / "g5.og")]) == 0
    out = capsys.readouterr().out
    for line in [
        "source: g5.og",
        "tetrahedra: 5",
        "edge_classes: [15, 15]",
        "triple_edges: 10",
        "components2: 2",
        "euler: -3",
        "boundary_components: 1",
        "boundary_genera: [4]",
        "poor: true",
        "simple_subpolyhedra: 2",
        "epsilon: -33 + 21*eps",
        "regular_angle: 0.418879020479",
        "geodesic_class: M^2_5",
        "complexity_if_hyperbolic: 5",
    ]:
        assert line in out.splitlines()


def test_analyze_is_deterministic(fixtures_dir, capsys):
    run(["analyze", str(fixtures_dir / "g9.og")])
    first = capsys.readouterr().out
    run(["analyze", str(fixtures_dir / "g9.og")])
    assert capsys.readouterr().out == first


def test_analyze_triangulation_file(doubled_tet, tmp_path, capsys):
    path = tmp_path / "double.tri"
    path.write_bytes(triangulator.serialize_triangulation(doubled_tet))
    assert run(["analyze", str(path)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "boundary_components: 4" in out
    assert "poor: false" in out
    assert "volume: none" in out
    assert "geodesic_class: none" in out


def test_analyze_writes_report(fixtures_dir, tmp_path, capsys):
    out_file = tmp_path / "report.txt"
    assert run(["analyze", str(fixtures_dir / "g5.og"), "--out", str(out_file)]) == 0
    assert out_file.read_text(encoding="utf-8") == capsys.readouterr().out


def test_analyze_dir_reports_bad_files(fixtures_dir, tmp_path, capsys):
    shutil.copy(fixtures_dir / "g5.og", tmp_path / "a.og")
    (tmp_path / "b.og").write_text("ograph v1\nvertices 0\n", encoding="utf-8")
    (tmp_path / "notes.txt").write_text("ignored", encoding="utf-8")
    assert run(["analyze", "--dir", str(tmp_path)]) == 2
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "source: a.og"
    assert "source: b.og" in out
    assert "error: EmptyGraphError: no vertices" in out
    assert not any("notes.txt" in line for line in out)


def test_analyze_missing_file(tmp_path, capsys):
    assert run(["analyze", str(tmp_path / "nope.og")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_analyze_unknown_header(tmp_path, capsys):
    path = tmp_path / "x.og"
    path.write_text("graph v9\n", encoding="utf-8")
    assert run(["analyze", str(path)]) == 2
    assert "error: ParseError" in capsys.readouterr().err


def test_poor(fixtures_dir, capsys):
    assert run(["poor", str(fixtures_dir / "g5.og")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "poor: true" in out
    assert "  mask=00 V=0 chi=0" in out
    assert "  mask=11 V=5 chi=-3" in out


def test_epsilon(fixtures_dir, capsys):
    assert run(["epsilon", str(fixtures_dir / "g9.og")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "epsilon: -1596 + 987*eps" in out
    assert "terms: 2" in out


def test_volume_theta(capsys):
    assert run(["volume", "--theta", "0"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "via_integral: 3.663862376709" in out
    assert "agreed: true" in out


def test_volume_family(capsys):
    assert run(["volume", "--family", "wn", "--n", "5"]) == 0
    assert "volume: 16.95" in capsys.readouterr().out


def test_volume_bad_family_size(capsys):
    assert run(["volume", "--family", "wn", "--n", "6"]) == 2
    assert "error: DomainError" in capsys.readouterr().err


def test_volume_bad_theta(capsys):
    assert run(["volume", "--theta", "1.5"]) == 2
    assert "error: DomainError" in capsys.readouterr().err


def test_volume_needs_n(capsys):
    assert run(["volume", "--family", "mn"]) == 2


def test_verify_paper(capsys):
    assert run(["verify-paper"]) == 0
    out = capsys.readouterr().out
    assert run(["verify-paper"]) == 0
    assert capsys.readouterr().out == out
    assert "FAIL" not in out
    assert "total: 11  passed: 11  failed: 0" in out


def test_verify_paper_detects_corrupted_fixture(corrupted_fixtures, capsys):
    assert run(["verify-paper", "--fixtures", str(corrupted_fixtures)]) == 1
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert any(line.startswith(" 1  G5 fixture") and "FAIL" in line for line in lines)
    assert "classes=[30]" in captured.out
    assert "error: VerificationError" in captured.err


def test_calibrate(capsys):
    assert run(["calibrate"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 288
    frozen = [line for line in out if line.startswith("*")]
    assert len(frozen) == 1
    assert "slots=0123 shift=012 read=cw" in frozen[0]
    assert " pass " in frozen[0]
    assert sum(" pass " in line for line in out) == 48


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc_info:
        run([])
    assert exc_info.value.code == 2


def test_worker_count(monkeypatch):
    monkeypatch.setenv("SPINEKIT_THREADS", "1")
    assert Settings().worker_count() == 1
    monkeypatch.setenv("SPINEKIT_THREADS", "0")
    assert Settings().worker_count() >= 1
