import json
import signal

import pytest

import tropcount
from tropcount.base import Manager
from tropcount.cli import RunConfig, run
from tropcount.errors import ValidationError
from tropcount.tropical.lattice import LatticePolygon


def output_of(capsys, config: RunConfig):
    assert run(config) == 0
    return json.loads(capsys.readouterr().out)


def error_of(capsys):
    """The JSON error document, after any log lines"""
    err = capsys.readouterr().err
    return json.loads(err[err.index("{\n") :])


def test_stats(capsys, polygon_file):
    report = output_of(capsys, RunConfig("stats", polygon=polygon_file(LatticePolygon.simplex(3))))
    assert (report["total_points"], report["interior_points"], report["doubled_area"]) == (10, 1, 9)
    assert sorted(d["multiplicity"] for d in report["degree"]) == [3, 3, 3]


def test_errors_become_exit_codes(capsys, tmp_path):
    assert run(RunConfig("stats")) == 2
    assert "needs a polygon" in error_of(capsys)["error"]

    fname = tmp_path / "flat.json"
    fname.write_text(json.dumps({"vertices": [[0, 0], [1, 0], [2, 0]]}))
    assert run(RunConfig("stats", polygon=fname)) == 2
    assert "at" in error_of(capsys)


def test_unknown_command():
    with pytest.raises(ValidationError):
        RunConfig("draw")
    with pytest.raises(ValidationError):
        RunConfig("count", fmt="xml")


def test_count_csv(capsys, polygon_file, tmp_path):
    config = RunConfig(
        "count", polygon=polygon_file(LatticePolygon.simplex(1)), fmt="csv", cache_dir=tmp_path
    )
    assert run(config) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "index,key,classical,refined,welschinger"
    assert len(lines) == 2


def test_cache_hit_gives_the_same_bytes(polygon_file, tmp_path):
    polygon = polygon_file(LatticePolygon.rectangle(1, 1))
    cache = tmp_path / "cache"
    first, second = tmp_path / "first.json", tmp_path / "second.json"

    assert run(RunConfig("enumerate", polygon=polygon, cache_dir=cache, output=first)) == 0
    assert len(list(cache.glob("*.json"))) == 1
    assert run(RunConfig("enumerate", polygon=polygon, cache_dir=cache, output=second)) == 0
    assert first.read_bytes() == second.read_bytes()

    third = tmp_path / "third.json"
    config = RunConfig("enumerate", polygon=polygon, use_cache=False, output=third)
    assert run(config) == 0
    assert third.read_bytes() == first.read_bytes()


def test_incomplete_cache_entry_is_recomputed(polygon_file, tmp_path):
    polygon = polygon_file(LatticePolygon.rectangle(1, 1))
    cache = tmp_path / "cache"
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    assert run(RunConfig("enumerate", polygon=polygon, cache_dir=cache, output=first)) == 0

    (entry,) = cache.glob("*.json")
    stored = json.loads(entry.read_text())
    stored["payload"] = {"schema": stored["payload"]["schema"]}
    entry.write_text(json.dumps(stored))

    assert run(RunConfig("enumerate", polygon=polygon, cache_dir=cache, output=second)) == 0
    assert second.read_bytes() == first.read_bytes()


def test_explicit_points(capsys, polygon_file, tmp_path):
    points = tmp_path / "points.json"
    points.write_text(json.dumps([[0, 0], [3, 1]]))
    config = RunConfig(
        "enumerate",
        polygon=polygon_file(LatticePolygon.simplex(1)),
        points=points,
        use_cache=False,
    )
    result = output_of(capsys, config)
    assert result["method"] == "brute_force"
    assert result["curves"][0]["vertices"] == [["1", "1"]]


def test_verify_given_curves(capsys, polygon_file, tmp_path, crossing_cubic, mult3_cubic):
    curves = tmp_path / "curves.json"
    curves.write_text(json.dumps({"curves": [crossing_cubic.to_json(), mult3_cubic.to_json()]}))
    config = RunConfig(
        "verify",
        polygon=polygon_file(LatticePolygon.simplex(3)),
        delta=1,
        curves=curves,
        strict=True,
    )
    report = output_of(capsys, config)
    assert report["all_equal"]
    assert report["g"] == 1


def test_rejected_curves(capsys, polygon_file, tmp_path, smooth_cubic):
    curves = tmp_path / "curves.json"
    curves.write_text(json.dumps([smooth_cubic.to_json()]))
    config = RunConfig(
        "count", polygon=polygon_file(LatticePolygon.simplex(3)), delta=1, curves=curves
    )
    assert run(config) == 2
    assert error_of(capsys)["report"][0]["curve"] == 0


def test_zeta_closed_form(capsys):
    report = output_of(capsys, RunConfig("zeta", closed_form="nodal_genus1", genus=1))
    assert report["N_str"] == ["1", "y", "0", "0", "0", "0"]
    assert report["functional_equation"]["holds"]

    assert run(RunConfig("zeta", closed_form="smooth")) == 2
    assert run(RunConfig("zeta")) == 2


def test_zeta_truncated_input(capsys, tmp_path):
    fname = tmp_path / "hilb.json"
    fname.write_text(json.dumps({"g": 2, "hilb_chi": [1, [-1, -1], [0, 1]]}))
    assert run(RunConfig("zeta", input=fname)) == 2
    assert error_of(capsys)["required_order"] == 6


def test_volume(capsys, tmp_path):
    line = {
        "variant": "closure",
        "cells": [{"in_class": {"L_poly": {"1": 1, "0": -2}}, "dim": 0, "rec_dim": 0}]
        + [{"in_class": {"L_poly": {"1": 1, "0": -1}}, "dim": 1, "rec_dim": 1}] * 3,
    }
    fname = tmp_path / "line.json"
    fname.write_text(json.dumps(line))
    report = output_of(capsys, RunConfig("volume", input=fname))
    assert report["volume_str"] == "L + 1"
    assert report["euler"] == 2
    assert run(RunConfig("volume")) == 2


def test_render(capsys, polygon_file, tmp_path, weight2_cubic):
    curves = tmp_path / "curves.json"
    curves.write_text(json.dumps([weight2_cubic.to_json()]))
    polygon = polygon_file(LatticePolygon.simplex(3))
    out = tmp_path / "svg"

    config = RunConfig("render", polygon=polygon, delta=1, curves=curves, output=out)
    listing = output_of(capsys, config)
    assert listing["files"] == ["curve-0-Weight2Unmarked.svg"]
    picture = (out / listing["files"][0]).read_text()
    assert picture.startswith("<svg")
    assert 'class="edge weight-2"' in picture

    again = tmp_path / "again"
    assert run(RunConfig("render", polygon=polygon, delta=1, curves=curves, output=again)) == 0
    assert (again / listing["files"][0]).read_text() == picture


def test_manager_builds_the_run(polygon_file):
    polygon = polygon_file(LatticePolygon.simplex(1))
    core = Manager(["count", "--polygon", str(polygon), "--format", "csv", "--no-cache"])
    config = core.run_config()
    assert config.command == "count"
    assert config.polygon == polygon
    assert config.fmt == "csv"
    assert config.use_cache is False
    assert config.settings["Enumeration"]["method"] == "lattice_path"


def test_manager_reads_the_config_file(tmp_path):
    fname = tmp_path / "config.yaml"
    fname.write_text("Render:\n  width: 200\nAdmin:\n  jobs: 2\n")
    core = Manager(["-C", str(fname), "zeta", "--closed-form", "smooth", "--genus", "2"])
    assert core.config["Render"]["width"] == 200
    assert core.run_config().settings["Admin"]["jobs"] == 2


def test_manager_exits_on_bad_input(tmp_path):
    with pytest.raises(SystemExit) as exc:
        Manager([])
    assert exc.value.code == 1

    with pytest.raises(SystemExit) as exc:
        Manager(["-C", str(tmp_path / "missing.yaml"), "stats"])
    assert exc.value.code == 1

    fname = tmp_path / "config.yaml"
    fname.write_text("Plotting:\n  dpi: 300\n")
    with pytest.raises(SystemExit) as exc:
        Manager(["-C", str(fname), "stats"])
    assert exc.value.code == 2


def test_run_manager(capsys, monkeypatch, polygon_file):
    monkeypatch.setattr(signal, "signal", lambda *args: None)
    polygon = polygon_file(LatticePolygon.simplex(2))

    with pytest.raises(SystemExit) as exc:
        tropcount.run_manager(["stats", "--polygon", str(polygon)])
    assert exc.value.code == 0
    assert json.loads(capsys.readouterr().out)["interior_points"] == 0

    with pytest.raises(SystemExit) as exc:
        tropcount.run_manager(["--show-log-name", "stats"])
    assert exc.value.code == 0
    assert "LOG FILENAME" in capsys.readouterr().out
