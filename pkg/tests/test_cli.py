"""Config loading, report emission, and the command-line entry points."""

import json
from math import radians

import pytest
import yaml

from gearboxopt import Architecture, STANDARD_MODULE_SET_MM
from gearboxopt.cli import (ConfigError, build_context,
                            export_dimension_sheet, load_config, main,
                            run_sweep)
from gearboxopt.mass import default_bearing_table_path, load_bearing_model
from gearboxopt.search import evaluate

MINIMAL = {
    "motor": {"name": "U12", "outer_diameter_mm": 105.6,
              "stator_inner_diameter_mm": 65.0, "height_mm": 46.5,
              "mass_kg": 0.765, "max_torque_nm": 3.0,
              "max_speed_rad_s": 418.9},
    "load": {"sun_torque_nm": 3.0, "sun_speed_rad_s": 418.9},
}


def write_config(tmp_path, mapping, name="run.yaml"):
    path = tmp_path / name
    path.write_text(yaml.safe_dump(mapping))
    return path


@pytest.fixture(scope="module")
def sweep_dir(u12_config_path, tmp_path_factory):
    out = tmp_path_factory.mktemp("sweep")
    cfg = load_config(u12_config_path)
    document = run_sweep(cfg, out_dir=out, workers=1)
    return out, document


class TestLoadConfig:
    def test_minimal_config_gets_defaults(self, tmp_path):
        cfg = load_config(write_config(tmp_path, MINIMAL))
        assert cfg.motor.name == "U12"
        assert cfg.load.sun_torque_nm == 3.0
        assert cfg.efficiency.mu == 0.06
        assert cfg.cost.k_m == 1.0 and cfg.cost.k_e == 2.0
        assert cfg.bins == [(float(lo), float(lo + 1))
                            for lo in range(5, 15)]
        assert cfg.architectures == [Architecture.ISSPG, Architecture.ESSPG]
        assert cfg.module_set == STANDARD_MODULE_SET_MM
        assert cfg.bearing_table_path is None
        assert "efficiency.mu" in cfg.applied_defaults
        assert "search.bins" in cfg.applied_defaults

    def test_shipped_u12_config(self, u12_config_path):
        cfg = load_config(u12_config_path)
        assert cfg.motor.outer_diameter_mm == 105.6
        assert cfg.motor.stator_inner_diameter_mm == 65.0

    def test_annotated_template_fails_on_purpose(self, u12_config_path):
        template = u12_config_path.parent / "template_annotated.yaml"
        with pytest.raises(ConfigError):
            load_config(template)

    def test_unknown_top_level_key(self, tmp_path):
        bad = dict(MINIMAL, extra_section={})
        with pytest.raises(ConfigError, match="extra_section"):
            load_config(write_config(tmp_path, bad))

    def test_unknown_section_key(self, tmp_path):
        bad = dict(MINIMAL, efficiency={"friction": 0.06})
        with pytest.raises(ConfigError, match="friction"):
            load_config(write_config(tmp_path, bad))

    def test_missing_required_field(self, tmp_path):
        bad = {"motor": {k: v for k, v in MINIMAL["motor"].items()
                         if k != "height_mm"},
               "load": MINIMAL["load"]}
        with pytest.raises(ConfigError, match="height_mm"):
            load_config(write_config(tmp_path, bad))

    def test_type_errors(self, tmp_path):
        bad = dict(MINIMAL, mass={"fastener_offset": 3})
        with pytest.raises(ConfigError, match="fastener_offset"):
            load_config(write_config(tmp_path, bad))
        bad = dict(MINIMAL, constraints={"min_teeth": 20.5})
        with pytest.raises(ConfigError, match="min_teeth"):
            load_config(write_config(tmp_path, bad))

    def test_pressure_angle_in_degrees(self, tmp_path):
        cfg = load_config(write_config(
            tmp_path, dict(MINIMAL, efficiency={"pressure_angle_deg": 25})))
        assert cfg.efficiency.pressure_angle_rad == pytest.approx(
            radians(25.0), rel=1e-15)

    def test_module_set_must_fit_constraint_range(self, tmp_path):
        bad = dict(MINIMAL, search={"module_set": [0.5, 1.3]})
        with pytest.raises(ConfigError, match="module"):
            load_config(write_config(tmp_path, bad))

    def test_bad_bins_rejected(self, tmp_path):
        bad = dict(MINIMAL, search={"bins": [[6, 5]]})
        with pytest.raises(ConfigError):
            load_config(write_config(tmp_path, bad))

    def test_architecture_subset(self, tmp_path):
        cfg = load_config(write_config(
            tmp_path, dict(MINIMAL, search={"architectures": ["isspg"]})))
        assert cfg.architectures == [Architecture.ISSPG]

    def test_bearing_table_relative_to_config(self, tmp_path):
        table = tmp_path / "bearings.csv"
        table.write_bytes(default_bearing_table_path().read_bytes())
        cfg = load_config(write_config(
            tmp_path, dict(MINIMAL, bearing_table="bearings.csv")))
        assert cfg.bearing_table_path == table
        assert load_bearing_model(cfg.bearing_table_path).table \
            == load_bearing_model().table


class TestRunSweep:
    def test_report_files_written(self, sweep_dir):
        out, document = sweep_dir
        names = {p.name for p in out.iterdir()}
        assert "sweep.json" in names
        assert "results_isspg.csv" in names
        assert "results_esspg.csv" in names
        assert "comparison.md" in names
        sheets = [n for n in names if n.startswith("dimension_sheet_")]
        assert len(sheets) == 8  # 2 ISSPG + 6 ESSPG feasible bins
        assert "dimension_sheet_isspg_6-7.json" in names

    def test_document_structure(self, sweep_dir):
        _, document = sweep_dir
        assert set(document) == {"config", "bearing_fit", "results",
                                 "comparison"}
        assert document["bearing_fit"]["mass_kg"]["r_squared"] > 0.95
        winner = document["results"]["isspg"][1]["best"]
        assert winner["design"] == {
            "arch": "isspg", "sun_teeth": 20, "planet_teeth": 40,
            "ring_teeth": 100, "module_mm": 0.5, "num_planets": 3}
        assert winner["mass_kg"]["total"] == pytest.approx(
            1.3818381711166409, rel=1e-12)
        empty = document["results"]["isspg"][2]
        assert empty["best"] is None
        assert empty["empty_reason"] == "ring_diameter"

    def test_config_echo_has_no_machine_paths(self, sweep_dir):
        _, document = sweep_dir
        echo = document["config"]
        assert echo["bearing_table"] == "packaged"
        assert "output_dir" not in echo
        assert echo["motor"]["name"] == "U12"
        assert echo["efficiency"]["pressure_angle_deg"] == pytest.approx(
            20.0)
        assert "constraints.max_teeth" in echo["applied_defaults"]

    def test_comparison_markdown(self, sweep_dir):
        out, _ = sweep_dir
        text = (out / "comparison.md").read_text()
        assert text.startswith("# Architecture comparison")
        assert "| [5, 6) |" in text
        assert "isspg" in text and "esspg" in text
        assert "ring_diameter" in text

    def test_results_csv_round_trip(self, sweep_dir):
        out, document = sweep_dir
        lines = (out / "results_isspg.csv").read_text().splitlines()
        header = lines[0].split(",")
        assert header[:4] == ["bin_lo", "bin_hi", "status", "sun_teeth"]
        assert len(lines) == 11  # header + ten bins
        assert lines[2].startswith("6.0,7.0,ok,20,40,100,0.5,3,")
        assert lines[3].startswith("7.0,8.0,empty,")

    def test_dimension_sheet_contents(self, sweep_dir):
        out, _ = sweep_dir
        sheet = json.loads(
            (out / "dimension_sheet_isspg_6-7.json").read_text())
        assert sheet["design"]["sun_teeth"] == 20
        gears = sheet["gears"]
        assert gears["sun"]["pitch_diameter_mm"] == pytest.approx(10.0)
        assert gears["ring"]["tip_diameter_mm"] == pytest.approx(49.0)
        assert sheet["bearings"]["output"]["bore_mm"] == pytest.approx(30.0)
        assert sheet["carrier"]["pin_count"] == 3
        assert sheet["casing"]["length_mm"] == pytest.approx(46.5)

    def test_single_architecture_run(self, u12_config_path, tmp_path):
        cfg = load_config(u12_config_path)
        document = run_sweep(cfg, architectures=[Architecture.ISSPG],
                             out_dir=tmp_path, workers=1)
        assert "comparison" not in document
        names = {p.name for p in tmp_path.iterdir()}
        assert "results_isspg.csv" in names
        assert "results_esspg.csv" not in names
        assert "comparison.md" not in names

    def test_dimension_sheet_rejects_infeasible(self, u12_config_path):
        cfg = load_config(u12_config_path)
        bearing = load_bearing_model()
        from gearboxopt import GearboxDesign
        bad = GearboxDesign(arch=Architecture.ISSPG, sun_teeth=20,
                            planet_teeth=50, ring_teeth=120, module_mm=0.5,
                            num_planets=3)
        evaluation = evaluate(bad, build_context(cfg, bearing))
        with pytest.raises(ValueError, match="feasible"):
            export_dimension_sheet(evaluation, cfg, bearing)


class TestCommandLine:
    def test_sweep_command(self, u12_config_path, tmp_path, capsys):
        code = main(["sweep", "--config", str(u12_config_path),
                     "--architectures", "isspg", "--out", str(tmp_path)])
        assert code == 0
        out = capsys.readouterr().out
        assert "sweep complete" in out
        assert "isspg: 2/10 bins feasible" in out

    def test_log_candidates(self, u12_config_path, tmp_path):
        code = main(["sweep", "--config", str(u12_config_path),
                     "--architectures", "isspg", "--out", str(tmp_path),
                     "--log-candidates"])
        assert code == 0
        lines = (tmp_path / "candidates_isspg.csv").read_text().splitlines()
        assert lines[0].startswith("sun_teeth,planet_teeth,ring_teeth,")
        assert len(lines) > 100

    def test_eval_command(self, u12_config_path, capsys):
        code = main(["eval", "--config", str(u12_config_path), "--design",
                     "20,40,100,0.5,3,isspg"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["feasible"] is True
        assert payload["cost"] == pytest.approx(-0.5970515307822426,
                                                rel=1e-12)

    def test_eval_infeasible_design(self, u12_config_path, capsys):
        code = main(["eval", "--config", str(u12_config_path), "--design",
                     "20,46,112,0.5,3,isspg"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["feasible"] is False
        assert payload["failure_reasons"] == ["ring_diameter"]

    def test_eval_rejects_malformed_design(self, u12_config_path, capsys):
        with pytest.raises(SystemExit):
            main(["eval", "--config", str(u12_config_path), "--design",
                  "20,40,100"])

    def test_fit_bearings_command(self, capsys):
        assert main(["fit-bearings"]) == 0
        out = capsys.readouterr().out
        assert "mass_kg" in out
        assert "R^2" in out
        assert "residual" in out

    def test_missing_config_is_a_clean_error(self, tmp_path, capsys):
        code = main(["sweep", "--config", str(tmp_path / "nope.yaml")])
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_config_error_is_a_clean_error(self, tmp_path, capsys):
        path = write_config(tmp_path, {"motor": MINIMAL["motor"]})
        code = main(["sweep", "--config", str(path)])
        assert code == 1
        err = capsys.readouterr().err
        assert "error:" in err and "load" in err
