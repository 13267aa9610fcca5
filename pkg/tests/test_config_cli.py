import json

import pytest

from curvepoint import cli
from curvepoint.config import ConfigError, load_plan, plan_from_dict, preset_plan
from curvepoint.experiment import run, write_csv
from curvepoint.transfer import TechniqueId


class TestPresets:
    def test_study1_shape(self):
        plan = preset_plan("study1")
        assert [t.id for t in plan.techniques] == [TechniqueId.ABSOLUTE]
        assert len(plan.positions) == 6
        assert len(plan.specs) == 6
        assert plan.repetitions == 10
        assert plan.virtual_participants == 12
        # 360 trials per participant as in the live procedure
        assert plan.records_expected == 12 * 360

    def test_study2_shape(self):
        plan = preset_plan("study2")
        assert len(plan.techniques) == 6
        assert TechniqueId.ABSOLUTE not in {t.id for t in plan.techniques}
        assert plan.records_expected == 12 * 720

    def test_published_constants_are_defaults(self):
        plan = preset_plan("study2")
        pa = next(t for t in plan.techniques if t.id is TechniqueId.PA)
        assert pa.gain_sigmoid.out_max == 1.2
        assert pa.gain_sigmoid.out_min == 0.8
        assert pa.gain_sigmoid.lambda_ == 20.0
        assert pa.gain_sigmoid.v_max == 1.0
        assert pa.gain_sigmoid.v_min == 0.1
        assert pa.gain_sigmoid.r_inf == 0.5
        assert pa.distance_adjust.a == 0.2
        assert pa.distance_adjust.cd_max_bar == 1.2
        assert pa.distance_adjust.cd_min_bar == 0.8
        size = next(t for t in plan.techniques if t.id is TechniqueId.PASIZE)
        assert size.size_sigmoid.out_max == 0.20
        assert size.size_sigmoid.out_min == 0.025

    def test_unknown_preset(self):
        with pytest.raises(ConfigError):
            preset_plan("study9")


class TestStrictParsing:
    def test_unknown_top_level_key(self):
        with pytest.raises(ConfigError, match="unknown key"):
            plan_from_dict({"master_sed": 1})

    def test_unknown_nested_key(self):
        with pytest.raises(ConfigError, match="unknown key"):
            plan_from_dict({"geometry": {"radius": 3.27}})

    def test_unknown_agent_key(self):
        with pytest.raises(ConfigError, match="unknown key"):
            plan_from_dict({"agent": {"tremor": 0.01}})

    def test_unknown_sigmoid_key(self):
        with pytest.raises(ConfigError, match="unknown key"):
            plan_from_dict({"techniques": [{"id": "PA", "gain_sigmoid": {"slope": 2}}]})

    def test_size_sigmoid_only_for_size_variants(self):
        with pytest.raises(ConfigError, match="SIZE"):
            plan_from_dict({"techniques": [{"id": "PA", "size_sigmoid": {"out_max": 0.3}}]})

    def test_overriding_published_constant(self):
        plan = plan_from_dict(
            {
                "preset": "study2",
                "techniques": [{"id": "PA", "gain_sigmoid": {"lambda": 10.0, "out_max": 2.0}}],
            }
        )
        assert plan.techniques[0].gain_sigmoid.lambda_ == 10.0
        assert plan.techniques[0].gain_sigmoid.out_max == 2.0
        assert plan.techniques[0].gain_sigmoid.out_min == 0.8  # untouched default

    def test_tasks_as_preset_name(self):
        plan = plan_from_dict({"tasks": "study2"})
        assert [s.amplitude_m for s in plan.specs] == [2.5, 7.5]

    def test_agent_override(self):
        plan = plan_from_dict({"agent": {"reaction_ticks": 4, "tremor_sd_rad": 0.001}})
        assert plan.agent.reaction_ticks == 4
        assert plan.agent.tremor_sd_rad == 0.001

    def test_invalid_value_surfaces_as_config_error(self):
        with pytest.raises(ConfigError):
            plan_from_dict({"geometry": {"radius_m": -1.0}})


class TestLoadPlan:
    def test_needs_preset_or_config(self):
        with pytest.raises(ConfigError):
            load_plan(None, None, None)

    def test_missing_file(self):
        with pytest.raises(ConfigError, match="not found"):
            load_plan("/nonexistent/config.json", None, None)

    def test_invalid_json(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{not json")
        with pytest.raises(ConfigError, match="invalid JSON"):
            load_plan(str(p), None, None)

    def test_seed_override(self, tmp_path):
        p = tmp_path / "plan.json"
        p.write_text(json.dumps({"preset": "study1", "virtual_participants": 1}))
        plan = load_plan(str(p), None, master_seed=99)
        assert plan.master_seed == 99
        assert plan.virtual_participants == 1


class TestCli:
    def _small_config(self, tmp_path):
        cfg = {
            "preset": "study1",
            "virtual_participants": 1,
            "repetitions": 1,
            "practice_trials": 0,
            "positions": [{"distance_multiple": 1.0}],
            "tasks": [{"amplitude_m": 2.5, "width_m": 0.7}],
        }
        p = tmp_path / "plan.json"
        p.write_text(json.dumps(cfg))
        return str(p)

    def test_simulate_writes_csv(self, tmp_path, capsys):
        out = tmp_path / "trials.csv"
        code = cli.main(["simulate", "--config", self._small_config(tmp_path), "--out", str(out)])
        assert code == 0
        assert "wrote 1 records" in capsys.readouterr().out
        assert out.exists()

    def test_simulate_missing_config_exits_2(self, tmp_path):
        assert cli.main(["simulate", "--config", str(tmp_path / "nope.json")]) == 2

    def test_simulate_infeasible_exits_2(self, tmp_path):
        cfg = tmp_path / "bad.json"
        cfg.write_text(json.dumps({"preset": "study1", "tasks": [{"amplitude_m": 11.0, "width_m": 0.2}]}))
        assert cli.main(["simulate", "--config", str(cfg), "--out", str(tmp_path / "t.csv")]) == 2

    def test_analyze_reports(self, tmp_path):
        records = run(load_plan(self._small_config(tmp_path), None, 3))
        trials = tmp_path / "trials.csv"
        write_csv(records * 1, str(trials))
        for report, group in (("summary", "technique"), ("fitts", "technique")):
            out = tmp_path / f"{report}.csv"
            code = cli.main(
                ["analyze", "--in", str(trials), "--report", report, "--group", group,
                 "--out", str(out)]
            )
            if report == "fitts":
                # a single task cell cannot be regressed
                assert code == 2
            else:
                assert code == 0
                assert out.read_text().count("\n") >= 2

    def test_analyze_throughput(self, tmp_path):
        cfg = {
            "preset": "study1",
            "virtual_participants": 1,
            "repetitions": 3,
            "practice_trials": 0,
            "positions": [{"distance_multiple": 1.0}],
            "tasks": [{"amplitude_m": 2.5, "width_m": 0.7}],
        }
        p = tmp_path / "plan.json"
        p.write_text(json.dumps(cfg))
        records = run(load_plan(str(p), None, 3))
        trials = tmp_path / "trials.csv"
        write_csv(records, str(trials))
        out = tmp_path / "tp.csv"
        code = cli.main(["analyze", "--in", str(trials), "--report", "throughput", "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "technique,throughput_bps"
        assert lines[1].startswith("ABSOLUTE,")

    def test_analyze_schema_mismatch_exits_2(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n")
        assert cli.main(["analyze", "--in", str(bad), "--report", "summary"]) == 2

    def test_analyze_unknown_group_exits_2(self, tmp_path):
        records = run(load_plan(self._small_config(tmp_path), None, 3))
        trials = tmp_path / "trials.csv"
        write_csv(records, str(trials))
        assert cli.main(["analyze", "--in", str(trials), "--report", "summary",
                         "--group", "colour"]) == 2

    def test_unknown_report_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            cli.main(["analyze", "--in", "x.csv", "--report", "anova"])
        assert exc.value.code == 2


class TestFigures:
    def test_figures_report_writes_views(self, tmp_path):
        import json as _json

        from curvepoint.analysis import FIGURE_VIEWS

        cfg = {
            "preset": "study1",
            "virtual_participants": 1,
            "repetitions": 2,
            "practice_trials": 0,
        }
        p = tmp_path / "plan.json"
        p.write_text(_json.dumps(cfg))
        records = run(load_plan(str(p), None, 3))
        trials = tmp_path / "trials.csv"
        write_csv(records, str(trials))
        out_dir = tmp_path / "figs"
        code = cli.main(
            ["analyze", "--in", str(trials), "--report", "figures", "--out", str(out_dir)]
        )
        assert code == 0
        for name in FIGURE_VIEWS:
            content = (out_dir / f"{name}.csv").read_text().splitlines()
            assert content[0].endswith("y,ci95_halfwidth")
            assert len(content) > 1
