import csv
import json

import pytest

from wordorder.agents import Scenario
from wordorder.cli import CSV_HEADER, RunConfig, main, parse_config
from wordorder.evolution import ConfigError, build_lexicons
from wordorder.lexicon import load_lexicon

FAST = ["--generations", "6", "--population", "10", "--lexicon-size", "100",
        "--noun-lexicon-size", "60", "--verb-lexicon-size", "60"]


def test_defaults():
    cfg = parse_config([])
    assert cfg == RunConfig()
    p = cfg.params(Scenario.BASE)
    assert (p.scenario, p.population_size, p.generations, p.noise.flip_probability) == (
        Scenario.BASE, 100, 1000, 0.01)


def test_scenario_and_seed():
    cfg = parse_config(["--scenario", "case", "--seed", "7"])
    assert cfg.scenario == "case" and cfg.seed == 7
    assert cfg.params(Scenario.CASE).master_seed == 7
    assert cfg.generations == 1000


def test_bad_selection_rate(capsys):
    with pytest.raises(ConfigError) as e:
        parse_config(["--selection-rate", "1.5"])
    assert e.value.key == "selection_rate"
    assert main(["--selection-rate", "1.5"]) == 1
    assert "selection-rate" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["--population", "ten"], ["--scenario", "nope"], ["--frobnicate"],
                                  ["--noise", "2"], ["--population", "1"]])
def test_config_errors_exit_1(argv):
    assert main(argv) == 1


def test_config_file_layering(tmp_path):
    f = tmp_path / "c.json"
    f.write_text(json.dumps({"generations": 50, "seed": 3, "selection-rate": 0.5}))
    cfg = parse_config(["--config", str(f), "--seed", "9"])
    assert (cfg.generations, cfg.seed, cfg.selection_rate) == (50, 9, 0.5)


@pytest.mark.parametrize("payload,key", [({"colour": 1}, "colour"), ({"population": "x"}, "population"),
                                         ({"trials": True}, "trials")])
def test_config_file_rejects(tmp_path, payload, key):
    f = tmp_path / "c.json"
    f.write_text(json.dumps(payload))
    with pytest.raises(ConfigError) as e:
        parse_config(["--config", str(f)])
    assert e.value.key == key


def read_rows(path):
    with open(path) as fh:
        return list(csv.reader(fh))


def test_suite_outputs(tmp_path):
    out = tmp_path / "run"
    assert main(["--scenario", "all", "--out", str(out), *FAST]) == 0
    for sc in ("base", "nv", "case", "nv-case"):
        rows = read_rows(out / f"{sc}.csv")
        assert rows[0] == CSV_HEADER
        assert [int(r[0]) for r in rows[1:]] == list(range(7))
        assert float(rows[1][2]) == 1.0
    best = json.loads((out / "best_grammars.json").read_text())
    assert set(best) == {"base", "nv", "case", "nv-case"}
    assert all(abs(sum(g.values()) - 1) < 1e-9 for g in best.values())
    summary = json.loads((out / "summary.json").read_text())
    assert summary["seed"] == 0 and set(summary["final"]) == set(best)
    assert json.loads((out / "config.json").read_text())["generations"] == 6
    assert "wall_clock_seconds" in json.loads((out / "timing.json").read_text())


def test_lexicons_saved(tmp_path):
    out = tmp_path / "run"
    main(["--scenario", "nv", "--out", str(out), *FAST])
    cfg = parse_config(["--scenario", "nv", *FAST])
    lex = build_lexicons(cfg.params(Scenario.NV))
    assert load_lexicon(out / "lexicons" / "noun.txt") == lex.nouns
    assert load_lexicon(out / "lexicons" / "verb.txt") == lex.verbs


def test_reruns_are_byte_identical(tmp_path):
    out = tmp_path / "run"
    argv = ["--scenario", "all", "--out", str(out), "--seed", "5", *FAST]
    files = ["base.csv", "nv.csv", "case.csv", "nv-case.csv", "best_grammars.json",
             "summary.json", "config.json"]
    main(argv)
    first = {f: (out / f).read_bytes() for f in files}
    main(argv)
    assert first == {f: (out / f).read_bytes() for f in files}


def test_parallel_scenarios_match_sequential(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    main(["--scenario", "all", "--out", str(a), *FAST])
    main(["--scenario", "all", "--out", str(b), "--workers", "3", *FAST])
    for f in ["base.csv", "nv.csv", "case.csv", "nv-case.csv", "best_grammars.json"]:
        assert (a / f).read_bytes() == (b / f).read_bytes()


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert main(["--out", str(blocker / "sub"), *FAST]) == 2


def test_verify(tmp_path):
    assert main(["--verify-resolution", "10", "--out", str(tmp_path)]) == 0
    reports = json.loads((tmp_path / "verification.json").read_text())
    assert [r["model"] for r in reports] == ["sampling", "argmax"]
    assert all(r["pass"] and len(r["zero_set"]) == 6 and r["grid_size"] == 3003 for r in reports)
    assert reports[0]["min_nonzero_value"] == "3/25"


def test_verify_coarse(tmp_path):
    assert main(["--verify-resolution", "2", "--out", str(tmp_path)]) == 0
    assert main(["--verify-resolution", "1", "--out", str(tmp_path)]) == 1


def test_verification_failure_exit_code(tmp_path, monkeypatch):
    import wordorder.cli as cli
    from wordorder.theory import VerificationReport

    monkeypatch.setattr(cli, "verify_theorem", lambda k: [VerificationReport("sampling", k, 0)])
    assert main(["--verify-resolution", "3", "--out", str(tmp_path)]) == 3
