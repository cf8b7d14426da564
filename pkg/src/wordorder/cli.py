"""Command-line runner for the four-scenario suite and the theorem check.

Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from wordorder.agents import Scenario
from wordorder.channel import NoiseParams
from wordorder.core import ORDER_NAMES
from wordorder.evolution import ConfigError, EvolutionParams, GenerationStats, build_lexicons, run_experiment
from wordorder.lexicon import save_lexicon
from wordorder.theory import verify_theorem

log = logging.getLogger("wordorder")

EXIT_OK, EXIT_CONFIG, EXIT_IO, EXIT_VERIFY = 0, 1, 2, 3

CSV_HEADER = ["generation", "avg_distance", "avg_entropy", "best_distance", "best_entropy"] + [
    f"p_{name.lower()}" for name in ORDER_NAMES]

ALL_SCENARIOS = [s.value for s in Scenario]

# RunConfig field -> EvolutionParams field, where the names differ
_PARAM_NAMES = {"population": "population_size", "trials": "trials_per_grammar",
                "seed": "master_seed"}


@dataclass(frozen=True)
class RunConfig:
    scenario: str = "base"
    generations: int = 1000
    population: int = 100
    selection_rate: float = 0.3
    mutation_variance: float = 0.01
    noise: float = 0.01
    trials: int = 1
    elitism: bool = True
    lexicon_size: int = 1000
    noun_lexicon_size: int = 500
    verb_lexicon_size: int = 500
    word_length: int = 3
    seed: int = 0
    out: str = "results"
    verify_resolution: int | None = None
    workers: int = 1

    @property
    def scenarios(self) -> list[Scenario]:
        if self.scenario == "all":
            return list(Scenario)
        return [Scenario(self.scenario)]

    def params(self, scenario: Scenario) -> EvolutionParams:
        kw = {}
        for f in fields(EvolutionParams):
            src = next((k for k, v in _PARAM_NAMES.items() if v == f.name), f.name)
            if hasattr(self, src) and src not in ("noise", "scenario"):
                kw[f.name] = getattr(self, src)
        return EvolutionParams(noise=NoiseParams(self.noise), scenario=scenario, **kw)

    def validate(self) -> None:
        if self.scenario not in ALL_SCENARIOS + ["all"]:
            raise ConfigError("scenario", f"unknown scenario {self.scenario!r}")
        if not 0 <= self.noise <= 1:
            raise ConfigError("noise", f"must be in [0, 1], got {self.noise}")
        if self.workers < 1:
            raise ConfigError("workers", f"must be >= 1, got {self.workers}")
        if self.verify_resolution is not None and self.verify_resolution < 2:
            raise ConfigError("verify_resolution",
                              f"must be >= 2, got {self.verify_resolution}")
        for s in self.scenarios:
            try:
                self.params(s)
            except ConfigError as e:
                inverse = {v: k for k, v in _PARAM_NAMES.items()}
                raise ConfigError(inverse.get(e.key, e.key), e.message) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError("argv", message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wordorder", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="JSON file of settings; flags override it")
    p.add_argument("--scenario", choices=ALL_SCENARIOS + ["all"])
    p.add_argument("--generations", type=int)
    p.add_argument("--population", type=int)
    p.add_argument("--selection-rate", type=float)
    p.add_argument("--mutation-variance", type=float)
    p.add_argument("--noise", type=float, help="per-letter flip probability")
    p.add_argument("--trials", type=int, help="communication trials per grammar per generation")
    p.add_argument("--elitism", action=argparse.BooleanOptionalAction,
                   help="carry survivors over unmutated (default on)")
    p.add_argument("--lexicon-size", type=int)
    p.add_argument("--noun-lexicon-size", type=int)
    p.add_argument("--verb-lexicon-size", type=int)
    p.add_argument("--word-length", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="output directory")
    p.add_argument("--verify-resolution", type=int,
                   help="run the exhaustive optimality check at this grid resolution instead of simulating")
    p.add_argument("--workers", type=int, help="run scenarios in parallel processes")
    return p


def _load_file(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError("config", f"no such file {path}") from None
    except json.JSONDecodeError as e:
        raise ConfigError("config", f"invalid JSON: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError("config", "top level must be an object")
    known = {f.name for f in fields(RunConfig)}
    out = {}
    for key, value in data.items():
        name = key.replace("-", "_")
        if name not in known:
            raise ConfigError(key, "unknown configuration key")
        out[name] = value
    return out


def parse_config(argv=None) -> RunConfig:
    """Resolve defaults, then the config file, then command-line flags."""
    args = vars(build_parser().parse_args(argv))
    values = _load_file(args.pop("config")) if args.get("config") else {}
    values.update({k: v for k, v in args.items() if v is not None})
    cfg = RunConfig(**values)
    types = {f.name: f.type for f in fields(RunConfig)}
    for name, value in asdict(cfg).items():
        expected = {"int": int, "float": (int, float), "bool": bool, "str": str}.get(types[name])
        if expected and value is not None and (
                not isinstance(value, expected) or (expected is int and isinstance(value, bool))):
            raise ConfigError(name, f"malformed value {value!r}")
    cfg = replace(cfg, selection_rate=float(cfg.selection_rate),
                  mutation_variance=float(cfg.mutation_variance), noise=float(cfg.noise))
    cfg.validate()
    return cfg


def write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def write_json(path: Path, obj) -> None:
    write_atomic(path, json.dumps(obj, indent=2) + "\n")


def stats_csv(stats: list[GenerationStats]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for s in stats:
        w.writerow([s.generation, repr(s.avg_distance), repr(s.avg_entropy),
                    repr(s.best_distance), repr(s.best_entropy),
                    *(repr(float(x)) for x in s.best_grammar.p)])
    return buf.getvalue()


def final_stats(s: GenerationStats) -> dict:
    return {
        "generation": s.generation,
        "avg_distance": s.avg_distance,
        "avg_entropy": s.avg_entropy,
        "best_distance": s.best_distance,
        "best_entropy": s.best_entropy,
        "best_grammar": s.best_grammar.as_dict(),
    }


def prepare_output(out: str) -> Path:
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    probe = path / ".write-test"
    probe.write_text("")
    probe.unlink()
    return path


def run_figures_suite(cfg: RunConfig) -> dict[str, list[GenerationStats]]:
    """Run every configured scenario and write CSV/JSON artifacts into ``cfg.out``."""
    out = prepare_output(cfg.out)
    write_json(out / "config.json", asdict(cfg))
    scenarios = cfg.scenarios
    started = time.perf_counter()
    if cfg.workers > 1 and len(scenarios) > 1:
        with ProcessPoolExecutor(max_workers=min(cfg.workers, len(scenarios))) as pool:
            futures = [pool.submit(run_experiment, cfg.params(s)) for s in scenarios]
            results = {s.value: f.result() for s, f in zip(scenarios, futures)}
    else:
        results = {}
        for s in scenarios:
            log.info("running %s", s.value)
            results[s.value] = run_experiment(cfg.params(s))
    elapsed = time.perf_counter() - started

    lexdir = out / "lexicons"
    lexdir.mkdir(exist_ok=True)
    for s in scenarios:
        lex = build_lexicons(cfg.params(s))
        for l in (lex.unified, lex.nouns, lex.verbs):
            if l is not None:
                save_lexicon(l, lexdir / f"{l.kind.value}.txt")
    for name, stats in results.items():
        write_atomic(out / f"{name}.csv", stats_csv(stats))
    write_json(out / "best_grammars.json",
               {name: stats[-1].best_grammar.as_dict() for name, stats in results.items()})
    write_json(out / "summary.json", {
        "seed": cfg.seed,
        "config": asdict(cfg),
        "final": {name: final_stats(stats[-1]) for name, stats in results.items()},
    })
    # wall-clock lives apart from summary.json so reruns stay byte-identical
    write_json(out / "timing.json", {"wall_clock_seconds": elapsed})
    return results


def run_verify(cfg: RunConfig) -> bool:
    out = prepare_output(cfg.out)
    reports = verify_theorem(cfg.verify_resolution)
    write_json(out / "verification.json", [r.to_json() for r in reports])
    for r in reports:
        log.info("%s hearer: %s (zero set %d of %d, min nonzero %s)", r.model,
                 "PASS" if r.passed else "FAIL", len(r.zero_set), r.grid_size,
                 r.min_nonzero_value)
    return all(r.passed for r in reports)


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    try:
        cfg = parse_config(argv)
    except ConfigError as e:
        print(f"wordorder: config error: {e.key.replace('_', '-')}: {e.message}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if cfg.verify_resolution is not None:
            return EXIT_OK if run_verify(cfg) else EXIT_VERIFY
        run_figures_suite(cfg)
    except OSError as e:
        print(f"wordorder: I/O error: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
