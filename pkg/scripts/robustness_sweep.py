"""Final BASE entropy/distance across hyperparameters and reproduction schemes.

    python scripts/robustness_sweep.py --seeds 3 --generations 1000
"""
import argparse
import statistics

from wordorder.agents import Scenario
from wordorder.evolution import EvolutionParams, run_experiment

VARIANTS = [{}, {"population_size": 50}, {"population_size": 200}, {"selection_rate": 0.2},
            {"selection_rate": 0.5}, {"mutation_variance": 0.005}, {"mutation_variance": 0.02},
            {"trials_per_grammar": 5}]

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--generations", type=int, default=1000)
    ap.add_argument("--scenario", default="base", choices=[s.value for s in Scenario])
    args = ap.parse_args()
    print("elitism  variant                      entropy  distance(last 100)")
    for elitism in (True, False):
        for v in VARIANTS:
            ent, dist = [], []
            for seed in range(args.seeds):
                stats = run_experiment(EvolutionParams(
                    scenario=Scenario(args.scenario), generations=args.generations,
                    master_seed=seed, elitism=elitism, **v))
                ent.append(stats[-1].avg_entropy)
                dist.append(statistics.mean(s.avg_distance for s in stats[-101:]))
            label = ", ".join(f"{k}={x}" for k, x in v.items()) or "defaults"
            print(f"{str(elitism):8s} {label:28s} {statistics.mean(ent):.3f}    {statistics.mean(dist):.3f}",
                  flush=True)
