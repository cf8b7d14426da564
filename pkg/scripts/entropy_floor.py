"""Mean normalized entropy of a one-hot grammar after a single mutation.

With a fraction f of every generation freshly mutated, the population's
average entropy cannot fall much below f times this value, however strong
selection is.
"""
import argparse
import random
import statistics

from wordorder.grammar import Grammar, entropy, mutate

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--draws", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    g = Grammar.one_hot(0)
    for variance in (0.0001, 0.005, 0.01, 0.02):
        h = statistics.mean(entropy(mutate(g, rng, variance)) for _ in range(args.draws))
        print(f"variance {variance:<7} mean entropy {h:.4f}  "
              f"floor at 70% mutated {0.7 * h:.4f}  at 100% {h:.4f}")
