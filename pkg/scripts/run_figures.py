"""Run all four scenarios at default settings and write the figure data.

    python scripts/run_figures.py --out results/figures --seed 0

Extra flags are passed through to the ``wordorder`` CLI.
"""
import sys

from wordorder.cli import main

if __name__ == "__main__":
    sys.exit(main(["--scenario", "all", *sys.argv[1:]]))
