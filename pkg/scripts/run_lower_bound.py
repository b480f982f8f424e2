#!/usr/bin/env python3
"""Play the adversary against the deterministic sink-finders.

Reports, per cube dimension and algorithm, the minimum and mean number of
distinct oracle queries over seeded trials; every trial must use at least
n queries.
"""

import argparse
import random
import statistics
from dataclasses import dataclass

from omcp.adversary import AdversaryState, random_uniform_base, run_game


@dataclass
class GameConfig:
    dims: tuple[int, ...] = (1, 2, 3, 4, 5, 6)
    trials: int = 25
    seed: int = 0
    algos: tuple[str, ...] = ("ordered-scan", "jump-with-fallback")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dims", type=int, nargs="+", default=[1, 2, 3, 4, 5, 6])
    parser.add_argument("--trials", type=int, default=25)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    config = GameConfig(tuple(args.dims), args.trials, args.seed)

    for n in config.dims:
        rng = random.Random(config.seed + n)
        counts = {algo: [] for algo in config.algos}
        for _ in range(config.trials):
            base = random_uniform_base(n, rng)
            for algo in config.algos:
                result = run_game(algo, AdversaryState(base))
                assert result.query_count >= n, (n, algo, result.query_count)
                counts[algo].append(result.query_count)
        summary = "  ".join(
            f"{algo}: min={min(c)} mean={statistics.mean(c):.1f}"
            for algo, c in counts.items()
        )
        print(f"n={n} ({config.trials} trials/algo, lower bound {n}): {summary}")


if __name__ == "__main__":
    main()
