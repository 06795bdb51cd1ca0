"""Gap between local search and the exact optimum as restarts grow.

    python3 scripts/search_benchmark.py --max-n 9 --seeds 5
"""

import argparse
import time
from dataclasses import dataclass, field

from treelength import corpus
from treelength.exact import EnumerationSpec, solve_min_tree_length
from treelength.search import SearchConfig, local_search


@dataclass
class Config:
    max_n: int = 9
    seeds: int = 5
    restarts: list[int] = field(default_factory=lambda: [1, 5, 20])
    strategy: str = "first-improvement"
    plateau: int = 0


def run(cfg: Config):
    for name, g in corpus.small(cfg.max_n).items():
        if g.n < 3:
            continue
        opt = solve_min_tree_length(g, EnumerationSpec(g.n)).best_value
        cells = []
        for r in cfg.restarts:
            t0 = time.perf_counter()
            hits = sum(
                local_search(g, SearchConfig(seed=s, restarts=r, strategy=cfg.strategy,
                                             max_plateau_steps=cfg.plateau)).value == opt
                for s in range(cfg.seeds)
            )
            cells.append(f"r={r}: {hits}/{cfg.seeds} ({time.perf_counter() - t0:.2f}s)")
        yield name, g.n, opt, cells


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--restarts", type=int, nargs="+", default=[1, 5, 20])
    ap.add_argument("--strategy", default="first-improvement", choices=["first-improvement", "steepest"])
    ap.add_argument("--plateau", type=int, default=0)
    a = ap.parse_args()
    for name, n, opt, cells in run(Config(a.max_n, a.seeds, a.restarts, a.strategy, a.plateau)):
        print(f"{name:>6} n={n} opt={opt:<5} " + "  ".join(cells))


if __name__ == "__main__":
    main()
