"""Probe the pendant and isolated-vertex lemmas on random multigraphs.

Reports, for each random graph, whether the lemma's hypotheses hold and
whether the exact optima match the prediction. Useful for locating the
boundary of each statement.
"""

import argparse
import json
import random
from collections import Counter
from dataclasses import dataclass

from treelength.checks import random_multigraph
from treelength.reductions import add_isolated, add_pendant, check_artifact


@dataclass
class Config:
    samples: int = 200
    seed: int = 0
    min_n: int = 3
    max_n: int = 6
    anchor: str = "min-degree"  # or "random"


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    for _ in range(cfg.samples):
        g = random_multigraph(rng.randint(cfg.min_n, cfg.max_n), rng)
        v = min(range(g.n), key=g.degree) if cfg.anchor == "min-degree" else rng.randrange(g.n)
        pend = add_pendant(g, v)
        p = check_artifact(pend)
        step_is_deg2 = p["augmented"] == p["predicted"]
        tally[f"pendant applies={p['applies']} step=deg+2:{step_is_deg2} siblings:{p['pendant_siblings']}"] += 1
        i = check_artifact(add_isolated(pend.output_graph))
        tally[f"isolated applies={i['applies']} plus_one:{i['rooted'] == i['base'] + 1} "
              f"under_root:{i['isolated_under_root']}"] += 1
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--anchor", default="min-degree", choices=["min-degree", "random"])
    a = ap.parse_args()
    tally = run(Config(a.samples, a.seed, a.min_n, a.max_n, a.anchor))
    print(json.dumps(dict(sorted(tally.items())), indent=2))


if __name__ == "__main__":
    main()
