"""Minimum leaf-distance sums by leaf count, with the family member's value beside them.

    python3 scripts/family_table.py --max-leaves 10
"""

import argparse
import json
from dataclasses import asdict, dataclass

from treelength.canonical import FamilyParams, build_family_member
from treelength.exact import EnumerationSpec, solve_min_sigma_ll
from treelength.measures import sigma_ll
from treelength.trees import canonical_form


@dataclass
class Config:
    min_leaves: int = 3
    max_leaves: int = 10
    mode: str = "unrooted"


def run(cfg: Config) -> list[dict]:
    rows = []
    for n in range(cfg.min_leaves, cfg.max_leaves + 1):
        sol = solve_min_sigma_ll(n, EnumerationSpec(n, cfg.mode, allow_large=True))
        row = {"leaves": n, "shapes": sol.trees_evaluated, "min_sigma_ll": sol.best_value,
               "optimal_shapes": sol.optimal_count, "seconds": round(sol.wall_clock, 3)}
        if cfg.mode == "unrooted":
            member, _ = build_family_member(FamilyParams(3, 3, 2 * n - 1), contract=True)
            row["member_sigma_ll"] = sigma_ll(member)
            row["member_is_unique_optimum"] = [canonical_form(t) for t in sol.witnesses] == [canonical_form(member)]
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-leaves", type=int, default=3)
    ap.add_argument("--max-leaves", type=int, default=10)
    ap.add_argument("--mode", default="unrooted", choices=["unrooted", "rooted"])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(args.min_leaves, args.max_leaves, args.mode)
    rows = run(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    keys = list(rows[0])
    print("  ".join(f"{k:>12}" for k in keys))
    for r in rows:
        print("  ".join(f"{str(r[k]):>12}" for k in keys))


if __name__ == "__main__":
    main()
