"""Node and crossing counts of (x1 t1)^(2n) against 2n+3 and 2n(n+2)^2."""

import argparse
import json
from dataclasses import asdict, dataclass

from bvcalc.metrics import xtau_experiment


@dataclass
class Config:
    max_n: int = 6
    json: bool = False


def run(cfg: Config) -> bool:
    rows = xtau_experiment(cfg.max_n)
    if cfg.json:
        print(json.dumps([dict(asdict(r), passed=r.passed) for r in rows], sort_keys=True))
    else:
        print(f"{'n':>3} {'length':>6} {'nodes':>6} {'2n+3':>6} {'crossings':>10} {'2n(n+2)^2':>10}")
        for r in rows:
            print(f"{r.n:>3} {r.word_length:>6} {r.nodes:>6} {2 * r.n + 3:>6} "
                  f"{r.crossings:>10} {2 * r.n * (r.n + 2) ** 2:>10}")
    return all(r.passed for r in rows)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    raise SystemExit(0 if run(Config(args.max_n, args.json)) else 1)


if __name__ == "__main__":
    main()
