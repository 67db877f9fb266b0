"""Random-word sweep of the word-length sandwich and growth bounds.

Writes one JSON line per word with the ``check_bounds`` record, then a
summary of how often each bound held.
"""

import argparse
import json
import random
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from bvcalc.metrics import check_bounds
from bvcalc.words import FINITE_BV, FINITE_BV_HAT, random_word

FLAGS = (
    "s_within_length",
    "nodes_within_twice_length",
    "nodes_within_root_bound",
    "crossings_within_pair_bound",
    "pair_bound_within_cubic",
    "lower_within_upper",
    "upper_within_constant",
)


@dataclass
class Config:
    samples: int = 300
    min_length: int = 1
    max_length: int = 30
    seed: int = 0
    bv_hat: bool = False
    out: Optional[str] = None


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    alphabet = FINITE_BV_HAT if cfg.bv_hat else FINITE_BV
    held = Counter()
    sink = open(cfg.out, "w") if cfg.out else None
    try:
        for _ in range(cfg.samples):
            w = random_word(rng, rng.randint(cfg.min_length, cfg.max_length), alphabet)
            rec = check_bounds(w).record()
            rec["word"] = str(w)
            if sink:
                sink.write(json.dumps(rec, sort_keys=True) + "\n")
            held.update(f for f in FLAGS if rec[f])
    finally:
        if sink:
            sink.close()
    return held


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--samples", type=int, default=Config.samples)
    p.add_argument("--min-length", type=int, default=Config.min_length)
    p.add_argument("--max-length", type=int, default=Config.max_length)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--bv-hat", action="store_true", help="sample over x0, x1, s1 only")
    p.add_argument("--out", help="JSON-lines file for per-word records")
    cfg = Config(**vars(p.parse_args()))
    held = run(cfg)
    for flag in FLAGS:
        print(f"{flag:<28} {held[flag]:>5}/{cfg.samples}")
    sys.exit(0)


if __name__ == "__main__":
    main()
