"""Words for the half twist Delta_{n+1}: length 6n-7, k = n(n+1)/2, s = 1."""

import argparse
from dataclasses import dataclass

from bvcalc import braids as br
from bvcalc import trees as tr
from bvcalc.diagrams import Diagram, diagram_equal
from bvcalc.metrics import metrics
from bvcalc.words import delta_word, evaluate


@dataclass
class Config:
    min_n: int = 2
    max_n: int = 8
    show_words: bool = False


def run(cfg: Config) -> bool:
    ok = True
    print(f"{'n':>3} {'letters':>7} {'6n-7':>5} {'nodes':>5} {'k':>4} {'s':>2} {'delta':>5}")
    for n in range(cfg.min_n, cfg.max_n + 1):
        w = delta_word(n)
        d = evaluate(w)
        target = Diagram(tr.all_right(n + 1), br.garside_delta(n + 1), tr.all_right(n + 1))
        m = metrics(d, with_upper=False)
        same = diagram_equal(d, target)
        row_ok = same and len(w) == 6 * n - 7 and m.crossings == n * (n + 1) // 2 and m.max_pair_crossings == 1
        ok &= row_ok
        print(f"{n:>3} {len(w):>7} {6 * n - 7:>5} {m.nodes:>5} {m.crossings:>4} "
              f"{m.max_pair_crossings:>2} {str(same):>5}")
        if cfg.show_words:
            print(f"    {w}")
    return ok


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--min-n", type=int, default=Config.min_n)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--show-words", action="store_true")
    args = p.parse_args()
    raise SystemExit(0 if run(Config(args.min_n, args.max_n, args.show_words)) else 1)


if __name__ == "__main__":
    main()
