"""``bvcalc``: command-line calculator for BV.

Exit status: 0 success, 1 domain error (bad word, bad index), 2 a negative
answer to a check (``eq`` unequal, a relator failing, a Garside or xtau row
failing), 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import braids as br
from . import trees as tr
from .diagrams import Diagram, diagram_equal, identity_diagram, invert, multiply, reduce, stack
from .metrics import metrics, xtau_experiment
from .relators import verify_all
from .render import render_svg
from .words import delta_word, evaluate, generator_diagram, parse, synthesize_word

EX_OK, EX_DOMAIN, EX_FALSE, EX_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        raise UsageError(message)


def dumps(record) -> str:
    return json.dumps(record, sort_keys=True)


def diagram_record(d: Diagram) -> dict:
    return {
        "top_tree": str(d.top),
        "braid": str(d.braid),
        "bottom_tree": str(d.bottom),
        "strands": d.strands,
        "nodes": d.carets,
    }


def _emit_diagram(d: Diagram, as_json: bool) -> None:
    print(dumps(diagram_record(d)) if as_json else d.serialize())


def _cmd_eval(args) -> int:
    _emit_diagram(evaluate(parse(args.word)), args.json)
    return EX_OK


def _cmd_mul(args) -> int:
    _emit_diagram(multiply(evaluate(parse(args.word1)), evaluate(parse(args.word2))), args.json)
    return EX_OK


def _cmd_inv(args) -> int:
    _emit_diagram(invert(evaluate(parse(args.word))), args.json)
    return EX_OK


def _cmd_eq(args) -> int:
    same = diagram_equal(evaluate(parse(args.word1)), evaluate(parse(args.word2)))
    if args.json:
        print(dumps({"equal": same}))
    else:
        print("EQUAL" if same else "NOT EQUAL")
    return EX_OK if same else EX_FALSE


def _cmd_reduce(args) -> int:
    # stack the generator diagrams without intermediate reduction
    d = identity_diagram()
    for a in parse(args.word).letters:
        d = stack(d, generator_diagram(a))
    r = reduce(d)
    if args.json:
        rec = diagram_record(r)
        rec["unreduced_nodes"] = d.carets
        print(dumps(rec))
    else:
        print(f"# unreduced: {d.carets} carets, {len(d.braid)} crossings")
        print(r.serialize())
    return EX_OK


def _cmd_metrics(args) -> int:
    rec = metrics(evaluate(parse(args.word))).record()
    if args.json:
        print(dumps(rec))
    else:
        for key, value in rec.items():
            print(f"{key}: {value}")
    return EX_OK


def _cmd_word(args) -> int:
    w = synthesize_word(evaluate(parse(args.word)))
    if args.json:
        print(dumps({"word": str(w), "letters": len(w)}))
    else:
        print(str(w))
    return EX_OK


def _cmd_garside(args) -> int:
    n = args.n
    w = delta_word(n)
    target = Diagram(tr.all_right(n + 1), br.garside_delta(n + 1), tr.all_right(n + 1))
    ok = diagram_equal(evaluate(w), target)
    if args.json:
        print(dumps({"n": n, "word": str(w), "letters": len(w), "equals_delta": ok}))
    else:
        print(str(w))
        print(f"# {len(w)} letters; evaluates to Delta_{n + 1}: {ok}")
    return EX_OK if ok else EX_FALSE


def _cmd_xtau(args) -> int:
    rows = xtau_experiment(args.n)
    if args.json:
        print(dumps([
            {"n": r.n, "word_length": r.word_length, "nodes": r.nodes,
             "crossings": r.crossings, "passed": r.passed}
            for r in rows
        ]))
    else:
        print("n\tlength\tnodes\tcrossings\tcheck")
        for r in rows:
            print(f"{r.n}\t{r.word_length}\t{r.nodes}\t{r.crossings}\t{'pass' if r.passed else 'fail'}")
    return EX_OK if all(r.passed for r in rows) else EX_FALSE


def _cmd_relators(args) -> int:
    report = verify_all(args.max_index)
    print(str(report))
    return EX_OK if report.passed else EX_FALSE


def _cmd_render(args) -> int:
    d = evaluate(parse(args.word))
    render_svg(d, args.out)
    print(args.out)
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bvcalc", description="Exact calculator for braided Thompson groups.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, *words, help):
        p = sub.add_parser(name, help=help)
        for w in words:
            p.add_argument(w)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("eval", _cmd_eval, "word", help="reduced diagram of a word")
    add("mul", _cmd_mul, "word1", "word2", help="product of two words")
    add("inv", _cmd_inv, "word", help="inverse of a word")
    add("eq", _cmd_eq, "word1", "word2", help="decide equality in BV")
    add("reduce", _cmd_reduce, "word", help="reduce the stacked generator diagrams")
    add("metrics", _cmd_metrics, "word", help="n, k, s and bounds")
    add("word", _cmd_word, "word", help="finite-generator word for the element")
    p = add("garside", _cmd_garside, help="word for the half twist on N+1 strands")
    p.add_argument("n", type=int)
    p = add("xtau", _cmd_xtau, help="node and crossing counts of (x1 t1)^(2n)")
    p.add_argument("n", type=int)
    p = add("relators", _cmd_relators, help="check the presentation")
    p.add_argument("--max-index", type=int, default=8)
    p = add("render", _cmd_render, "word", help="write an SVG picture")
    p.add_argument("--out", required=True)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        print(f"bvcalc: {err}", file=sys.stderr)
        return EX_USAGE
    if args.command is None:
        parser.print_help(sys.stderr)
        return EX_USAGE
    try:
        return args.func(args)
    except (ValueError, IndexError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EX_DOMAIN
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EX_DOMAIN


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
