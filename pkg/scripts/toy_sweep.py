"""Run the bundled 7x3x4 grid on the toy corpus and print the table.

Equivalent to ``tagger sweep --corpus <toy> --grid <table1_grid.txt>``.
"""

import argparse
from importlib.resources import files

from ending_tagger.corpus import load_toy_corpus, split_corpus
from ending_tagger.evaluation import parse_grid_config, render_records, render_table, sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--double-up", action="store_true")
    ap.add_argument("--records", action="store_true", help="print per-cell records instead of the table")
    args = ap.parse_args()

    grid = parse_grid_config((files("ending_tagger") / "data" / "table1_grid.txt").read_text("utf-8"))
    if args.double_up:
        from dataclasses import replace

        grid = replace(grid, doubled=True)
    train, test = split_corpus(load_toy_corpus(), 0.9, seed=args.seed)
    result = sweep(train, test, grid)
    print(render_records(result) if args.records else render_table(result), end="")


if __name__ == "__main__":
    main()
