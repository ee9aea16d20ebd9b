"""``tagger`` command line: train, tag, eval, sweep, convert.

Exit codes: 0 success, 1 usage error, 2 data error, 3 partial sweep failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

from . import modelfile
from .config import RunConfig
from .corpus import (
    CorpusError,
    convert_inline,
    parse_words,
    read_corpus,
    read_tag_list,
    split_corpus,
)
from .decoder import tag_sentences, train_tagger
from .evaluation import (
    evaluate,
    parse_grid_config,
    record_line,
    render_records,
    render_table,
    sweep,
)
from .transition import DEFAULT_BOUNDARY

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_PARTIAL = 0, 1, 2, 3

log = logging.getLogger("ending_tagger")


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_model_flags(p):
    p.add_argument("--ending-length", type=int, default=3, metavar="L")
    p.add_argument("--top-n", type=int, default=0, metavar="N")
    p.add_argument("--etl", choices=["unit", "relexed"], default="unit")
    p.add_argument("--smoothing", choices=["mle", "addone", "gt"], default="mle")
    p.add_argument("--closed-class", metavar="FILE", help="closed-class tags, one per line")
    p.add_argument("--double-up", action="store_true", help="also count a fully truncated corpus copy")
    p.add_argument("--boundary", default=DEFAULT_BOUNDARY, metavar="TAG")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tagger", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("train", help="train a model from a tagged corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--model", required=True, help="output model file")
    _add_model_flags(p)

    p = sub.add_parser("tag", help="tag one-word-per-line text")
    p.add_argument("--model", required=True)
    p.add_argument("--input", help="input file (default: stdin)")
    p.add_argument("--spans", action="store_true", help="decode span by span")

    p = sub.add_parser("eval", help="score a model on a gold corpus")
    p.add_argument("--model", required=True)
    p.add_argument("--gold", "--corpus", dest="gold", required=True)

    p = sub.add_parser("sweep", help="run an (L, N, strategy) grid")
    p.add_argument("--train", help="training corpus")
    p.add_argument("--test", help="test corpus")
    p.add_argument("--corpus", help="single corpus to split with --seed instead of --train/--test")
    p.add_argument("--train-fraction", type=float, default=0.9)
    p.add_argument("--grid", required=True, help="grid config file")
    p.add_argument("--output", help="table output file (default: stdout)")
    p.add_argument("--records", help="per-cell record file (default: <output>.cells.tsv)")
    p.add_argument("--closed-class", metavar="FILE")
    p.add_argument("--double-up", action="store_true")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("convert", help="convert word_TAG inline text to canonical TSV")
    p.add_argument("--input", help="inline corpus (default: stdin)")
    p.add_argument("input_path", nargs="?", help=argparse.SUPPRESS)
    return parser


def _read_text(path) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from exc


def _load_corpus(path):
    try:
        return read_corpus(path)
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from exc
    except CorpusError as exc:
        raise DataError(f"{path}: {exc}") from exc


def _load_model(path):
    try:
        return modelfile.load(path)
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from exc
    except ValueError as exc:
        raise DataError(f"{path}: {exc}") from exc


def _closed_tags(path):
    if not path:
        return frozenset()
    try:
        return read_tag_list(path)
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from exc


def cmd_train(args) -> int:
    corpus = _load_corpus(args.corpus)
    config = RunConfig(
        ending_length=args.ending_length,
        top_n=args.top_n,
        etl=args.etl,
        smoothing=args.smoothing,
        closed_class_tags=_closed_tags(args.closed_class),
        doubled=args.double_up,
        boundary=args.boundary,
        seed=args.seed,
    )
    try:
        model = train_tagger(corpus, config)
    except ValueError as exc:
        raise DataError(str(exc)) from exc
    modelfile.save(model, args.model)
    kinds = model.lexical.unit_counts()
    print(f"tokens\t{corpus.n_tokens}")
    print(f"sentences\t{len(corpus)}")
    print(f"frequent_words\t{len(model.lexical.frequent)}")
    print(f"word_units\t{kinds.get('word', 0)}")
    print(f"ending_units\t{kinds.get('ending', 0)}")
    return EXIT_OK


def cmd_tag(args) -> int:
    model = _load_model(args.model)
    sentences = parse_words(_read_text(args.input))
    out = sys.stdout
    for i, decoded in enumerate(tag_sentences(model, sentences, args.spans)):
        if i:
            out.write("\n")
        if decoded.fallback:
            print(f"sentence {i + 1}: every path has zero probability; used emission fallback", file=sys.stderr)
        for w, t in zip(decoded.words, decoded.tags):
            out.write(f"{w}\t{t}\n")
    return EXIT_OK


def cmd_eval(args) -> int:
    model = _load_model(args.model)
    gold = _load_corpus(args.gold)
    report = evaluate(model, gold)
    cfg = model.config

    def fmt(x):
        return "NA" if x != x else f"{x:.4f}"

    print(f"overall\t{fmt(report.accuracy)}\t{report.correct}/{report.total_tokens}")
    print(f"seen\t{fmt(report.seen_accuracy)}\t{report.seen_correct}/{report.seen_tokens}")
    print(f"unseen\t{fmt(report.unseen_accuracy)}\t{report.unseen_correct}/{report.unseen_tokens}")
    print(f"fallback_tokens\t{report.fallback_tokens}")
    print(record_line(cfg.ending_length, cfg.strategy, cfg.top_n, report))
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        grid = parse_grid_config(_read_text(args.grid))
    except ValueError as exc:
        raise DataError(f"{args.grid}: {exc}") from exc
    changes = {}
    if args.closed_class:
        changes["closed_class_tags"] = _closed_tags(args.closed_class)
    if args.double_up:
        changes["doubled"] = True
    if changes:
        grid = replace(grid, **changes)

    if args.corpus:
        try:
            train, test = split_corpus(_load_corpus(args.corpus), args.train_fraction, args.seed)
        except ValueError as exc:
            raise DataError(str(exc)) from exc
    elif args.train and args.test:
        train, test = _load_corpus(args.train), _load_corpus(args.test)
    else:
        print("tagger sweep: give --train and --test, or --corpus", file=sys.stderr)
        return EXIT_USAGE

    result = sweep(train, test, grid)
    table, records = render_table(result), render_records(result)
    if args.output:
        Path(args.output).write_text(table, encoding="utf-8")
        rec_path = args.records or str(Path(args.output).with_suffix(".cells.tsv"))
        Path(rec_path).write_text(records, encoding="utf-8")
    else:
        sys.stdout.write(table)
        if args.records:
            Path(args.records).write_text(records, encoding="utf-8")
    for key, msg in result.errors.items():
        print(f"cell {key}: {msg}", file=sys.stderr)
    return EXIT_PARTIAL if result.failed else EXIT_OK


def cmd_convert(args) -> int:
    text = _read_text(args.input or args.input_path)
    try:
        sys.stdout.write(convert_inline(text))
    except CorpusError as exc:
        raise DataError(str(exc)) from exc
    return EXIT_OK


COMMANDS = {
    "train": cmd_train,
    "tag": cmd_tag,
    "eval": cmd_eval,
    "sweep": cmd_sweep,
    "convert": cmd_convert,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except DataError as exc:
        print(f"tagger {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"tagger {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
