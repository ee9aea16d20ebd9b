"""Accuracy reports, the two-proportion significance test, and (L, N, strategy) sweeps."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import RunConfig, parse_strategy
from .corpus import TaggedCorpus, vocabulary
from .decoder import DecodedSentence, TaggerModel, tag_sentences, train_tagger

log = logging.getLogger(__name__)

FULL = "full"


@dataclass(frozen=True)
class AccuracyReport:
    total_tokens: int = 0
    correct: int = 0
    seen_tokens: int = 0
    seen_correct: int = 0
    unseen_tokens: int = 0
    unseen_correct: int = 0
    fallback_tokens: int = 0

    @property
    def accuracy(self) -> float:
        return self.correct / self.total_tokens if self.total_tokens else 0.0

    @property
    def seen_accuracy(self) -> float:
        return self.seen_correct / self.seen_tokens if self.seen_tokens else math.nan

    @property
    def unseen_accuracy(self) -> float:
        return self.unseen_correct / self.unseen_tokens if self.unseen_tokens else math.nan


def score(
    gold: TaggedCorpus,
    predicted: Sequence[DecodedSentence],
    training_vocab: Iterable[str],
) -> AccuracyReport:
    """Per-token accuracy, split by whether the word occurred in training."""
    vocab = training_vocab if isinstance(training_vocab, (set, frozenset, dict)) else set(training_vocab)
    if len(gold.sentences) != len(predicted):
        raise ValueError(f"{len(gold.sentences)} gold sentences but {len(predicted)} predictions")
    total = correct = seen = seen_ok = unseen = unseen_ok = fb = 0
    for i, (g, p) in enumerate(zip(gold.sentences, predicted)):
        if len(g) != len(p.tags):
            raise ValueError(f"sentence {i}: {len(g)} gold tokens but {len(p.tags)} predicted tags")
        for tok, tag in zip(g, p.tags):
            ok = tok.tag == tag
            total += 1
            correct += ok
            if tok.word in vocab:
                seen += 1
                seen_ok += ok
            else:
                unseen += 1
                unseen_ok += ok
        if p.fallback:
            fb += len(g)
    return AccuracyReport(total, correct, seen, seen_ok, unseen, unseen_ok, fb)


def evaluate(model: TaggerModel, gold: TaggedCorpus, spans: bool = False) -> AccuracyReport:
    predicted = tag_sentences(model, gold.words(), spans)
    return score(gold, predicted, model.lexical.word_tags)


def two_proportion_test(correct1: int, correct2: int, n: int) -> tuple[float, float]:
    """Pooled two-proportion z-test for equal sample sizes; returns (z, two-sided p)."""
    if n <= 0:
        raise ValueError("n must be positive")
    if not (0 <= correct1 <= n and 0 <= correct2 <= n):
        raise ValueError("counts must lie in [0, n]")
    p1, p2 = correct1 / n, correct2 / n
    pooled = (correct1 + correct2) / (2 * n)
    var = pooled * (1 - pooled) * (2 / n)
    if var == 0:
        return 0.0, 1.0
    z = (p1 - p2) / math.sqrt(var)
    return z, math.erfc(abs(z) / math.sqrt(2))


# -- sweeps ---------------------------------------------------------------


@dataclass(frozen=True)
class GridConfig:
    n_values: tuple = (0,)  # ints, or FULL for the whole training vocabulary
    l_values: tuple[int, ...] = (3,)
    strategies: tuple[str, ...] = ("unit",)
    closed_class_tags: frozenset[str] = frozenset()
    doubled: bool = False
    boundary: str = RunConfig.boundary

    def __post_init__(self):
        if not self.n_values or not self.l_values or not self.strategies:
            raise ValueError("every grid axis needs at least one value")
        for s in self.strategies:
            parse_strategy(s)


def parse_grid_config(text: str) -> GridConfig:
    """Parse ``key = value, value`` lines (keys n_values, l_values, strategies)."""
    values: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition("=")
        if not sep:
            raise ValueError(f"grid config line {lineno}: expected key = values")
        values[key.strip()] = [v for v in rest.replace(",", " ").split() if v]
    unknown = set(values) - {"n_values", "l_values", "strategies", "closed_class", "double_up", "boundary"}
    if unknown:
        raise ValueError(f"unknown grid config keys: {sorted(unknown)}")
    for key in ("n_values", "l_values", "strategies"):
        if not values.get(key):
            raise ValueError(f"grid config needs a non-empty {key}")
    n_values = tuple(FULL if v.lower() in (FULL, "all") else int(v) for v in values["n_values"])
    kwargs = {}
    if "closed_class" in values:
        kwargs["closed_class_tags"] = frozenset(values["closed_class"])
    if "double_up" in values:
        kwargs["doubled"] = values["double_up"][0].lower() in ("1", "true", "yes", "on")
    if "boundary" in values:
        kwargs["boundary"] = values["boundary"][0]
    return GridConfig(
        n_values=n_values,
        l_values=tuple(int(v) for v in values["l_values"]),
        strategies=tuple(values["strategies"]),
        **kwargs,
    )


@dataclass
class SweepGrid:
    n_values: tuple
    l_values: tuple[int, ...]
    strategies: tuple[str, ...]
    cells: dict = field(default_factory=dict)  # (L, strategy, N) -> AccuracyReport
    errors: dict = field(default_factory=dict)  # (L, strategy, N) -> message

    def keys(self):
        for L in self.l_values:
            for s in self.strategies:
                for n in self.n_values:
                    yield L, s, n

    @property
    def failed(self) -> bool:
        return bool(self.errors)


def _resolve_n(n, vocab_size: int) -> int:
    return vocab_size if n == FULL else int(n)


def sweep(train: TaggedCorpus, test: TaggedCorpus, grid: GridConfig, spans: bool = False) -> SweepGrid:
    """Train and score one tagger per (L, strategy, N) cell.

    A failing cell is recorded in ``errors`` and the sweep carries on.
    """
    vocab_size = len(vocabulary(train))
    result = SweepGrid(grid.n_values, grid.l_values, grid.strategies)
    test_words = test.words()
    shared: dict = {}
    for key in result.keys():
        L, strategy, n = key
        try:
            etl, smoothing = parse_strategy(strategy)
            config = RunConfig(
                ending_length=L,
                top_n=_resolve_n(n, vocab_size),
                etl=etl,
                smoothing=smoothing,
                closed_class_tags=grid.closed_class_tags,
                doubled=grid.doubled,
                boundary=grid.boundary,
            )
            model = train_tagger(train, config, shared)
            predicted = tag_sentences(model, test_words, spans)
            result.cells[key] = score(test, predicted, model.lexical.word_tags)
        except Exception as exc:  # one bad cell must not sink the sweep
            log.warning("cell L=%s %s N=%s failed: %s", L, strategy, n, exc)
            result.errors[key] = str(exc)
    return result


def _pct(x: float) -> str:
    return f"{100 * x:.2f}"


def _frac(x: float) -> str:
    return "NA" if math.isnan(x) else f"{x:.4f}"


def render_table(grid: SweepGrid) -> str:
    """Grid as TSV: strategy rows grouped under each ending length, one column per N."""
    lines = ["\t".join(["Experiment", *(str(n) for n in grid.n_values)])]
    for L in grid.l_values:
        lines.append(f"{L} letter endings" + "\t" * len(grid.n_values))
        for s in grid.strategies:
            row = [s]
            for n in grid.n_values:
                key = (L, s, n)
                row.append("ERROR" if key in grid.errors else _pct(grid.cells[key].accuracy))
            lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


def record_line(L, strategy, n, report: AccuracyReport | None) -> str:
    if report is None:
        return f"{L}\t{strategy}\t{n}\tERROR\tERROR\tERROR"
    return "\t".join(
        [str(L), strategy, str(n), _frac(report.accuracy), _frac(report.seen_accuracy), _frac(report.unseen_accuracy)]
    )


def render_records(grid: SweepGrid) -> str:
    return "".join(record_line(*key, grid.cells.get(key)) + "\n" for key in grid.keys())
