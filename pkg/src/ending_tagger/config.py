from __future__ import annotations

from dataclasses import dataclass, field, replace

from .lexicon import ETL_STRATEGIES, RELEXED, UNIT
from .transition import ADD_ONE, DEFAULT_BOUNDARY, GOOD_TURING, MLE, smoothing_policy

_SHORT = {MLE: "mle", ADD_ONE: "addone", GOOD_TURING: "gt"}


@dataclass(frozen=True)
class RunConfig:
    """Everything that determines a trained tagger."""

    ending_length: int = 3
    top_n: int = 0
    etl: str = UNIT
    smoothing: str = MLE
    closed_class_tags: frozenset[str] = field(default_factory=frozenset)
    doubled: bool = False
    boundary: str = DEFAULT_BOUNDARY
    seed: int = 0

    def __post_init__(self):
        if self.ending_length < 1:
            raise ValueError(f"ending length must be >= 1, got {self.ending_length}")
        if self.top_n < 0:
            raise ValueError(f"top-N must be >= 0, got {self.top_n}")
        if self.etl not in ETL_STRATEGIES:
            raise ValueError(f"unknown ETL strategy {self.etl!r}")
        object.__setattr__(self, "smoothing", smoothing_policy(self.smoothing))
        object.__setattr__(self, "closed_class_tags", frozenset(self.closed_class_tags))
        if not self.boundary or any(c.isspace() for c in self.boundary):
            raise ValueError(f"invalid boundary tag {self.boundary!r}")

    @property
    def strategy(self) -> str:
        return strategy_label(self.etl, self.smoothing)

    def with_(self, **changes) -> RunConfig:
        return replace(self, **changes)


def strategy_label(etl: str, smoothing: str) -> str:
    """``unit``, ``unit+gt``, ``relexed+addone`` ... (MLE is implicit)."""
    smoothing = smoothing_policy(smoothing)
    if smoothing == MLE:
        return etl
    return f"{etl}+{_SHORT[smoothing]}"


def parse_strategy(label: str) -> tuple[str, str]:
    """Inverse of :func:`strategy_label`; accepts ``relaxed`` as a synonym."""
    etl, _, smooth = label.strip().lower().partition("+")
    etl = etl.strip()
    if etl == "relaxed":
        etl = RELEXED
    if etl not in ETL_STRATEGIES:
        raise ValueError(f"unknown ETL strategy in {label!r}")
    return etl, smoothing_policy(smooth.strip() or MLE)
