"""Line-oriented text model files.

Only integer counts are stored; every probability is recomputed on load, so a
saved model decodes exactly like the one it came from. Sections::

    [HEADER]       key<TAB>value
    [FREQUENT]     word
    [TRANSITIONS]  prev<TAB>tag<TAB>count
    [FOF]          r<TAB>N_r
    [EMISSIONS]    kind<TAB>surface<TAB>tag<TAB>count
    [ETL]          kind<TAB>surface<TAB>tag tag ...
    [WORDTAGS]     word<TAB>tag tag ...
"""

from __future__ import annotations

from collections import defaultdict

from .config import RunConfig
from .decoder import TaggerModel
from .lexicon import ENDING, WORD, FrequentWordSet, LexicalModel, LexicalUnit
from .transition import BigramCounts, TransitionModel, freq_of_freqs

FORMAT_VERSION = 1
SECTIONS = ("HEADER", "FREQUENT", "TRANSITIONS", "FOF", "EMISSIONS", "ETL", "WORDTAGS")


class ModelFormatError(ValueError):
    pass


def dumps(model: TaggerModel) -> str:
    cfg = model.config
    lex = model.lexical
    bigrams = model.transitions.bigrams
    fof = model.transitions.fof
    kinds = lex.unit_counts()
    out = ["[HEADER]"]
    header = [
        ("format_version", FORMAT_VERSION),
        ("ending_length", cfg.ending_length),
        ("top_n", cfg.top_n),
        ("etl", cfg.etl),
        ("smoothing", cfg.smoothing),
        ("closed_class", " ".join(sorted(cfg.closed_class_tags))),
        ("doubled", int(cfg.doubled)),
        ("boundary", cfg.boundary),
        ("seed", cfg.seed),
        ("tagset", " ".join(sorted(lex.tagset))),
        ("frequent_words", len(lex.frequent)),
        ("word_units", kinds.get(WORD, 0)),
        ("ending_units", kinds.get(ENDING, 0)),
    ]
    out += [f"{k}\t{v}" for k, v in header]
    out.append("[FREQUENT]")
    out += sorted(lex.frequent.words)
    out.append("[TRANSITIONS]")
    out += [f"{p}\t{t}\t{c}" for (p, t), c in sorted(bigrams.counts.items())]
    out.append("[FOF]")
    out += [f"{r}\t{n}" for r, n in sorted(fof.table.items())]
    out.append("[EMISSIONS]")
    for (unit, tag), c in sorted(lex.emission_counts.items(), key=lambda kv: (kv[0][0].kind, kv[0][0].surface, kv[0][1])):
        out.append(f"{unit.kind}\t{unit.surface}\t{tag}\t{c}")
    out.append("[ETL]")
    for unit in sorted(lex.etl, key=lambda u: (u.kind, u.surface)):
        out.append(f"{unit.kind}\t{unit.surface}\t{' '.join(sorted(lex.etl[unit]))}")
    out.append("[WORDTAGS]")
    for word in sorted(lex.word_tags):
        out.append(f"{word}\t{' '.join(sorted(lex.word_tags[word]))}")
    return "\n".join(out) + "\n"


def _sections(text: str) -> dict[str, list[tuple[int, str]]]:
    # headers are matched in their fixed order so a word like "[ETL]" stays data
    sections: dict[str, list[tuple[int, str]]] = {}
    pending = list(SECTIONS)
    current = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if pending and line.strip() == f"[{pending[0]}]":
            current = pending.pop(0)
            sections[current] = []
        elif current is None:
            raise ModelFormatError(f"line {lineno}: expected [{SECTIONS[0]}]")
        else:
            sections[current].append((lineno, line))
    if pending:
        raise ModelFormatError(f"missing sections: {', '.join(pending)}")
    return sections


def _fields(lineno: int, line: str, n: int) -> list[str]:
    parts = line.split("\t")
    if len(parts) != n:
        raise ModelFormatError(f"line {lineno}: expected {n} tab-separated fields")
    return parts


def _tags(value: str) -> frozenset[str]:
    return frozenset(value.split())


def loads(text: str) -> TaggerModel:
    sec = _sections(text)
    try:
        header = dict(line.split("\t", 1) for _, line in sec["HEADER"])
        if int(header["format_version"]) != FORMAT_VERSION:
            raise ModelFormatError(f"unsupported format version {header['format_version']}")
        cfg = RunConfig(
            ending_length=int(header["ending_length"]),
            top_n=int(header["top_n"]),
            etl=header["etl"],
            smoothing=header["smoothing"],
            closed_class_tags=_tags(header["closed_class"]),
            doubled=bool(int(header["doubled"])),
            boundary=header["boundary"],
            seed=int(header["seed"]),
        )
        tagset = _tags(header["tagset"])

        counts = {}
        for lineno, line in sec["TRANSITIONS"]:
            p, t, c = _fields(lineno, line, 3)
            counts[p, t] = int(c)
        bigrams = BigramCounts(counts, tagset, cfg.boundary)
        fof = freq_of_freqs(bigrams)
        stored = {int(r): int(n) for r, n in (_fields(no, ln, 2) for no, ln in sec["FOF"])}
        if stored != dict(fof.table):
            raise ModelFormatError("[FOF] does not match [TRANSITIONS]")

        emissions = {}
        for lineno, line in sec["EMISSIONS"]:
            kind, surface, tag, c = _fields(lineno, line, 4)
            if kind not in (WORD, ENDING):
                raise ModelFormatError(f"line {lineno}: unknown unit kind {kind!r}")
            emissions[LexicalUnit(surface, kind), tag] = int(c)
        etl = {}
        for lineno, line in sec["ETL"]:
            kind, surface, tags = _fields(lineno, line, 3)
            etl[LexicalUnit(surface, kind)] = _tags(tags)
        derived = defaultdict(set)
        for unit, tag in emissions:
            derived[unit].add(tag)
        if {u: frozenset(ts) for u, ts in derived.items()} != etl:
            raise ModelFormatError("[ETL] does not match [EMISSIONS]")
        word_tags = {}
        for lineno, line in sec["WORDTAGS"]:
            word, tags = _fields(lineno, line, 2)
            word_tags[word] = _tags(tags)
    except (KeyError, ValueError) as exc:
        if isinstance(exc, ModelFormatError):
            raise
        raise ModelFormatError(f"malformed model file: {exc}") from exc

    frequent = FrequentWordSet(frozenset(line.strip() for _, line in sec["FREQUENT"]), cfg.top_n)
    closed = cfg.closed_class_tags
    closed_words = frozenset(w for w, ts in word_tags.items() if ts & closed)
    lex = LexicalModel(
        ending_length=cfg.ending_length,
        frequent=frequent,
        closed_class_tags=closed,
        kept_words=frequent.words | closed_words,
        emission_counts=emissions,
        etl=etl,
        etl_strategy=cfg.etl,
        tagset=tagset,
        open_class_tags=tagset - closed,
        word_tags=word_tags,
    )
    return TaggerModel(lex, TransitionModel(bigrams, cfg.smoothing, fof), cfg)


def save(model: TaggerModel, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps(model))


def load(path) -> TaggerModel:
    with open(path, encoding="utf-8") as f:
        return loads(f.read())
