"""Regenerate src/ending_tagger/data/toy_corpus.tsv.

A template grammar over a small English vocabulary with LOB-style tags. The
output is fixed by the seed; rerunning must reproduce the committed file.
"""

import argparse
import random
from pathlib import Path

NOUNS = """cat dog time galaxy tagger process approach station teacher garden river question
letter engine window nation farmer walk book corpus model parser ending reader table chair
paper doctor village market forest mountain student worker singer painter camera bottle
kitchen office island bridge valley harbour church castle meadow lantern basket ribbon
pocket button carpet blanket hammer ladder pillow kettle saddle tunnel cottage orchard
pattern planet signal method theory sample figure symbol record anchor""".split()
VERBS = """jump walk tag open count want play follow climb visit answer mention collect
select repeat protect paint print fold pull push finish polish wash watch kick lift
guard shout greet borrow clean order offer remember""".split()
ADJECTIVES = """precise quick great small large difficult statistical general careful useful
natural common brown old new musical bright narrow gentle curious famous modest honest
quiet rapid formal""".split()
IRREGULAR_VBD = ["ran", "saw", "went", "made", "found", "took", "gave", "sat"]
IRREGULAR_VBZ = ["runs", "sees", "goes", "makes", "finds", "takes", "gives", "sits"]


def _plural(w):
    return w + "es" if w.endswith(("s", "sh", "ch", "x")) else w[:-1] + "ies" if w.endswith("y") and w[-2] not in "aeiou" else w + "s"


def _past(w):
    return w + "d" if w.endswith("e") else w + "ed"


def _adverb(w):
    return w[:-1] + "y" if w.endswith("le") else w + "ly"


WORDS = {
    "ATI": ["the"],
    "AT": ["a", "an"],
    "DT": ["this", "that", "each"],
    "DTS": ["these", "those"],
    "NN": NOUNS,
    "NNS": [_plural(w) for w in NOUNS],
    "VBD": IRREGULAR_VBD + [_past(w) for w in VERBS],
    "VBZ": IRREGULAR_VBZ + [_plural(w) for w in VERBS],
    "VB": ["run", "see", "go", "make", "find", "take"] + VERBS,
    "JJ": ADJECTIVES,
    "RB": ["often", "never", "soon"] + [_adverb(w) for w in ADJECTIVES],
    "IN": ["of", "in", "on", "with", "from", "towards", "under", "by"],
    "PP3A": ["he", "she", "it"],
    "PP3AS": ["they"],
    "CC": ["and", "but", "or"],
    "CS": ["that", "because", "while"],
    "MD": ["will", "can", "may", "must"],
    "BEDZ": ["was"],
    "BEZ": ["is"],
    ".": ["."],
    ",": [","],
}


def pick(rng, tag):
    words = WORDS[tag]
    # Zipf-like: early entries are common, the tail is rare
    weights = [1.0 / (i + 1) for i in range(len(words))]
    return rng.choices(words, weights)[0], tag


def noun_phrase(rng, plural=None):
    if plural is None:
        plural = rng.random() < 0.35
    out = []
    if plural:
        if rng.random() < 0.6:
            out.append(pick(rng, rng.choice(["ATI", "DTS"])))
    else:
        out.append(pick(rng, rng.choice(["ATI", "ATI", "AT", "DT"])))
    if rng.random() < 0.4:
        out.append(pick(rng, "JJ"))
    out.append(pick(rng, "NNS" if plural else "NN"))
    if rng.random() < 0.2:
        out.append(pick(rng, "IN"))
        out.extend(noun_phrase(rng)[0])
    return out, plural


def subject(rng):
    if rng.random() < 0.3:
        tag = rng.choice(["PP3A", "PP3A", "PP3AS"])
        return [pick(rng, tag)], tag == "PP3AS"
    return noun_phrase(rng)


def verb_phrase(rng, plural):
    r = rng.random()
    out = []
    if rng.random() < 0.15:
        out.append(pick(rng, "RB"))
    if r < 0.35:
        out.append(pick(rng, "VBD"))
    elif r < 0.6 and not plural:
        out.append(pick(rng, "VBZ"))
    elif r < 0.8:
        out.append(pick(rng, "MD"))
        out.append(pick(rng, "VB"))
    else:
        out.append(pick(rng, "BEDZ" if rng.random() < 0.5 else "BEZ"))
        out.append(pick(rng, "JJ"))
        return out
    if rng.random() < 0.7:
        out.extend(noun_phrase(rng)[0])
    if rng.random() < 0.3:
        out.append(pick(rng, "IN"))
        out.extend(noun_phrase(rng)[0])
    if rng.random() < 0.2:
        out.append(pick(rng, "RB"))
    return out


def clause(rng):
    subj, plural = subject(rng)
    return subj + verb_phrase(rng, plural)


def sentence(rng):
    out = clause(rng)
    r = rng.random()
    if r < 0.2:
        out.append(pick(rng, ","))
        out.append(pick(rng, "CC"))
        out.extend(clause(rng))
    elif r < 0.35:
        out.append(pick(rng, "CS"))
        out.extend(clause(rng))
    out.append(pick(rng, "."))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tokens", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=1994)
    ap.add_argument("--output", default=str(Path(__file__).resolve().parents[1] / "src/ending_tagger/data/toy_corpus.tsv"))
    args = ap.parse_args()

    rng = random.Random(args.seed)
    blocks, total = [], 0
    while total < args.tokens:
        s = sentence(rng)
        total += len(s)
        blocks.append("".join(f"{w}\t{t}\n" for w, t in s))
    Path(args.output).write_text("\n".join(blocks), encoding="utf-8")
    print(f"wrote {len(blocks)} sentences, {total} tokens to {args.output}")


if __name__ == "__main__":
    main()
