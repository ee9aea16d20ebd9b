"""Train on a corpus sampled from the 8-tag synthetic HMM and print the N curve.

    python3 scripts/synthetic_recovery.py --tokens 50000 --seed 0
"""

import argparse
from collections import Counter

from ending_tagger.corpus import split_corpus
from ending_tagger.evaluation import FULL, GridConfig, render_table, sweep
from ending_tagger.synthetic import HMMSpec, generate_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tokens", type=int, default=50_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--stems", type=int, default=HMMSpec.n_stems, help="invented stems per open-class tag")
    ap.add_argument("--ending-length", type=int, nargs="+", default=[2])
    ap.add_argument("--strategies", nargs="+", default=["relexed+gt"])
    args = ap.parse_args()

    corpus = generate_corpus(args.tokens, seed=args.seed, spec=HMMSpec(n_stems=args.stems))
    train, test = split_corpus(corpus, 0.9, seed=args.seed)
    majority, _ = Counter(t.tag for t in train.tokens()).most_common(1)[0]
    baseline = sum(t.tag == majority for t in test.tokens()) / test.n_tokens
    print(f"{corpus.n_tokens} tokens, {len(corpus)} sentences; test {test.n_tokens} tokens")
    print(f"majority-class baseline ({majority}): {100 * baseline:.2f}")

    grid = GridConfig(n_values=(0, 50, 200, FULL), l_values=tuple(args.ending_length), strategies=tuple(args.strategies))
    print(render_table(sweep(train, test, grid)), end="")


if __name__ == "__main__":
    main()
