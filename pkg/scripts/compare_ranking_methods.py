#!/usr/bin/env python3
"""Check that three ways of ranking medal words induce the same order.

1. plain lexicographic comparison of the words,
2. exact dyadic ranks (binary expansion of runs of ones),
3. grossnumeral ranks w1*G^(L-1) + ... + wL at a common length L.

Also shows that the grossnumeral rank breaks when each word uses its own
length: (1) and (0, 1) both get rank 1.

Usage:
  python scripts/compare_ranking_methods.py [--pairs 10000] [--length 8] [--max-letter 20] [--seed 0]
"""

import argparse
import random
import time

from lexirank.exact import rat_cmp
from lexirank.grossnum import g_compare, gross_rank
from lexirank.lexrank import MedalWord, encode_rank, lex_compare


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--pairs", type=int, default=10_000)
    ap.add_argument("--length", type=int, default=8)
    ap.add_argument("--max-letter", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)

    def word():
        n = rng.randint(0, args.length)
        return MedalWord(tuple(rng.randint(0, args.max_letter) for _ in range(n)))

    start = time.perf_counter()
    disagree_common = disagree_own = 0
    for _ in range(args.pairs):
        u, v = word(), word()
        lex = lex_compare(u, v)
        dyadic = rat_cmp(encode_rank(u).value, encode_rank(v).value)
        common = g_compare(gross_rank(u, args.length), gross_rank(v, args.length))
        own = g_compare(gross_rank(u), gross_rank(v))
        disagree_common += not (lex == dyadic == common)
        disagree_own += own != lex
    elapsed = time.perf_counter() - start

    print(f"pairs checked:                         {args.pairs}")
    print(f"disagreements (common length L={args.length}):   {disagree_common}")
    print(f"disagreements (each word's own length): {disagree_own}")
    print(f"elapsed: {elapsed:.2f}s")
    u, v = MedalWord.of(1), MedalWord.of(0, 1)
    print(f"example: rank{u.letters} = {gross_rank(u)}, rank{v.letters} = {gross_rank(v)}, "
          f"but lex_compare = {lex_compare(u, v)}")


if __name__ == "__main__":
    main()
