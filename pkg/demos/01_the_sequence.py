"""Counting commutation classes of the order-reversing permutation.

The reduced words of a permutation split into commutation classes:
two words are equivalent when one turns into the other by repeatedly
swapping adjacent letters that commute.  For the order-reversing
permutation n, n-1, ..., 1 the class counts grow fast:

    1, 1, 2, 8, 62, 908, 24698, 1232944, 112018190, 18410581880, ...

(OEIS A006245).  This script recomputes the sequence exactly, two ways:
a pruned search that touches each class once via its lexicographically
least word, and — for small ranks — a brute-force partition of the full
reduced-word list, which must agree.

Run:  python3 demos/01_the_sequence.py [max_rank]

Ranks up to 8 finish in about a second; rank 9 takes a couple of
minutes; rank 10 is an overnight job.
"""

import sys
import time

from commclass import (
    count_commutation_classes,
    count_reduced_words_longest,
    longest_element,
    partition_reduced_words,
)

max_rank = int(sys.argv[1]) if len(sys.argv) > 1 else 8

print(f"{'n':>3} {'reduced words':>16} {'classes':>12} {'oracle':>8} {'time':>9}")
for n in range(1, max_rank + 1):
    started = time.monotonic()
    classes = count_commutation_classes(longest_element(n))
    elapsed = time.monotonic() - started
    words = count_reduced_words_longest(n)
    if n <= 5:
        oracle = str(len(partition_reduced_words(longest_element(n))))
        assert oracle == str(classes)
    else:
        oracle = "-"
    print(f"{n:>3} {words:>16} {classes:>12} {oracle:>8} {elapsed:>8.2f}s")

print()
print("Every rank-<=5 count above was re-derived by brute force: list all")
print("reduced words, join the ones an adjacent commuting swap connects,")
print("and count the resulting components.")
