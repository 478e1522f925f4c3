"""Enumerating and counting reduced words.

A reduced word for a permutation ``w`` is a shortest word evaluating to
``w``; its length is the inversion number of ``w``.  Reduced words are
generated by descent recursion: the first letters of reduced words for
``w`` are exactly the left descents of ``w``, and choosing descent ``i``
recurses into ``s_i * w``.

Counting uses the same recursion with memoization on the permutation,
except for the longest element where a closed-form product is available
and is vastly cheaper.
"""

import math
from typing import Iterator

from .core import Permutation, Word, coxeter_length, perm_key

__all__ = [
    "count_reduced_words",
    "count_reduced_words_longest",
    "enumerate_reduced_words",
]


def _iter_reduced(pos: list[int], depth: int, prefix: list[int],
                  n: int) -> Iterator[tuple[int, ...]]:
    # pos[v] = index of value v in one-line notation; a left descent i
    # means pos[i+1] < pos[i], and taking it swaps pos[i] with pos[i+1].
    if depth == 0:
        yield tuple(prefix)
        return
    for i in range(1, n):
        if pos[i + 1] < pos[i]:
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
            prefix.append(i)
            yield from _iter_reduced(pos, depth - 1, prefix, n)
            prefix.pop()
            pos[i], pos[i + 1] = pos[i + 1], pos[i]


def enumerate_reduced_words(w: Permutation) -> Iterator[Word]:
    """Yield all reduced words for ``w`` in lexicographic order.

    The stream is demand-driven; nothing is materialized up front.
    Emission order is strictly increasing, which also rules out
    duplicates.

    >>> from .core import longest_element
    >>> [word.letters for word in enumerate_reduced_words(longest_element(3))]
    [(1, 2, 1), (2, 1, 2)]
    """
    n = w.rank
    pos = [0] * (n + 1)
    for k, v in enumerate(w.images):
        pos[v] = k
    previous: tuple[int, ...] | None = None
    for letters in _iter_reduced(pos, coxeter_length(w), [], n):
        assert previous is None or previous < letters, "emission must be lex-increasing"
        previous = letters
        yield Word(letters, n)


def count_reduced_words(w: Permutation) -> int:
    """Number of reduced words for ``w``, exact.

    Memoized descent recursion over the weak order interval below ``w``;
    comfortably handles every element of S_8 and beyond.

    >>> from .core import longest_element
    >>> count_reduced_words(longest_element(4))
    16
    >>> count_reduced_words(Permutation((1, 2, 3)))
    1
    """
    n = w.rank
    memo: dict[int | tuple[int, ...], int] = {}
    identity_images = tuple(range(1, n + 1))

    def count(images: tuple[int, ...]) -> int:
        if images == identity_images:
            return 1
        key = perm_key(images)
        cached = memo.get(key)
        if cached is not None:
            return cached
        pos = [0] * (n + 1)
        for k, v in enumerate(images):
            pos[v] = k
        total = 0
        for i in range(1, n):
            a, b = pos[i], pos[i + 1]
            if b < a:
                lowered = list(images)
                lowered[a], lowered[b] = lowered[b], lowered[a]
                total += count(tuple(lowered))
        memo[key] = total
        return total

    return count(w.images)


def count_reduced_words_longest(n: int) -> int:
    """Number of reduced words for the longest element of S_n, exact.

    Closed form: the staircase shape (n-1, n-2, ..., 1) has
    N = n(n-1)/2 cells and hook lengths whose product is
    prod_{k=1}^{n-1} (2k-1)^(n-k), so the count is N! over that product.

    >>> [count_reduced_words_longest(n) for n in range(1, 7)]
    [1, 1, 2, 16, 768, 292864]
    """
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    total_cells = n * (n - 1) // 2
    hooks = 1
    for k in range(1, n):
        hooks *= (2 * k - 1) ** (n - k)
    return math.factorial(total_cells) // hooks
