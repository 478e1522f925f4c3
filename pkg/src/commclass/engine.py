"""Commutation classes of reduced words.

Two reduced words are equivalent when one turns into the other by
swapping adjacent commuting letters (|i - j| > 1); the equivalence
classes are *commutation classes*.  Each class has a unique
lexicographically least member, its *canonical word*, and canonical
words admit a local test: a word is canonical iff no letter can be
commuted backward past a larger letter.  That local test is stable
under extension, so a depth-first search over reduced words that prunes
non-canonical prefixes visits each class exactly once.

The pruned search runs on a compiled kernel when available (ranks up to
13, where counts still fit in a signed 64-bit integer) and on an exact
big-integer fallback otherwise.  A brute-force partition of the full
reduced-word set is kept alongside as an independent oracle.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeout
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (
    Permutation,
    Word,
    coxeter_length,
    generators_commute,
    is_reduced,
)
from .reduced import count_reduced_words, enumerate_reduced_words

__all__ = [
    "CommutationClass",
    "MatsumotoGraph",
    "OracleBudgetError",
    "TimeLimitExceeded",
    "apply_braid",
    "apply_commutation",
    "canonicalize",
    "commutation_class_of",
    "connected_components",
    "count_commutation_classes",
    "enumerate_classes",
    "is_canonical",
    "iter_canonical_words",
    "matsumoto_graph",
    "partition_reduced_words",
]

# Class counts for rank 14 exceed 2^63, so the compiled int64 kernel is
# only trusted below that; larger ranks take the big-integer path.
MAX_FAST_RANK = 13

DEFAULT_ORACLE_BUDGET = 10_000_000


class TimeLimitExceeded(Exception):
    """A count ran past its deadline.

    ``partial_count`` holds the work finished so far; it is a lower
    bound, not the answer.
    """

    def __init__(self, partial_count: int, elapsed: float):
        super().__init__(
            f"time limit exceeded after {elapsed:.3f}s "
            f"(partial count {partial_count})"
        )
        self.partial_count = partial_count
        self.elapsed = elapsed


class OracleBudgetError(RuntimeError):
    """The brute-force oracle refused to start: too many reduced words."""

    def __init__(self, word_count: int, budget: int):
        super().__init__(
            f"brute-force oracle needs {word_count} reduced words, "
            f"over the budget of {budget}"
        )
        self.word_count = word_count
        self.budget = budget


@dataclass(frozen=True)
class CommutationClass:
    """One commutation class: its canonical word, size, and rank.

    ``members`` is filled only on request (it can be large).
    """

    canonical: Word
    size: int
    rank: int
    members: tuple[Word, ...] | None = None


@dataclass(frozen=True)
class MatsumotoGraph:
    """All reduced words of one permutation, joined by elementary moves.

    ``nodes`` are in lexicographic order; each edge is
    ``(a, b, kind)`` with node indices ``a < b`` and kind
    ``"commutation"`` or ``"braid"``.
    """

    nodes: tuple[Word, ...]
    edges: tuple[tuple[int, int, str], ...]


# --- elementary moves -------------------------------------------------------

def apply_commutation(word: Word, pos: int) -> Word:
    """Swap the commuting letters at positions ``pos`` and ``pos + 1``.

    Positions are 1-based.  Raises ValueError if the letters do not
    commute or the position is out of range.

    >>> apply_commutation(Word((3, 1, 2), 4), 1).letters
    (1, 3, 2)
    """
    letters = word.letters
    if not 1 <= pos <= len(letters) - 1:
        raise ValueError(f"position {pos} out of range for a word of length {len(letters)}")
    a, b = letters[pos - 1], letters[pos]
    if not generators_commute(a, b):
        raise ValueError(f"letters {a} and {b} at position {pos} do not commute")
    return Word(letters[: pos - 1] + (b, a) + letters[pos + 1 :], word.rank)


def apply_braid(word: Word, pos: int) -> Word:
    """Rewrite ``i j i`` to ``j i j`` (|i-j| = 1) at 1-based position ``pos``.

    >>> apply_braid(Word((1, 2, 1), 3), 1).letters
    (2, 1, 2)
    """
    letters = word.letters
    if not 1 <= pos <= len(letters) - 2:
        raise ValueError(f"position {pos} out of range for a word of length {len(letters)}")
    a, b, c = letters[pos - 1 : pos + 2]
    if a != c or abs(a - b) != 1:
        raise ValueError(f"letters {(a, b, c)} at position {pos} are not a braid pattern")
    return Word(letters[: pos - 1] + (b, a, b) + letters[pos + 2 :], word.rank)


def commutation_class_of(word: Word) -> set[Word]:
    """The full commutation class of a reduced word, by closure.

    >>> sorted(w.letters for w in commutation_class_of(Word((3, 2, 1, 3, 2, 3), 4)))
    [(3, 2, 1, 3, 2, 3), (3, 2, 3, 1, 2, 3)]
    """
    if not is_reduced(word):
        raise ValueError(f"word is not reduced: {word.letters}")
    seen = {word.letters}
    stack = [word.letters]
    while stack:
        cur = stack.pop()
        for k in range(len(cur) - 1):
            if generators_commute(cur[k], cur[k + 1]):
                nxt = cur[:k] + (cur[k + 1], cur[k]) + cur[k + 2 :]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return {Word(letters, word.rank) for letters in seen}


# --- canonical form ---------------------------------------------------------

def _extension_stays_canonical(prefix: Sequence[int], x: int) -> bool:
    # Appending x keeps a canonical word canonical iff x cannot commute
    # backward past a larger letter.  Scanning right to left, letters
    # below x-1 commute with x and are smaller, so they are transparent;
    # the first letter >= x-1 settles it: a blocker (x-1, x, x+1) pins x
    # in place, anything >= x+2 commutes and is larger, so x should have
    # been placed before it.
    for j in range(len(prefix) - 1, -1, -1):
        if prefix[j] >= x - 1:
            return prefix[j] <= x + 1
    return True


def is_canonical(word: Word) -> bool:
    """True when ``word`` is the lex-least member of its class.

    The test is local: every letter must be blocked from commuting
    backward past any larger letter.  Prefixes of canonical words are
    canonical, which is what makes pruned search exact.

    >>> is_canonical(Word((3, 2, 1, 3, 2, 3), 4))
    True
    >>> is_canonical(Word((3, 2, 3, 1, 2, 3), 4))
    False
    """
    letters = word.letters
    for k in range(1, len(letters)):
        if not _extension_stays_canonical(letters[:k], letters[k]):
            return False
    return True


def canonicalize(word: Word) -> Word:
    """The canonical (lex-least) member of ``word``'s commutation class.

    Greedy: repeatedly emit the smallest letter whose earlier
    unconsumed letters all commute with it.

    >>> canonicalize(Word((3, 2, 3, 1, 2, 3), 4)).letters
    (3, 2, 1, 3, 2, 3)
    """
    remaining = list(word.letters)
    out = []
    while remaining:
        best_idx = -1
        for idx, x in enumerate(remaining):
            if all(generators_commute(remaining[j], x) for j in range(idx)):
                if best_idx < 0 or x < remaining[best_idx]:
                    best_idx = idx
        out.append(remaining.pop(best_idx))
    return Word(tuple(out), word.rank)


# --- pruned canonical search ------------------------------------------------

def _value_positions(w: Permutation) -> list[int]:
    pos = [0] * (w.rank + 1)
    for k, v in enumerate(w.images):
        pos[v] = k
    return pos


def _iter_canonical(pos: list[int], n: int, prefix: list[int],
                    remaining: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield tuple(prefix)
        return
    for i in range(1, n):
        if pos[i + 1] < pos[i] and _extension_stays_canonical(prefix, i):
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
            prefix.append(i)
            yield from _iter_canonical(pos, n, prefix, remaining - 1)
            prefix.pop()
            pos[i], pos[i + 1] = pos[i + 1], pos[i]


def iter_canonical_words(w: Permutation) -> Iterator[Word]:
    """Yield the canonical word of every commutation class of ``w``,
    in lexicographic order.

    >>> from .core import longest_element
    >>> [word.letters for word in iter_canonical_words(longest_element(3))]
    [(1, 2, 1), (2, 1, 2)]
    """
    pos = _value_positions(w)
    for letters in _iter_canonical(pos, w.rank, [], coxeter_length(w)):
        yield Word(letters, w.rank)


def _prefix_states(w: Permutation, depth: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    # Canonical prefixes of exactly `depth` letters, each with the value
    # positions reached, in lexicographic order.  These are the units of
    # parallel work; the set depends only on `w` and `depth`, never on
    # the thread count, so parallel totals are reproducible.
    states = []

    def walk(pos: list[int], prefix: list[int]) -> None:
        if len(prefix) == depth:
            states.append((tuple(prefix), tuple(pos)))
            return
        for i in range(1, w.rank):
            if pos[i + 1] < pos[i] and _extension_stays_canonical(prefix, i):
                pos[i], pos[i + 1] = pos[i + 1], pos[i]
                prefix.append(i)
                walk(pos, prefix)
                prefix.pop()
                pos[i], pos[i + 1] = pos[i + 1], pos[i]

    walk(_value_positions(w), [])
    return states


def _count_canonical_py(w: Permutation, deadline: float | None) -> int:
    # Exact big-integer fallback; also the only path for rank > 13.
    started = time.monotonic()
    pos = _value_positions(w)
    n = w.rank
    total_len = coxeter_length(w)
    count = 0
    nodes_since_check = 0
    prefix: list[int] = []

    def walk(remaining: int) -> None:
        nonlocal count, nodes_since_check
        if remaining == 0:
            count += 1
            return
        nodes_since_check += 1
        if deadline is not None and nodes_since_check >= 4096:
            nodes_since_check = 0
            if time.monotonic() > deadline:
                raise TimeLimitExceeded(count, time.monotonic() - started)
        for i in range(1, n):
            if pos[i + 1] < pos[i] and _extension_stays_canonical(prefix, i):
                pos[i], pos[i + 1] = pos[i + 1], pos[i]
                prefix.append(i)
                walk(remaining - 1)
                prefix.pop()
                pos[i], pos[i + 1] = pos[i + 1], pos[i]

    walk(total_len)
    return count


_KERNEL = None
_KERNEL_FAILED = False


def _load_kernel():
    global _KERNEL, _KERNEL_FAILED
    if _KERNEL is None and not _KERNEL_FAILED:
        try:
            from .fastcount import count_completions
            _KERNEL = count_completions
        except ImportError:
            _KERNEL_FAILED = True
    return _KERNEL


def count_commutation_classes(w: Permutation, threads: int = 1,
                              time_limit: float | None = None) -> int:
    """Number of commutation classes of reduced words for ``w``, exact.

    ``threads`` splits the search over canonical prefixes; the total is
    identical for every thread count.  ``time_limit`` (seconds) aborts
    at the next work-unit boundary with :class:`TimeLimitExceeded`
    carrying the partial count.

    >>> from .core import longest_element
    >>> [count_commutation_classes(longest_element(n)) for n in range(1, 6)]
    [1, 1, 2, 8, 62]
    """
    import numpy as np

    total_len = coxeter_length(w)
    if total_len == 0:
        return 1
    started = time.monotonic()
    deadline = None if time_limit is None else started + time_limit
    kernel = _load_kernel() if w.rank <= MAX_FAST_RANK else None
    if kernel is None:
        return _count_canonical_py(w, deadline)

    n = w.rank

    def run_task(task: tuple[tuple[int, ...], tuple[int, ...]]) -> int:
        prefix, pos_state = task
        pos = np.array(pos_state, dtype=np.int64)
        letters = np.zeros(total_len, dtype=np.uint8)
        letters[: len(prefix)] = prefix
        return int(kernel(pos, letters, len(prefix), total_len, n))

    if threads <= 1 and deadline is None:
        initial = (), tuple(_value_positions(w))
        return run_task(initial)

    # Finer split under a deadline keeps work units small enough that
    # "abort at the next boundary" is prompt.
    depth = min(total_len, 6 if deadline is not None else 4)
    tasks = _prefix_states(w, depth)
    if depth == total_len:
        return len(tasks)

    total = 0
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        futures = [pool.submit(run_task, task) for task in tasks]
        try:
            for future in futures:
                remaining_time = None
                if deadline is not None:
                    remaining_time = deadline - time.monotonic()
                    if remaining_time <= 0:
                        raise FutureTimeout
                total += future.result(timeout=remaining_time)
        except FutureTimeout:
            done = sum(f.result() for f in futures if f.done() and not f.cancelled())
            pool.shutdown(wait=False, cancel_futures=True)
            raise TimeLimitExceeded(done, time.monotonic() - started) from None
    return total


def enumerate_classes(w: Permutation, members: bool = False) -> Iterator[CommutationClass]:
    """Yield every commutation class of ``w``, canonical words in lex order.

    Sizes come from counting linear extensions of the class heap; with
    ``members=True`` the full membership is attached instead (computed
    by closure, so expect large classes to cost accordingly).

    >>> from .core import longest_element
    >>> [c.size for c in enumerate_classes(longest_element(4))]
    [2, 1, 4, 1, 4, 1, 1, 2]
    """
    from .representations import heap_of_word, linear_extension_count

    for canonical in iter_canonical_words(w):
        if members:
            family = tuple(sorted(commutation_class_of(canonical),
                                  key=lambda word: word.letters))
            size = len(family)
            yield CommutationClass(canonical, size, w.rank, family)
        else:
            size = linear_extension_count(heap_of_word(canonical))
            yield CommutationClass(canonical, size, w.rank)


# --- brute-force oracle -----------------------------------------------------

def partition_reduced_words(w: Permutation,
                            budget: int = DEFAULT_ORACLE_BUDGET) -> list[set[Word]]:
    """Partition all reduced words of ``w`` into commutation classes.

    Independent of the pruned search: every word is generated, adjacent
    commuting swaps are unioned, and the components are returned sorted
    by their lex-least member.  Refuses (``OracleBudgetError``) when the
    word count exceeds ``budget``.

    >>> from .core import longest_element
    >>> [len(c) for c in partition_reduced_words(longest_element(3))]
    [1, 1]
    """
    word_count = count_reduced_words(w)
    if word_count > budget:
        raise OracleBudgetError(word_count, budget)

    words = [word.letters for word in enumerate_reduced_words(w)]
    index = {letters: k for k, letters in enumerate(words)}
    parent = list(range(len(words)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for k, letters in enumerate(words):
        for j in range(len(letters) - 1):
            if generators_commute(letters[j], letters[j + 1]):
                swapped = letters[:j] + (letters[j + 1], letters[j]) + letters[j + 2 :]
                root_a, root_b = find(k), find(index[swapped])
                if root_a != root_b:
                    parent[root_b] = root_a

    groups: dict[int, list[tuple[int, ...]]] = {}
    for k, letters in enumerate(words):
        groups.setdefault(find(k), []).append(letters)
    classes = sorted(groups.values(), key=min)
    return [{Word(letters, w.rank) for letters in group} for group in classes]


def matsumoto_graph(w: Permutation,
                    budget: int = DEFAULT_ORACLE_BUDGET) -> MatsumotoGraph:
    """The graph of all reduced words of ``w`` under elementary moves.

    Commutation edges swap adjacent commuting letters; braid edges
    rewrite ``i j i`` to ``j i j``.  The graph is connected (any two
    reduced words of the same element are linked by such moves), and
    dropping the braid edges leaves one component per commutation class.

    >>> g = matsumoto_graph(Permutation((2, 1, 3)))
    >>> len(g.nodes), len(g.edges)
    (1, 0)
    """
    word_count = count_reduced_words(w)
    if word_count > budget:
        raise OracleBudgetError(word_count, budget)

    nodes = [word.letters for word in enumerate_reduced_words(w)]
    index = {letters: k for k, letters in enumerate(nodes)}
    edges = []
    for a, letters in enumerate(nodes):
        for j in range(len(letters) - 1):
            x, y = letters[j], letters[j + 1]
            if generators_commute(x, y):
                b = index[letters[:j] + (y, x) + letters[j + 2 :]]
                if a < b:
                    edges.append((a, b, "commutation"))
        for j in range(len(letters) - 2):
            x, y, z = letters[j : j + 3]
            if x == z and abs(x - y) == 1:
                b = index[letters[:j] + (y, x, y) + letters[j + 3 :]]
                if a < b:
                    edges.append((a, b, "braid"))
    return MatsumotoGraph(
        tuple(Word(letters, w.rank) for letters in nodes),
        tuple(sorted(edges)),
    )


def connected_components(graph: MatsumotoGraph,
                         kinds: frozenset[str] | set[str] | None = None) -> list[set[int]]:
    """Components of the move graph, optionally restricted to some kinds.

    ``kinds={"commutation"}`` recovers the commutation classes.

    >>> from .core import longest_element
    >>> g = matsumoto_graph(longest_element(3))
    >>> len(connected_components(g)), len(connected_components(g, {"commutation"}))
    (1, 2)
    """
    parent = list(range(len(graph.nodes)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b, kind in graph.edges:
        if kinds is None or kind in kinds:
            root_a, root_b = find(a), find(b)
            if root_a != root_b:
                parent[root_b] = root_a

    groups: dict[int, set[int]] = {}
    for k in range(len(graph.nodes)):
        groups.setdefault(find(k), set()).add(k)
    return sorted(groups.values(), key=min)
