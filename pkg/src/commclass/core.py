"""Symmetric-group basics: permutations, simple transpositions, words.

The symmetric group S_n is generated by the adjacent transpositions
s_1, ..., s_{n-1}, where s_i swaps the values i and i+1.  A *word* is a
finite sequence of generator indices; it evaluates to a permutation by
composing the corresponding transpositions.  Everything downstream
(reduced words, commutation classes, heaps, networks, tilings) is built
on the handful of primitives in this module.

Conventions, fixed once and for all:

* permutations act on {1, ..., n} and are stored in one-line notation,
  ``images[k-1]`` being the image of ``k``;
* composition is right-to-left, ``(u * v)(k) = u(v(k))``;
* a word ``x1 x2 ... xm`` evaluates to ``s_{x1} * s_{x2} * ... * s_{xm}``,
  so the rightmost letter acts first.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Permutation",
    "Word",
    "all_permutations",
    "coxeter_length",
    "evaluate_word",
    "generators_commute",
    "identity",
    "inverse",
    "is_reduced",
    "left_descents",
    "longest_element",
    "multiply",
    "permutation_from_one_line",
    "permutation_from_string",
    "permutation_to_string",
    "simple_transposition",
    "word_from_string",
    "word_to_string",
]


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> Permutation((2, 1, 3)).images
    (2, 1, 3)
    >>> Permutation((1, 1, 3))
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (1, 1, 3)
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]


@dataclass(frozen=True, slots=True)
class Word:
    """A word in the generators s_1, ..., s_{rank-1}.

    The empty word is allowed (it evaluates to the identity).

    >>> Word((3, 2, 1, 3, 2, 3), 4).letters
    (3, 2, 1, 3, 2, 3)
    >>> Word((4,), 4)
    Traceback (most recent call last):
        ...
    ValueError: letter 4 out of range for rank 4
    """

    letters: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be at least 1, got {self.rank}")
        for x in self.letters:
            if not 1 <= x <= self.rank - 1:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")

    def __len__(self) -> int:
        return len(self.letters)


def identity(n: int) -> Permutation:
    """The identity permutation of rank ``n``.

    >>> identity(4).images
    (1, 2, 3, 4)
    """
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation ``n, n-1, ..., 1``.

    It is the unique element of maximal Coxeter length n(n-1)/2.

    >>> longest_element(4).images
    (4, 3, 2, 1)
    >>> coxeter_length(longest_element(4))
    6
    """
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def permutation_from_one_line(images: Iterable[int]) -> Permutation:
    """Build a permutation from its one-line notation, validating it.

    >>> permutation_from_one_line([4, 3, 2, 1]).rank
    4
    """
    return Permutation(tuple(images))


def simple_transposition(i: int, n: int) -> Permutation:
    """The adjacent transposition s_i swapping values i and i+1.

    >>> simple_transposition(2, 4).images
    (1, 3, 2, 4)
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def multiply(u: Permutation, v: Permutation) -> Permutation:
    """Compose two permutations, ``(u * v)(k) = u(v(k))``.

    >>> a = simple_transposition(1, 3)
    >>> b = simple_transposition(2, 3)
    >>> multiply(a, b).images
    (2, 3, 1)
    >>> multiply(b, a).images
    (3, 1, 2)
    """
    if u.rank != v.rank:
        raise ValueError(f"rank mismatch: {u.rank} != {v.rank}")
    return Permutation(tuple(u.images[x - 1] for x in v.images))


def inverse(w: Permutation) -> Permutation:
    """The inverse permutation.

    >>> inverse(Permutation((3, 1, 2))).images
    (2, 3, 1)
    """
    images = [0] * w.rank
    for k, v in enumerate(w.images, start=1):
        images[v - 1] = k
    return Permutation(tuple(images))


def _left_mul_s(i: int, images: tuple[int, ...]) -> tuple[int, ...]:
    # s_i * w swaps the *values* i and i+1 wherever they sit.
    out = list(images)
    for k, v in enumerate(out):
        if v == i:
            out[k] = i + 1
        elif v == i + 1:
            out[k] = i
    return tuple(out)


def evaluate_word(word: Word) -> Permutation:
    """Evaluate a word to the permutation it spells.

    The rightmost letter acts first: ``s_{x1} * s_{x2} * ... * s_{xm}``.

    >>> evaluate_word(Word((3, 2, 1, 3, 2, 3), 4)).images
    (4, 3, 2, 1)
    >>> evaluate_word(Word((), 3)).images
    (1, 2, 3)
    """
    images = tuple(range(1, word.rank + 1))
    for x in reversed(word.letters):
        images = _left_mul_s(x, images)
    return Permutation(images)


def coxeter_length(w: Permutation) -> int:
    """Length of ``w`` = number of inversions = shortest word spelling it.

    >>> coxeter_length(identity(5))
    0
    >>> coxeter_length(Permutation((2, 1, 4, 3)))
    2
    """
    images = w.images
    n = len(images)
    return sum(
        1 for a in range(n) for b in range(a + 1, n) if images[a] > images[b]
    )


def left_descents(w: Permutation) -> tuple[int, ...]:
    """Generators i with len(s_i * w) < len(w), in increasing order.

    i is a left descent exactly when the value i+1 appears to the left
    of the value i in one-line notation.  Left descents are precisely
    the possible first letters of reduced words for ``w``.

    >>> left_descents(longest_element(4))
    (1, 2, 3)
    >>> left_descents(identity(4))
    ()
    """
    pos = [0] * (w.rank + 1)
    for k, v in enumerate(w.images):
        pos[v] = k
    return tuple(i for i in range(1, w.rank) if pos[i + 1] < pos[i])


def is_reduced(word: Word) -> bool:
    """True when the word's length equals the length of its evaluation.

    >>> is_reduced(Word((3, 2, 1, 3, 2, 3), 4))
    True
    >>> is_reduced(Word((1, 1), 3))
    False
    """
    return len(word.letters) == coxeter_length(evaluate_word(word))


def generators_commute(i: int, j: int) -> bool:
    """True when s_i and s_j commute, i.e. |i - j| > 1.

    >>> generators_commute(1, 3)
    True
    >>> generators_commute(2, 3)
    False
    """
    return abs(i - j) > 1


# --- serialization ----------------------------------------------------------

def word_to_string(word: Word) -> str:
    """Render a word as a digit string (rank <= 10) or comma-separated list.

    >>> word_to_string(Word((3, 2, 1, 3, 2, 3), 4))
    '321323'
    >>> word_to_string(Word((10, 2), 11))
    '10,2'
    """
    if word.rank <= 10:
        return "".join(str(x) for x in word.letters)
    return ",".join(str(x) for x in word.letters)


def word_from_string(text: str, rank: int) -> Word:
    """Parse the output of :func:`word_to_string`.

    Accepts both the digit-string and comma-separated forms; the empty
    string is the empty word.

    >>> word_from_string("321323", 4).letters
    (3, 2, 1, 3, 2, 3)
    >>> word_from_string("10,2", 11).letters
    (10, 2)
    >>> word_from_string("", 4).letters
    ()
    """
    text = text.strip()
    if not text:
        return Word((), rank)
    if "," in text:
        letters = tuple(int(part) for part in text.split(","))
    else:
        letters = tuple(int(ch) for ch in text)
    return Word(letters, rank)


def permutation_to_string(w: Permutation) -> str:
    """One-line notation in brackets, e.g. ``[4,3,2,1]``.

    >>> permutation_to_string(longest_element(4))
    '[4,3,2,1]'
    """
    return "[" + ",".join(str(v) for v in w.images) + "]"


def permutation_from_string(text: str) -> Permutation:
    """Parse ``[4,3,2,1]`` (brackets optional, whitespace tolerated).

    >>> permutation_from_string("[4, 3, 2, 1]").images
    (4, 3, 2, 1)
    >>> permutation_from_string("2 1 3").images
    (2, 1, 3)
    """
    cleaned = text.strip().strip("[]()")
    parts = cleaned.replace(",", " ").split()
    if not parts:
        raise ValueError(f"cannot parse permutation from {text!r}")
    return Permutation(tuple(int(p) for p in parts))


def perm_key(images: tuple[int, ...]) -> int | tuple[int, ...]:
    """A compact hashable key for one-line notation.

    Ranks up to 16 pack into a single int, four bits per value; larger
    ranks fall back to the tuple itself.
    """
    if len(images) <= 16:
        key = 0
        for v in images:
            key = (key << 4) | (v - 1)
        return key
    return images


def all_permutations(n: int) -> Iterator[Permutation]:
    """Yield every element of S_n in lexicographic one-line order.

    >>> [p.images for p in all_permutations(3)]  # doctest: +NORMALIZE_WHITESPACE
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    """
    from itertools import permutations as _perms

    for images in _perms(range(1, n + 1)):
        yield Permutation(images)
