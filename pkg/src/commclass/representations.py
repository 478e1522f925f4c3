"""Three faithful pictures of a commutation class.

A commutation class is determined by (and determines) each of:

* its *heap*: the partial order on letter occurrences generated by
  non-commuting precedence, labels attached;
* its *wiring diagram* (primitive sorting network): wires crossing on
  adjacent rails, commuting swaps sharing a column;
* for the order-reversing permutation, a *rhombic tiling* of the 2n-gon
  built from n unit edge directions, one rhombus per wire crossing.

Words of one class yield isomorphic heaps, equal wiring diagrams and
equal tilings; words of different classes never do.  The round trip
back from a heap is the greedy smallest-label linear extension, which
lands on the canonical word of the class.
"""

import math
from dataclasses import dataclass

from .core import Permutation, Word, evaluate_word, longest_element

__all__ = [
    "Heap",
    "Rhombus",
    "Tiling",
    "WiringDiagram",
    "crossed_pairs",
    "heap_of_word",
    "heaps_isomorphic",
    "linear_extension_count",
    "polygon_vertices",
    "representation_roundtrip",
    "rhombic_tiling",
    "rhombus_corners",
    "shoelace_area",
    "unit_vector",
    "wire_arrangements",
    "wiring_diagram",
]


# --- heaps ------------------------------------------------------------------

@dataclass(frozen=True)
class Heap:
    """Labeled poset of letter occurrences.

    ``elements[k] = (position, label)`` with 1-based word positions, in
    word order.  ``covers`` holds index pairs ``(a, b)`` with element a
    immediately below element b.  ``coords[k] = (row, column)`` places
    element k on its generator row, columns counting chain depth.
    """

    rank: int
    elements: tuple[tuple[int, int], ...]
    covers: tuple[tuple[int, int], ...]
    coords: tuple[tuple[int, int], ...]


def heap_of_word(word: Word) -> Heap:
    """The heap of a word: occurrences ordered by non-commuting precedence.

    >>> h = heap_of_word(Word((2, 1, 3, 2), 4))
    >>> h.elements
    ((1, 2), (2, 1), (3, 3), (4, 2))
    >>> h.covers
    ((0, 1), (0, 2), (1, 3), (2, 3))
    >>> h.coords
    ((2, 1), (1, 2), (3, 2), (2, 3))
    """
    letters = word.letters
    m = len(letters)
    # ancestors[j]: bitmask of all occurrences forced before j.
    ancestors = [0] * m
    level = [0] * m
    for j in range(m):
        acc = 0
        deepest = 0
        for i in range(j):
            if abs(letters[i] - letters[j]) <= 1:
                acc |= ancestors[i] | (1 << i)
                if level[i] > deepest:
                    deepest = level[i]
        ancestors[j] = acc
        level[j] = deepest + 1

    covers = []
    for j in range(m):
        # Strip ancestors reachable through another ancestor; what
        # remains covers j.
        mask = ancestors[j]
        probe = mask
        while probe:
            i = (probe & -probe).bit_length() - 1
            probe &= probe - 1
            mask &= ~ancestors[i]
        probe = mask
        while probe:
            i = (probe & -probe).bit_length() - 1
            probe &= probe - 1
            covers.append((i, j))

    return Heap(
        rank=word.rank,
        elements=tuple((k + 1, letters[k]) for k in range(m)),
        covers=tuple(sorted(covers, key=lambda e: (e[1], e[0]))),
        coords=tuple((letters[k], level[k]) for k in range(m)),
    )


def _predecessor_masks(heap: Heap) -> list[int]:
    m = len(heap.elements)
    preds = [0] * m
    for a, b in heap.covers:
        preds[b] |= preds[a] | (1 << a)
    return preds


def representation_roundtrip(heap: Heap) -> Word:
    """Read the canonical word back off a heap.

    Greedy smallest-label linear extension: among the minimal remaining
    elements, always take the one with the least label.  Two elements
    sharing a label are comparable, so the choice is unambiguous.

    >>> representation_roundtrip(heap_of_word(Word((3, 2, 3, 1, 2, 3), 4))).letters
    (3, 2, 1, 3, 2, 3)
    """
    m = len(heap.elements)
    preds = _predecessor_masks(heap)
    taken = 0
    letters = []
    for _ in range(m):
        best = -1
        for k in range(m):
            if not taken >> k & 1 and preds[k] & taken == preds[k]:
                if best < 0 or heap.elements[k][1] < heap.elements[best][1]:
                    best = k
        taken |= 1 << best
        letters.append(heap.elements[best][1])
    return Word(tuple(letters), heap.rank)


def heaps_isomorphic(a: Heap, b: Heap) -> bool:
    """Label-preserving poset isomorphism.

    Heaps are isomorphic exactly when they normalize to the same word.

    >>> heaps_isomorphic(heap_of_word(Word((1, 3), 4)), heap_of_word(Word((3, 1), 4)))
    True
    """
    return (a.rank, representation_roundtrip(a)) == (b.rank, representation_roundtrip(b))


def linear_extension_count(heap: Heap) -> int:
    """Number of linear extensions of the heap = size of its class.

    Dynamic programming over down-sets, walked in layers by size.

    >>> linear_extension_count(heap_of_word(Word((2, 1, 3, 2), 4)))
    2
    >>> linear_extension_count(heap_of_word(Word((1, 2, 1), 3)))
    1
    """
    m = len(heap.elements)
    preds = _predecessor_masks(heap)
    frontier = {0: 1}
    for _ in range(m):
        grown: dict[int, int] = {}
        for downset, ways in frontier.items():
            for k in range(m):
                if not downset >> k & 1 and preds[k] & downset == preds[k]:
                    key = downset | (1 << k)
                    grown[key] = grown.get(key, 0) + ways
        frontier = grown
    return frontier.get((1 << m) - 1, 0)


# --- wiring diagrams --------------------------------------------------------

@dataclass(frozen=True)
class WiringDiagram:
    """A word drawn as wires: swap k acts on rails swaps[k], swaps[k]+1.

    ``columns[k]`` is the drawing column of swap k — the earliest column
    after every earlier swap touching a shared rail, so commuting swaps
    share columns and the diagram is a class invariant.
    """

    n: int
    swaps: tuple[int, ...]
    columns: tuple[int, ...]


def wiring_diagram(word: Word) -> WiringDiagram:
    """Lay out a word as a wiring diagram with greedy column assignment.

    >>> wiring_diagram(Word((2, 1, 3, 2), 4)).columns
    (1, 2, 2, 3)
    """
    last = [0] * (word.rank + 2)
    columns = []
    for i in word.letters:
        col = max(last[i], last[i + 1]) + 1
        columns.append(col)
        last[i] = col
        last[i + 1] = col
    return WiringDiagram(word.rank, word.letters, tuple(columns))


def wire_arrangements(diagram: WiringDiagram) -> tuple[tuple[int, ...], ...]:
    """Wire order on the rails before and after each swap.

    Starts at (1, ..., n); applying the swaps left to right reproduces
    the evaluation of the underlying word.

    >>> wire_arrangements(wiring_diagram(Word((1, 2), 3)))[-1]
    (2, 3, 1)
    """
    state = list(range(1, diagram.n + 1))
    history = [tuple(state)]
    for i in diagram.swaps:
        state[i - 1], state[i] = state[i], state[i - 1]
        history.append(tuple(state))
    return tuple(history)


def crossed_pairs(diagram: WiringDiagram) -> tuple[tuple[int, int], ...]:
    """The pair of wires that crosses at each swap, in swap order.

    A network sorts n, ..., 1 back to 1, ..., n without wasted work
    exactly when every pair appears exactly once.

    >>> crossed_pairs(wiring_diagram(Word((1, 2, 1), 3)))
    ((1, 2), (1, 3), (2, 3))
    """
    state = list(range(1, diagram.n + 1))
    pairs = []
    for i in diagram.swaps:
        a, b = state[i - 1], state[i]
        pairs.append((min(a, b), max(a, b)))
        state[i - 1], state[i] = state[i], state[i - 1]
    return tuple(pairs)


# --- rhombic tilings --------------------------------------------------------

@dataclass(frozen=True)
class Rhombus:
    """One tile: edges in directions u_a, u_b from the anchor corner."""

    wires: tuple[int, int]
    anchor: tuple[float, float]


@dataclass(frozen=True)
class Tiling:
    """A rhombic tiling of the 2n-gon, one rhombus per wire crossing."""

    n: int
    offset: float
    rhombi: tuple[Rhombus, ...]


def unit_vector(n: int, k: int, offset: float | None = None) -> tuple[float, float]:
    """Edge direction of wire k: angle offset + (k-1)·pi/n.

    The default offset pi/(2n) spreads the n directions symmetrically
    about the vertical, so the 2n-gon sits on a horizontal edge.

    >>> ux, uy = unit_vector(4, 1)
    >>> round(math.hypot(ux, uy), 12)
    1.0
    """
    if offset is None:
        offset = math.pi / (2 * n)
    angle = offset + (k - 1) * math.pi / n
    return (math.cos(angle), math.sin(angle))


def rhombic_tiling(word: Word, offset: float | None = None) -> Tiling:
    """Tile the 2n-gon according to a reduced word for n, ..., 1.

    Wires enter bottom to top; the crossing of wires a and b becomes a
    rhombus with edge directions u_a and u_b, anchored at the sum of
    the directions of all wires currently below the crossing.  Raises
    ValueError unless the word is a reduced word for the
    order-reversing permutation (other elements leave gaps).

    >>> t = rhombic_tiling(Word((3, 2, 1, 3, 2, 3), 4))
    >>> len(t.rhombi)
    6
    """
    n = word.rank
    if offset is None:
        offset = math.pi / (2 * n)
    target = longest_element(n)
    if len(word.letters) != n * (n - 1) // 2 or evaluate_word(word) != target:
        raise ValueError(
            "rhombic tilings require a reduced word for the "
            f"order-reversing permutation of rank {n}"
        )
    directions = [unit_vector(n, k, offset) for k in range(1, n + 1)]
    state = list(range(1, n + 1))
    rhombi = []
    for i in word.letters:
        below_x = sum(directions[c - 1][0] for c in state[: i - 1])
        below_y = sum(directions[c - 1][1] for c in state[: i - 1])
        a, b = state[i - 1], state[i]
        rhombi.append(Rhombus((min(a, b), max(a, b)), (below_x, below_y)))
        state[i - 1], state[i] = state[i], state[i - 1]
    return Tiling(n, offset, tuple(rhombi))


def rhombus_corners(rhombus: Rhombus, n: int,
                    offset: float | None = None) -> tuple[tuple[float, float], ...]:
    """The four corners of a tile, counterclockwise from the anchor.

    >>> t = rhombic_tiling(Word((1, 2, 1), 3))
    >>> len(rhombus_corners(t.rhombi[0], t.n, t.offset))
    4
    """
    a, b = rhombus.wires
    ax, ay = unit_vector(n, a, offset)
    bx, by = unit_vector(n, b, offset)
    x, y = rhombus.anchor
    return ((x, y), (x + ax, y + ay), (x + ax + bx, y + ay + by), (x + bx, y + by))


def polygon_vertices(n: int, offset: float | None = None) -> tuple[tuple[float, float], ...]:
    """Boundary of the 2n-gon every tiling fills, counterclockwise.

    Walk up the right side adding u_1, ..., u_n, then back down
    subtracting them in the same order.

    >>> len(polygon_vertices(4))
    8
    """
    directions = [unit_vector(n, k, offset) for k in range(1, n + 1)]
    points = [(0.0, 0.0)]
    for dx, dy in directions:
        x, y = points[-1]
        points.append((x + dx, y + dy))
    for dx, dy in directions[:-1]:
        x, y = points[-1]
        points.append((x - dx, y - dy))
    return tuple(points)


def shoelace_area(points: tuple[tuple[float, float], ...]) -> float:
    """Unsigned area of a simple polygon.

    >>> round(shoelace_area(((0, 0), (1, 0), (1, 1), (0, 1))), 12)
    1.0
    """
    total = 0.0
    for k in range(len(points)):
        x1, y1 = points[k]
        x2, y2 = points[(k + 1) % len(points)]
        total += x1 * y2 - x2 * y1
    return abs(total) / 2.0
