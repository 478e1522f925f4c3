"""Heaps, wiring diagrams, rhombic tilings, and their SVG output."""

import math

import pytest

from commclass import (
    Heap,
    Word,
    all_permutations,
    canonicalize,
    commutation_class_of,
    crossed_pairs,
    enumerate_reduced_words,
    evaluate_word,
    geometry_json,
    heap_of_word,
    heaps_isomorphic,
    iter_canonical_words,
    linear_extension_count,
    longest_element,
    partition_reduced_words,
    polygon_vertices,
    render_svg,
    representation_roundtrip,
    rhombic_tiling,
    rhombus_corners,
    shoelace_area,
    unit_vector,
    wire_arrangements,
    wiring_diagram,
)


# --- heaps ------------------------------------------------------------------

def test_heap_of_single_letter():
    heap = heap_of_word(Word((2,), 4))
    assert heap.elements == ((1, 2),)
    assert heap.covers == ()
    assert heap.coords == ((2, 1),)


def test_commuting_letters_share_a_heap():
    assert heaps_isomorphic(heap_of_word(Word((1, 3), 4)), heap_of_word(Word((3, 1), 4)))
    assert not heaps_isomorphic(heap_of_word(Word((1, 2), 3)), heap_of_word(Word((2, 1), 3)))


def test_heap_label_multiset_of_known_word():
    heap = heap_of_word(Word((3, 2, 1, 3, 2, 3), 4))
    labels = sorted(label for _, label in heap.elements)
    assert labels == [1, 2, 2, 3, 3, 3]


def test_heap_covers_are_a_transitive_reduction():
    for word in ((3, 2, 1, 3, 2, 3), (1, 2, 1), (2, 1, 3, 2), (1, 3, 2, 1, 3)):
        rank = max(word) + 1
        heap = heap_of_word(Word(word, rank))
        m = len(heap.elements)
        # rebuild reachability from covers
        below = [set() for _ in range(m)]
        for a, b in heap.covers:
            below[b].add(a)
            below[b] |= below[a]
        # the closure must equal non-commuting precedence, closed
        expect = [set() for _ in range(m)]
        for j in range(m):
            for i in range(j):
                if abs(word[i] - word[j]) <= 1:
                    expect[j].add(i)
                    expect[j] |= expect[i]
        assert below == expect
        # no cover is implied by a two-step chain
        for a, b in heap.covers:
            assert not any(a in below[c] for c in below[b])


def test_heap_coords_rows_are_labels():
    heap = heap_of_word(Word((3, 2, 1, 3, 2, 3), 4))
    for (_, label), (row, column) in zip(heap.elements, heap.coords):
        assert row == label
        assert column >= 1
    # covers climb exactly one column and one row step
    for a, b in heap.covers:
        assert abs(heap.coords[a][0] - heap.coords[b][0]) == 1
        assert heap.coords[b][1] > heap.coords[a][1]


def test_roundtrip_lands_on_canonical_everywhere():
    # every reduced word of every rank-4 element, plus the rank-5
    # longest element
    targets = list(all_permutations(4)) + [longest_element(5)]
    for w in targets:
        for word in enumerate_reduced_words(w):
            assert representation_roundtrip(heap_of_word(word)) == canonicalize(word)


def test_heaps_isomorphic_iff_same_class():
    words = list(enumerate_reduced_words(longest_element(4)))
    heaps = {w: heap_of_word(w) for w in words}
    classes = {w: frozenset(commutation_class_of(w)) for w in words}
    for u in words:
        for v in words:
            same = classes[u] == classes[v]
            assert heaps_isomorphic(heaps[u], heaps[v]) == same


def test_linear_extension_counts_match_oracle_sizes():
    for n in range(2, 6):
        for family in partition_reduced_words(longest_element(n)):
            least = min(family, key=lambda w: w.letters)
            assert linear_extension_count(heap_of_word(least)) == len(family)


def test_linear_extension_known_values():
    assert linear_extension_count(heap_of_word(Word((3, 2, 1, 3, 2, 3), 4))) == 2
    assert linear_extension_count(heap_of_word(Word((3, 1, 2, 3, 1, 2), 4))) == 4
    assert linear_extension_count(heap_of_word(Word((1, 3), 4))) == 2  # antichain
    assert linear_extension_count(heap_of_word(Word((), 3))) == 1


# --- wiring diagrams --------------------------------------------------------

def test_wiring_diagram_executes_the_word():
    for w in all_permutations(4):
        for word in enumerate_reduced_words(w):
            diagram = wiring_diagram(word)
            assert wire_arrangements(diagram)[-1] == evaluate_word(word).images


def test_wiring_columns_are_greedy_and_commutation_invariant():
    assert wiring_diagram(Word((1, 3), 4)).columns == (1, 1)
    assert wiring_diagram(Word((3, 1), 4)).columns == (1, 1)
    assert wiring_diagram(Word((1, 2), 3)).columns == (1, 2)
    # same column only for swaps on disjoint rails
    for word in enumerate_reduced_words(longest_element(4)):
        diagram = wiring_diagram(word)
        for a in range(len(diagram.swaps)):
            for b in range(a + 1, len(diagram.swaps)):
                if diagram.columns[a] == diagram.columns[b]:
                    assert abs(diagram.swaps[a] - diagram.swaps[b]) > 1


def test_wiring_primitivity_for_longest_element():
    for n in range(2, 6):
        for word in iter_canonical_words(longest_element(n)):
            diagram = wiring_diagram(word)
            assert len(diagram.swaps) == n * (n - 1) // 2
            assert wire_arrangements(diagram)[-1] == tuple(range(n, 0, -1))
            pairs = crossed_pairs(diagram)
            assert sorted(pairs) == [
                (a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
            ]


def test_empty_word_routes_identity():
    diagram = wiring_diagram(Word((), 3))
    assert diagram.swaps == ()
    assert wire_arrangements(diagram) == ((1, 2, 3),)


# --- rhombic tilings --------------------------------------------------------

def _tiling_signature(tiling):
    return tuple(sorted(
        (r.wires, (round(r.anchor[0], 9), round(r.anchor[1], 9)))
        for r in tiling.rhombi
    ))


def test_tiling_rejects_words_not_reversing():
    with pytest.raises(ValueError):
        rhombic_tiling(Word((1, 2), 3))  # too short
    with pytest.raises(ValueError):
        rhombic_tiling(Word((1, 1, 1), 3))  # right length, wrong element


def test_tiling_rhombus_count_and_pairs():
    for n in (2, 3, 4):
        for word in iter_canonical_words(longest_element(n)):
            tiling = rhombic_tiling(word)
            assert len(tiling.rhombi) == n * (n - 1) // 2
            assert sorted(r.wires for r in tiling.rhombi) == [
                (a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)
            ]


def test_single_rhombus_for_rank_two():
    tiling = rhombic_tiling(Word((1,), 2))
    assert len(tiling.rhombi) == 1
    corners = rhombus_corners(tiling.rhombi[0], 2, tiling.offset)
    for k in range(4):
        x1, y1 = corners[k]
        x2, y2 = corners[(k + 1) % 4]
        assert math.hypot(x2 - x1, y2 - y1) == pytest.approx(1.0, abs=1e-12)


def test_tiling_fills_the_polygon():
    # unit edges, all corners inside the 2n-gon, total area equal to the
    # polygon's, and every polygon vertex hit by some rhombus corner
    for n in (3, 4):
        outline = polygon_vertices(n)
        target_area = shoelace_area(outline)
        for word in iter_canonical_words(longest_element(n)):
            tiling = rhombic_tiling(word)
            area = 0.0
            corners_seen = set()
            for rhombus in tiling.rhombi:
                corners = rhombus_corners(rhombus, n, tiling.offset)
                area += shoelace_area(corners)
                for x, y in corners:
                    corners_seen.add((round(x, 7), round(y, 7)))
                    assert _inside_convex(outline, (x, y), tol=1e-9)
                for k in range(4):
                    x1, y1 = corners[k]
                    x2, y2 = corners[(k + 1) % 4]
                    assert math.hypot(x2 - x1, y2 - y1) == pytest.approx(1.0, abs=1e-12)
            assert area == pytest.approx(target_area, rel=1e-12)
            for vx, vy in outline:
                assert (round(vx, 7), round(vy, 7)) in corners_seen


def _inside_convex(outline, point, tol):
    px, py = point
    for k in range(len(outline)):
        x1, y1 = outline[k]
        x2, y2 = outline[(k + 1) % len(outline)]
        cross = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)
        if cross < -tol:
            return False
    return True


def test_octagon_area_matches_closed_form():
    area = shoelace_area(polygon_vertices(4))
    assert area == pytest.approx(2 * (1 + math.sqrt(2)), rel=1e-12)


def test_distinct_classes_distinct_tilings():
    tilings = [rhombic_tiling(w) for w in iter_canonical_words(longest_element(4))]
    assert len({_tiling_signature(t) for t in tilings}) == 8


def test_words_of_one_class_share_a_tiling():
    for word in enumerate_reduced_words(longest_element(4)):
        same = _tiling_signature(rhombic_tiling(word))
        canonical = _tiling_signature(rhombic_tiling(canonicalize(word)))
        assert same == canonical


def test_offset_is_configurable():
    default = rhombic_tiling(Word((1, 2, 1), 3))
    rotated = rhombic_tiling(Word((1, 2, 1), 3), offset=0.0)
    assert default.offset == pytest.approx(math.pi / 6)
    assert rotated.offset == 0.0
    assert _tiling_signature(default) != _tiling_signature(rotated)
    # invariants hold for any offset
    area = sum(shoelace_area(rhombus_corners(r, 3, 0.0)) for r in rotated.rhombi)
    assert area == pytest.approx(shoelace_area(polygon_vertices(3, 0.0)), rel=1e-12)


def test_unit_vectors():
    for n in (2, 3, 4, 7):
        for k in range(1, n + 1):
            x, y = unit_vector(n, k)
            assert math.hypot(x, y) == pytest.approx(1.0, abs=1e-12)
        # consecutive directions differ by pi/n
        x1, y1 = unit_vector(n, 1)
        x2, y2 = unit_vector(n, 2)
        dot = x1 * x2 + y1 * y2
        assert dot == pytest.approx(math.cos(math.pi / n), abs=1e-12)


# --- rendering --------------------------------------------------------------

def test_render_svg_all_kinds():
    word = Word((3, 2, 1, 3, 2, 3), 4)
    for obj in (heap_of_word(word), wiring_diagram(word), rhombic_tiling(word)):
        svg = render_svg(obj)
        assert svg.startswith("<svg")
        assert svg.rstrip().endswith("</svg>")
        assert render_svg(obj) == svg  # deterministic


def test_render_heap_has_one_square_per_element():
    svg = render_svg(heap_of_word(Word((3, 2, 1, 3, 2, 3), 4)))
    assert svg.count("<rect") == 6


def test_render_tiling_has_one_polygon_per_rhombus_plus_outline():
    svg = render_svg(rhombic_tiling(Word((3, 2, 1, 3, 2, 3), 4)))
    assert svg.count("<polygon") == 7


def test_render_empty_network_is_wires_only():
    svg = render_svg(wiring_diagram(Word((), 3)))
    assert svg.count("<polyline") == 3


def test_render_rejects_unknown_objects():
    with pytest.raises(TypeError):
        render_svg("not a drawable")
    with pytest.raises(TypeError):
        geometry_json(42)


def test_geometry_json_shapes():
    word = Word((1, 2, 1), 3)
    heap_geo = geometry_json(heap_of_word(word))
    assert heap_geo["kind"] == "heap"
    assert len(heap_geo["elements"]) == 3
    net_geo = geometry_json(wiring_diagram(word))
    assert net_geo["kind"] == "network"
    assert net_geo["arrangements"][0] == [1, 2, 3]
    assert net_geo["arrangements"][-1] == [3, 2, 1]
    tile_geo = geometry_json(rhombic_tiling(word))
    assert tile_geo["kind"] == "tiling"
    assert len(tile_geo["rhombi"]) == 3
    assert len(tile_geo["polygon"]) == 6


def test_identity_heap_renders():
    svg = render_svg(Heap(rank=3, elements=(), covers=(), coords=()))
    assert svg.startswith("<svg")
