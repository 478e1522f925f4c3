"""Reduced words and commutation classes in the symmetric group.

Exact counting and enumeration of reduced words and of their
commutation classes, with three faithful pictures of each class: heaps,
wiring diagrams (primitive sorting networks), and rhombic tilings of
the 2n-gon.
"""

from .core import (
    Permutation,
    Word,
    all_permutations,
    coxeter_length,
    evaluate_word,
    generators_commute,
    identity,
    inverse,
    is_reduced,
    left_descents,
    longest_element,
    multiply,
    permutation_from_one_line,
    permutation_from_string,
    permutation_to_string,
    simple_transposition,
    word_from_string,
    word_to_string,
)
from .engine import (
    CommutationClass,
    MatsumotoGraph,
    OracleBudgetError,
    TimeLimitExceeded,
    apply_braid,
    apply_commutation,
    canonicalize,
    commutation_class_of,
    connected_components,
    count_commutation_classes,
    enumerate_classes,
    is_canonical,
    iter_canonical_words,
    matsumoto_graph,
    partition_reduced_words,
)
from .reduced import (
    count_reduced_words,
    count_reduced_words_longest,
    enumerate_reduced_words,
)
from .representations import (
    Heap,
    Rhombus,
    Tiling,
    WiringDiagram,
    crossed_pairs,
    heap_of_word,
    heaps_isomorphic,
    linear_extension_count,
    polygon_vertices,
    representation_roundtrip,
    rhombic_tiling,
    rhombus_corners,
    shoelace_area,
    unit_vector,
    wire_arrangements,
    wiring_diagram,
)
from .svgrender import geometry_json, render_svg

__version__ = "0.1.0"

__all__ = [
    "CommutationClass",
    "Heap",
    "MatsumotoGraph",
    "OracleBudgetError",
    "Permutation",
    "Rhombus",
    "Tiling",
    "TimeLimitExceeded",
    "WiringDiagram",
    "Word",
    "all_permutations",
    "apply_braid",
    "apply_commutation",
    "canonicalize",
    "commutation_class_of",
    "connected_components",
    "count_commutation_classes",
    "count_reduced_words",
    "count_reduced_words_longest",
    "coxeter_length",
    "crossed_pairs",
    "enumerate_classes",
    "enumerate_reduced_words",
    "evaluate_word",
    "generators_commute",
    "geometry_json",
    "heap_of_word",
    "heaps_isomorphic",
    "identity",
    "inverse",
    "is_canonical",
    "is_reduced",
    "iter_canonical_words",
    "left_descents",
    "linear_extension_count",
    "longest_element",
    "matsumoto_graph",
    "multiply",
    "partition_reduced_words",
    "permutation_from_one_line",
    "permutation_from_string",
    "permutation_to_string",
    "polygon_vertices",
    "render_svg",
    "representation_roundtrip",
    "rhombic_tiling",
    "rhombus_corners",
    "shoelace_area",
    "simple_transposition",
    "unit_vector",
    "wire_arrangements",
    "wiring_diagram",
    "word_from_string",
    "word_to_string",
]
