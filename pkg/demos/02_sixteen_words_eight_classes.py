"""The sixteen reduced words of 4,3,2,1 and their eight classes.

Rank 4 is the first interesting case: the order-reversing permutation
has 16 reduced words, and commuting swaps glue them into 8 classes of
sizes 1, 1, 1, 1, 2, 2, 4, 4.  This script prints the full partition,
shows the canonical (lexicographically least) word of each class, and
demonstrates the two elementary moves on words.

Run:  python3 demos/02_sixteen_words_eight_classes.py
"""

from commclass import (
    apply_braid,
    apply_commutation,
    canonicalize,
    commutation_class_of,
    enumerate_classes,
    evaluate_word,
    longest_element,
    matsumoto_graph,
    connected_components,
    word_from_string,
    word_to_string,
)

w0 = longest_element(4)
print(f"target permutation: {w0.images}\n")

print("the 8 commutation classes (canonical word, size, members):")
for record in enumerate_classes(w0, members=True):
    members = " ".join(word_to_string(m) for m in record.members)
    print(f"  {word_to_string(record.canonical)}  size {record.size}:  {members}")

# The two moves.  A commutation swaps adjacent letters i, j with
# |i - j| > 1 and stays inside the class; a braid rewrites i j i to
# j i j and jumps between classes.
word = word_from_string("321323", 4)
swapped = apply_commutation(word, 3)   # letters 1,3 at positions 3,4
print(f"\ncommutation at position 3: {word_to_string(word)} -> "
      f"{word_to_string(swapped)} (same class)")
assert commutation_class_of(word) == commutation_class_of(swapped)

braided = apply_braid(word, 4)         # letters 3,2,3 at positions 4,5,6
print(f"braid at position 4:       {word_to_string(word)} -> "
      f"{word_to_string(braided)} (different class, same permutation)")
assert evaluate_word(braided) == evaluate_word(word)
assert canonicalize(braided) != canonicalize(word)

# Both moves together connect everything (Matsumoto's property);
# commutations alone leave one component per class.
graph = matsumoto_graph(w0)
print(f"\nmove graph: {len(graph.nodes)} words, {len(graph.edges)} edges, "
      f"{len(connected_components(graph))} component with both moves, "
      f"{len(connected_components(graph, {'commutation'}))} with commutations only")
