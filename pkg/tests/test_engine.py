"""Commutation classes: moves, canonical forms, counting, oracle."""

import pytest

from commclass import (
    OracleBudgetError,
    Permutation,
    TimeLimitExceeded,
    Word,
    all_permutations,
    apply_braid,
    apply_commutation,
    canonicalize,
    commutation_class_of,
    connected_components,
    count_commutation_classes,
    count_reduced_words,
    enumerate_classes,
    enumerate_reduced_words,
    evaluate_word,
    is_canonical,
    iter_canonical_words,
    longest_element,
    matsumoto_graph,
    partition_reduced_words,
    word_to_string,
)

KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 8, 5: 62, 6: 908, 7: 24698}


def test_apply_commutation():
    word = Word((3, 1, 2), 4)
    assert apply_commutation(word, 1).letters == (1, 3, 2)
    with pytest.raises(ValueError):
        apply_commutation(word, 2)  # |1-2| = 1, not commuting
    with pytest.raises(ValueError):
        apply_commutation(word, 3)  # out of range
    with pytest.raises(ValueError):
        apply_commutation(word, 0)


def test_apply_braid():
    word = Word((1, 2, 1, 3), 4)
    assert apply_braid(word, 1).letters == (2, 1, 2, 3)
    with pytest.raises(ValueError):
        apply_braid(word, 2)  # 2,1,3 is not i j i
    with pytest.raises(ValueError):
        apply_braid(word, 3)  # out of range


def test_moves_preserve_evaluation():
    word = Word((3, 2, 1, 3, 2, 3), 4)
    target = evaluate_word(word)
    assert evaluate_word(apply_commutation(word, 3)) == target
    braidable = Word((2, 3, 2, 1, 3, 2), 4)
    assert evaluate_word(apply_braid(braidable, 1)) == evaluate_word(braidable)


def test_commutation_class_of_known_pair():
    family = commutation_class_of(Word((3, 2, 1, 3, 2, 3), 4))
    assert {w.letters for w in family} == {(3, 2, 1, 3, 2, 3), (3, 2, 3, 1, 2, 3)}


def test_commutation_class_rejects_non_reduced():
    with pytest.raises(ValueError):
        commutation_class_of(Word((1, 1), 3))


def test_is_canonical_and_canonicalize_agree_with_classes():
    # in every class of every rank-4 element, exactly one word is
    # canonical, it is the lex-least one, and canonicalize finds it
    for w in all_permutations(4):
        for word in enumerate_reduced_words(w):
            family = sorted(v.letters for v in commutation_class_of(word))
            least = Word(family[0], 4)
            assert canonicalize(word) == least
            assert is_canonical(word) == (word.letters == family[0])


def test_iter_canonical_words_rank4():
    words = [word_to_string(w) for w in iter_canonical_words(longest_element(4))]
    assert words == [
        "121321", "123212", "132132", "212321",
        "213213", "232123", "321232", "321323",
    ]


def test_count_commutation_classes_known_values():
    for n, expected in KNOWN_COUNTS.items():
        assert count_commutation_classes(longest_element(n)) == expected


def test_count_for_arbitrary_permutations_matches_oracle():
    # exhaustive at rank <= 4; rank 5/6 are covered by the acceptance
    # suite
    for n in range(1, 5):
        for w in all_permutations(n):
            assert count_commutation_classes(w) == len(partition_reduced_words(w))


def test_enumerate_classes_sizes_and_conservation():
    w0 = longest_element(4)
    classes = list(enumerate_classes(w0))
    assert sorted(c.size for c in classes) == [1, 1, 1, 1, 2, 2, 4, 4]
    assert sum(c.size for c in classes) == 16
    assert [c.canonical for c in classes] == list(iter_canonical_words(w0))
    assert all(c.members is None for c in classes)


def test_enumerate_classes_members_match_closure():
    for record in enumerate_classes(longest_element(4), members=True):
        assert record.members is not None
        assert len(record.members) == record.size
        assert set(record.members) == commutation_class_of(record.canonical)
        letter_lists = [m.letters for m in record.members]
        assert letter_lists == sorted(letter_lists)


def test_partition_is_a_partition():
    w0 = longest_element(4)
    classes = partition_reduced_words(w0)
    seen = [w for family in classes for w in family]
    assert len(seen) == 16
    assert len(set(seen)) == 16
    assert {evaluate_word(w) for w in seen} == {w0}


def test_oracle_budget_enforced():
    with pytest.raises(OracleBudgetError) as err:
        partition_reduced_words(longest_element(5), budget=100)
    assert "768" in str(err.value)
    assert "100" in str(err.value)


def test_matsumoto_graph_structure():
    w0 = longest_element(4)
    graph = matsumoto_graph(w0)
    assert len(graph.nodes) == 16
    node_letters = [w.letters for w in graph.nodes]
    assert node_letters == sorted(node_letters)
    # every edge joins words differing by exactly the named move
    for a, b, kind in graph.edges:
        u, v = graph.nodes[a], graph.nodes[b]
        diffs = [k for k in range(6) if u.letters[k] != v.letters[k]]
        if kind == "commutation":
            assert len(diffs) == 2 and diffs[1] == diffs[0] + 1
            k = diffs[0]
            assert u.letters[k] == v.letters[k + 1]
            assert u.letters[k + 1] == v.letters[k]
            assert abs(u.letters[k] - u.letters[k + 1]) > 1
        else:
            assert kind == "braid"
            assert diffs == [diffs[0], diffs[0] + 1, diffs[0] + 2]
            k = diffs[0]
            x, y = u.letters[k], u.letters[k + 1]
            assert abs(x - y) == 1
            assert u.letters[k : k + 3] == (x, y, x)
            assert v.letters[k : k + 3] == (y, x, y)
    assert len(connected_components(graph)) == 1
    assert len(connected_components(graph, {"commutation"})) == 8


def test_matsumoto_connectivity_small_ranks():
    for n in range(1, 5):
        graph = matsumoto_graph(longest_element(n))
        assert len(connected_components(graph)) == 1
        comm = connected_components(graph, {"commutation"})
        assert len(comm) == KNOWN_COUNTS[n]


def test_threads_do_not_change_the_count():
    w0 = longest_element(6)
    single = count_commutation_classes(w0, threads=1)
    assert single == 908
    assert count_commutation_classes(w0, threads=2) == single
    assert count_commutation_classes(w0, threads=8) == single


def test_time_limit_raises_with_partial_count():
    # rank 14 takes the big-integer path, far too large to finish
    with pytest.raises(TimeLimitExceeded) as err:
        count_commutation_classes(longest_element(14), time_limit=0.2)
    assert err.value.partial_count >= 0
    assert err.value.elapsed > 0


def test_time_limit_on_compiled_path():
    with pytest.raises(TimeLimitExceeded):
        count_commutation_classes(longest_element(9), time_limit=0.5)


def test_generous_time_limit_still_returns_exact_count():
    assert count_commutation_classes(longest_element(5), time_limit=600.0) == 62


def test_high_rank_short_element_uses_big_integer_path():
    # rank 15 forces the fallback; a short element keeps it cheap
    images = list(range(1, 16))
    images[0], images[1] = images[1], images[0]
    images[4], images[5] = images[5], images[4]
    w = Permutation(tuple(images))
    assert count_reduced_words(w) == 2
    assert count_commutation_classes(w) == 1
