import itertools

import pytest

from common.errors import DomainError, EnumerationRefused, PreconditionError
from free_group import (
    GeneratorWord, Letter, Permutation, PermutationPair,
    apply_word, apply_words, canonical_form, conjugate_pair, coset_of, find_relabeling,
    in_stabilizer, is_transitive, letter_matrix, orbit_of_zero, pairs_equivalent,
    pairs_equivalent_bruteforce, trace_word,
)

SHIFT4 = PermutationPair.from_images([1, 2, 3, 0], [0, 1, 2, 3])


def random_pair(rng, r):
    return PermutationPair.from_images(rng.permutation(r), rng.permutation(r))


def random_word(rng, length):
    letters = list(Letter)
    return GeneratorWord(tuple(letters[i] for i in rng.integers(0, 4, length)))


def random_transitive_pair(rng, r):
    while True:
        pair = random_pair(rng, r)
        if is_transitive(pair):
            return pair


def test_apply_word_examples():
    assert apply_word(SHIFT4, GeneratorWord.parse("a a"), 0) == 2
    assert apply_word(SHIFT4, GeneratorWord(), 3) == 3
    assert apply_word(SHIFT4, GeneratorWord.parse("a⁻¹"), 0) == 3
    assert apply_word(SHIFT4, GeneratorWord.parse("A"), 0) == 3


def test_apply_word_rejects_bad_start():
    with pytest.raises(DomainError):
        apply_word(SHIFT4, GeneratorWord.parse("a"), 4)
    with pytest.raises(DomainError):
        apply_word(SHIFT4, GeneratorWord.parse("a"), -1)


def test_action_laws(rng):
    for _ in range(50):
        r = int(rng.integers(1, 9))
        pair = random_pair(rng, r)
        w1 = random_word(rng, int(rng.integers(0, 8)))
        w2 = random_word(rng, int(rng.integers(0, 8)))
        s = int(rng.integers(0, r))
        assert apply_word(pair, w1 + w2, s) == apply_word(pair, w2, apply_word(pair, w1, s))
        for letter in Letter:
            assert apply_word(pair, GeneratorWord((letter, letter.inverse)), s) == s
        assert apply_word(pair, w1 + w1.inverse(), s) == s


def test_trace_word_records_every_point():
    word = GeneratorWord.parse("a a b")
    assert trace_word(SHIFT4, word) == [0, 1, 2, 2]


def test_is_transitive_examples():
    assert is_transitive(SHIFT4)
    assert not is_transitive(PermutationPair.from_images([0, 1], [0, 1]))
    klein = PermutationPair(
        Permutation.from_cycles(4, [(0, 1), (2, 3)]),
        Permutation.from_cycles(4, [(0, 2), (1, 3)]),
    )
    assert is_transitive(klein)


def test_orbit_of_zero_is_breadth_first():
    pair = PermutationPair.from_images([1, 0, 2, 3], [0, 1, 3, 2])
    assert orbit_of_zero(pair) == [0, 1]
    assert orbit_of_zero(SHIFT4) == [0, 1, 3, 2]


def test_transitive_iff_orbit_has_size_r(rng):
    for _ in range(100):
        r = int(rng.integers(1, 7))
        pair = random_pair(rng, r)
        assert is_transitive(pair) == (len(orbit_of_zero(pair)) == r)


def test_coset_of_examples():
    assert coset_of(SHIFT4, GeneratorWord()) == 0
    assert coset_of(SHIFT4, GeneratorWord.parse("b")) == 0
    assert coset_of(SHIFT4, GeneratorWord.parse("a a a")) == 3
    assert in_stabilizer(SHIFT4, GeneratorWord.parse("a a a a b"))


def test_coset_of_requires_transitive_pair():
    with pytest.raises(PreconditionError):
        coset_of(PermutationPair.from_images([0, 1], [0, 1]), GeneratorWord.parse("a"))


def test_pairs_equivalent_examples():
    p = PermutationPair.from_images([1, 2, 0], [0, 2, 1])
    swap = Permutation.from_cycles(3, [(1, 2)])
    assert pairs_equivalent(p, p)
    assert pairs_equivalent(p, conjugate_pair(p, swap))

    first = PermutationPair.from_images([1, 0], [0, 1])
    second = PermutationPair.from_images([1, 0], [1, 0])
    assert not pairs_equivalent(first, second)


def test_pairs_equivalent_degree_mismatch():
    with pytest.raises(DomainError):
        pairs_equivalent(SHIFT4, PermutationPair.from_images([1, 0], [0, 1]))


def test_find_relabeling_conjugates_and_fixes_zero(rng):
    for _ in range(30):
        r = int(rng.integers(2, 8))
        pair = random_transitive_pair(rng, r)
        pi = Permutation((0,) + tuple(int(x) + 1 for x in rng.permutation(r - 1)))
        other = conjugate_pair(pair, pi)
        found = find_relabeling(pair, other)
        assert found is not None
        assert found(0) == 0
        assert pair.conjugate_by(found) == other


def test_equivalence_matches_bruteforce_and_canonical_form(rng):
    for _ in range(60):
        r = int(rng.integers(2, 6))
        p1 = random_transitive_pair(rng, r)
        p2 = random_transitive_pair(rng, r)
        fast = pairs_equivalent(p1, p2)
        assert fast == pairs_equivalent_bruteforce(p1, p2)
        assert fast == (canonical_form(p1) == canonical_form(p2))


def test_equivalence_is_an_equivalence_relation(rng):
    pairs = [random_transitive_pair(rng, 4) for _ in range(12)]
    for p in pairs:
        assert pairs_equivalent(p, p)
    for p, q in itertools.product(pairs, repeat=2):
        assert pairs_equivalent(p, q) == pairs_equivalent(q, p)
    for p, q, s in itertools.product(pairs[:6], repeat=3):
        if pairs_equivalent(p, q) and pairs_equivalent(q, s):
            assert pairs_equivalent(p, s)


def test_equivalent_pairs_share_stabilizer(rng):
    for _ in range(20):
        r = int(rng.integers(2, 7))
        p1 = random_transitive_pair(rng, r)
        pi = Permutation((0,) + tuple(int(x) + 1 for x in rng.permutation(r - 1)))
        p2 = conjugate_pair(p1, pi)
        for _ in range(20):
            word = random_word(rng, int(rng.integers(0, 10)))
            assert in_stabilizer(p1, word) == in_stabilizer(p2, word)


def test_bruteforce_refused_above_cutoff():
    p = PermutationPair.from_images(list(range(1, 8)) + [0], list(range(8)))
    with pytest.raises(EnumerationRefused):
        pairs_equivalent_bruteforce(p, p, cutoff=7)


def test_apply_words_matches_apply_word(rng):
    pair = random_pair(rng, 9)
    words = [random_word(rng, int(rng.integers(0, 12))) for _ in range(25)]
    starts = rng.integers(0, 9, len(words))
    ends = apply_words(pair, letter_matrix(words), starts=starts)
    for word, start, end in zip(words, starts, ends):
        assert apply_word(pair, word, int(start)) == end


def test_apply_words_records_inputs_to_letter():
    words = [GeneratorWord.parse("a b a b"), GeneratorWord.parse("a")]
    pair = PermutationPair.from_images([1, 2, 3, 0], [0, 3, 2, 1])
    ends, recorded = apply_words(pair, letter_matrix(words), record_letter=Letter.B)
    assert ends.tolist() == [0, 1]
    assert recorded[0].tolist() == [-1, 1, -1, 0]
    assert (recorded[1] == -1).all()
