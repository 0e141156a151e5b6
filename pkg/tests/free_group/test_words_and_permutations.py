import pytest

from common.errors import DomainError
from free_group import GeneratorWord, Letter, Permutation, PermutationPair


class TestGeneratorWord:

    def test_parse_spaced_and_compact(self):
        spaced = GeneratorWord.parse("a a b A")
        compact = GeneratorWord.parse("aabA")
        assert spaced == compact
        assert spaced.letters == (Letter.A, Letter.A, Letter.B, Letter.A_INV)

    def test_parse_inverse_spellings(self):
        assert GeneratorWord.parse("a^-1 b⁻¹") == GeneratorWord.parse("A B")
        assert GeneratorWord.parse("a^-1b") == GeneratorWord.parse("A b")

    def test_empty_word(self):
        empty = GeneratorWord.parse("  ")
        assert empty.length == 0
        assert empty.pretty() == "ε"

    def test_unknown_letter(self):
        with pytest.raises(DomainError):
            GeneratorWord.parse("a c")

    def test_words_are_not_reduced(self):
        assert GeneratorWord.parse("a A").length == 2

    def test_inverse_reverses_and_inverts(self):
        word = GeneratorWord.parse("a b B A b")
        assert str(word.inverse()) == "B a b B A"
        assert word.inverse().inverse() == word

    def test_power(self):
        assert GeneratorWord.power(Letter.A, 3) == GeneratorWord.parse("aaa")
        assert GeneratorWord.power(Letter.B, -2) == GeneratorWord.parse("BB")
        assert GeneratorWord.power(Letter.A, 0).length == 0

    def test_concatenation(self):
        word = GeneratorWord.parse("a") + GeneratorWord.parse("b") + Letter.B_INV
        assert str(word) == "a b B"

    def test_letter_properties(self):
        assert Letter.A.inverse is Letter.A_INV
        assert Letter.B_INV.inverse is Letter.B
        assert Letter.B_INV.generator == 1
        assert Letter.A_INV.is_inverse and not Letter.B.is_inverse


class TestPermutation:

    def test_rejects_non_bijection(self):
        with pytest.raises(DomainError):
            Permutation((0, 0, 1))
        with pytest.raises(DomainError):
            Permutation((1, 2))

    def test_from_cycles(self):
        p = Permutation.from_cycles(5, [(0, 2, 4)])
        assert p.images == (2, 1, 4, 3, 0)
        with pytest.raises(DomainError):
            Permutation.from_cycles(3, [(0, 3)])

    def test_inverse_and_compose(self):
        p = Permutation((2, 0, 3, 1))
        assert p.compose(p.inverse()).is_identity()
        assert p.inverse().compose(p).is_identity()
        assert p.compose(Permutation.identity(4)) == p

    def test_compose_applies_right_first(self):
        p = Permutation((1, 2, 0))
        q = Permutation((0, 2, 1))
        assert p.compose(q)(1) == p(q(1))

    def test_conjugate_by_maps_cycles(self):
        sigma = Permutation.from_cycles(4, [(0, 1)])
        pi = Permutation((0, 2, 1, 3))
        assert sigma.conjugate_by(pi) == Permutation.from_cycles(4, [(0, 2)])

    def test_pair_degree_mismatch(self):
        with pytest.raises(DomainError):
            PermutationPair(Permutation.identity(2), Permutation.identity(3))

    def test_pair_maps_in_letter_order(self):
        pair = PermutationPair.from_images([1, 2, 0], [0, 2, 1])
        assert pair.maps() == ((1, 2, 0), (2, 0, 1), (0, 2, 1), (0, 2, 1))
