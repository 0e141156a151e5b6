import pytest

from common.errors import DomainError
from cover_family import (
    ConstraintMode, FamilySpec, b_inputs, coset_rep_word, family_members, length_bound,
    representative_table, sigma1, verify_representatives,
)
from free_group import GeneratorWord, Permutation, PermutationPair, apply_word, trace_word

R_GRID = sorted(set(range(5, 70)) | {2 ** e for e in range(7, 11)} | {97, 255, 513, 1023})


def doubling_pair(r):
    spec = FamilySpec(r)
    sigma = next(iter(family_members(spec, budget=1, seed=0)))
    return PermutationPair(sigma1(r), sigma)


def test_coset_rep_word_example():
    even, odd = coset_rep_word(5, 32)
    assert str(even.word) == "a a b b a a"
    assert even.coset == 10
    assert str(odd.word) == "a a b b a a a"
    assert odd.coset == 11

    pair = doubling_pair(32)
    assert trace_word(pair, even.word) == [0, 1, 2, 4, 8, 9, 10]
    assert b_inputs(pair, even.word) == [2, 4]


def test_identity_coset_words():
    even, odd = coset_rep_word(0, 8)
    assert even.word == GeneratorWord()
    assert str(odd.word) == "a"


def test_odd_degree_wraps_last_odd_coset():
    _, odd = coset_rep_word(3, 7)
    assert odd.coset == 0
    assert apply_word(doubling_pair(7), odd.word, 0) == 0


def test_coset_rep_word_rejects_out_of_range():
    with pytest.raises(DomainError):
        coset_rep_word(4, 8)
    with pytest.raises(DomainError):
        coset_rep_word(-1, 8)
    with pytest.raises(DomainError):
        coset_rep_word(1, 4)


@pytest.mark.parametrize("r", [5, 6, 7, 8, 31, 64])
def test_representative_table_covers_every_coset(r):
    table = representative_table(r)
    assert list(table) == list(range(r))
    pair = doubling_pair(r)
    for coset, rep in table.items():
        assert apply_word(pair, rep.word, 0) == coset


def test_length_bound():
    assert length_bound(1) == pytest.approx(3.0)
    assert length_bound(8) == pytest.approx(12.0)
    with pytest.raises(DomainError):
        length_bound(0)
    for i in range(1, 600):
        even, _ = coset_rep_word(i, 1200)
        assert even.length <= length_bound(i)


@pytest.mark.parametrize("mode", list(ConstraintMode))
def test_representatives_valid_across_degrees(mode):
    for r in R_GRID:
        spec = FamilySpec(r, mode)
        report = verify_representatives(spec, family_members(spec, budget=3, seed=r))
        assert report.valid, f"r={r}"
        assert report.members_checked == 3
        assert report.max_length <= report.max_length_bound + 1


def test_verify_representatives_flags_bad_member():
    spec = FamilySpec(8)
    report = verify_representatives(spec, [Permutation.identity(8)])
    assert not report.valid
    assert report.landing_failures
    assert report.members_checked == 1


@pytest.mark.slow
@pytest.mark.parametrize("mode", list(ConstraintMode))
def test_representatives_valid_up_to_two_to_the_sixteenth(mode):
    for exponent in range(3, 17):
        r = 2 ** exponent
        spec = FamilySpec(r, mode)
        report = verify_representatives(spec, family_members(spec, budget=100, seed=exponent))
        assert report.valid, f"r={r}"
        assert report.members_checked == 100
        assert report.words_checked == 100 * r
