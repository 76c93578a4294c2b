import pytest
from hypothesis import given, strategies as st

from permpattern_utils import core, utils
from permpattern_utils.core import (EMPTY, InvalidPermutation, Permutation, all_permutations,
                                    complement, descent_positions, descents, inverse,
                                    is_involution, lr_maxima, lr_minima, make_permutation,
                                    projection, reverse, rl_maxima, rl_minima, statistics)


def perms(max_n=7):
    """Strategy for permutations of [n], n <= max_n"""
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    ).map(Permutation)


def test_make_permutation():
    perm = make_permutation([4, 9, 1, 2, 7, 3, 8, 6, 5])
    assert perm.n == 9
    assert str(perm) == "491273865"
    assert repr(perm) == 'Permutation "491273865"'
    assert make_permutation([]) == EMPTY
    assert EMPTY.n == 0


@pytest.mark.parametrize('word', [[1, 3, 3], [0, 1], [1, 2, 4], [2]],
                         ids=['repeated', 'zero', 'gap', 'too_large'])
def test_make_permutation_rejects(word):
    with pytest.raises(InvalidPermutation):
        make_permutation(word)


def test_parse_and_format():
    assert Permutation.parse("491273865") == Permutation([4, 9, 1, 2, 7, 3, 8, 6, 5])
    long_perm = Permutation.parse("10,13,11,9,4,12,6,3,8,1,7,5,2")
    assert long_perm.n == 13
    assert str(long_perm) == "10,13,11,9,4,12,6,3,8,1,7,5,2"
    assert Permutation.parse("") == EMPTY
    with pytest.raises(InvalidPermutation, match="expected digits"):
        Permutation.parse("12a")


def test_error_message_names_item():
    with pytest.raises(InvalidPermutation) as excinfo:
        make_permutation([1, 3, 3])
    assert str(excinfo.value).startswith("'(1, 3, 3)' is not a permutation")
    assert excinfo.value.name == "InvalidPermutation"


@pytest.mark.parametrize('word,expected', [
    ([2, 6, 5], "132"),
    ([], ""),
    ([7], "1"),
    ([10, 30, 20, 40], "1324"),
])
def test_projection(word, expected):
    assert str(projection(word)) == expected


def test_projection_rejects_repeats():
    with pytest.raises(InvalidPermutation):
        projection([3, 3])


def test_symmetries():
    perm = Permutation.parse("132")
    assert str(reverse(perm)) == "231"
    assert str(complement(perm)) == "312"
    assert reverse(EMPTY) == EMPTY
    assert complement(EMPTY) == EMPTY


@given(perms())
def test_symmetries_are_involutions(perm):
    assert reverse(reverse(perm)) == perm
    assert complement(complement(perm)) == perm
    assert inverse(inverse(perm)) == perm


@given(perms())
def test_statistics_under_symmetries(perm):
    assert len(lr_minima(perm)) == len(rl_minima(reverse(perm)))
    assert len(lr_minima(perm)) == len(lr_maxima(complement(perm)))
    assert len(rl_maxima(perm)) == len(lr_maxima(reverse(perm)))
    if perm:
        assert descents(perm) + descents(reverse(perm)) == perm.n - 1


@given(perms())
def test_projection_is_identity_on_permutations(perm):
    assert projection(perm) == perm


def test_statistics_of_example():
    perm = Permutation.parse("847296153")
    profile = statistics(perm)
    assert profile.lr_minima == (1, 2, 4, 7)
    assert [perm[pos - 1] for pos in profile.lr_minima] == [8, 4, 2, 1]
    assert profile.descents == 5
    assert descent_positions(perm) == [1, 3, 5, 6, 8]
    assert profile.lr_maxima == (1, 5)
    assert profile.rl_minima == (7, 9)
    assert profile.rl_maxima == (5, 6, 8, 9)
    assert profile.counts() == (5, 4, 2, 2, 4)


def test_statistics_of_identity():
    for n in range(1, 6):
        identity = Permutation(range(1, n + 1))
        assert descents(identity) == 0
        assert lr_minima(identity) == [1]
        assert rl_minima(identity) == list(range(1, n + 1))


def test_statistics_of_empty():
    profile = statistics(EMPTY)
    assert profile.counts() == (0, 0, 0, 0, 0)
    assert profile.lr_minima == ()


def test_is_involution():
    assert is_involution(Permutation.parse("826543719"))
    assert not is_involution(Permutation.parse("231"))
    assert is_involution(EMPTY)


@pytest.mark.parametrize('n,size', [(0, 1), (1, 1), (3, 6), (5, 120)])
def test_all_permutations(n, size):
    found = list(all_permutations(n))
    assert len(found) == size
    assert found == sorted(found)
    assert len(set(found)) == size


def test_all_permutations_respects_cap():
    utils.set_max_n(4)
    assert len(list(all_permutations(4))) == 24
    with pytest.raises(utils.EnumerationCapExceeded, match="exceeds the enumeration cap"):
        list(all_permutations(5))


def test_all_permutations_rejects_negative():
    with pytest.raises(ValueError):
        list(all_permutations(-1))


def test_module_logger():
    assert core.logger.name == "permpattern_utils.core"
