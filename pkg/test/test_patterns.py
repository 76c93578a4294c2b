import itertools

import pytest
from hypothesis import given, strategies as st

from permpattern_utils import utils
from permpattern_utils.core import Permutation, all_permutations, complement, reverse
from permpattern_utils.patterns import (ONE_DASH_PATTERNS, GeneralizedPattern,
                                        PatternSyntaxError, as_pattern, avoiders, avoids,
                                        complement_pattern, count, distribution,
                                        occurrences, parse_pattern, pattern_classes,
                                        reverse_pattern, symmetry_classes)

from conftest import TEST_DATA


PATTERN_CASES = TEST_DATA['patterns']
PATTERN_IDS = [case['name'] for case in PATTERN_CASES]
BAD_PATTERN_CASES = TEST_DATA['bad_patterns']
BAD_PATTERN_IDS = [case['name'] for case in BAD_PATTERN_CASES]
OCCURRENCE_CASES = TEST_DATA['occurrences']
OCCURRENCE_IDS = [case['name'] for case in OCCURRENCE_CASES]
AVOIDER_CASES = TEST_DATA['avoider_counts']
AVOIDER_IDS = [case['name'] for case in AVOIDER_CASES]


def is_occurrence(pattern, host, positions):
    """Checks adjacency and order type of an occurrence directly"""
    if list(positions) != sorted(set(positions)):
        return False
    for (left, right), adjacent in zip(zip(positions, positions[1:]), pattern.adjacent):
        if adjacent and right != left + 1:
            return False
    letters = [host[pos - 1] for pos in positions]
    order = sorted(letters)
    return [order.index(letter) + 1 for letter in letters] == list(pattern.ranks)


def brute_force(pattern, host):
    return [positions
            for positions in itertools.combinations(range(1, len(host) + 1), pattern.k)
            if is_occurrence(pattern, host, positions)]


def perms(max_n=7):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    ).map(Permutation)


@pytest.mark.parametrize('case', PATTERN_CASES, ids=PATTERN_IDS)
def test_parse_pattern(case):
    pattern = parse_pattern(case['text'])
    assert list(pattern.ranks) == case['ranks']
    assert list(pattern.adjacent) == case['adjacent']
    assert parse_pattern(str(pattern)) == pattern


@pytest.mark.parametrize('case', BAD_PATTERN_CASES, ids=BAD_PATTERN_IDS)
def test_parse_pattern_rejects(case):
    with pytest.raises(PatternSyntaxError):
        parse_pattern(case['text'])


def test_syntax_error_locates_token():
    with pytest.raises(PatternSyntaxError) as excinfo:
        parse_pattern("a--bc")
    assert excinfo.value.token == "--"
    assert excinfo.value.offset == 1
    assert "consecutive dashes" in str(excinfo.value)


def test_pattern_equivalence():
    assert parse_pattern("x-zy") == parse_pattern("a-cb")
    assert str(parse_pattern("x-zy")) == "a-cb"
    assert parse_pattern("a-bc") != parse_pattern("ab-c")
    assert as_pattern(parse_pattern("ba")) == parse_pattern("ba")
    assert repr(parse_pattern("a-bc")) == 'GeneralizedPattern "a-bc"'


def test_pattern_properties():
    assert parse_pattern("a-b-c").is_classical
    assert parse_pattern("abc").is_contiguous
    assert parse_pattern("a-bc").k == 3
    assert GeneralizedPattern([2, 1]) == parse_pattern("b-a")


@pytest.mark.parametrize('ranks,adjacent', [([1, 1], [True]), ([1, 2], []), ([], [])],
                         ids=['repeated_rank', 'flag_count', 'empty'])
def test_pattern_constructor_validates(ranks, adjacent):
    with pytest.raises(PatternSyntaxError):
        GeneralizedPattern(ranks, adjacent)


def test_reverse_and_complement_pattern():
    assert str(reverse_pattern("a-bc")) == "cb-a"
    assert str(complement_pattern("a-bc")) == "c-ba"
    assert str(complement_pattern(reverse_pattern("a-bc"))) == "ab-c"


@pytest.mark.parametrize('case', OCCURRENCE_CASES, ids=OCCURRENCE_IDS)
def test_occurrences(case):
    host = Permutation.parse(case['perm'])
    found = occurrences(case['pattern'], host)
    assert [list(occ) for occ in found.positions] == case['positions']
    assert [list(letters) for letters in found.values()] == case['letters']
    assert found.count == len(case['positions'])
    assert count(case['pattern'], host) == found.count
    assert found.to_dict()['pattern'] == str(parse_pattern(case['pattern']))


def test_count_of_example():
    assert count("a-bc", Permutation.parse("491273865")) == 3


def test_descents_are_pattern_ba():
    for perm in all_permutations(5):
        assert count("ba", perm) == sum(1 for a, b in zip(perm, perm[1:]) if a > b)


@given(perms(), st.sampled_from(ONE_DASH_PATTERNS + tuple(
    parse_pattern(text) for text in ("a-b-c", "abc", "b-a", "ab", "a-cb-d", "ba-dc"))))
def test_occurrences_match_brute_force(perm, pattern):
    found = occurrences(pattern, perm)
    assert [tuple(occ) for occ in found.positions] == brute_force(pattern, perm)


@given(perms(), st.sampled_from(ONE_DASH_PATTERNS))
def test_symmetries_transport_occurrences(perm, pattern):
    num = count(pattern, perm)
    assert count(reverse_pattern(pattern), reverse(perm)) == num
    assert count(complement_pattern(pattern), complement(perm)) == num


@pytest.mark.parametrize('case', AVOIDER_CASES, ids=AVOIDER_IDS)
def test_avoider_counts(case):
    for n, expected in enumerate(case['counts']):
        assert sum(1 for _ in avoiders(case['patterns'], n)) == expected


@pytest.mark.parametrize('patterns', [['a-bc'], ['b-ac'], ['a-bc', 'ac-b'], ['ab'], []],
                         ids=['a-bc', 'b-ac', 'motzkin', 'increasing_pair', 'none'])
def test_avoiders_match_filter(patterns):
    for n in range(6):
        expected = [perm for perm in all_permutations(n) if avoids(patterns, perm)]
        assert list(avoiders(patterns, n)) == expected


def test_avoids():
    assert avoids(['a-bc'], Permutation.parse("847296153"))
    assert not avoids(['a-bc'], Permutation.parse("491273865"))
    assert avoids([], Permutation.parse("123"))
    assert avoids(['a-bc'], Permutation())


def test_avoiders_respects_cap():
    utils.set_max_n(3)
    with pytest.raises(utils.EnumerationCapExceeded):
        list(avoiders(['a-bc'], 4))


def test_distribution():
    dist = distribution("ba", 3)
    assert dict(dist) == {0: 1, 1: 4, 2: 1}
    assert sum(distribution("a-bc", 5).values()) == 120


def test_one_dash_patterns():
    assert len(ONE_DASH_PATTERNS) == 12
    assert len(set(ONE_DASH_PATTERNS)) == 12
    for pattern in ONE_DASH_PATTERNS:
        assert pattern.k == 3
        assert sum(1 for flag in pattern.adjacent if not flag) == 1


def test_symmetry_classes():
    classes = [[str(pattern) for pattern in group]
               for group in symmetry_classes(ONE_DASH_PATTERNS)]
    assert classes == [
        ["a-bc", "c-ba", "ab-c", "cb-a"],
        ["a-cb", "c-ab", "ba-c", "bc-a"],
        ["b-ac", "b-ca", "ac-b", "ca-b"],
    ]


def test_pattern_classes_at_four():
    classes = {frozenset(str(pattern) for pattern in group)
               for group in pattern_classes(ONE_DASH_PATTERNS, 4)}
    orbits = {frozenset(str(pattern) for pattern in group)
              for group in symmetry_classes(ONE_DASH_PATTERNS)}
    assert classes == orbits


def test_pattern_classes_merge_below_four():
    # on S_3 every one-dash pattern occurs in exactly one permutation
    assert len(pattern_classes(ONE_DASH_PATTERNS, 3)) == 1
