"""
Generalized (dashed) Permutation Patterns

Patterns are written over the letters ``a..z`` with single dashes
between some of them, e.g. ``a-bc``. Letters not separated by a dash
must occupy adjacent positions of the host permutation; the alphabetical
order of the letters gives the order type the occurrence must have.
Leading and trailing dashes are implicit and are rejected when written.

A pattern is matched by placing its *segments* (maximal runs of letters
without a dash between them) as contiguous windows of the host, left to
right, each window starting after the previous one ends. Every letter
placed is compared only with the two already placed letters that are its
nearest neighbours in rank.
"""

import logging

from collections import Counter
from functools import lru_cache
from typing import (Any, Dict, Iterable, Iterator, List, NamedTuple, Optional,
                    Sequence, Tuple, Union)

import networkx as nx
import regex as re

from .core import Permutation, all_permutations
from .utils import PermPatternError, check_cap


logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

#: Characters allowed in pattern text
RE_BAD_CHAR = re.compile(r"[^a-z-]")
#: Two dashes in a row
RE_DOUBLE_DASH = re.compile(r"--")


class PatternSyntaxError(PermPatternError):
    """Raised for pattern text that does not follow the grammar

    ``self.token`` and ``self.offset`` locate the offending part.
    """
    template = "is not a valid pattern: %s"

    def __init__(self, item, reason, token=None, offset=None):
        if token is not None:
            reason = f"{reason} (token '{token}' at offset {offset})"
        super().__init__(item, reason)
        self.token = token
        self.offset = offset


class _PatternBase(NamedTuple):
    ranks: Tuple[int, ...]
    adjacent: Tuple[bool, ...]


class GeneralizedPattern(_PatternBase):
    """A pattern given by the order type of its letters and adjacency flags

    ``adjacent[i]`` is true if there is no dash between letters ``i`` and
    ``i + 1``. Two patterns are equivalent exactly if they compare equal.
    """
    __slots__ = ()

    def __new__(cls, ranks: Sequence[int], adjacent: Optional[Sequence[bool]] = None):
        ranks = tuple(int(rank) for rank in ranks)
        k = len(ranks)
        if k == 0:
            raise PatternSyntaxError(ranks, "pattern must have at least one letter")
        if sorted(ranks) != list(range(1, k + 1)):
            raise PatternSyntaxError(ranks, f"ranks must be a permutation of 1..{k}")
        if adjacent is None:
            adjacent = (False,) * (k - 1)
        adjacent = tuple(bool(flag) for flag in adjacent)
        if len(adjacent) != k - 1:
            raise PatternSyntaxError(ranks, f"expected {k - 1} adjacency flags")
        return super().__new__(cls, ranks, adjacent)

    @property
    def k(self) -> int:
        return len(self.ranks)

    @property
    def is_classical(self) -> bool:
        return not any(self.adjacent)

    @property
    def is_contiguous(self) -> bool:
        return all(self.adjacent)

    def __str__(self) -> str:
        text = chr(ord('a') + self.ranks[0] - 1)
        for rank, adjacent in zip(self.ranks[1:], self.adjacent):
            if not adjacent:
                text += '-'
            text += chr(ord('a') + rank - 1)
        return text

    def __repr__(self) -> str:
        return f'{self.__class__.__name__} "{self}"'


PatternLike = Union[str, GeneralizedPattern]


def parse_pattern(text: str) -> GeneralizedPattern:
    """Parses the dashed pattern syntax

    >>> parse_pattern("a-bc")
    GeneralizedPattern "a-bc"
    >>> parse_pattern("a-bc").adjacent
    (False, True)
    """
    if not text:
        raise PatternSyntaxError(text, "empty pattern")
    match = RE_BAD_CHAR.search(text)
    if match:
        raise PatternSyntaxError(text, "unexpected character",
                                 match.group(0), match.start())
    match = RE_DOUBLE_DASH.search(text)
    if match:
        raise PatternSyntaxError(text, "consecutive dashes", match.group(0), match.start())
    if text[0] == '-':
        raise PatternSyntaxError(text, "leading dash", '-', 0)
    if text[-1] == '-':
        raise PatternSyntaxError(text, "trailing dash", '-', len(text) - 1)

    letters: List[str] = []
    adjacent: List[bool] = []
    dash = False
    for offset, char in enumerate(text):
        if char == '-':
            dash = True
            continue
        if char in letters:
            raise PatternSyntaxError(text, "repeated letter", char, offset)
        if letters:
            adjacent.append(not dash)
        letters.append(char)
        dash = False
    order = {letter: rank for rank, letter in enumerate(sorted(letters), 1)}
    return GeneralizedPattern([order[letter] for letter in letters], adjacent)


def as_pattern(pattern: PatternLike) -> GeneralizedPattern:
    """Parses **pattern** if given as text"""
    if isinstance(pattern, GeneralizedPattern):
        return pattern
    return parse_pattern(pattern)


def reverse_pattern(pattern: PatternLike) -> GeneralizedPattern:
    """Pattern whose occurrences in ``reverse(p)`` mirror those in ``p``"""
    pattern = as_pattern(pattern)
    return GeneralizedPattern(pattern.ranks[::-1], pattern.adjacent[::-1])


def complement_pattern(pattern: PatternLike) -> GeneralizedPattern:
    """Pattern whose occurrences in ``complement(p)`` mirror those in ``p``"""
    pattern = as_pattern(pattern)
    k = pattern.k
    return GeneralizedPattern([k + 1 - rank for rank in pattern.ranks], pattern.adjacent)


#: The twelve patterns of length three with exactly one dash
ONE_DASH_PATTERNS: Tuple[GeneralizedPattern, ...] = tuple(parse_pattern(text) for text in (
    "a-bc", "c-ba", "ab-c", "cb-a",
    "a-cb", "c-ab", "ba-c", "bc-a",
    "b-ac", "b-ca", "ac-b", "ca-b",
))


class _Plan(NamedTuple):
    """Precomputed matching plan of a pattern"""
    #: (first slot, length) of each dash-free run
    segments: Tuple[Tuple[int, int], ...]
    #: for each slot, the earlier slot of next smaller rank (or -1)
    below: Tuple[int, ...]
    #: for each slot, the earlier slot of next larger rank (or -1)
    above: Tuple[int, ...]
    #: number of slots from the start of each segment to the pattern end
    tail: Tuple[int, ...]


@lru_cache(maxsize=None)
def _plan(pattern: GeneralizedPattern) -> _Plan:
    segments = []
    start = 0
    for slot, adjacent in enumerate(pattern.adjacent, 1):
        if not adjacent:
            segments.append((start, slot - start))
            start = slot
    segments.append((start, pattern.k - start))

    below, above = [], []
    for slot, rank in enumerate(pattern.ranks):
        earlier = pattern.ranks[:slot]
        smaller = [r for r in earlier if r < rank]
        larger = [r for r in earlier if r > rank]
        below.append(earlier.index(max(smaller)) if smaller else -1)
        above.append(earlier.index(min(larger)) if larger else -1)

    tail = tuple(pattern.k - first for first, _ in segments)
    return _Plan(tuple(segments), tuple(below), tuple(above), tail)


def _search(pattern: GeneralizedPattern, word: Sequence[int],
            anchored: bool = False) -> Iterator[Tuple[int, ...]]:
    """Yields 0-based position tuples of all occurrences in lexicographic order

    If **anchored**, only occurrences whose first letter is at position 0.
    """
    n = len(word)
    k = pattern.k
    if k > n:
        return
    plan = _plan(pattern)
    positions = [0] * k

    def fits(slot: int, letter: int) -> bool:
        low = plan.below[slot]
        if low >= 0 and word[positions[low]] > letter:
            return False
        high = plan.above[slot]
        if high >= 0 and word[positions[high]] < letter:
            return False
        return True

    def place(seg: int, start: int) -> Iterator[Tuple[int, ...]]:
        if seg == len(plan.segments):
            yield tuple(positions)
            return
        first, length = plan.segments[seg]
        last_start = n - plan.tail[seg]
        if anchored and seg == 0:
            last_start = 0
        for window in range(start, last_start + 1):
            for offset in range(length):
                letter = word[window + offset]
                if not fits(first + offset, letter):
                    break
                positions[first + offset] = window + offset
            else:
                yield from place(seg + 1, window + length)

    yield from place(0, 0)


class OccurrenceSet(NamedTuple):
    """All occurrences (p-subwords) of a pattern in a host permutation"""

    #: The pattern searched for
    pattern: GeneralizedPattern

    #: The permutation searched
    host: Permutation

    #: 1-based position tuples in lexicographic order
    positions: Tuple[Tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.positions)

    def values(self) -> List[Tuple[int, ...]]:
        """Letters of the host at each occurrence"""
        return [tuple(self.host[pos - 1] for pos in occ) for occ in self.positions]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pattern": str(self.pattern),
            "count": self.count,
            "positions": [list(occ) for occ in self.positions],
        }


def occurrences(pattern: PatternLike, host: Permutation) -> OccurrenceSet:
    """Finds every p-subword of **host**

    >>> occurrences("a-bc", Permutation.parse("491273865")).values()
    [(1, 2, 7), (1, 3, 8), (2, 3, 8)]
    """
    pattern = as_pattern(pattern)
    positions = tuple(tuple(pos + 1 for pos in occ) for occ in _search(pattern, host))
    return OccurrenceSet(pattern, host, positions)


def count(pattern: PatternLike, host: Sequence[int]) -> int:
    """Number of p-subwords of **host** (the pattern as a statistic)"""
    pattern = as_pattern(pattern)
    total = 0
    for _ in _search(pattern, host):
        total += 1
    return total


def _contains(pattern: GeneralizedPattern, host: Sequence[int], anchored: bool = False) -> bool:
    for _ in _search(pattern, host, anchored):
        return True
    return False


def avoids(patterns: Iterable[PatternLike], host: Sequence[int]) -> bool:
    """True if **host** contains no occurrence of any of **patterns**"""
    return not any(_contains(as_pattern(pattern), host) for pattern in patterns)


def avoiders(patterns: Iterable[PatternLike], n: int) -> Iterator[Permutation]:
    """Yields ``S_n(P)`` in lexicographic order

    Produces the same sequence as filtering `all_permutations` through
    `avoids`. Words are grown letter by letter; since an occurrence in a
    prefix is an occurrence in the whole word, a prefix is dropped as soon
    as an occurrence ends at its last letter.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    check_cap(n, "S_n")
    # occurrences ending at the last letter are occurrences of the
    # reversed pattern starting at the first letter of the reversed word
    mirrored = [reverse_pattern(pattern) for pattern in patterns]
    word: List[int] = []
    used = [False] * (n + 1)

    def grow() -> Iterator[Permutation]:
        if len(word) == n:
            yield Permutation(word)
            return
        for letter in range(1, n + 1):
            if used[letter]:
                continue
            word.append(letter)
            backwards = word[::-1]
            if not any(_contains(pattern, backwards, anchored=True) for pattern in mirrored):
                used[letter] = True
                yield from grow()
                used[letter] = False
            word.pop()

    yield from grow()


def distribution(pattern: PatternLike, n: int) -> Counter:
    """Distribution of the pattern statistic over ``S_n`` (value -> frequency)"""
    pattern = as_pattern(pattern)
    return Counter(count(pattern, perm) for perm in all_permutations(n))


def pattern_classes(patterns: Iterable[PatternLike], n: int) -> List[List[GeneralizedPattern]]:
    """Groups patterns whose statistics are equidistributed over ``S_n``

    Groups appear in order of their first member in **patterns**.
    """
    check_cap(n, "S_n")
    groups: Dict[Tuple[Tuple[int, int], ...], List[GeneralizedPattern]] = {}
    for pattern in patterns:
        pattern = as_pattern(pattern)
        key = tuple(sorted(distribution(pattern, n).items()))
        logger.debug("Distribution of %s over S_%i: %s", pattern, n, key)
        groups.setdefault(key, []).append(pattern)
    return list(groups.values())


def symmetry_classes(patterns: Iterable[PatternLike]) -> List[List[GeneralizedPattern]]:
    """Groups patterns connected by reverse and complement

    Members of one group are equidistributed on every ``S_n``, as
    reverse and complement are bijections on ``S_n`` transporting
    occurrences.
    """
    patterns = [as_pattern(pattern) for pattern in patterns]
    graph = nx.Graph()
    graph.add_nodes_from(patterns)
    for pattern in patterns:
        for image in (reverse_pattern(pattern), complement_pattern(pattern)):
            if image in graph:
                graph.add_edge(pattern, image)
    order = {pattern: num for num, pattern in enumerate(patterns)}
    components = [sorted(component, key=order.get)
                  for component in nx.connected_components(graph)]
    return sorted(components, key=lambda component: order[component[0]])
