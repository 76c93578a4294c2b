"""
Permutations as Words

A permutation of ``[n]`` is stored as its one-line word. This module
provides the immutable `Permutation` value, the symmetry maps
(reverse, complement), the projection of a word onto ``S_n`` and the
statistics used throughout the package (descents and the four kinds of
left/right minima/maxima).

Text form: letters are written without separator when ``n <= 9`` and
separated by commas otherwise (``"491273865"``,
``"10,13,11,9,4,12,6,3,8,1,7,5,2"``).
"""

import itertools
import logging

from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from .utils import PermPatternError, check_cap


logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class InvalidPermutation(PermPatternError):
    """Raised if a word is not a permutation of ``[n]``"""
    template = "is not a permutation: %s"


class Permutation(tuple):
    """A permutation of ``[n]`` in one-line notation

    Behaves as the tuple of its letters. Instances are validated on
    construction and immutable.

    >>> Permutation([4, 9, 1, 2, 7, 3, 8, 6, 5])
    Permutation "491273865"
    """
    __slots__ = ()

    def __new__(cls, word: Iterable[int] = ()) -> "Permutation":
        letters = tuple(int(letter) for letter in word)
        n = len(letters)
        seen = set()
        for letter in letters:
            if letter in seen:
                raise InvalidPermutation(letters, f"repeated letter {letter}")
            if not 1 <= letter <= n:
                raise InvalidPermutation(letters, f"letter {letter} outside 1..{n}")
            seen.add(letter)
        return super().__new__(cls, letters)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Reads a permutation from its text form"""
        text = text.strip()
        try:
            if ',' in text:
                letters = [int(tok) for tok in text.split(',')]
            else:
                letters = [int(tok) for tok in text]
        except ValueError:
            raise InvalidPermutation(text, "expected digits or comma separated integers")
        return cls(letters)

    @property
    def word(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        if len(self) <= 9:
            return ''.join(str(letter) for letter in self)
        return ','.join(str(letter) for letter in self)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__} "{self}"'


#: The empty permutation
EMPTY = Permutation()


def make_permutation(word: Iterable[int]) -> Permutation:
    """Validates **word** and returns it as `Permutation`"""
    return Permutation(word)


def projection(word: Sequence[int]) -> Permutation:
    """Projects a word without repeated letters onto ``S_n``

    Letter ``x_i`` is replaced by the number of letters ``x_j`` with
    ``x_i >= x_j``. The result is order equivalent to **word**.

    >>> str(projection([2, 6, 5]))
    '132'
    """
    word = list(word)
    if len(set(word)) != len(word):
        raise InvalidPermutation(word, "repeated letters cannot be projected")
    ranks = {letter: rank for rank, letter in enumerate(sorted(word), 1)}
    return Permutation(ranks[letter] for letter in word)


def reverse(p: Permutation) -> Permutation:
    """Returns ``a_n ... a_2 a_1``"""
    return Permutation(reversed(p))


def complement(p: Permutation) -> Permutation:
    """Replaces each letter ``a`` by ``n + 1 - a``"""
    n = len(p)
    return Permutation(n + 1 - letter for letter in p)


def inverse(p: Permutation) -> Permutation:
    """Returns the group inverse of **p**"""
    result = [0] * len(p)
    for pos, letter in enumerate(p, 1):
        result[letter - 1] = pos
    return Permutation(result)


def is_involution(p: Permutation) -> bool:
    return all(p[letter - 1] == pos for pos, letter in enumerate(p, 1))


class StatisticProfile(NamedTuple):
    """Classical statistics of a permutation

    Position lists are 1-based and strictly increasing.
    """

    #: Number of ``i`` with ``a_i > a_{i+1}``
    descents: int

    #: Positions of letters smaller than every letter to their left
    lr_minima: Tuple[int, ...]

    #: Positions of letters larger than every letter to their left
    lr_maxima: Tuple[int, ...]

    #: Positions of letters smaller than every letter to their right
    rl_minima: Tuple[int, ...]

    #: Positions of letters larger than every letter to their right
    rl_maxima: Tuple[int, ...]

    def counts(self) -> Tuple[int, int, int, int, int]:
        return (self.descents, len(self.lr_minima), len(self.lr_maxima),
                len(self.rl_minima), len(self.rl_maxima))


def descents(p: Sequence[int]) -> int:
    return sum(1 for left, right in zip(p, p[1:]) if left > right)


def descent_positions(p: Sequence[int]) -> List[int]:
    return [pos for pos, (left, right) in enumerate(zip(p, p[1:]), 1) if left > right]


def _running_records(letters: Iterable[Tuple[int, int]], smaller: bool) -> List[int]:
    records = []
    best = None
    for pos, letter in letters:
        if best is None or (letter < best if smaller else letter > best):
            best = letter
            records.append(pos)
    return records


def lr_minima(p: Sequence[int]) -> List[int]:
    """Positions of the left-to-right minima

    A letter is a left-to-right minimum if it is strictly smaller than
    every letter to its left. The first letter always qualifies.
    """
    return _running_records(enumerate(p, 1), smaller=True)


def lr_maxima(p: Sequence[int]) -> List[int]:
    return _running_records(enumerate(p, 1), smaller=False)


def rl_minima(p: Sequence[int]) -> List[int]:
    positions = _running_records(reversed(list(enumerate(p, 1))), smaller=True)
    return sorted(positions)


def rl_maxima(p: Sequence[int]) -> List[int]:
    positions = _running_records(reversed(list(enumerate(p, 1))), smaller=False)
    return sorted(positions)


def statistics(p: Permutation) -> StatisticProfile:
    """Computes all five statistics of **p**"""
    return StatisticProfile(
        descents=descents(p),
        lr_minima=tuple(lr_minima(p)),
        lr_maxima=tuple(lr_maxima(p)),
        rl_minima=tuple(rl_minima(p)),
        rl_maxima=tuple(rl_maxima(p)),
    )


def all_permutations(n: int) -> Iterator[Permutation]:
    """Yields ``S_n`` in lexicographic order

    Raises:
      EnumerationCapExceeded: if **n** is above the configured cap
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    check_cap(n, "S_n")
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)
