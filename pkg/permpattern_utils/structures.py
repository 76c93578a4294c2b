"""
Set Partitions, Involutions and Lattice Paths

Validated value types with exhaustive generators:

- `SetPartition` -- blocks of ``[n]``, kept in canonical form (blocks
  ordered by least element, elements increasing). Text form separates
  blocks with ``/`` and elements with ``,``, e.g.
  ``"1,2,5,13/3,8/4,6,7/9/10,11,12"``.
- `InvolutionPerm` -- a permutation that is its own inverse, with its
  2-cycles and fixed points.
- `DyckPath` and `MotzkinPath` -- words over ``{u,d}`` and ``{u,l,d}``
  that never dip below the axis and end on it. The level step may also be
  written ``ℓ``.
"""

import logging

from typing import Any, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from .core import InvalidPermutation, Permutation, is_involution
from .utils import PermPatternError, check_cap


logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class InvalidPartition(PermPatternError):
    """Raised if blocks do not form a set partition of ``[n]``"""
    template = "is not a set partition: %s"


class InvalidPath(PermPatternError):
    """Raised for malformed lattice path words"""
    template = "is not a valid %s path: %s"


class SetPartition:
    """A partition of ``[n]`` into non-empty disjoint blocks

    Arguments:
      blocks: iterable of iterables of integers
      n: size of the ground set; defaults to the number of elements given
    """
    __slots__ = ('blocks', 'n')

    def __init__(self, blocks: Iterable[Iterable[int]], n: Optional[int] = None) -> None:
        canonical = []
        seen = set()
        for block in blocks:
            block = sorted(int(elem) for elem in block)
            if not block:
                raise InvalidPartition(blocks, "empty block")
            for elem in block:
                if elem in seen:
                    raise InvalidPartition(blocks, f"element {elem} in two blocks")
                seen.add(elem)
            canonical.append(tuple(block))
        if n is None:
            n = len(seen)
        if seen != set(range(1, n + 1)):
            raise InvalidPartition(blocks, f"blocks do not cover 1..{n} exactly")
        canonical.sort()
        #: Blocks in canonical order
        self.blocks: Tuple[Tuple[int, ...], ...] = tuple(canonical)
        #: Size of the ground set
        self.n: int = n

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Reads the ``/`` separated text form"""
        text = text.strip()
        if not text:
            return cls([])
        try:
            blocks = [[int(elem) for elem in block.split(',')] for block in text.split('/')]
        except ValueError:
            raise InvalidPartition(text, "expected blocks of comma separated integers")
        return cls(blocks)

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls([[elem] for elem in range(1, n + 1)], n)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.blocks)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __str__(self) -> str:
        return '/'.join(','.join(str(elem) for elem in block) for block in self.blocks)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__} "{self}"'

    def non_singletons(self) -> List[Tuple[int, ...]]:
        return [block for block in self.blocks if len(block) > 1]

    def to_list(self) -> List[List[int]]:
        """JSON friendly form"""
        return [list(block) for block in self.blocks]


def is_non_overlapping(p: SetPartition) -> bool:
    """True if no two blocks satisfy ``min A < min B < max A < max B``"""
    blocks = p.non_singletons()
    for num, first in enumerate(blocks):
        for second in blocks[num + 1:]:
            # blocks are sorted by minimum, so first[0] < second[0]
            if second[0] < first[-1] < second[-1]:
                return False
    return True


def is_monotone(p: SetPartition) -> bool:
    """True if non-singleton blocks ordered by decreasing minimum have decreasing maxima"""
    maxima = [block[-1] for block in reversed(p.non_singletons())]
    return all(left > right for left, right in zip(maxima, maxima[1:]))


def all_partitions(n: int) -> Iterator[SetPartition]:
    """Yields every partition of ``[n]`` once (``B_n`` in total)

    Element ``m`` is added to each existing block in turn, then as a new
    singleton.
    """
    check_cap(n, "partitions of [n]")
    blocks: List[List[int]] = []

    def place(elem: int) -> Iterator[SetPartition]:
        if elem > n:
            yield SetPartition(blocks, n)
            return
        for block in blocks:
            block.append(elem)
            yield from place(elem + 1)
            block.pop()
        blocks.append([elem])
        yield from place(elem + 1)
        blocks.pop()

    yield from place(1)


class InvolutionPerm(NamedTuple):
    """An involution with its cycle structure"""

    #: The involution in one-line notation
    perm: Permutation

    #: 2-cycles ``(i, j)`` with ``i < j``, ordered by ``i``
    pairs: Tuple[Tuple[int, int], ...]

    #: Fixed points in increasing order
    fixed: Tuple[int, ...]

    @classmethod
    def from_permutation(cls, perm: Permutation) -> "InvolutionPerm":
        if not isinstance(perm, Permutation):
            perm = Permutation(perm)
        if not is_involution(perm):
            raise InvalidPermutation(perm, "not an involution")
        pairs = tuple((pos, letter) for pos, letter in enumerate(perm, 1) if pos < letter)
        fixed = tuple(pos for pos, letter in enumerate(perm, 1) if pos == letter)
        return cls(perm, pairs, fixed)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Tuple[int, int]]) -> "InvolutionPerm":
        word = list(range(1, n + 1))
        for first, second in pairs:
            word[first - 1], word[second - 1] = second, first
        return cls.from_permutation(Permutation(word))

    def __str__(self) -> str:
        return str(self.perm)


def all_involutions(n: int) -> Iterator[InvolutionPerm]:
    """Yields every involution of ``[n]`` once (``I_n`` in total)

    The largest unpaired element is either fixed or paired with each
    smaller unpaired element.
    """
    check_cap(n, "involutions of [n]")
    pairs: List[Tuple[int, int]] = []

    def pair(remaining: List[int]) -> Iterator[InvolutionPerm]:
        if not remaining:
            yield InvolutionPerm.from_pairs(n, pairs)
            return
        largest, rest = remaining[-1], remaining[:-1]
        yield from pair(rest)
        for num, partner in enumerate(rest):
            pairs.append((partner, largest))
            yield from pair(rest[:num] + rest[num + 1:])
            pairs.pop()

    yield from pair(list(range(1, n + 1)))


class LatticePath(str):
    """Base for paths coded as words; validated on construction"""
    kind = "lattice"
    alphabet = "ud"

    def __new__(cls, steps: str = "") -> "LatticePath":
        steps = str(steps).replace('ℓ', 'l')
        height = 0
        for offset, step in enumerate(steps):
            if step not in cls.alphabet:
                raise InvalidPath(steps, cls.kind, f"invalid character '{step}' at offset {offset}")
            if step == 'u':
                height += 1
            elif step == 'd':
                height -= 1
                if height < 0:
                    raise InvalidPath(steps, cls.kind, f"prefix dips below axis at offset {offset}")
        if height != 0:
            raise InvalidPath(steps, cls.kind, "unbalanced")
        return super().__new__(cls, steps)

    @property
    def steps(self) -> str:
        return str(self)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__} "{self}"'


class DyckPath(LatticePath):
    """Path of ``u`` and ``d`` steps from the origin back to the axis"""
    kind = "Dyck"
    alphabet = "ud"

    @property
    def semilength(self) -> int:
        return len(self) // 2


class MotzkinPath(LatticePath):
    """Path of ``u``, ``l`` and ``d`` steps from the origin back to the axis"""
    kind = "Motzkin"
    alphabet = "uld"


PATH_KINDS = {
    'dyck': DyckPath,
    'motzkin': MotzkinPath,
}


def parse_path(text: str, kind: str) -> Union[DyckPath, MotzkinPath]:
    """Reads a path word of the given **kind** (``dyck`` or ``motzkin``)"""
    try:
        path_type = PATH_KINDS[kind.lower()]
    except KeyError:
        raise InvalidPath(text, kind, f"unknown path kind (use {', '.join(PATH_KINDS)})")
    return path_type(text.strip())


def return_steps(d: LatticePath) -> int:
    """Number of ``d`` steps that bring the path back to height 0"""
    height = 0
    returns = 0
    for step in d:
        if step == 'u':
            height += 1
        elif step == 'd':
            height -= 1
            if height == 0:
                returns += 1
    return returns


def _first_return(path: str) -> int:
    """Index of the ``d`` closing the initial ``u``"""
    height = 0
    for index, step in enumerate(path):
        if step == 'u':
            height += 1
        elif step == 'd':
            height -= 1
            if height == 0:
                return index
    raise ValueError(f"no return step in {path!r}")


def first_return_decomposition(d: LatticePath) -> Tuple[LatticePath, LatticePath]:
    """Splits a path starting with ``u`` as ``u α d β``

    Returns:
      the pair ``(α, β)`` of paths of the same kind as **d**
    """
    if not d:
        raise InvalidPath(d, d.kind, "empty path has no first return decomposition")
    if d[0] != 'u':
        raise InvalidPath(d, d.kind, "path does not start with an up step")
    index = _first_return(d)
    path_type = type(d)
    return path_type(d[1:index]), path_type(d[index + 1:])


def all_dyck(m: int) -> Iterator[DyckPath]:
    """Yields every Dyck path of semilength **m** (``C_m`` in total)"""
    check_cap(m, "Dyck paths")
    steps: List[str] = []

    def walk(ups: int, downs: int) -> Iterator[DyckPath]:
        if downs == m:
            yield DyckPath(''.join(steps))
            return
        if ups < m:
            steps.append('u')
            yield from walk(ups + 1, downs)
            steps.pop()
        if downs < ups:
            steps.append('d')
            yield from walk(ups, downs + 1)
            steps.pop()

    yield from walk(0, 0)


def all_motzkin(m: int) -> Iterator[MotzkinPath]:
    """Yields every Motzkin path of length **m** (``M_m`` in total)"""
    check_cap(m, "Motzkin paths")
    steps: List[str] = []

    def walk(height: int) -> Iterator[MotzkinPath]:
        left = m - len(steps)
        if left == 0:
            yield MotzkinPath(''.join(steps))
            return
        for step, delta in (('u', 1), ('l', 0), ('d', -1)):
            new_height = height + delta
            if 0 <= new_height <= left - 1:
                steps.append(step)
                yield from walk(new_height)
                steps.pop()

    yield from walk(0)
