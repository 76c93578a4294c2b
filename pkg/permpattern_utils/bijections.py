"""
Bijections between Avoidance Classes and Combinatorial Structures

Every map comes with its inverse. Inverses check their precondition
first and raise `DomainError` naming the violated predicate.

.. list-table::
   :header-rows: 1

   * - name
     - domain
     - codomain
   * - ``abc-partition``
     - set partitions of ``[n]``
     - ``S_n(a-bc)``
   * - ``acb-partition``
     - set partitions of ``[n]``
     - ``S_n(a-cb)``
   * - ``involution``
     - involutions of ``[n]``
     - ``S_n(a-bc, a-cb)``
   * - ``monotone``
     - monotone partitions
     - ``S_n(a-bc, ab-c)``
   * - ``phi`` / ``psi``
     - non-overlapping partitions
     - monotone partitions
   * - ``dyck``
     - ``S_n(b-ac)``
     - Dyck paths of length ``2n``
   * - ``motzkin``
     - ``S_n(a-bc, ac-b)``
     - Motzkin paths of length ``n``

The partition maps write each block as a segment, the segments ordered
by decreasing least element. The path maps split a permutation into
factors and encode the factors one after another from an explicit work
stack.
"""

import logging

from typing import (Any, Callable, Dict, Iterator, List, NamedTuple, Sequence,
                    Tuple, Union)

from .core import Permutation, lr_minima, projection
from .patterns import avoids
from .structures import (DyckPath, InvolutionPerm, MotzkinPath, SetPartition,
                         first_return_decomposition, is_monotone,
                         is_non_overlapping, parse_path)
from .utils import PermPatternError


logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class DomainError(PermPatternError):
    """Raised if the input of a map lies outside its domain"""
    template = "is outside the domain: %s"


def _require_avoids(patterns: List[str], word: Sequence[int]) -> Permutation:
    if not isinstance(word, Permutation):
        word = Permutation(word)
    if not avoids(patterns, word):
        raise DomainError(word, f"does not avoid {', '.join(patterns)}")
    return word


def _segments_to_word(segments: List[List[int]]) -> Permutation:
    segments = sorted(segments, key=lambda segment: min(segment), reverse=True)
    return Permutation(letter for segment in segments for letter in segment)


def _split_before(word: Sequence[int], starts: Sequence[int]) -> List[List[int]]:
    """Cuts **word** into segments beginning at the 1-based **starts**"""
    bounds = [start - 1 for start in starts if start > 1] + [len(word)]
    segments = []
    begin = 0
    for end in bounds:
        segments.append(list(word[begin:end]))
        begin = end
    return [segment for segment in segments if segment]


def partition_to_abc_avoider(p: SetPartition) -> Permutation:
    """Writes each block least element first, then the rest decreasing

    >>> str(partition_to_abc_avoider(SetPartition.parse("1,3,5/2,6,9/4,7/8")))
    '847296153'
    """
    return _segments_to_word([[block[0]] + sorted(block[1:], reverse=True)
                              for block in p.blocks])


def abc_avoider_to_partition(w: Permutation) -> SetPartition:
    """Splits **w** in front of each left-to-right minimum"""
    w = _require_avoids(['a-bc'], w)
    return SetPartition(_split_before(w, lr_minima(w)), len(w))


def partition_to_acb_avoider(p: SetPartition) -> Permutation:
    """Writes each block in increasing order"""
    return _segments_to_word([list(block) for block in p.blocks])


def acb_avoider_to_partition(w: Permutation) -> SetPartition:
    """Splits **w** at each descent"""
    w = _require_avoids(['a-cb'], w)
    starts = [pos + 1 for pos, (left, right) in enumerate(zip(w, w[1:]), 1) if left > right]
    return SetPartition(_split_before(w, starts), len(w))


def involution_to_avoider(v: InvolutionPerm) -> Permutation:
    """Writes each cycle least element first, cycles by decreasing least element

    >>> str(involution_to_avoider(InvolutionPerm.from_permutation(Permutation.parse("826543719"))))
    '974536218'
    """
    if not isinstance(v, InvolutionPerm):
        v = InvolutionPerm.from_permutation(v)
    return _segments_to_word([list(pair) for pair in v.pairs] + [[fixed] for fixed in v.fixed])


def avoider_to_involution(w: Permutation) -> InvolutionPerm:
    """Reads ascents ``a_i < a_{i+1}`` as 2-cycles, all other letters as fixed points"""
    w = _require_avoids(['a-bc', 'a-cb'], w)
    pairs = []
    pos = 0
    while pos < len(w):
        if pos + 1 < len(w) and w[pos] < w[pos + 1]:
            pairs.append((w[pos], w[pos + 1]))
            pos += 2
        else:
            pos += 1
    return InvolutionPerm.from_pairs(len(w), pairs)


def monotone_to_avoider(p: SetPartition) -> Permutation:
    """Restriction of `partition_to_abc_avoider` to monotone partitions"""
    if not is_monotone(p):
        raise DomainError(p, "is not monotone")
    return partition_to_abc_avoider(p)


def avoider_to_monotone(w: Permutation) -> SetPartition:
    w = _require_avoids(['a-bc', 'ab-c'], w)
    return abc_avoider_to_partition(w)


def _scan_blocks(p: SetPartition, close_smallest: bool) -> SetPartition:
    """Rebuilds the blocks of **p** element by element

    - a least element opens a new block
    - a largest element closes the smallest (or largest) open block
    - any other element joins the open block whose rank by descending
      least element equals the rank of its own block among the open
      input blocks
    - a singleton stays a singleton
    """
    owner: Dict[int, Tuple[int, ...]] = {elem: block for block in p.blocks for elem in block}
    open_input: List[Tuple[int, ...]] = []
    open_output: List[List[int]] = []
    done: List[List[int]] = []
    for elem in range(1, p.n + 1):
        block = owner[elem]
        if len(block) == 1:
            done.append([elem])
        elif elem == block[0]:
            open_input.append(block)
            open_output.append([elem])
        elif elem == block[-1]:
            open_input.remove(block)
            target = min(open_output) if close_smallest else max(open_output)
            target.append(elem)
            open_output.remove(target)
            done.append(target)
        else:
            # open blocks are created in increasing order of their least
            # element, so descending rank is position from the end
            rank = len(open_input) - open_input.index(block)
            open_output[len(open_output) - rank].append(elem)
    return SetPartition(done, p.n)


def nop_to_monotone(p: SetPartition) -> SetPartition:
    """Maps a non-overlapping partition to a monotone partition (Φ)

    >>> str(nop_to_monotone(SetPartition.parse("1,2,5,13/3,8/4,6,7/9/10,11,12")))
    '1,2,5,7/3,8/4,6,12/9/10,11,13'
    """
    if not is_non_overlapping(p):
        raise DomainError(p, "is overlapping")
    return _scan_blocks(p, close_smallest=True)


def monotone_to_nop(p: SetPartition) -> SetPartition:
    """Inverse of `nop_to_monotone` (Ψ): largest elements close the largest open block"""
    if not is_monotone(p):
        raise DomainError(p, "is not monotone")
    return _scan_blocks(p, close_smallest=False)


def perm_to_dyck(p: Permutation) -> DyckPath:
    """Encodes ``σ 1 τ`` as ``u`` code(σ) ``d`` code(τ), factors projected"""
    p = _require_avoids(['b-ac'], p)
    steps: List[str] = []
    work: List[Union[str, Tuple[int, ...]]] = [tuple(p)]
    while work:
        item = work.pop()
        if isinstance(item, str):
            steps.append(item)
            continue
        if not item:
            continue
        split = item.index(1)
        work.append(tuple(projection(item[split + 1:])))
        work.append('d')
        work.append(tuple(projection(item[:split])))
        work.append('u')
    return DyckPath(''.join(steps))


def dyck_to_perm(d: DyckPath) -> Permutation:
    """Inverse of `perm_to_dyck`; the letters of σ all exceed those of τ"""
    if not isinstance(d, DyckPath):
        d = parse_path(d, 'dyck')
    letters: List[int] = []
    work: List[Union[int, Tuple[DyckPath, int]]] = [(d, 0)]
    while work:
        item = work.pop()
        if isinstance(item, int):
            letters.append(item)
            continue
        path, offset = item
        if not path:
            continue
        alpha, beta = first_return_decomposition(path)
        tail = len(beta) // 2
        work.append((beta, offset + 1))
        work.append(offset + 1)
        work.append((alpha, offset + tail + 1))
    return Permutation(letters)


def perm_to_motzkin(p: Permutation) -> MotzkinPath:
    """Encodes an avoider of ``a-bc`` and ``ac-b`` as Motzkin path

    ``n σ`` becomes ``l`` code(σ). Otherwise ``n`` sits at position
    ``k`` preceded by ``r = n - k + 1``, and ``σ r n τ`` becomes ``u``
    code(σ) ``d`` code(τ) with τ a permutation of ``[n - k]``.

    >>> str(perm_to_motzkin(Permutation.parse("76453281")))
    'ulludldl'
    """
    p = _require_avoids(['a-bc', 'ac-b'], p)
    steps: List[str] = []
    work: List[Union[str, Tuple[int, ...]]] = [tuple(p)]
    while work:
        item = work.pop()
        if isinstance(item, str):
            steps.append(item)
            continue
        n = len(item)
        if not n:
            continue
        if item[0] == n:
            work.append(tuple(projection(item[1:])))
            work.append('l')
            continue
        pos = item.index(n)
        if item[pos - 1] != n - pos:
            raise DomainError(p, f"letter before {n} in factor {item} is not {n - pos}")
        work.append(item[pos + 1:])
        work.append('d')
        work.append(tuple(projection(item[:pos - 1])))
        work.append('u')
    return MotzkinPath(''.join(steps))


def motzkin_to_perm(m: MotzkinPath) -> Permutation:
    """Inverse of `perm_to_motzkin`"""
    if not isinstance(m, MotzkinPath):
        m = parse_path(m, 'motzkin')
    letters: List[int] = []
    work: List[Union[int, Tuple[MotzkinPath, int]]] = [(m, 0)]
    while work:
        item = work.pop()
        if isinstance(item, int):
            letters.append(item)
            continue
        path, offset = item
        n = len(path)
        if not n:
            continue
        if path[0] == 'l':
            work.append((MotzkinPath(path[1:]), offset))
            work.append(offset + n)
            continue
        alpha, beta = first_return_decomposition(path)
        work.append((beta, offset))
        work.append(offset + n)
        work.append(offset + len(beta) + 1)
        work.append((alpha, offset + len(beta) + 1))
    return Permutation(letters)


def split_at_one(p: Permutation) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Returns ``(σ, τ)`` for ``p = σ 1 τ``

    For an avoider of ``a-bc``, τ is decreasing and ``proj(σ)`` avoids
    ``a-bc``.
    """
    if not p:
        raise DomainError(p, "has no letter 1")
    split = p.index(1)
    return tuple(p[:split]), tuple(p[split + 1:])


def grow_abc_avoider(p: Permutation) -> Iterator[Permutation]:
    """Yields the children of **p** in the insertion tree of ``a-bc`` avoiders

    The new largest letter ``n + 1`` is put in front, then immediately
    after each left-to-right minimum. Every avoider of ``[n + 1]`` is the
    child of exactly one avoider of ``[n]``.
    """
    p = _require_avoids(['a-bc'], p)
    top = len(p) + 1
    yield Permutation((top,) + tuple(p))
    for pos in lr_minima(p):
        yield Permutation(tuple(p[:pos]) + (top,) + tuple(p[pos:]))


def to_json(value: Any) -> Any:
    """Plain JSON form of any value handled by the maps"""
    if isinstance(value, SetPartition):
        return value.to_list()
    if isinstance(value, InvolutionPerm):
        return list(value.perm)
    if isinstance(value, str):
        return str(value)
    return list(value)


class Bijection(NamedTuple):
    """A named map with its inverse and text readers for both sides"""

    #: Name used on the command line
    name: str

    #: Domain to codomain
    forward: Callable

    #: Codomain to domain
    inverse: Callable

    #: Reads a domain element from text
    read_domain: Callable[[str], Any]

    #: Reads a codomain element from text
    read_codomain: Callable[[str], Any]

    def apply(self, text: str, inverse: bool = False) -> Any:
        if inverse:
            return self.inverse(self.read_codomain(text))
        return self.forward(self.read_domain(text))


def _read_involution(text: str) -> InvolutionPerm:
    return InvolutionPerm.from_permutation(Permutation.parse(text))


BIJECTIONS: Dict[str, Bijection] = {
    bij.name: bij for bij in (
        Bijection('abc-partition', partition_to_abc_avoider, abc_avoider_to_partition,
                  SetPartition.parse, Permutation.parse),
        Bijection('acb-partition', partition_to_acb_avoider, acb_avoider_to_partition,
                  SetPartition.parse, Permutation.parse),
        Bijection('involution', involution_to_avoider, avoider_to_involution,
                  _read_involution, Permutation.parse),
        Bijection('monotone', monotone_to_avoider, avoider_to_monotone,
                  SetPartition.parse, Permutation.parse),
        Bijection('phi', nop_to_monotone, monotone_to_nop,
                  SetPartition.parse, SetPartition.parse),
        Bijection('psi', monotone_to_nop, nop_to_monotone,
                  SetPartition.parse, SetPartition.parse),
        Bijection('dyck', perm_to_dyck, dyck_to_perm,
                  Permutation.parse, lambda text: parse_path(text, 'dyck')),
        Bijection('motzkin', perm_to_motzkin, motzkin_to_perm,
                  Permutation.parse, lambda text: parse_path(text, 'motzkin')),
    )
}
