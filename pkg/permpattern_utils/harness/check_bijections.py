"""Bijections

Each map is run over its whole domain for size ``n``. The image must lie
in the codomain, the inverse must give the input back, the images must
exhaust the codomain, and the statistic carried by the map must match.
"""

from collections import Counter
from math import comb
from typing import Any, Callable, Iterable, Optional

from . import Claim
from .. import utils
from ..bijections import (BIJECTIONS, abc_avoider_to_partition, acb_avoider_to_partition,
                          avoider_to_involution, avoider_to_monotone, dyck_to_perm,
                          grow_abc_avoider, involution_to_avoider, monotone_to_avoider,
                          monotone_to_nop, motzkin_to_perm, nop_to_monotone,
                          partition_to_abc_avoider, partition_to_acb_avoider,
                          perm_to_dyck, perm_to_motzkin, split_at_one)
from ..core import Permutation, descents, lr_minima, projection, rl_minima
from ..numbers import bell
from ..patterns import avoiders, avoids, count
from ..structures import (DyckPath, MotzkinPath, SetPartition, all_dyck,
                          all_involutions, all_motzkin, all_partitions,
                          is_monotone, is_non_overlapping, return_steps)


class BijectionClaim(Claim):
    """Base for claims about a map and its inverse"""
    group = "bijections"

    #: Yields the domain for size n
    domain: Callable[[int], Iterable] = None

    #: Yields the codomain for size n
    codomain: Callable[[int], Iterable] = None

    forward: Callable = None
    inverse: Callable = None

    def in_codomain(self, image: Any, n: int) -> bool:
        return True

    def transport(self, item: Any, image: Any, n: int) -> Optional[str]:
        """Returns a message if the statistic carried by the map is off"""
        return None

    def check(self, n):
        images = set()
        for item in self.domain(n):
            image = self.forward(item)
            if not self.in_codomain(image, n):
                self.fail(f"image {image} of {item} is outside the codomain")
                return
            back = self.inverse(image)
            if back != item:
                self.fail(f"{item} -> {image} -> {back}")
                return
            problem = self.transport(item, image, n)
            if problem:
                self.fail(f"{item} -> {image}: {problem}")
                return
            images.add(image)
        targets = list(self.codomain(n))
        for target in targets:
            if target not in images:
                self.fail(f"{target} is not an image (size {n})")
                return
            if self.forward(self.inverse(target)) != target:
                self.fail(f"{target} is not fixed by the inverse followed by the map")
                return
        self.expect(len(images), len(targets), f"number of images at size {n}")


class prop_bell1(BijectionClaim):
    """Set partitions correspond to a-bc avoiders, blocks to left-to-right minima"""
    claim_id = "prop.bell1"
    domain = staticmethod(all_partitions)
    codomain = staticmethod(lambda n: avoiders(['a-bc'], n))
    forward = staticmethod(partition_to_abc_avoider)
    inverse = staticmethod(abc_avoider_to_partition)

    def in_codomain(self, image, n):
        return len(image) == n and avoids(['a-bc'], image)

    def transport(self, item, image, n):
        if len(item) != len(lr_minima(image)):
            return f"{len(item)} blocks but {len(lr_minima(image))} left-to-right minima"
        return None


class prop_bell2(BijectionClaim):
    """Set partitions correspond to a-cb avoiders, blocks to one plus descents"""
    claim_id = "prop.bell2"
    domain = staticmethod(all_partitions)
    codomain = staticmethod(lambda n: avoiders(['a-cb'], n))
    forward = staticmethod(partition_to_acb_avoider)
    inverse = staticmethod(acb_avoider_to_partition)

    def in_codomain(self, image, n):
        return len(image) == n and avoids(['a-cb'], image)

    def transport(self, item, image, n):
        runs = 1 + descents(image) if n else 0
        if len(item) != runs:
            return f"{len(item)} blocks but {runs} ascending runs"
        return None


class prop_involutions(BijectionClaim):
    """Involutions correspond to a-bc, a-cb avoiders, 2-cycles to ascents"""
    claim_id = "prop.involutions"
    domain = staticmethod(all_involutions)
    codomain = staticmethod(lambda n: avoiders(['a-bc', 'a-cb'], n))
    forward = staticmethod(involution_to_avoider)
    inverse = staticmethod(avoider_to_involution)

    def in_codomain(self, image, n):
        return len(image) == n and avoids(['a-bc', 'a-cb'], image)

    def transport(self, item, image, n):
        adjacent = set(zip(image, image[1:]))
        for pair in item.pairs:
            if pair not in adjacent:
                return f"2-cycle {pair} is not a factor of the image"
        if n and descents(image) != n - len(item.pairs) - 1:
            return f"{len(item.fixed)} fixed points but {descents(image)} descents"
        return None


class prop_mono(BijectionClaim):
    """Monotone partitions correspond to a-bc, ab-c avoiders"""
    claim_id = "prop.mono"
    requires = ["prop.bell1"]
    domain = staticmethod(lambda n: (p for p in all_partitions(n) if is_monotone(p)))
    codomain = staticmethod(lambda n: avoiders(['a-bc', 'ab-c'], n))
    forward = staticmethod(monotone_to_avoider)
    inverse = staticmethod(avoider_to_monotone)

    def in_codomain(self, image, n):
        return len(image) == n and avoids(['a-bc', 'ab-c'], image)


class prop_nop_mono(BijectionClaim):
    """Non-overlapping partitions correspond to monotone partitions"""
    claim_id = "prop.nop-mono"
    requires = ["prop.mono"]
    domain = staticmethod(lambda n: (p for p in all_partitions(n) if is_non_overlapping(p)))
    codomain = staticmethod(lambda n: (p for p in all_partitions(n) if is_monotone(p)))
    forward = staticmethod(nop_to_monotone)
    inverse = staticmethod(monotone_to_nop)

    def in_codomain(self, image, n):
        return image.n == n and is_monotone(image)

    def transport(self, item, image, n):
        if len(item) != len(image):
            return "block count changed"
        singles = [block for block in item if len(block) == 1]
        if singles != [block for block in image if len(block) == 1]:
            return "singletons moved"
        return None


class lemma1(BijectionClaim):
    """b-ac avoiders correspond to Dyck paths, right-to-left minima to returns"""
    claim_id = "lemma1"
    domain = staticmethod(lambda n: avoiders(['b-ac'], n))
    codomain = staticmethod(all_dyck)
    forward = staticmethod(perm_to_dyck)
    inverse = staticmethod(dyck_to_perm)

    def in_codomain(self, image, n):
        return isinstance(image, DyckPath) and len(image) == 2 * n

    def transport(self, item, image, n):
        if return_steps(image) != len(rl_minima(item)):
            return f"{return_steps(image)} returns but {len(rl_minima(item))} right-to-left minima"
        return None


class prop_motzkin(BijectionClaim):
    """a-bc, ac-b avoiders correspond to Motzkin paths"""
    claim_id = "prop.motzkin"
    domain = staticmethod(lambda n: avoiders(['a-bc', 'ac-b'], n))
    codomain = staticmethod(all_motzkin)
    forward = staticmethod(perm_to_motzkin)
    inverse = staticmethod(motzkin_to_perm)

    def in_codomain(self, image, n):
        return isinstance(image, MotzkinPath) and len(image) == n


class prop_bell1_recursive(Claim):
    """a-bc avoiders split as σ 1 τ with τ decreasing, counted by binom(n-1,k) B_k"""
    claim_id = "prop.bell1.recursive"
    group = "bijections"
    requires = ["prop.bell1"]
    n_min = 1

    def check(self, n):
        by_left = Counter()
        for w in avoiders(['a-bc'], n):
            left, right = split_at_one(w)
            if any(first < second for first, second in zip(right, right[1:])):
                self.fail(f"{w}: letters after 1 are not decreasing")
                return
            if not avoids(['a-bc'], projection(left)):
                self.fail(f"{w}: letters before 1 contain a-bc")
                return
            by_left[len(left)] += 1
        want = {k: comb(n - 1, k) * bell(k) for k in range(n)}
        self.expect(dict(sorted(by_left.items())), want, f"sizes of σ at size {n}")


class porism_bell1_insertion(Claim):
    """Inserting n+1 in front or after a left-to-right minimum generates each a-bc avoider once"""
    claim_id = "porism.bell1.insertion"
    group = "bijections"
    requires = ["prop.bell1"]
    n_min = 1

    def check(self, n):
        children = Counter()
        for parent in avoiders(['a-bc'], n - 1):
            records = len(lr_minima(parent))
            kids = list(grow_abc_avoider(parent))
            for num, kid in enumerate(kids):
                want = records + 1 if num == 0 else records
                if len(lr_minima(kid)) != want:
                    self.fail(f"{parent} -> {kid}: left-to-right minima {len(lr_minima(kid))}, "
                              f"expected {want}")
                    return
            children.update(kids)
        repeated = [str(kid) for kid, num in children.items() if num > 1]
        if repeated:
            self.fail(f"generated more than once: {utils.ellipsize(repeated)}")
            return
        self.expect(set(children), set(avoiders(['a-bc'], n)), f"children at size {n}")


#: (map, inverse, input, output) as written on the command line
WORKED_EXAMPLES = [
    ('abc-partition', False, "1,3,5/2,6,9/4,7/8", "847296153"),
    ('acb-partition', False, "1,3,5/2,6,9/4,7/8", "847269135"),
    ('involution', False, "826543719", "974536218"),
    ('monotone', False, "1,2,5,7/3,8/4,6,12/9/10,11,13", "10,13,11,9,4,12,6,3,8,1,7,5,2"),
    ('phi', False, "1,2,5,13/3,8/4,6,7/9/10,11,12", "1,2,5,7/3,8/4,6,12/9/10,11,13"),
    ('psi', False, "1,2,5,7/3,8/4,6,12/9/10,11,13", "1,2,5,13/3,8/4,6,7/9/10,11,12"),
    ('motzkin', False, "76453281", "ulludldl"),
    ('dyck', False, "1", "ud"),
]


class examples_worked(Claim):
    """The worked examples are reproduced exactly"""
    claim_id = "examples.worked"
    group = "bijections"
    cumulative = True

    def check(self, n):
        for name, inverse, given, wanted in WORKED_EXAMPLES:
            bijection = BIJECTIONS[name]
            image = str(bijection.apply(given, inverse=inverse))
            if not self.expect(image, wanted, f"{name} of {given}"):
                return
            back = str(bijection.apply(image, inverse=not inverse))
            if not self.expect(back, given, f"{name} inverse of {image}"):
                return
        composed = monotone_to_avoider(nop_to_monotone(SetPartition.parse("1,2,5,13/3,8/4,6,7/9/10,11,12")))
        if not self.expect(str(composed), "10,13,11,9,4,12,6,3,8,1,7,5,2", "monotone after phi"):
            return
        self.expect(count('a-bc', Permutation.parse("491273865")), 3, "a-bc in 491273865")
