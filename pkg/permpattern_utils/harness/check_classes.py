"""Pattern classes and equivalences"""

from . import Claim
from ..core import all_permutations, complement, reverse
from ..patterns import (ONE_DASH_PATTERNS, avoiders, avoids, complement_pattern,
                        count, pattern_classes, reverse_pattern, symmetry_classes)


def _as_sets(groups):
    return {frozenset(str(pattern) for pattern in group) for group in groups}


class prop_classes(Claim):
    """The one-dash patterns of length three fall into three equidistribution classes"""
    claim_id = "prop.classes"
    group = "classes"
    n_min = 1
    n_limit = 6

    def check(self, n):
        orbits = _as_sets(symmetry_classes(ONE_DASH_PATTERNS))
        classes = _as_sets(pattern_classes(ONE_DASH_PATTERNS, n))
        if n >= 4:
            self.expect(sorted(map(sorted, classes)), sorted(map(sorted, orbits)),
                        f"equidistribution classes on S_{n}")
            return
        # below size four different orbits may share a distribution
        for orbit in orbits:
            if not any(orbit <= group for group in classes):
                self.fail(f"{sorted(orbit)} split on S_{n}")
                return


class lemma2(Claim):
    """A permutation avoids b-ac exactly if it avoids b-a-c"""
    claim_id = "lemma2"
    group = "classes"

    def check(self, n):
        for w in all_permutations(n):
            if avoids(['b-ac'], w) != avoids(['b-a-c'], w):
                self.fail(f"{w} avoids only one of b-ac and b-a-c")
                return


class porism_dash(Claim):
    """The dashes in a-bc and a-cb do not change the joint avoidance class"""
    claim_id = "porism.dash"
    group = "classes"
    requires = ["table.involutions"]

    variants = (
        ['a-bc', 'acb'],
        ['abc', 'a-cb'],
        ['abc', 'acb'],
    )

    def check(self, n):
        want = set(avoiders(['a-bc', 'a-cb'], n))
        for patterns in self.variants:
            got = set(avoiders(patterns, n))
            if got != want:
                witness = sorted(got ^ want)[0]
                self.fail(f"S_{n}({', '.join(patterns)}) and S_{n}(a-bc, a-cb) differ at {witness}")
                return


class symmetry_transport(Claim):
    """Reverse and complement carry occurrences of a pattern to its mirror image"""
    claim_id = "symmetry.transport"
    group = "classes"
    n_limit = 6

    def check(self, n):
        mirrored = [(pattern, reverse_pattern(pattern), complement_pattern(pattern))
                    for pattern in ONE_DASH_PATTERNS]
        for w in all_permutations(n):
            backwards, flipped = reverse(w), complement(w)
            for pattern, reversed_pattern, complemented in mirrored:
                num = count(pattern, w)
                if count(reversed_pattern, backwards) != num:
                    self.fail(f"{pattern} in {w} vs {reversed_pattern} in {backwards}")
                    return
                if count(complemented, flipped) != num:
                    self.fail(f"{pattern} in {w} vs {complemented} in {flipped}")
                    return
