"""Sizes of the avoidance classes

Each class ``S_n(P)`` is enumerated and its size compared with the
counting sequence computed by :py:mod:`permpattern_utils.numbers`, which
in turn is compared with the printed reference values.
"""

from typing import List

from . import Claim
from ..numbers import (REFERENCE_SEQUENCES, bell, bessel_number, catalan,
                       involutions_count, motzkin)
from ..patterns import avoiders


class CardinalityClaim(Claim):
    """Base for ``|S_n(P)| = f(n)`` claims"""
    group = "main-table"

    #: Avoided patterns
    patterns: List[str] = []

    #: Key into `REFERENCE_SEQUENCES`
    sequence = ""

    @staticmethod
    def expected(n: int) -> int:
        raise NotImplementedError

    def check(self, n):
        want = self.expected(n)
        reference = REFERENCE_SEQUENCES[self.sequence]
        if n < len(reference) and not self.expect(want, reference[n],
                                                  f"{self.sequence}({n})"):
            return
        got = sum(1 for _ in avoiders(self.patterns, n))
        self.expect(got, want, f"|S_{n}({', '.join(self.patterns)})|")


class table_bell1(CardinalityClaim):
    """Avoiders of a-bc are counted by the Bell numbers"""
    claim_id = "table.bell1"
    patterns = ['a-bc']
    sequence = 'bell'
    expected = staticmethod(bell)


class table_bell2(CardinalityClaim):
    """Avoiders of a-cb are counted by the Bell numbers"""
    claim_id = "table.bell2"
    patterns = ['a-cb']
    sequence = 'bell'
    expected = staticmethod(bell)


class table_catalan(CardinalityClaim):
    """Avoiders of b-ac are counted by the Catalan numbers"""
    claim_id = "table.catalan"
    patterns = ['b-ac']
    sequence = 'catalan'
    expected = staticmethod(catalan)


class table_bessel(CardinalityClaim):
    """Avoiders of a-bc and ab-c are counted by the Bessel numbers"""
    claim_id = "table.bessel"
    patterns = ['a-bc', 'ab-c']
    sequence = 'bessel'
    expected = staticmethod(bessel_number)


class table_involutions(CardinalityClaim):
    """Avoiders of a-bc and a-cb are counted by the involution numbers"""
    claim_id = "table.involutions"
    patterns = ['a-bc', 'a-cb']
    sequence = 'involutions'
    expected = staticmethod(involutions_count)


class table_motzkin(CardinalityClaim):
    """Avoiders of a-bc and ac-b are counted by the Motzkin numbers"""
    claim_id = "table.motzkin"
    patterns = ['a-bc', 'ac-b']
    sequence = 'motzkin'
    expected = staticmethod(motzkin)
