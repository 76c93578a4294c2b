"""Statistic distributions over avoidance classes

The distribution of a statistic over ``S_n(P)`` is compared with a row
of a number triangle.
"""

from collections import Counter
from typing import Dict, Mapping

from . import Claim
from ..core import descents, lr_maxima, lr_minima, rl_minima
from ..numbers import ballot, s_star, stirling2
from ..patterns import avoiders
from ..structures import all_involutions


def _nonzero(mapping: Mapping[int, int]) -> Dict[int, int]:
    return {key: value for key, value in sorted(mapping.items()) if value}


class porism_bell1(Claim):
    """Left-to-right minima over a-bc avoiders follow the Stirling numbers"""
    claim_id = "porism.bell1"
    group = "distributions"

    def check(self, n):
        got = Counter(len(lr_minima(w)) for w in avoiders(['a-bc'], n))
        want = {k: stirling2(n, k) for k in range(n + 1)}
        self.expect(_nonzero(got), _nonzero(want), f"lr-minima over S_{n}(a-bc)")


class porism_bell2(Claim):
    """One plus descents over a-cb avoiders follows the Stirling numbers"""
    claim_id = "porism.bell2"
    group = "distributions"

    def check(self, n):
        got = Counter(1 + descents(w) if n else 0 for w in avoiders(['a-cb'], n))
        want = {k: stirling2(n, k) for k in range(n + 1)}
        self.expect(_nonzero(got), _nonzero(want), f"1+des over S_{n}(a-cb)")


class prop_ballot(Claim):
    """Left-to-right minima over b-ac avoiders follow the ballot numbers"""
    claim_id = "prop.ballot"
    group = "distributions"
    n_min = 1

    def check(self, n):
        got = Counter(len(lr_minima(w)) for w in avoiders(['b-ac'], n))
        want = {k: ballot(n, k) for k in range(1, n + 1)}
        self.expect(_nonzero(got), _nonzero(want), f"lr-minima over S_{n}(b-ac)")


class porism_nop(Claim):
    """Left-to-right minima over a-bc, ab-c avoiders follow S*(n,k)"""
    claim_id = "porism.nop"
    group = "distributions"

    def check(self, n):
        got = Counter(len(lr_minima(w)) for w in avoiders(['a-bc', 'ab-c'], n))
        want = {k: s_star(n, k) for k in range(n + 1)}
        self.expect(_nonzero(got), _nonzero(want), f"lr-minima over S_{n}(a-bc, ab-c)")


class remark_minmax(Claim):
    """Left-to-right minima and maxima and right-to-left minima are equidistributed over b-ac avoiders"""
    claim_id = "remark.minmax"
    group = "distributions"

    def check(self, n):
        stats = {
            'lr-minima': Counter(),
            'lr-maxima': Counter(),
            'rl-minima': Counter(),
        }
        for w in avoiders(['b-ac'], n):
            stats['lr-minima'][len(lr_minima(w))] += 1
            stats['lr-maxima'][len(lr_maxima(w))] += 1
            stats['rl-minima'][len(rl_minima(w))] += 1
        want = _nonzero(stats['lr-minima'])
        for name, counter in stats.items():
            if not self.expect(_nonzero(counter), want, f"{name} over S_{n}(b-ac)"):
                return


class porism_des_fix(Claim):
    """Avoiders of a-bc, a-cb with n-1 descents match involutions with n-k fixed points"""
    claim_id = "porism.des_fix"
    group = "distributions"
    n_min = 1

    def check(self, n):
        # n is the total size n + k of the statement
        by_descents = Counter(descents(w) for w in avoiders(['a-bc', 'a-cb'], n))
        by_fixed = Counter(len(v.fixed) for v in all_involutions(n))
        for k in range(n // 2 + 1):
            if not self.expect(by_descents[n - k - 1], by_fixed[n - 2 * k],
                               f"size {n}, {n - k - 1} descents vs {n - 2 * k} fixed points"):
                return
