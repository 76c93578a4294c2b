"""Polynomial identities

Agreement of the independent methods for ``A_n(x)`` and ``y_n(x)``, the
generating function identity linking them, the Bessel recurrence and
differential equation, and the printed tables.
"""

from collections import Counter

from . import Claim
from ..numbers import (BESSEL_METHODS, EULERIAN_METHODS, REFERENCE_SEQUENCES, X,
                       IntPolynomial, bessel_ode_check, bessel_poly,
                       eulerian_avoid_poly, gf_identity_check, involutions_by_fixed,
                       involutions_count)
from ..structures import all_involutions


#: Printed coefficient lists, lowest degree first
EULERIAN_TABLE = [
    [1],
    [0, 1],
    [0, 1, 1],
    [0, 0, 3, 1],
    [0, 0, 3, 6, 1],
    [0, 0, 0, 15, 10, 1],
    [0, 0, 0, 15, 45, 15, 1],
    [0, 0, 0, 0, 105, 105, 21, 1],
]

BESSEL_TABLE = [
    [1],
    [1, 1],
    [1, 3, 3],
    [1, 6, 15, 15],
    [1, 10, 45, 105, 105],
    [1, 15, 105, 420, 945, 945],
]


class prop_euler(Claim):
    """All four methods for A_n(x) agree"""
    claim_id = "prop.euler"
    group = "polynomials"

    def check(self, n):
        want = eulerian_avoid_poly(n, 'enumerate')
        for method in EULERIAN_METHODS:
            if not self.expect(eulerian_avoid_poly(n, method), want, f"A_{n} by {method}"):
                return


class prop_euler_gf(Claim):
    """The A_n(t) are generated by the y_n(x) (xt)^n"""
    claim_id = "prop.euler.gf"
    group = "polynomials"
    requires = ["prop.euler", "eq.bessel_poly"]
    cumulative = True

    def check(self, n):
        if not gf_identity_check(n):
            self.fail(f"generating function identity fails up to x^{n} (see log)")


class eq_eulerian_poly(Claim):
    """A_n(x) has the involution counts I_n^(2k-n) as coefficients"""
    claim_id = "eq.eulerian_poly"
    group = "polynomials"
    requires = ["count.involutions_by_fixed"]
    formula_only = True

    def check(self, n):
        want = eulerian_avoid_poly(n, 'recurrence')
        for method in ('explicit', 'involution'):
            if not self.expect(eulerian_avoid_poly(n, method), want, f"A_{n} by {method}"):
                return


class eq_bessel_poly(Claim):
    """All three methods for y_n(x) agree"""
    claim_id = "eq.bessel_poly"
    group = "polynomials"
    requires = ["count.involutions_by_fixed"]
    formula_only = True

    def check(self, n):
        want = bessel_poly(n, 'explicit')
        for method in BESSEL_METHODS:
            if not self.expect(bessel_poly(n, method), want, f"y_{n} by {method}"):
                return


class eq_bessel_rec(Claim):
    """y_(n+1) = (2n+1) x y_n + y_(n-1)"""
    claim_id = "eq.bessel_rec"
    group = "polynomials"
    formula_only = True
    n_min = 1

    def check(self, n):
        lhs = bessel_poly(n + 1, 'explicit')
        rhs = X * bessel_poly(n, 'explicit') * (2 * n + 1) + bessel_poly(n - 1, 'explicit')
        self.expect(lhs, rhs, f"y_{n + 1}")


class eq_bessel_ode(Claim):
    """y_n solves x^2 y'' + 2(x+1) y' = n(n+1) y"""
    claim_id = "eq.bessel_ode"
    group = "polynomials"
    formula_only = True

    def check(self, n):
        if not bessel_ode_check(n):
            self.fail(f"y_{n} = {bessel_poly(n)} does not solve the equation")


class table_polynomials(Claim):
    """The printed tables of A_n(x) and y_n(x) are reproduced"""
    claim_id = "table.polynomials"
    group = "polynomials"
    cumulative = True

    def check(self, n):
        for num, coeffs in enumerate(EULERIAN_TABLE):
            if not self.expect(eulerian_avoid_poly(num), IntPolynomial(coeffs), f"A_{num}"):
                return
        for num, coeffs in enumerate(BESSEL_TABLE):
            if not self.expect(bessel_poly(num), IntPolynomial(coeffs), f"y_{num}"):
                return


class count_involutions_by_fixed(Claim):
    """Involutions by number of fixed points match the recurrence"""
    claim_id = "count.involutions_by_fixed"
    group = "polynomials"

    def check(self, n):
        got = Counter(len(v.fixed) for v in all_involutions(n))
        want = {f: involutions_by_fixed(n, f) for f in range(n + 1) if involutions_by_fixed(n, f)}
        if not self.expect(dict(sorted(got.items())), want, f"fixed points of involutions of [{n}]"):
            return
        reference = REFERENCE_SEQUENCES['involutions']
        if n < len(reference):
            self.expect(sum(want.values()), reference[n], f"I_{n}")
        self.expect(sum(want.values()), involutions_count(n), f"I_{n}")
