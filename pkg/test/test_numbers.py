from fractions import Fraction

import pytest
import sympy
from sympy.functions.combinatorial.numbers import stirling

from permpattern_utils import utils
from permpattern_utils.numbers import (BESSEL_METHODS, EULERIAN_METHODS, REFERENCE_SEQUENCES,
                                       IntegralityError, IntPolynomial, WidthOverflow, X,
                                       ballot, bell, bessel_number, bessel_ode_check,
                                       bessel_poly, catalan, check_width, eulerian_avoid_poly,
                                       gf_identity_check, involutions_by_fixed,
                                       involutions_count, motzkin, polynomial, s_star,
                                       sequence, stirling2)

from conftest import TEST_DATA


SEQUENCES = TEST_DATA['sequences']
EULERIAN = TEST_DATA['eulerian_avoid']
BESSEL = TEST_DATA['bessel_poly']


def test_polynomial_arithmetic():
    poly = IntPolynomial([1, 1])
    assert str(poly * poly) == "1 + 2x + x^2"
    assert poly + 1 == IntPolynomial([2, 1])
    assert 2 * poly == IntPolynomial([2, 2])
    assert poly - poly == IntPolynomial()
    assert -poly == IntPolynomial([-1, -1])
    assert (poly * X).coefficients == (0, 1, 1)
    assert poly.shift(2) == IntPolynomial([0, 0, 1, 1])
    assert IntPolynomial([1, 3, 3]).derivative() == IntPolynomial([3, 6])
    assert IntPolynomial([1, 3, 3])(2) == 19
    assert IntPolynomial([1, 3, 3]).evaluate(Fraction(1, 3)) == Fraction(7, 3)


def test_polynomial_normal_form():
    assert IntPolynomial([1, 2, 0, 0]).coefficients == (1, 2)
    assert IntPolynomial().degree == -1
    assert not IntPolynomial([0, 0])
    assert IntPolynomial([0, 0, 3, 6, 1]).degree == 4
    assert IntPolynomial([5]).coefficient(3) == 0
    assert IntPolynomial([7]) == 7
    assert IntPolynomial.monomial(3) == IntPolynomial([0, 0, 0, 1])
    assert IntPolynomial.from_distribution({2: 3, 4: 1, 3: 6}) == IntPolynomial([0, 0, 3, 6, 1])
    assert IntPolynomial([Fraction(4, 2)]) == IntPolynomial([2])
    with pytest.raises(IntegralityError):
        IntPolynomial([Fraction(1, 2)])


@pytest.mark.parametrize('coefficients,text', [
    ([0, 0, 3, 6, 1], "3x^2 + 6x^3 + x^4"),
    ([], "0"),
    ([1], "1"),
    ([0, 1], "x"),
    ([-1, 0, -2], "-1 - 2x^2"),
])
def test_polynomial_str(coefficients, text):
    assert str(IntPolynomial(coefficients)) == text


@pytest.mark.parametrize('name', ['bell', 'catalan', 'motzkin', 'involutions', 'bessel'])
def test_sequences_match_reference(name):
    values = SEQUENCES[name]
    assert list(sequence(name, len(values) - 1).values) == values
    assert list(REFERENCE_SEQUENCES[name][:len(values)]) == values


def test_sequences_against_sympy():
    for n in range(15):
        assert bell(n) == sympy.bell(n)
        assert catalan(n) == sympy.catalan(n)
        for k in range(n + 1):
            assert stirling2(n, k) == stirling(n, k, kind=2)


def test_sequence_functions():
    assert bell(12) == 4213597
    assert catalan(10) == 16796
    assert motzkin(12) == 15511
    assert involutions_count(12) == 140152
    assert bessel_number(5) == 43
    assert stirling2(4, 5) == 0


@pytest.mark.parametrize('func', [bell, catalan, motzkin, involutions_count, bessel_number])
def test_sequence_functions_reject_negative(func):
    with pytest.raises(ValueError):
        func(-1)


def test_ballot():
    assert [ballot(3, k) for k in range(1, 4)] == [2, 2, 1]
    for n in range(1, 10):
        assert sum(ballot(n, k) for k in range(1, n + 1)) == catalan(n)
    with pytest.raises(ValueError):
        ballot(3, 0)
    with pytest.raises(ValueError):
        ballot(3, 4)


def test_involutions_by_fixed():
    assert involutions_by_fixed(4, 2) == 6
    assert involutions_by_fixed(4, 0) == 3
    assert involutions_by_fixed(4, 1) == 0
    assert involutions_by_fixed(4, 5) == 0
    for n in range(12):
        assert sum(involutions_by_fixed(n, f) for f in range(n + 1)) == involutions_count(n)


def test_s_star():
    assert [s_star(4, k) for k in range(5)] == [0, 1, 6, 6, 1]
    for n in range(8):
        assert sum(s_star(n, k) for k in range(n + 1)) == SEQUENCES['bessel'][n]


def test_s_star_respects_cap():
    utils.set_max_n(5)
    with pytest.raises(utils.EnumerationCapExceeded):
        s_star(6, 2)


@pytest.mark.parametrize('method', sorted(EULERIAN_METHODS))
def test_eulerian_avoid_poly(method):
    for n, coefficients in enumerate(EULERIAN):
        assert eulerian_avoid_poly(n, method) == IntPolynomial(coefficients)


def test_eulerian_avoid_poly_example():
    assert str(eulerian_avoid_poly(4)) == "3x^2 + 6x^3 + x^4"
    assert eulerian_avoid_poly(0) == 1


def test_eulerian_methods_agree_beyond_enumeration():
    for n in range(8, 21):
        want = eulerian_avoid_poly(n, 'recurrence')
        assert eulerian_avoid_poly(n, 'explicit') == want
        assert eulerian_avoid_poly(n, 'involution') == want
        assert want(1) == involutions_count(n)


@pytest.mark.parametrize('method', sorted(BESSEL_METHODS))
def test_bessel_poly(method):
    for n, coefficients in enumerate(BESSEL):
        assert bessel_poly(n, method) == IntPolynomial(coefficients)


def test_bessel_poly_agrees_with_sympy():
    x = sympy.Symbol('x')
    for n in range(12):
        expected = sympy.Poly(sum(sympy.factorial(n + k)
                                  / (sympy.factorial(n - k) * sympy.factorial(k) * 2 ** k)
                                  * x ** k for k in range(n + 1)), x)
        assert bessel_poly(n).to_list() == [int(c) for c in reversed(expected.all_coeffs())]


def test_bessel_ode_check():
    for n in range(20):
        assert bessel_ode_check(n)


def test_gf_identity_check():
    assert gf_identity_check(8)
    utils.set_max_n(4)
    assert gf_identity_check(15)


def test_unknown_methods():
    with pytest.raises(ValueError, match="unknown method"):
        eulerian_avoid_poly(3, 'guess')
    with pytest.raises(ValueError, match="unknown method"):
        bessel_poly(3, 'enumerate')
    with pytest.raises(ValueError, match="unknown polynomial family"):
        polynomial('chebyshev', 3)


def test_polynomial_dispatch():
    assert polynomial('eulerian-avoid', 4, 'explicit') == IntPolynomial([0, 0, 3, 6, 1])
    assert polynomial('bessel', 2, 'involution') == IntPolynomial([1, 3, 3])


def test_triangles():
    table = sequence('stirling2', 3)
    assert table.triangle[(3, 2)] == 3
    assert table.values == (1, 1, 2, 5)
    assert sequence('ballot', 3).values == (1, 1, 2, 5)
    assert sequence('involutions-by-fixed', 4).values == (1, 1, 2, 4, 10)
    assert sequence('s-star', 4).values == (1, 1, 2, 5, 14)
    rows = sequence('ballot', 2).rows()
    assert rows == [{'n': 0, 'k': 0, 'value': 1}, {'n': 1, 'k': 1, 'value': 1},
                    {'n': 2, 'k': 1, 'value': 1}, {'n': 2, 'k': 2, 'value': 1}]


def test_sequence_table_to_dict():
    data = sequence('catalan', 3).to_dict()
    assert data['name'] == 'catalan'
    assert data['values'] == [1, 1, 2, 5]
    assert data['rows'][3] == {'n': 3, 'value': 5}


def test_unknown_sequence():
    with pytest.raises(ValueError, match="unknown sequence"):
        sequence('fibonacci', 3)
    with pytest.raises(ValueError):
        sequence('bell', -1)


def test_width_overflow():
    utils.set_int_width(32)
    assert check_width(2 ** 31 - 1) == 2 ** 31 - 1
    assert check_width(-2 ** 31) == -2 ** 31
    assert bell(15) == 1382958545
    with pytest.raises(WidthOverflow):
        bell(16)
    with pytest.raises(WidthOverflow):
        check_width(-2 ** 31 - 1)
    utils.set_int_width(None)
    assert bell(16) == 10480142147
