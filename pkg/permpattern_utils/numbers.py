"""
Integer Sequences and Polynomials

Exact counting sequences (Bell, Stirling, Catalan, Motzkin, involution
and Bessel numbers, ballot numbers) and two polynomial families:

- ``A_n(x)``, the descent polynomial of ``S_n(a-bc, a-cb)``
  (each permutation contributes ``x^(1 + des)``, the empty one ``x^0``)
- ``y_n(x)``, the Bessel polynomials

Each polynomial can be computed by several independent methods; the
harness checks that they agree. All arithmetic is exact. If an integer
width is configured (`utils.set_int_width`), every value produced here
is checked against it and `WidthOverflow` is raised rather than
wrapping.
"""

import logging

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, Callable, Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple, Union

from .core import descents
from .patterns import avoiders
from .structures import all_partitions, is_non_overlapping
from .utils import PermPatternError, check_cap, get_int_width, get_max_n


logger = logging.getLogger(__name__)  # pylint: disable=invalid-name


class IntegralityError(PermPatternError):
    """Raised if an exact result that must be an integer is not"""
    template = "is not integral: %s"


class WidthOverflow(PermPatternError):
    """Raised if a value does not fit the configured integer width"""
    template = "does not fit a signed %s bit integer (%s)"


def check_width(value: int, what: str = "value") -> int:
    """Returns **value** after checking it against the configured width"""
    width = get_int_width()
    if width is not None and not -(1 << (width - 1)) <= value < 1 << (width - 1):
        raise WidthOverflow(value, width, what)
    return value


def _as_int(value: Union[int, Fraction], what: str) -> int:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise IntegralityError(value, what)
        value = value.numerator
    return check_width(int(value), what)


class IntPolynomial:
    """Polynomial with exact integer coefficients

    Coefficients are stored lowest degree first with trailing zeros
    removed; the zero polynomial has no coefficients.

    >>> str(IntPolynomial([0, 0, 3, 6, 1]))
    '3x^2 + 6x^3 + x^4'
    """
    __slots__ = ('coefficients',)

    def __init__(self, coefficients: Iterable[Union[int, Fraction]] = ()) -> None:
        coeffs = [_as_int(coeff, "polynomial coefficient") for coeff in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: Tuple[int, ...] = tuple(coeffs)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * power + [coeff])

    @classmethod
    def from_distribution(cls, counter: Mapping[int, int]) -> "IntPolynomial":
        """Builds ``sum count * x^exponent`` from an exponent counter"""
        if not counter:
            return cls()
        coeffs = [0] * (max(counter) + 1)
        for exponent, num in counter.items():
            coeffs[exponent] += num
        return cls(coeffs)

    @property
    def degree(self) -> int:
        """Degree, ``-1`` for the zero polynomial"""
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-coeff for coeff in self.coefficients)

    def __sub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(coeff * other for coeff in self.coefficients)
        if not self or not other:
            return IntPolynomial()
        coeffs = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            for j, right in enumerate(other.coefficients):
                coeffs[i + j] += left * right
        return IntPolynomial(coeffs)

    __rmul__ = __mul__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * coeff for i, coeff in enumerate(self.coefficients) if i)

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiplies by ``x^k``"""
        if not self:
            return self
        return IntPolynomial([0] * k + list(self.coefficients))

    def evaluate(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        result: Union[int, Fraction] = 0
        for coeff in reversed(self.coefficients):
            result = result * x + coeff
        return result

    __call__ = evaluate

    def to_list(self) -> List[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        terms = []
        for power, coeff in enumerate(self.coefficients):
            if coeff == 0:
                continue
            magnitude = abs(coeff)
            if power == 0:
                body = str(magnitude)
            else:
                body = ("" if magnitude == 1 else str(magnitude)) + ("x" if power == 1 else f"x^{power}")
            if not terms:
                terms.append(("-" if coeff < 0 else "") + body)
            else:
                terms.append(("- " if coeff < 0 else "+ ") + body)
        return ' '.join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f'{self.__class__.__name__} "{self}"'


#: x
X = IntPolynomial([0, 1])


def bell(n: int) -> int:
    """Bell number via ``B_{m+1} = sum_k binom(m, k) B_k``"""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    values = [1]
    for m in range(n):
        values.append(check_width(sum(comb(m, k) * values[k] for k in range(m + 1)), "bell"))
    return values[n]


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> Tuple[int, ...]:
    row = (1,)
    for m in range(1, n + 1):
        row = tuple((row[k - 1] if 0 < k <= len(row) else 0)
                    + (k * row[k] if k < len(row) else 0)
                    for k in range(m + 1))
    return row


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via ``S(n,k) = S(n-1,k-1) + k S(n-1,k)``"""
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be non-negative, got {n}, {k}")
    if k > n:
        return 0
    return check_width(_stirling2_row(n)[k], "stirling2")


def catalan(n: int) -> int:
    """Catalan number ``binom(2n, n) / (n + 1)``"""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    value, rest = divmod(comb(2 * n, n), n + 1)
    if rest:
        raise IntegralityError(Fraction(comb(2 * n, n), n + 1), "catalan")
    return check_width(value, "catalan")


def motzkin(n: int) -> int:
    """Motzkin number via ``M_{m+1} = M_m + sum_k M_k M_{m-1-k}``"""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    values = [1, 1]
    for m in range(1, n):
        values.append(check_width(
            values[m] + sum(values[k] * values[m - 1 - k] for k in range(m)), "motzkin"))
    return values[n]


def involutions_count(n: int) -> int:
    """Number of involutions via ``I_{m+1} = I_m + m I_{m-1}``"""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    values = [1, 1]
    for m in range(1, n):
        values.append(check_width(values[m] + m * values[m - 1], "involutions"))
    return values[n]


@lru_cache(maxsize=None)
def _involution_rows(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Rows ``I_m^f`` for ``m <= n``, index ``f``

    The largest element is fixed or paired with one of ``m - 1`` others.
    """
    rows: List[Tuple[int, ...]] = [(1,)]
    for m in range(1, n + 1):
        row = []
        for f in range(m + 1):
            fixed = rows[m - 1][f - 1] if f >= 1 else 0
            paired = (m - 1) * rows[m - 2][f] if m >= 2 and f < len(rows[m - 2]) else 0
            row.append(fixed + paired)
        rows.append(tuple(row))
    return tuple(rows)


def involutions_by_fixed(n: int, f: int) -> int:
    """Number of involutions of ``[n]`` with exactly **f** fixed points"""
    if n < 0 or f < 0:
        raise ValueError(f"n and f must be non-negative, got {n}, {f}")
    if f > n or (n - f) % 2:
        return 0
    return check_width(_involution_rows(n)[n][f], "involutions by fixed points")


@lru_cache(maxsize=None)
def _s_star_row(n: int) -> Tuple[int, ...]:
    counter = Counter(len(p) for p in all_partitions(n) if is_non_overlapping(p))
    return tuple(counter.get(k, 0) for k in range(n + 1))


def s_star(n: int, k: int) -> int:
    """Number of non-overlapping partitions of ``[n]`` into **k** blocks

    Counted by enumeration, so **n** is subject to the enumeration cap.
    """
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be non-negative, got {n}, {k}")
    check_cap(n, "non-overlapping partitions")
    if k > n:
        return 0
    return check_width(_s_star_row(n)[k], "s_star")


def bessel_number(n: int) -> int:
    """Number of non-overlapping partitions of ``[n]``"""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    check_cap(n, "non-overlapping partitions")
    return check_width(sum(_s_star_row(n)), "bessel")


def ballot(n: int, k: int) -> int:
    """Ballot number ``k / (2n - k) * binom(2n - k, n)`` for ``1 <= k <= n``"""
    if not 1 <= k <= n:
        raise ValueError(f"ballot numbers need 1 <= k <= n, got n={n}, k={k}")
    return _as_int(Fraction(k, 2 * n - k) * comb(2 * n - k, n), "ballot")


def _eulerian_enumerate(n: int) -> IntPolynomial:
    exponents = Counter(1 + descents(w) if n else 0
                        for w in avoiders(['a-bc', 'a-cb'], n))
    return IntPolynomial.from_distribution(exponents)


def _eulerian_recurrence(n: int) -> IntPolynomial:
    # A_{m+2} = x (1 + x + 2x d/dx) A_m, applied from m = 0
    polys = [IntPolynomial([1]), X]
    for m in range(2, n + 1):
        prev = polys[m - 2]
        polys.append((prev + prev.shift(1) + (prev.derivative() * 2).shift(1)).shift(1))
    return polys[n]


def _eulerian_explicit(n: int) -> IntPolynomial:
    coeffs: List[Fraction] = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - k] += Fraction(comb(n, k) * comb(n - k, k) * factorial(k), 2 ** k)
    return IntPolynomial(coeffs)


def _eulerian_involution(n: int) -> IntPolynomial:
    return IntPolynomial(involutions_by_fixed(n, 2 * k - n) if 2 * k >= n else 0
                         for k in range(n + 1))


EULERIAN_METHODS: Dict[str, Callable[[int], IntPolynomial]] = {
    'enumerate': _eulerian_enumerate,
    'recurrence': _eulerian_recurrence,
    'explicit': _eulerian_explicit,
    'involution': _eulerian_involution,
}


def eulerian_avoid_poly(n: int, method: str = 'recurrence') -> IntPolynomial:
    """Descent polynomial ``A_n(x)`` of ``S_n(a-bc, a-cb)``

    Arguments:
      n: size
      method: one of ``enumerate``, ``recurrence``, ``explicit``, ``involution``

    >>> str(eulerian_avoid_poly(4))
    '3x^2 + 6x^3 + x^4'
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    try:
        func = EULERIAN_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r} (use {', '.join(EULERIAN_METHODS)})")
    return func(n)


def _bessel_explicit(n: int) -> IntPolynomial:
    return IntPolynomial(Fraction(comb(n + k, k) * comb(n, k) * factorial(k), 2 ** k)
                         for k in range(n + 1))


def _bessel_recurrence(n: int) -> IntPolynomial:
    # y_{m+1} = (2m + 1) x y_m + y_{m-1}
    polys = [IntPolynomial([1]), IntPolynomial([1, 1])]
    for m in range(1, n):
        polys.append((polys[m] * (2 * m + 1)).shift(1) + polys[m - 1])
    return polys[n]


def _bessel_involution(n: int) -> IntPolynomial:
    return IntPolynomial(involutions_by_fixed(n + k, n - k) for k in range(n + 1))


BESSEL_METHODS: Dict[str, Callable[[int], IntPolynomial]] = {
    'explicit': _bessel_explicit,
    'recurrence': _bessel_recurrence,
    'involution': _bessel_involution,
}


def bessel_poly(n: int, method: str = 'recurrence') -> IntPolynomial:
    """Bessel polynomial ``y_n(x)``

    Arguments:
      n: degree
      method: one of ``explicit``, ``recurrence``, ``involution``
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    try:
        func = BESSEL_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r} (use {', '.join(BESSEL_METHODS)})")
    return func(n)


#: Families accepted by `polynomial`
POLYNOMIAL_FAMILIES = {
    'eulerian-avoid': (eulerian_avoid_poly, EULERIAN_METHODS),
    'bessel': (bessel_poly, BESSEL_METHODS),
}


def polynomial(family: str, n: int, method: str = 'recurrence') -> IntPolynomial:
    try:
        func, _ = POLYNOMIAL_FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown polynomial family {family!r} "
                         f"(use {', '.join(POLYNOMIAL_FAMILIES)})")
    return func(n, method)


def gf_identity_check(M: int) -> bool:
    """Checks ``sum A_n(t) x^n = sum y_n(x) (xt)^n`` up to ``x^M``

    Compares ``A_m(t)`` with ``sum_j [x^(m-j)] y_j(x) t^j`` for each
    ``m <= M``. ``A_m`` comes from the recurrence and, where the
    enumeration cap allows, is also enumerated.
    """
    bessel = [bessel_poly(j) for j in range(M + 1)]
    for m in range(M + 1):
        lhs = eulerian_avoid_poly(m, 'recurrence')
        if m <= get_max_n():
            enumerated = eulerian_avoid_poly(m, 'enumerate')
            if enumerated != lhs:
                logger.error("A_%s: enumeration gives %s, recurrence %s", m, enumerated, lhs)
                return False
        rhs = IntPolynomial(bessel[j].coefficient(m - j) for j in range(m + 1))
        if lhs != rhs:
            logger.error("Coefficient of x^%s: %s != %s", m, lhs, rhs)
            return False
        logger.debug("Coefficient of x^%s: %s", m, lhs)
    return True


def bessel_ode_check(n: int) -> bool:
    """Checks ``x^2 y'' + 2(x + 1) y' = n(n + 1) y`` for ``y = y_n``"""
    y = bessel_poly(n)
    first = y.derivative()
    lhs = first.derivative().shift(2) + (first.shift(1) + first) * 2
    rhs = y * (n * (n + 1))
    if lhs != rhs:
        logger.error("y_%s: %s != %s", n, lhs, rhs)
        return False
    return True


class SequenceTable(NamedTuple):
    """A computed sequence, optionally with its triangle"""

    #: Sequence name
    name: str

    #: Values for ``n = 0..n_max`` (row sums for triangles)
    values: Tuple[int, ...]

    #: Entries ``(n, k) -> value`` for triangles
    triangle: Optional[Dict[Tuple[int, int], int]] = None

    def rows(self) -> List[Dict[str, int]]:
        """Table rows for CSV and JSON output"""
        if self.triangle is None:
            return [{'n': n, 'value': value} for n, value in enumerate(self.values)]
        return [{'n': n, 'k': k, 'value': value}
                for (n, k), value in sorted(self.triangle.items())]

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'values': list(self.values), 'rows': self.rows()}


def _triangle(n_max: int, entry: Callable[[int, int], int],
              k_range: Callable[[int], Iterable[int]]) -> Dict[Tuple[int, int], int]:
    return {(n, k): entry(n, k) for n in range(n_max + 1) for k in k_range(n)}


def _ballot_entry(n: int, k: int) -> int:
    # the empty permutation has no left-to-right minima
    return 1 if n == k == 0 else ballot(n, k)


#: Triangle name -> (entry, k range for row n)
TRIANGLES: Dict[str, Tuple[Callable[[int, int], int], Callable[[int], Iterable[int]]]] = {
    'stirling2': (stirling2, lambda n: range(n + 1)),
    's-star': (s_star, lambda n: range(n + 1)),
    'ballot': (_ballot_entry, lambda n: range(1, n + 1) if n else range(1)),
    'involutions-by-fixed': (involutions_by_fixed, lambda n: range(n % 2, n + 1, 2)),
}

#: Sequence name -> function of n
SEQUENCES: Dict[str, Callable[[int], int]] = {
    'bell': bell,
    'catalan': catalan,
    'motzkin': motzkin,
    'involutions': involutions_count,
    'bessel': bessel_number,
}


def sequence(name: str, n_max: int) -> SequenceTable:
    """Computes the named sequence or triangle for ``n = 0..n_max``"""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    if name in SEQUENCES:
        func = SEQUENCES[name]
        return SequenceTable(name, tuple(func(n) for n in range(n_max + 1)))
    if name in TRIANGLES:
        entry, k_range = TRIANGLES[name]
        triangle = _triangle(n_max, entry, k_range)
        sums = [0] * (n_max + 1)
        for (n, _), value in triangle.items():
            sums[n] += value
        return SequenceTable(name, tuple(sums), triangle)
    raise ValueError(f"unknown sequence {name!r} (use {', '.join(list(SEQUENCES) + list(TRIANGLES))})")


#: Printed values for n = 0, 1, 2, ...
REFERENCE_SEQUENCES: Dict[str, Tuple[int, ...]] = {
    'bell': (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597),
    'catalan': (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012),
    'motzkin': (1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511),
    'involutions': (1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152),
    'bessel': (1, 1, 2, 5, 14, 43, 143, 509, 1922, 7651),
}
