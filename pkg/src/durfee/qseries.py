"""Truncated power series in q with exact rational coefficients, plus the
generating functions used to cross-check the enumeration modules.

A :class:`QSeries` stores coefficients c_0 .. c_Q as fractions; arithmetic
discards terms beyond the truncation order, so equality of two series means
literal agreement of every retained coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .marked import kmarked_rank_distribution
from .symbols import Flavor

Rational = Fraction | int


class QSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Rational] | None = None):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        self.order = order
        if coeffs is None:
            self.coeffs = [Fraction(0)] * (order + 1)
        else:
            if len(coeffs) != order + 1:
                raise ValueError("need exactly order + 1 coefficients")
            self.coeffs = [Fraction(c) for c in coeffs]

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.monomial(1, 0, order)

    @classmethod
    def monomial(cls, coeff: Rational, exponent: int, order: int) -> "QSeries":
        """c * q^e truncated at ``order``; vanishes if e exceeds the order."""
        s = cls(order)
        if 0 <= exponent <= order:
            s.coeffs[exponent] = Fraction(coeff)
        return s

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            if other.order != self.order:
                raise ValueError("truncation orders differ")
            return other
        return QSeries.monomial(other, 0, self.order)

    def __add__(self, other) -> "QSeries":
        o = self._coerce(other)
        out = QSeries(self.order)
        out.coeffs = [a + b for a, b in zip(self.coeffs, o.coeffs)]
        return out

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        out = QSeries(self.order)
        out.coeffs = [-a for a in self.coeffs]
        return out

    def __sub__(self, other) -> "QSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QSeries":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            out = QSeries(self.order)
            c = Fraction(other)
            out.coeffs = [a * c for a in self.coeffs]
            return out
        o = self._coerce(other)
        out = QSeries(self.order)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order - i + 1):
                b = o.coeffs[j]
                if b:
                    out.coeffs[i + j] += a * b
        return out

    __rmul__ = __mul__

    def reciprocal(self) -> "QSeries":
        """Multiplicative inverse; defined only when the constant term is nonzero."""
        if not self.coeffs[0]:
            raise ValueError("constant term is zero")
        out = QSeries(self.order)
        inv0 = 1 / self.coeffs[0]
        out.coeffs[0] = inv0
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                if self.coeffs[i]:
                    acc += self.coeffs[i] * out.coeffs[n - i]
            out.coeffs[n] = -inv0 * acc
        return out

    def __repr__(self) -> str:
        terms = [f"{c}*q^{n}" for n, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body} + O(q^{self.order + 1}))"


def geometric(coeff: Rational, exponent: int, order: int) -> QSeries:
    """1 / (1 - c q^a) as a truncated series; requires a >= 1."""
    if exponent < 1:
        raise ValueError("exponent must be >= 1")
    s = QSeries(order)
    c = Fraction(coeff)
    power = Fraction(1)
    e = 0
    while e <= order:
        s.coeffs[e] += power
        power *= c
        e += exponent
    return s


def euler_product(order: int, step: int = 1) -> QSeries:
    """The finite product of (1 - q^(step*j)) for step*j <= order."""
    out = QSeries.one(order)
    j = step
    while j <= order:
        out = out * (QSeries.one(order) - QSeries.monomial(1, j, order))
        j += step
    return out


@lru_cache(maxsize=None)
def _inverse_euler(order: int, step: int) -> QSeries:
    out = QSeries.one(order)
    j = step
    while j <= order:
        out = out * geometric(1, j, order)
        j += step
    return out


def partition_gf(order: int) -> QSeries:
    """Generating series of partition counts: coefficient of q^n is p(n)."""
    return _inverse_euler(order, 1)


def rank_gf(m: int, order: int) -> QSeries:
    """Generating series of partition counts by rank: coefficient of q^n is
    the number of partitions of n with rank ``m``.

    Built from the alternating theta-style sum with exponents
    n(3n-1)/2 + |m|n over the inverse Euler product.  The displayed sum
    starts at weight 1; the weight-0 coefficient is patched to 1 for m = 0
    because the empty partition has rank 0.
    """
    acc = QSeries(order)
    n = 1
    while True:
        e = n * (3 * n - 1) // 2 + abs(m) * n
        if e > order:
            break
        sign = 1 if n % 2 == 1 else -1
        acc += QSeries.monomial(sign, e, order)
        acc += QSeries.monomial(-sign, e + n, order)
        n += 1
    out = partition_gf(order) * acc
    if m == 0:
        out.coeffs[0] += 1
    return out


def odd_rank_gf(m: int, order: int) -> QSeries:
    """Generating series of odd-flavor symbol counts by rank: coefficient of
    q^n counts the odd symbols of weight n with rank ``m``."""
    acc = QSeries(order)
    n = 0
    while True:
        e = 3 * n * n + 3 * n + 1 + abs(m) * (2 * n + 1)
        if e > order:
            break
        sign = 1 if n % 2 == 0 else -1
        acc += QSeries.monomial(sign, e, order)
        n += 1
    return _inverse_euler(order, 2) * acc


def _checked_point(x: Sequence[Rational], k: int) -> tuple[Fraction, ...]:
    xs = tuple(Fraction(v) for v in x)
    if len(xs) != k:
        raise ValueError(f"need {k} evaluation values, got {len(xs)}")
    if any(v == 0 for v in xs):
        raise ValueError("evaluation values must be nonzero")
    return xs


def marked_rank_gf(
    x: Sequence[Rational], k: int, order: int, flavor: Flavor = Flavor.ORDINARY
) -> QSeries:
    """The k-marked rank generating series evaluated at the point ``x``:
    coefficient of q^n is sum over rank vectors m of
    count(m; n) * x_1^{m_1} ... x_k^{m_k}, straight from enumeration."""
    xs = _checked_point(x, k)
    out = QSeries(order)
    for n in range(order + 1):
        acc = Fraction(0)
        for m, c in kmarked_rank_distribution(n, k, flavor).items():
            term = Fraction(c)
            for xi, mi in zip(xs, m):
                term *= xi**mi
            acc += term
        out.coeffs[n] = acc
    return out


def marked_rank_gf_product(
    x: Sequence[Rational], k: int, order: int, flavor: Flavor = Flavor.ORDINARY
) -> QSeries:
    """Closed product form of the k-marked rank generating series at ``x``.

    Ordinary flavor: inverse Euler product times the alternating sum over
    n >= 1 of q^{3n(n-1)/2 + kn} (1 + q^n)(1 - q^n)^2 divided by the product
    of (1 - x_j q^n)(1 - q^n / x_j).

    Odd flavor: inverse even Euler product times the alternating sum over
    n >= 0 of q^{3n^2 + (2k+1)n + k} (1 - q^{4n+2}) with denominator factors
    in q^{2n+1}.  (Stating the denominator in q^n instead does not reproduce
    the odd rank series; the 2n+1 powers are forced by the term-by-term
    expansion.)
    """
    xs = _checked_point(x, k)
    acc = QSeries(order)
    if flavor is Flavor.ORDINARY:
        n = 1
        while True:
            e = 3 * n * (n - 1) // 2 + k * n
            if e > order:
                break
            sign = 1 if n % 2 == 1 else -1
            one = QSeries.one(order)
            qn = QSeries.monomial(1, n, order)
            term = QSeries.monomial(sign, e, order) * (one + qn) * (one - qn) * (one - qn)
            for xj in xs:
                term = term * geometric(xj, n, order) * geometric(1 / xj, n, order)
            acc += term
            n += 1
        return partition_gf(order) * acc
    n = 0
    while True:
        e = 3 * n * n + (2 * k + 1) * n + k
        if e > order:
            break
        sign = 1 if n % 2 == 0 else -1
        step = 2 * n + 1
        term = QSeries.monomial(sign, e, order) - QSeries.monomial(sign, e + 4 * n + 2, order)
        for xj in xs:
            term = term * geometric(xj, step, order) * geometric(1 / xj, step, order)
        acc += term
        n += 1
    return _inverse_euler(order, 2) * acc


def marked_rank_gf_partial_fractions(
    x: Sequence[Rational], k: int, order: int, flavor: Flavor = Flavor.ORDINARY
) -> QSeries:
    """Partial-fraction form: the singly-marked series at each x_i, scaled by
    the product over j != i of 1 / ((x_i - x_j)(1 - 1/(x_i x_j))).

    Requires the x_i pairwise distinct with x_i * x_j != 1.
    """
    xs = _checked_point(x, k)
    for i in range(k):
        for j in range(k):
            if i != j and (xs[i] == xs[j] or xs[i] * xs[j] == 1):
                raise ValueError("pole at evaluation point")
    out = QSeries(order)
    for i, xi in enumerate(xs):
        scale = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            scale /= (xi - xj) * (1 - Fraction(1) / (xi * xj))
        out += marked_rank_gf((xi,), 1, order, flavor) * scale
    return out
