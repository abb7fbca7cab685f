"""Rank moments, symmetrized moments, and the counting identities that tie
them to marked symbols.

Everything here is exact integer arithmetic.  The polynomial binomial
coefficient (negative upper argument allowed) is the only primitive; the
identities are finite sums over rank distributions computed by exhaustive
enumeration elsewhere in the package.
"""

from __future__ import annotations

from math import factorial
from typing import NamedTuple, Sequence

from .marked import total_kmarked
from .partitions import count_rank, rank_distribution
from .symbols import Flavor, count_durfee_rank, durfee_rank_distribution


def binom(a: int, b: int) -> int:
    """Falling-factorial binomial a(a-1)...(a-b+1)/b!, valid for negative a.

    Satisfies binom(-m + j - 1, 2j) == binom(m + j, 2j), the reflection used
    to fold negative ranks onto positive ones.
    """
    if b < 0:
        raise ValueError("lower index must be nonnegative")
    num = 1
    for i in range(b):
        num *= a - i
    return num // factorial(b)


def _flavor_distribution(n: int, flavor: Flavor) -> dict[int, int]:
    # Ordinary moments weight plain partition ranks; odd moments weight the
    # odd-symbol ranks.
    if flavor is Flavor.ORDINARY:
        return rank_distribution(n)
    return durfee_rank_distribution(n, Flavor.ODD)


def _flavor_count(m: int, n: int, flavor: Flavor) -> int:
    if flavor is Flavor.ORDINARY:
        return count_rank(m, n)
    return count_durfee_rank(m, n, Flavor.ODD)


def rank_moment(k: int, n: int) -> int:
    """Sum of m^k over the ranks of all partitions of ``n``; zero for odd k."""
    if k < 1:
        raise ValueError("moment order must be positive")
    return sum(m**k * c for m, c in rank_distribution(n).items())


def symmetrized_moment(k: int, n: int, flavor: Flavor = Flavor.ORDINARY) -> int:
    """Sum of binom(m + floor((k-1)/2), k) over the rank distribution."""
    if k < 1:
        raise ValueError("moment order must be positive")
    shift = (k - 1) // 2
    return sum(binom(m + shift, k) * c for m, c in _flavor_distribution(n, flavor).items())


def marked_count_formula(
    m: Sequence[int], n: int, flavor: Flavor = Flavor.ORDINARY
) -> int:
    """Number of k-marked symbols of ``n`` with rank vector ``m`` (k >= 2),
    computed from singly-marked rank counts:

        sum_j binom(j + k - 2, k - 2) * count(sum_i |m_i| + 2j + k - 1; n).

    The sum stops once the rank argument exceeds ``n``, where the counts
    vanish.
    """
    m = tuple(m)
    k = len(m)
    if k < 2:
        raise ValueError("rank vector must have length k >= 2")
    s = sum(abs(x) for x in m)
    total = 0
    j = 0
    while s + 2 * j + k - 1 <= n:
        total += binom(j + k - 2, k - 2) * _flavor_count(s + 2 * j + k - 1, n, flavor)
        j += 1
    return total


class MomentCountCheck(NamedTuple):
    equal: bool
    marked_total: int
    moment: int


def check_moment_identity(
    k: int, n: int, flavor: Flavor = Flavor.ORDINARY
) -> MomentCountCheck:
    """Compare the number of (k+1)-marked symbols of ``n`` with the 2k-th
    symmetrized moment; the two agree for every k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    marked = total_kmarked(n, k + 1, flavor)
    moment = symmetrized_moment(2 * k, n, flavor)
    return MomentCountCheck(marked == moment, marked, moment)


def solution_count(n: int, k: int) -> int:
    """Number of ways to write n = |m_1| + ... + |m_{k+1}| + 2(t_1 + ... + t_k)
    with integer m_i and nonnegative t_j, in closed form."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return binom(2 * k + n, 2 * k) + binom(2 * k + n - 1, 2 * k)


def solution_count_brute(n: int, k: int) -> int:
    """Direct enumeration companion to :func:`solution_count`."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")

    def signed(slots: int, left: int) -> int:
        # integer vectors of given length by absolute-value budget
        if slots == 0:
            return 1 if left == 0 else 0
        total = 0
        for v in range(left + 1):
            total += (1 if v == 0 else 2) * signed(slots - 1, left - v)
        return total

    def doubled(slots: int, left: int) -> int:
        # nonnegative vectors contributing twice their sum
        if slots == 0:
            return 1 if left == 0 else 0
        total = 0
        for v in range(0, left + 1, 2):
            total += doubled(slots - 1, left - v)
        return total

    return sum(signed(k + 1, s) * doubled(k, n - s) for s in range(n + 1))
