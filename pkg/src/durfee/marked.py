"""k-marked symbols: k indexed pairs of partitions over one subscript frame.

A k-marked symbol of weight n consists of vectors (alpha^i, beta^i) for
i = 1..k and a subscript d with

    sum_i (|alpha^i| + |beta^i|) + frame_weight(d) = n,

subject to three marking conditions:

  (1) alpha^i is nonempty for every i < k (alpha^k and all beta^i may be
      empty);
  (2) largest(beta^i) <= largest(alpha^i) <= every entry of vector i+1, for
      every i < k; when vector i+1 is entirely empty (possible only for
      vector k) the upper bound falls back to the entry cap;
  (3) the entries of vector k are at most the cap (d ordinary, 2d+1 odd).

The odd flavor additionally requires every entry to be odd.  Reading the
bound on smaller bottom rows only does not reproduce the rank-count formula
(first failures at weights 7 and 9 for k = 2); the whole-vector bound does,
and it makes the merged two-row array globally sorted with non-increasing
marks, exactly as symbols are conventionally displayed.  No order is imposed
between the two rows of vector k.

The i-th rank is len(alpha^i) - len(beta^i) - 1 for i < k and
len(alpha^k) - len(beta^k) for i = k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .partitions import (
    Partition,
    bounded_partitions,
    bounded_partitions_upto,
    is_partition,
)
from .symbols import Flavor, frame_weight, min_subscript, part_cap, subscript_range


class PartitionPair(NamedTuple):
    alpha: Partition
    beta: Partition


@dataclass(frozen=True)
class KMarkedSymbol:
    #: vectors[0] is vector 1; displays print vector k first.
    vectors: tuple[PartitionPair, ...]
    d: int
    flavor: Flavor = Flavor.ORDINARY

    @property
    def k(self) -> int:
        return len(self.vectors)

    @property
    def weight(self) -> int:
        rows = sum(sum(v.alpha) + sum(v.beta) for v in self.vectors)
        return rows + frame_weight(self.d, self.flavor)

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(ith_rank(self, i) for i in range(1, self.k + 1))


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def ith_rank(s: KMarkedSymbol, i: int) -> int:
    """Rank of vector ``i`` (1-based); the top-k vector omits the -1 shift."""
    if not 1 <= i <= s.k:
        raise ValueError(f"vector index {i} out of range 1..{s.k}")
    alpha, beta = s.vectors[i - 1]
    base = len(alpha) - len(beta)
    return base if i == s.k else base - 1


def _alpha_bounds(s: KMarkedSymbol) -> list[int]:
    """Effective upper bound on largest(alpha^i) for i = 1..k-1.

    Bound i is the smallest entry anywhere in vector i+1, falling back to the
    entry cap while vectors above are entirely empty.
    """
    bounds = [0] * (s.k - 1)
    ub = part_cap(s.d, s.flavor)
    for i in range(s.k, 1, -1):
        alpha, beta = s.vectors[i - 1]
        smallest = alpha[-1:] + beta[-1:]
        if smallest:
            ub = min(smallest)
        bounds[i - 2] = ub
    return bounds


def validate(s: KMarkedSymbol) -> ValidationResult:
    """Check all marking conditions, reporting the first violation found."""
    k = s.k
    if k < 1:
        return ValidationResult(False, "symbol must have at least one vector")
    if s.d < min_subscript(s.flavor):
        return ValidationResult(
            False, f"subscript {s.d} below minimum for the {s.flavor.value} flavor"
        )
    for i, (alpha, beta) in enumerate(s.vectors, 1):
        if not is_partition(alpha):
            return ValidationResult(False, f"vector {i}: top row is not a partition")
        if not is_partition(beta):
            return ValidationResult(False, f"vector {i}: bottom row is not a partition")
    if s.flavor is Flavor.ODD:
        for i, (alpha, beta) in enumerate(s.vectors, 1):
            if any(x % 2 == 0 for x in alpha + beta):
                return ValidationResult(False, f"vector {i}: even entry in the odd flavor")
    for i in range(1, k):
        if not s.vectors[i - 1].alpha:
            return ValidationResult(False, f"condition (1): vector {i} top row empty")
    cap = part_cap(s.d, s.flavor)
    top_k, bottom_k = s.vectors[k - 1]
    if top_k and top_k[0] > cap:
        return ValidationResult(
            False, f"condition (3): vector {k} top entry {top_k[0]} exceeds cap {cap}"
        )
    if bottom_k and bottom_k[0] > cap:
        return ValidationResult(
            False, f"condition (3): vector {k} bottom entry {bottom_k[0]} exceeds cap {cap}"
        )
    bounds = _alpha_bounds(s)
    for i in range(1, k):
        alpha, beta = s.vectors[i - 1]
        lo = beta[0] if beta else 0
        if lo > alpha[0]:
            return ValidationResult(
                False,
                f"condition (2): vector {i} bottom entry {lo} exceeds top entry {alpha[0]}",
            )
        if alpha[0] > bounds[i - 1]:
            return ValidationResult(
                False,
                f"condition (2): vector {i} top entry {alpha[0]} exceeds bound {bounds[i - 1]}",
            )
    return ValidationResult(True)


def is_valid(s: KMarkedSymbol) -> bool:
    return validate(s).ok


def _vector_tails(
    i: int, budget: int, ub: int, k: int, cap: int, odd: bool
) -> Iterator[tuple[PartitionPair, ...]]:
    """Generate vectors i down to 1 using exactly ``budget``, with ``ub``
    bounding the largest entry of the next top row."""
    if i == 0:
        if budget == 0:
            yield ()
        return
    reserve = i - 1  # every lower vector still needs a nonempty top row
    avail = budget - reserve
    if i == k:
        tops = bounded_partitions_upto(avail, ub, odd)
    else:
        tops = bounded_partitions_upto(avail, ub, odd, nonempty=True)
    for alpha in tops:
        left = avail - sum(alpha)
        bcap = cap if i == k else alpha[0]
        if i == 1:
            for beta in bounded_partitions(left, bcap, odd):
                yield (PartitionPair(alpha, beta),)
            continue
        for beta in bounded_partitions_upto(left, bcap, odd):
            smallest = alpha[-1:] + beta[-1:]
            next_ub = min(smallest) if smallest else ub
            spent = sum(alpha) + sum(beta)
            for tail in _vector_tails(i - 1, budget - spent, next_ub, k, cap, odd):
                yield (PartitionPair(alpha, beta),) + tail


def enumerate_kmarked(
    n: int, k: int, flavor: Flavor = Flavor.ORDINARY
) -> Iterator[KMarkedSymbol]:
    """All valid k-marked symbols of weight ``n``, each exactly once.

    Canonical order: ascending subscript, then per vector from index k down
    to 1 the top row and bottom row each in decreasing lexicographic order
    across weights.  For k = 1 this agrees element-wise with
    :func:`durfee.symbols.enumerate_durfee`.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    odd = flavor is Flavor.ODD
    for d in subscript_range(n, flavor):
        rem = n - frame_weight(d, flavor)
        if rem < k - 1:
            continue
        cap = part_cap(d, flavor)
        for vectors in _vector_tails(k, rem, cap, k, cap, odd):
            yield KMarkedSymbol(tuple(reversed(vectors)), d, flavor)


@lru_cache(maxsize=None)
def kmarked_rank_distribution(
    n: int, k: int, flavor: Flavor = Flavor.ORDINARY
) -> dict[tuple[int, ...], int]:
    """Map from rank vector to the number of k-marked symbols of ``n`` attaining it."""
    counts: dict[tuple[int, ...], int] = {}
    for s in enumerate_kmarked(n, k, flavor):
        r = s.ranks
        counts[r] = counts.get(r, 0) + 1
    return counts


def count_kmarked(m: Sequence[int], n: int, flavor: Flavor = Flavor.ORDINARY) -> int:
    """Number of k-marked symbols of ``n`` whose rank vector equals ``m``."""
    m = tuple(m)
    if len(m) < 1:
        raise ValueError("rank vector must have length k >= 1")
    return kmarked_rank_distribution(n, len(m), flavor).get(m, 0)


def total_kmarked(n: int, k: int, flavor: Flavor = Flavor.ORDINARY) -> int:
    """Number of k-marked symbols of ``n`` over all rank vectors."""
    return sum(kmarked_rank_distribution(n, k, flavor).values())


def balanced_parts(pair: PartitionPair) -> frozenset[int]:
    """1-based indices of the balanced bottom-row parts.

    Bottom part j is balanced when alpha_{j+1} <= beta_j (top row padded with
    zeros) and the number of top parts after the first that strictly exceed
    beta_j equals the number of unbalanced parts before position j.  The scan
    runs left to right because each verdict depends on the earlier ones.
    """
    alpha, beta = pair
    balanced: set[int] = set()
    unbalanced_seen = 0
    for j, bj in enumerate(beta, start=1):
        fits = j >= len(alpha) or alpha[j] <= bj
        larger = sum(1 for a in alpha[1:] if a > bj)
        if fits and larger == unbalanced_seen:
            balanced.add(j)
        else:
            unbalanced_seen += 1
    return frozenset(balanced)


def deficiencies(pair: PartitionPair) -> tuple[int, ...]:
    """Per bottom part: excess of later-top-parts strictly above it over the
    unbalanced parts before it.  Nonnegative whenever the pair's bottom does
    not exceed its top."""
    alpha, beta = pair
    out: list[int] = []
    unbalanced_seen = 0
    for j, bj in enumerate(beta, start=1):
        larger = sum(1 for a in alpha[1:] if a > bj)
        out.append(larger - unbalanced_seen)
        fits = j >= len(alpha) or alpha[j] <= bj
        if not (fits and larger == unbalanced_seen):
            unbalanced_seen += 1
    return tuple(out)


def balanced_numbers(s: KMarkedSymbol) -> tuple[int, ...]:
    """Count of balanced parts per vector; the k-th entry is 0 by definition."""
    nb = [len(balanced_parts(v)) for v in s.vectors[: s.k - 1]]
    nb.append(0)
    return tuple(nb)


def is_strict_shifted_pair(pair: PartitionPair) -> bool:
    """True when the top row is strictly longer and alpha_{i+1} > beta_i throughout."""
    alpha, beta = pair
    if len(alpha) <= len(beta):
        return False
    return all(alpha[i + 1] > beta[i] for i in range(len(beta)))


def is_strict_shifted_symbol(s: KMarkedSymbol) -> bool:
    """True when every vector below the k-th is strict shifted."""
    return all(is_strict_shifted_pair(v) for v in s.vectors[: s.k - 1])
