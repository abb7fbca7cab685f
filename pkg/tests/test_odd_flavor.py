"""The odd flavor carries every construction: the maps stay valid, the
counting formula and round trips hold with odd entries throughout."""

from itertools import product

from durfee.bijections import (
    flip_rank,
    merge_marks,
    permute_ranks,
    split_marks,
    symbol_from_strict_shifted,
    symbol_to_strict_shifted,
)
from durfee.marked import (
    balanced_numbers,
    enumerate_kmarked,
    is_strict_shifted_symbol,
    is_valid,
    kmarked_rank_distribution,
)
from durfee.moments import marked_count_formula
from durfee.symbols import Flavor, enumerate_durfee


def test_formula_holds_at_three_marks():
    for n in range(0, 13):
        dist = kmarked_rank_distribution(n, 3, Flavor.ODD)
        vectors = set(dist)
        lim = max(0, n - 2)
        for m in product(range(-lim, lim + 1), repeat=3):
            if sum(abs(x) for x in m) <= lim:
                vectors.add(m)
        for m in vectors:
            assert dist.get(m, 0) == marked_count_formula(m, n, Flavor.ODD), (n, m)


def test_merge_split_round_trips():
    for k in (2, 3):
        for n in range(0, 14):
            for s in enumerate_kmarked(n, k, Flavor.ODD):
                if not is_strict_shifted_symbol(s) or any(r < 0 for r in s.ranks):
                    continue
                ds = merge_marks(s)
                assert ds.flavor is Flavor.ODD
                assert ds.rank == sum(s.ranks) + k - 1
                assert split_marks(ds, s.ranks) == s, (k, n, s)


def test_split_every_plain_symbol():
    for n in range(0, 14):
        for ds in enumerate_durfee(n, Flavor.ODD):
            for k in (2, 3):
                r = ds.rank - (k - 1)
                if r < 0:
                    continue
                for head in product(range(r + 1), repeat=k - 1):
                    if sum(head) > r:
                        continue
                    targets = head + (r - sum(head),)
                    s = split_marks(ds, targets)
                    assert s.ranks == targets and is_valid(s)
                    assert s.flavor is Flavor.ODD
                    assert merge_marks(s) == ds


def test_permute_ranks_corpus_bijection_three_marks():
    for n in range(0, 12):
        corpus = list(enumerate_kmarked(n, 3, Flavor.ODD))
        members = set(corpus)
        for perm in ((2, 1, 3), (1, 3, 2), (3, 2, 1)):
            images = [permute_ranks(s, perm) for s in corpus]
            assert len(set(images)) == len(corpus)
            assert set(images) == members
            for s, im in zip(corpus, images):
                assert im.ranks == tuple(s.ranks[p - 1] for p in perm)


def test_lift_and_flip_round_trips_three_marks():
    for n in range(0, 12):
        for s in enumerate_kmarked(n, 3, Flavor.ODD):
            lifted = symbol_to_strict_shifted(s)
            assert is_valid(lifted) and is_strict_shifted_symbol(lifted)
            assert symbol_from_strict_shifted(lifted, balanced_numbers(s)) == s
            for p in (1, 2, 3):
                flipped = flip_rank(s, p)
                assert is_valid(flipped)
                assert flip_rank(flipped, p) == s
