import pytest

from durfee.marked import (
    KMarkedSymbol,
    PartitionPair,
    balanced_numbers,
    balanced_parts,
    count_kmarked,
    deficiencies,
    enumerate_kmarked,
    is_strict_shifted_pair,
    is_strict_shifted_symbol,
    is_valid,
    ith_rank,
    kmarked_rank_distribution,
    total_kmarked,
    validate,
)
from durfee.moments import marked_count_formula
from durfee.partitions import bounded_partitions
from durfee.symbols import Flavor, enumerate_durfee, frame_weight, part_cap, subscript_range

# the 3-marked symbol of weight 55 used throughout as a fixture
SYM55 = KMarkedSymbol(
    (
        PartitionPair((2,), (2,)),
        PartitionPair((3, 3, 2), (3, 2)),
        PartitionPair((4, 4), (5,)),
    ),
    5,
)


def brute_corpus(n, k, flavor):
    """Every split of the weight into 2k bounded rows, filtered by validate;
    independent of the enumerator's constraint propagation."""
    out = set()
    odd = flavor is Flavor.ODD
    for d in subscript_range(n, flavor):
        rem = n - frame_weight(d, flavor)
        cap = part_cap(d, flavor)
        splits = []

        def rec(i, left, acc):
            if i == 0:
                if left == 0:
                    splits.append(tuple(acc))
                return
            for w in range(left + 1):
                for p in bounded_partitions(w, cap, odd):
                    acc.append(p)
                    rec(i - 1, left - w, acc)
                    acc.pop()

        rec(2 * k, rem, [])
        for rows in splits:
            s = KMarkedSymbol(
                tuple(PartitionPair(rows[2 * i], rows[2 * i + 1]) for i in range(k)), d, flavor
            )
            if validate(s).ok:
                out.add(s)
    return out


def test_weight_55_symbol():
    assert validate(SYM55).ok
    assert SYM55.weight == 55
    assert SYM55.ranks == (-1, 0, 1)
    assert ith_rank(SYM55, 1) == -1 and ith_rank(SYM55, 3) == 1
    with pytest.raises(ValueError):
        ith_rank(SYM55, 4)


def test_cap_violation_reported():
    bad = KMarkedSymbol(SYM55.vectors[:2] + (PartitionPair((4, 4), (6,)),), 5)
    res = validate(bad)
    assert not res
    assert "condition (3)" in res.reason and "6" in res.reason


def test_interlacing_edge_cases():
    # weight 4: the top vector may sit above a bare (1,1) first vector
    ok = KMarkedSymbol((PartitionPair((1, 1), ()), PartitionPair((1,), ())), 1)
    assert validate(ok).ok and ok.weight == 4
    # weight 5 variant breaks the upper bound 1 with a top entry 2
    bad = KMarkedSymbol((PartitionPair((2, 1), ()), PartitionPair((1,), ())), 1)
    res = validate(bad)
    assert not res and "condition (2)" in res.reason


def test_empty_vector_one_rejected():
    bad = KMarkedSymbol((PartitionPair((), ()), PartitionPair((1,), ())), 1)
    res = validate(bad)
    assert not res and "condition (1)" in res.reason


def test_odd_parity_enforced():
    bad = KMarkedSymbol((PartitionPair((2,), ()),), 1, Flavor.ODD)
    res = validate(bad)
    assert not res and "even" in res.reason


def test_enumerate_against_validate_filter():
    for k in (1, 2, 3):
        for n in range(0, 9):
            assert set(enumerate_kmarked(n, k)) == brute_corpus(n, k, Flavor.ORDINARY), (n, k)
    for k in (1, 2):
        for n in range(0, 10):
            assert set(enumerate_kmarked(n, k, Flavor.ODD)) == brute_corpus(n, k, Flavor.ODD)


def test_one_marked_agrees_with_plain_enumeration():
    for flavor in Flavor:
        for n in range(0, 11):
            a = [(s.vectors[0].alpha, s.vectors[0].beta, s.d) for s in enumerate_kmarked(n, 1, flavor)]
            b = [(s.alpha, s.beta, s.d) for s in enumerate_durfee(n, flavor)]
            assert a == b


def test_weight_4_table():
    dist = kmarked_rank_distribution(4, 2)
    assert sum(dist.values()) == 10
    assert dist == {
        (0, 0): 2,
        (2, 0): 1, (-2, 0): 1, (0, 2): 1, (0, -2): 1,
        (1, 1): 1, (1, -1): 1, (-1, 1): 1, (-1, -1): 1,
    }


def test_weight_3_total_matches_formula():
    # four symbols, one per unit rank vector; the count agrees with the
    # closed formula (which sums to 4 here)
    dist = kmarked_rank_distribution(3, 2)
    assert sum(dist.values()) == 4
    assert dist == {(1, 0): 1, (-1, 0): 1, (0, 1): 1, (0, -1): 1}
    assert sum(marked_count_formula(m, 3) for m in dist) == 4


def test_count_examples():
    assert count_kmarked((0, 0), 4) == 2
    assert count_kmarked((1, 1), 4) == 1
    assert count_kmarked((1, 0), 4) == 0
    assert total_kmarked(4, 2) == 10


def test_rank_count_formula_sweep():
    for k in (2, 3):
        for n in range(0, 11):
            dist = kmarked_rank_distribution(n, k)
            for m, c in dist.items():
                assert c == marked_count_formula(m, n), (n, k, m)


def test_balanced_parts_examples():
    assert balanced_parts(PartitionPair((4, 3, 3, 1, 1), (3, 2, 2))) == {1}
    assert balanced_parts(PartitionPair((6, 5, 5, 3, 3, 2), (5, 4, 4, 3))) == {1, 4}
    assert balanced_parts(PartitionPair((3, 2), ())) == frozenset()


def test_deficiencies_examples():
    assert deficiencies(PartitionPair((4, 3, 3, 1, 1), (3, 2, 2))) == (0, 2, 1)
    assert deficiencies(PartitionPair((5,), ())) == ()
    pair = PartitionPair((6, 5, 5, 3, 3, 2), (5, 4, 4, 3))
    defs = deficiencies(pair)
    assert all(d >= 0 for d in defs)
    assert {j + 1 for j, d in enumerate(defs) if d == 0} >= balanced_parts(pair)


def test_balanced_numbers_paper_symbol():
    s = KMarkedSymbol(
        (
            PartitionPair((2, 2, 1), (2, 1)),
            PartitionPair((3, 2, 2), (3, 2)),
            PartitionPair((4, 4), (5,)),
        ),
        5,
    )
    assert is_valid(s) and s.weight == 58
    assert balanced_numbers(s) == (1, 2, 0)
    assert balanced_numbers(KMarkedSymbol((PartitionPair((1,), ()),), 1)) == (0,)


def test_strict_shifted_pairs():
    assert is_strict_shifted_pair(PartitionPair((3, 3, 3, 2, 2, 1), (2, 1, 1, 1)))
    assert not is_strict_shifted_pair(PartitionPair((2, 2), (2,)))
    assert is_strict_shifted_pair(PartitionPair((6, 5, 5, 5, 3, 3, 3, 2), (4, 4)))
    assert not is_strict_shifted_pair(PartitionPair((), ()))


def test_strict_shifted_symbols():
    assert not is_strict_shifted_symbol(SYM55)  # first vector has equal lengths
    assert is_strict_shifted_symbol(KMarkedSymbol((PartitionPair((2,), (2,)),), 2))


def test_odd_flavor_formula_spot_checks():
    for n in range(0, 13):
        dist = kmarked_rank_distribution(n, 2, Flavor.ODD)
        for m, c in dist.items():
            assert c == marked_count_formula(m, n, Flavor.ODD), (n, m)
    assert total_kmarked(2, 2, Flavor.ODD) == 1


def test_enumerate_requires_positive_k():
    with pytest.raises(ValueError):
        list(enumerate_kmarked(3, 0))
