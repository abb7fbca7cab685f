"""Identity-verification suites over exhaustive corpora.

Every check compares quantities computed along independent routes (direct
enumeration against closed formulas, forward maps against their inverses,
series built three different ways) and reports the first counterexample on
failure.  The driver runs checks serially by default; set DURFEE_THREADS > 1
to fan independent checks out to worker processes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from . import bijections, marked, moments, qseries
from .marked import PartitionPair, enumerate_kmarked, kmarked_rank_distribution
from .partitions import count_rank, enumerate_partitions, rank_distribution
from .symbols import Flavor, durfee_rank_distribution, enumerate_durfee


@dataclass(frozen=True)
class Bounds:
    max_n: int = 10
    max_k: int = 3
    order: int = 8
    x: tuple[Fraction, ...] = (Fraction(2), Fraction(3), Fraction(5))

    def ks(self) -> tuple[int, ...]:
        return tuple(k for k in (2, 3) if k <= self.max_k)


@dataclass(frozen=True)
class CheckResult:
    name: str
    bound: str
    ok: bool
    detail: str = ""


def _rank_vectors(n: int, k: int, dist: dict) -> set[tuple[int, ...]]:
    """All vectors that could conceivably have a nonzero count, plus every
    vector actually observed."""
    lim = max(0, n - k + 1)
    vecs = set(dist)
    for m in product(range(-lim, lim + 1), repeat=k):
        if sum(abs(x) for x in m) <= lim:
            vecs.add(m)
    return vecs


def check_theorem_main_ordinary(b: Bounds) -> CheckResult:
    bound = f"k in {b.ks()}, n <= {b.max_n}"
    for k in b.ks():
        for n in range(b.max_n + 1):
            dist = kmarked_rank_distribution(n, k)
            for m in _rank_vectors(n, k, dist):
                expect = moments.marked_count_formula(m, n)
                got = dist.get(m, 0)
                if got != expect:
                    return CheckResult(
                        "theorem-main-ordinary", bound, False,
                        f"counterexample: n={n} k={k} m={m} enumerated={got} formula={expect}",
                    )
    return CheckResult("theorem-main-ordinary", bound, True)


def check_theorem_main_odd(b: Bounds) -> CheckResult:
    bound = f"k = 2, n <= {b.max_n}"
    for n in range(b.max_n + 1):
        dist = kmarked_rank_distribution(n, 2, Flavor.ODD)
        for m in _rank_vectors(n, 2, dist):
            expect = moments.marked_count_formula(m, n, Flavor.ODD)
            got = dist.get(m, 0)
            if got != expect:
                return CheckResult(
                    "theorem-main-odd", bound, False,
                    f"counterexample: n={n} m={m} enumerated={got} formula={expect}",
                )
    return CheckResult("theorem-main-odd", bound, True)


def _rank_orbit(m: tuple[int, ...]) -> set[tuple[int, ...]]:
    """All images of ``m`` under coordinate permutations and sign flips."""
    from itertools import permutations

    orbit: set[tuple[int, ...]] = set()
    for perm in permutations(m):
        for signs in product((1, -1), repeat=len(m)):
            orbit.add(tuple(s * x for s, x in zip(signs, perm)))
    return orbit


def check_rank_symmetry_tables(b: Bounds) -> CheckResult:
    """Count tables invariant under coordinate permutations and sign flips,
    checked over the whole orbit of every observed vector."""
    bound = f"k in {b.ks()}, n <= {b.max_n}"
    for k in b.ks():
        for n in range(b.max_n + 1):
            dist = kmarked_rank_distribution(n, k)
            for m, c in dist.items():
                for image in _rank_orbit(m):
                    if dist.get(image, 0) != c:
                        return CheckResult(
                            "rank-symmetry-tables", bound, False,
                            f"counterexample: n={n} k={k} count {c} at {m} "
                            f"but {dist.get(image, 0)} at {image}",
                        )
    return CheckResult("rank-symmetry-tables", bound, True)


def check_permute_corpus(b: Bounds) -> CheckResult:
    """The composite rank-permuting map is a bijection of each corpus onto
    itself, realizing every transposition."""
    bound = f"k in {b.ks()}, n <= {b.max_n}, transpositions"
    for k in b.ks():
        transpositions = []
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                perm = list(range(1, k + 1))
                perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
                transpositions.append(tuple(perm))
        for n in range(b.max_n + 1):
            corpus = list(enumerate_kmarked(n, k))
            members = set(corpus)
            for perm in transpositions:
                seen = set()
                for s in corpus:
                    im = bijections.permute_ranks(s, perm)
                    if im.ranks != tuple(s.ranks[p - 1] for p in perm):
                        return CheckResult(
                            "permute-corpus", bound, False,
                            f"counterexample: n={n} k={k} perm={perm} ranks {s.ranks} -> {im.ranks}",
                        )
                    if im not in members or im in seen:
                        return CheckResult(
                            "permute-corpus", bound, False,
                            f"counterexample: n={n} k={k} perm={perm} image not fresh member for {s}",
                        )
                    seen.add(im)
    return CheckResult("permute-corpus", bound, True)


def check_moment_identity_ordinary(b: Bounds) -> CheckResult:
    bound = f"k in (1, 2), n <= {b.max_n}"
    for k in (1, 2):
        for n in range(b.max_n + 1):
            res = moments.check_moment_identity(k, n)
            if not res.equal:
                return CheckResult(
                    "moment-identity-ordinary", bound, False,
                    f"counterexample: k={k} n={n} marked={res.marked_total} moment={res.moment}",
                )
    return CheckResult("moment-identity-ordinary", bound, True)


def check_moment_identity_odd(b: Bounds) -> CheckResult:
    bound = f"k = 1, n <= {b.max_n}"
    for n in range(b.max_n + 1):
        res = moments.check_moment_identity(1, n, Flavor.ODD)
        if not res.equal:
            return CheckResult(
                "moment-identity-odd", bound, False,
                f"counterexample: n={n} marked={res.marked_total} moment={res.moment}",
            )
    return CheckResult("moment-identity-odd", bound, True)


def check_solution_count(b: Bounds) -> CheckResult:
    nmax = min(b.max_n, 12)
    bound = f"n <= {nmax}, k <= 3"
    for k in (1, 2, 3):
        for n in range(nmax + 1):
            closed = moments.solution_count(n, k)
            brute = moments.solution_count_brute(n, k)
            if closed != brute:
                return CheckResult(
                    "solution-count", bound, False,
                    f"counterexample: n={n} k={k} closed={closed} brute={brute}",
                )
    return CheckResult("solution-count", bound, True)


def _series_triple(flavor: Flavor, b: Bounds, which: str) -> CheckResult:
    name = f"{which}-{flavor.value}"
    bound = f"k in {b.ks()}, order {b.order}, x = {tuple(str(v) for v in b.x)}"
    for k in b.ks():
        xs = b.x[:k]
        lhs = qseries.marked_rank_gf(xs, k, b.order, flavor)
        rhs = (
            qseries.marked_rank_gf_product(xs, k, b.order, flavor)
            if which == "product-form"
            else qseries.marked_rank_gf_partial_fractions(xs, k, b.order, flavor)
        )
        if lhs != rhs:
            for n in range(b.order + 1):
                if lhs[n] != rhs[n]:
                    return CheckResult(
                        name, bound, False,
                        f"counterexample: k={k} coefficient of q^{n}: {lhs[n]} vs {rhs[n]}",
                    )
    return CheckResult(name, bound, True)


def check_product_form_ordinary(b: Bounds) -> CheckResult:
    return _series_triple(Flavor.ORDINARY, b, "product-form")


def check_product_form_odd(b: Bounds) -> CheckResult:
    return _series_triple(Flavor.ODD, b, "product-form")


def check_partial_fractions_ordinary(b: Bounds) -> CheckResult:
    return _series_triple(Flavor.ORDINARY, b, "partial-fractions")


def check_partial_fractions_odd(b: Bounds) -> CheckResult:
    return _series_triple(Flavor.ODD, b, "partial-fractions")


def check_rank_gf(b: Bounds) -> CheckResult:
    bound = f"|m| <= 6, n <= {b.max_n}"
    for m in range(-6, 7):
        series = qseries.rank_gf(m, b.max_n)
        for n in range(b.max_n + 1):
            if series[n] != count_rank(m, n):
                return CheckResult(
                    "rank-gf", bound, False,
                    f"counterexample: m={m} n={n} series={series[n]} count={count_rank(m, n)}",
                )
    return CheckResult("rank-gf", bound, True)


def check_odd_rank_gf(b: Bounds) -> CheckResult:
    bound = f"|m| <= 6, n <= {b.max_n}"
    for m in range(-6, 7):
        series = qseries.odd_rank_gf(m, b.max_n)
        for n in range(b.max_n + 1):
            got = durfee_rank_distribution(n, Flavor.ODD).get(m, 0)
            if series[n] != got:
                return CheckResult(
                    "odd-rank-gf", bound, False,
                    f"counterexample: m={m} n={n} series={series[n]} count={got}",
                )
    return CheckResult("odd-rank-gf", bound, True)


def check_durfee_bijection(b: Bounds) -> CheckResult:
    bound = f"1 <= n <= {b.max_n}"
    for n in range(1, b.max_n + 1):
        if durfee_rank_distribution(n) != rank_distribution(n):
            return CheckResult(
                "durfee-bijection", bound, False,
                f"counterexample: n={n} symbol ranks != partition ranks",
            )
    return CheckResult("durfee-bijection", bound, True)


def _pairs_upto(total: int) -> Iterable[PartitionPair]:
    for t in range(total + 1):
        for a in range(t + 1):
            for pa in enumerate_partitions(a):
                for pb in enumerate_partitions(t - a):
                    yield PartitionPair(pa, pb)


def check_pair_roundtrips(b: Bounds) -> CheckResult:
    bound = f"|alpha| + |beta| <= {b.max_n}"
    for pair in _pairs_upto(b.max_n):
        if not pair.alpha:
            continue
        if pair.beta and pair.beta[0] > pair.alpha[0]:
            continue
        image = bijections.to_strict_shifted(pair)
        r = len(marked.balanced_parts(pair))
        if not marked.is_strict_shifted_pair(image):
            return CheckResult(
                "pair-roundtrips", bound, False, f"counterexample: image of {pair} not strict shifted"
            )
        if bijections.from_strict_shifted(image, r) != pair:
            return CheckResult(
                "pair-roundtrips", bound, False, f"counterexample: {pair} fails the round trip"
            )
    for pair in _pairs_upto(b.max_n):
        if not marked.is_strict_shifted_pair(pair):
            continue
        span = len(pair.alpha) - len(pair.beta)
        for r in range(span):
            back = bijections.from_strict_shifted(pair, r)
            if len(marked.balanced_parts(back)) != r:
                return CheckResult(
                    "pair-roundtrips", bound, False,
                    f"counterexample: {pair} r={r} preimage balance != r",
                )
            if bijections.to_strict_shifted(back) != pair:
                return CheckResult(
                    "pair-roundtrips", bound, False,
                    f"counterexample: {pair} r={r} fails the reverse round trip",
                )
    return CheckResult("pair-roundtrips", bound, True)


def check_deficiencies(b: Bounds) -> CheckResult:
    bound = f"|alpha| + |beta| <= {b.max_n}"
    for pair in _pairs_upto(b.max_n):
        if pair.beta and (not pair.alpha or pair.beta[0] > pair.alpha[0]):
            continue
        defs = marked.deficiencies(pair)
        if any(d < 0 for d in defs):
            return CheckResult(
                "deficiency-nonnegative", bound, False, f"counterexample: {pair} -> {defs}"
            )
        bal = marked.balanced_parts(pair)
        for j, d in enumerate(defs, 1):
            fits = j >= len(pair.alpha) or pair.alpha[j] <= pair.beta[j - 1]
            if (j in bal) != (d == 0 and fits):
                return CheckResult(
                    "deficiency-nonnegative", bound, False,
                    f"counterexample: {pair} index {j} balance/deficiency disagree",
                )
            if not fits and d < 1:
                return CheckResult(
                    "deficiency-nonnegative", bound, False,
                    f"counterexample: {pair} index {j} oversized part with deficiency {d}",
                )
    return CheckResult("deficiency-nonnegative", bound, True)


def check_lift_roundtrip(b: Bounds) -> CheckResult:
    bound = f"k = 2, n <= {b.max_n}"
    for n in range(b.max_n + 1):
        for s in enumerate_kmarked(n, 2):
            lifted = bijections.symbol_to_strict_shifted(s)
            nb = marked.balanced_numbers(s)
            if not marked.is_strict_shifted_symbol(lifted):
                return CheckResult(
                    "lift-roundtrip", bound, False, f"counterexample: lift of {s} not strict shifted"
                )
            if any(
                lifted.ranks[i] != s.ranks[i] + 2 * nb[i] for i in range(s.k - 1)
            ) or lifted.ranks[-1] != s.ranks[-1]:
                return CheckResult(
                    "lift-roundtrip", bound, False, f"counterexample: rank shift wrong for {s}"
                )
            if bijections.symbol_from_strict_shifted(lifted, nb) != s:
                return CheckResult(
                    "lift-roundtrip", bound, False, f"counterexample: {s} fails the round trip"
                )
    return CheckResult("lift-roundtrip", bound, True)


def check_flip_involution(b: Bounds) -> CheckResult:
    bound = f"k = 2, n <= {b.max_n}, both positions"
    for n in range(b.max_n + 1):
        for s in enumerate_kmarked(n, 2):
            for p in (1, 2):
                t = bijections.flip_rank(s, p)
                expected = list(s.ranks)
                expected[p - 1] = -expected[p - 1]
                if t.ranks != tuple(expected):
                    return CheckResult(
                        "flip-involution", bound, False,
                        f"counterexample: {s} position {p} flips to {t.ranks}",
                    )
                if bijections.flip_rank(t, p) != s:
                    return CheckResult(
                        "flip-involution", bound, False,
                        f"counterexample: {s} position {p} not an involution",
                    )
    return CheckResult("flip-involution", bound, True)


def check_merge_split_roundtrips(b: Bounds) -> CheckResult:
    bound = f"k in {b.ks()}, n <= {b.max_n}"
    for k in b.ks():
        for n in range(b.max_n + 1):
            for s in enumerate_kmarked(n, k):
                if not marked.is_strict_shifted_symbol(s):
                    continue
                if any(r < 0 for r in s.ranks):
                    continue
                ds = bijections.merge_marks(s)
                if ds.rank != sum(s.ranks) + k - 1:
                    return CheckResult(
                        "merge-split-roundtrips", bound, False,
                        f"counterexample: merged rank wrong for {s}",
                    )
                if bijections.split_marks(ds, s.ranks) != s:
                    return CheckResult(
                        "merge-split-roundtrips", bound, False,
                        f"counterexample: {s} fails merge-then-split",
                    )
            for ds in enumerate_durfee(n):
                r = ds.rank - (k - 1)
                if r < 0:
                    continue
                for head in product(range(r + 1), repeat=k - 1):
                    if sum(head) > r:
                        continue
                    targets = head + (r - sum(head),)
                    s = bijections.split_marks(ds, targets)
                    if s.ranks != targets or not marked.is_valid(s):
                        return CheckResult(
                            "merge-split-roundtrips", bound, False,
                            f"counterexample: split of {ds} at {targets} invalid",
                        )
                    if bijections.merge_marks(s) != ds:
                        return CheckResult(
                            "merge-split-roundtrips", bound, False,
                            f"counterexample: {ds} at {targets} fails split-then-merge",
                        )
    return CheckResult("merge-split-roundtrips", bound, True)


def check_ss_count_identity(b: Bounds) -> CheckResult:
    """Strict shifted symbols with prescribed nonnegative ranks are counted
    by a single plain rank count."""
    bound = f"k in {b.ks()}, n <= {b.max_n}"
    for k in b.ks():
        for n in range(b.max_n + 1):
            tally: dict[tuple[int, ...], int] = {}
            for s in enumerate_kmarked(n, k):
                if marked.is_strict_shifted_symbol(s) and all(r >= 0 for r in s.ranks):
                    tally[s.ranks] = tally.get(s.ranks, 0) + 1
            lim = max(0, n - k + 1)
            vecs = set(tally)
            for m in product(range(lim + 1), repeat=k):
                if sum(m) <= lim:
                    vecs.add(m)
            for m in vecs:
                expect = count_rank(sum(m) + k - 1, n)
                if tally.get(m, 0) != expect:
                    return CheckResult(
                        "strict-shifted-counts", bound, False,
                        f"counterexample: n={n} k={k} m={m} counted={tally.get(m, 0)} expected={expect}",
                    )
    return CheckResult("strict-shifted-counts", bound, True)


def check_subscript_labels(b: Bounds) -> CheckResult:
    bound = f"strict shifted pairs, |alpha| + |beta| <= {b.max_n}"
    for pair in _pairs_upto(b.max_n):
        if not marked.is_strict_shifted_pair(pair):
            continue
        labels = bijections.subscripts(pair)
        span = len(pair.alpha) - len(pair.beta)
        if labels[0] != 0 or (len(labels) > 1 and labels[1] != 0) or any(g < 0 for g in labels):
            return CheckResult(
                "subscript-labels", bound, False, f"counterexample: {pair} labels {labels}"
            )
        if not set(range(span - 1)) <= set(labels):
            return CheckResult(
                "subscript-labels", bound, False,
                f"counterexample: {pair} labels {labels} miss a value below {span - 1}",
            )
        minima = bijections.subscript_minima(pair)
        if any(minima[i] < minima[i + 1] for i in range(len(minima) - 1)):
            return CheckResult(
                "subscript-labels", bound, False,
                f"counterexample: {pair} minima {minima} not non-increasing",
            )
    return CheckResult("subscript-labels", bound, True)


CHECKS: dict[str, Callable[[Bounds], CheckResult]] = {
    "theorem-main-ordinary": check_theorem_main_ordinary,
    "theorem-main-odd": check_theorem_main_odd,
    "rank-symmetry-tables": check_rank_symmetry_tables,
    "permute-corpus": check_permute_corpus,
    "moment-identity-ordinary": check_moment_identity_ordinary,
    "moment-identity-odd": check_moment_identity_odd,
    "solution-count": check_solution_count,
    "product-form-ordinary": check_product_form_ordinary,
    "product-form-odd": check_product_form_odd,
    "partial-fractions-ordinary": check_partial_fractions_ordinary,
    "partial-fractions-odd": check_partial_fractions_odd,
    "rank-gf": check_rank_gf,
    "odd-rank-gf": check_odd_rank_gf,
    "durfee-bijection": check_durfee_bijection,
    "pair-roundtrips": check_pair_roundtrips,
    "deficiency-nonnegative": check_deficiencies,
    "lift-roundtrip": check_lift_roundtrip,
    "flip-involution": check_flip_involution,
    "merge-split-roundtrips": check_merge_split_roundtrips,
    "strict-shifted-counts": check_ss_count_identity,
    "subscript-labels": check_subscript_labels,
}

SUITES: dict[str, tuple[str, ...]] = {
    "main": ("theorem-main-ordinary", "theorem-main-odd", "rank-symmetry-tables"),
    "cor13": ("moment-identity-ordinary", "moment-identity-odd", "solution-count"),
    "cor11": ("product-form-ordinary", "product-form-odd", "rank-gf", "odd-rank-gf"),
    "thm7": ("partial-fractions-ordinary", "partial-fractions-odd"),
    "phi": (
        "merge-split-roundtrips",
        "strict-shifted-counts",
        "flip-involution",
        "permute-corpus",
        "durfee-bijection",
    ),
    "psi": ("pair-roundtrips", "deficiency-nonnegative", "lift-roundtrip"),
    "subscripts": ("subscript-labels",),
}
SUITES["all"] = tuple(dict.fromkeys(name for s in SUITES.values() for name in s))


def _worker_count() -> int:
    raw = os.environ.get("DURFEE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_one(args: tuple[str, Bounds]) -> CheckResult:
    name, bounds = args
    return CHECKS[name](bounds)


def run_checks(
    names: Sequence[str], bounds: Bounds, workers: int | None = None
) -> list[CheckResult]:
    """Run the named checks, preserving their order in the report."""
    names = list(dict.fromkeys(names))
    workers = _worker_count() if workers is None else max(1, workers)
    if workers == 1 or len(names) <= 1:
        return [CHECKS[name](bounds) for name in names]
    with ProcessPoolExecutor(max_workers=min(workers, len(names))) as pool:
        results = list(pool.map(_run_one, [(name, bounds) for name in names]))
    return results


def run_suite(suite: str, bounds: Bounds, workers: int | None = None) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return run_checks(SUITES[suite], bounds, workers)
