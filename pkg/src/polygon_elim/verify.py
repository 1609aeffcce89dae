"""Oracle suites behind ``polygon-elim verify``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .arith import factorize, p_valuation
from .bounds import lemma_oracle
from .catalogue import Family, enumerate_cases, parabolic_subdegrees
from .eliminator import refined_octagon_test, subdegree_partition_test
from .oracle import brute_subdegree_check, count_index
from .polygon import PolygonKind, solve_orders

SUITES = ("lemma", "solver", "subdegree", "refined")
DEFAULT_LIMITS = {"lemma": 10**8, "solver": 10**6, "subdegree": 10**4, "refined": 10**8}


@dataclass
class SuiteResult:
    suite: str
    limit: int
    passed: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def lines(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        out = [f"[{status}] {self.suite} limit={self.limit} checked={self.checked} "
               f"failures={len(self.failures)} ({self.seconds:.1f}s)"]
        out += [f"  note: {n}" for n in self.notes]
        out += [f"  fail: {f}" for f in self.failures[:20]]
        return out


def lemma_suite(limit: int) -> SuiteResult:
    checked, failures, notes = 0, [], []
    for kind in PolygonKind:
        rep = lemma_oracle(kind, limit)
        checked += rep.orders_checked
        notes.append(f"{kind.value}: {rep.orders_checked} admissible orders")
        failures += [f"{kind.value} {o} N={n} clause {c}" for o, n, c in rep.violations]
    return SuiteResult("lemma", limit, not failures, checked, failures, notes)


def solver_suite(limit: int) -> SuiteResult:
    """Factorization-based solver against the brute-force count index, every n <= limit."""
    index = {kind: count_index(kind, limit) for kind in PolygonKind}
    failures = []
    hits = 0
    for n in range(1, limit + 1):
        f = factorize(n)
        for kind in PolygonKind:
            got = solve_orders(kind, n, f)
            want = index[kind].get(n, set())
            if got != want:
                failures.append(f"{kind.value} n={n}: solver {sorted(got)} brute {sorted(want)}")
            hits += bool(got)
    notes = [f"{hits} (n, kind) pairs with solutions"]
    return SuiteResult("solver", limit, not failures, limit, failures, notes)


def subdegree_suite(limit: int, m_values=(3,)) -> SuiteResult:
    failures, notes = [], []
    checked = 0
    for m in m_values:
        for case in enumerate_cases(Family.LARGE_REE, m):
            if not case.is_parabolic:
                continue
            checked += 1
            algebraic = subdegree_partition_test(case, m, PolygonKind.HEXAGON)
            brute = brute_subdegree_check(parabolic_subdegrees(case, m), PolygonKind.HEXAGON, limit)
            agree = algebraic["eliminated"] == (not brute)
            notes.append(
                f"m={m} {case.label}: {algebraic['assignments_tried']} assignments, "
                f"eliminated={algebraic['eliminated']}, brute hits={len(brute)}"
            )
            if not agree:
                failures.append(f"m={m} {case.label}: algebraic and brute disagree")
    return SuiteResult("subdegree", limit, not failures, checked, failures, notes)


def refined_suite(limit: int, samples: int = 10_000, seed: int = 0) -> SuiteResult:
    """Random n meeting the refined-test preconditions, plus every genuine
    octagon count <= limit: an elimination must never hit a real count."""
    octagons = count_index(PolygonKind.OCTAGON, min(limit, 10**9))
    rng = random.Random(seed)
    failures = []
    fired = 0
    max_b = 6
    while 3 ** (max_b + 1) <= limit:
        max_b += 1
    drawn = 0
    while drawn < samples and max_b >= 6:
        b = rng.randint(6, max_b)
        kmax = limit // 3**b
        k = rng.randrange(1, kmax + 1, 2)
        if k % 3 == 0:
            continue
        n = 3**b * k
        ev = refined_octagon_test(n)
        if ev.get("abstain", "").startswith("precondition"):
            continue
        drawn += 1
        if ev["eliminated"]:
            fired += 1
            if n in octagons:
                failures.append(f"n={n} eliminated but octagon orders {sorted(octagons[n])}")
    genuine = 0
    for n, orders in octagons.items():
        if p_valuation(3, n) >= 6:
            genuine += 1
            if refined_octagon_test(n)["eliminated"]:
                failures.append(f"genuine count n={n} {sorted(orders)} eliminated")
    notes = [f"{drawn} random inputs met preconditions, {fired} eliminated",
             f"{genuine} genuine octagon counts with v3 >= 6 checked"]
    return SuiteResult("refined", limit, not failures, drawn + genuine, failures, notes)


def run_suite(suite: str, limit: int | None = None) -> SuiteResult:
    runners = {
        "lemma": lemma_suite,
        "solver": solver_suite,
        "subdegree": subdegree_suite,
        "refined": refined_suite,
    }
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    lim = DEFAULT_LIMITS[suite] if limit is None else limit
    t0 = time.perf_counter()
    res = runners[suite](lim)
    res.seconds = time.perf_counter() - t0
    return res
