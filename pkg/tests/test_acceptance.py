"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line, repeated in the
"acceptance criteria" section of the pytest summary.
"""

import json
import time

import pytest

from polygon_elim.catalogue import (
    Family,
    case_point_count,
    enumerate_cases,
    find_case,
    group_order,
    parabolic_subdegrees,
    stabiliser_order,
)
from polygon_elim.cli import main
from polygon_elim.eliminator import Outcome, evaluate_case
from polygon_elim.oracle import brute_solve_orders, brute_subdegree_check
from polygon_elim.polygon import PolygonKind, PolygonOrder, point_count
from polygon_elim.report import paper_crosscheck
from polygon_elim.verify import run_suite

HEX, OCT = PolygonKind.HEXAGON, PolygonKind.OCTAGON
SZ, SR, LR = Family.SUZUKI, Family.SMALL_REE, Family.LARGE_REE

pytestmark = pytest.mark.slow


def _attempt(verdict, name):
    (hit,) = [a for a in verdict.evidence["attempts"] if a["test"] == name]
    return hit


def test_lemma_suite(criterion, capsys):
    t0 = time.perf_counter()
    assert main(["verify", "--suite", "lemma", "--limit", "100000000"]) == 0
    elapsed = time.perf_counter() - t0
    out = capsys.readouterr().out
    assert "failures=0" in out
    criterion["detail"] = f"0 violations up to 1e8 in {elapsed:.1f}s"
    assert elapsed < 60


def test_solver_equivalence(criterion):
    res = run_suite("solver", 10**6)
    criterion["detail"] = f"{res.checked} values of n agree, {res.seconds:.1f}s"
    assert res.passed and not res.failures
    assert res.seconds < 300


def test_suzuki_replication(criterion):
    total = 0
    for m in (3, 5, 7):
        for case in enumerate_cases(SZ, m):
            for kind in PolygonKind:
                v = evaluate_case(SZ, m, case, kind)
                assert v.outcome is Outcome.ELIMINATED, (m, case.label, kind)
                total += 1
    v = evaluate_case(SZ, 3, find_case(SZ, 3, "(ii)"), HEX)
    ev = v.evidence
    assert ev["point_count"] == "2080" == str(group_order(SZ, 3) // 14)
    assert (ev["a"], ev["b"], ev["threshold"]) == (5, 0, "32768")
    assert v.test == "valuation"
    criterion["detail"] = f"{total} verdicts Eliminated; dihedral m=3 n=2080 (a,b)=(5,0)"


def test_small_ree_replication(criterion):
    total = 0
    for m in (3, 5, 7):
        for case in enumerate_cases(SR, m):
            for kind in PolygonKind:
                v = evaluate_case(SR, m, case, kind)
                assert v.definitive and v.outcome is Outcome.ELIMINATED, (m, case.label, kind)
                total += 1

    # (ii): index is |G| / |H| computed independently of the catalogue
    ii = find_case(SR, 3, "(ii)")
    n_ii = group_order(SR, 3) // (27 * (27**2 - 1))
    v = evaluate_case(SR, 3, ii, HEX)
    assert v.test == "valuation" and v.evidence["point_count"] == str(n_ii) == "512487"

    sub = find_case(SR, 3, "(v)[l=1,r=3]")
    v = evaluate_case(SR, 3, sub, HEX)
    assert v.test == "parameter-existence" and v.evidence["point_count"] == "6662331"
    assert brute_solve_orders(HEX, 6_662_331) == set()

    v = evaluate_case(SR, 3, sub, OCT)
    assert v.test == "refined-octagon"
    ref = _attempt(v, "refined-octagon")
    assert ref["preconditions"]["b"] == 6
    (half,) = [s for s in ref["splits"] if s["subcase"] == "c=d/2"]
    assert half["n/3^b mod 3"] == 1 and half["closed"]

    iii = find_case(SR, 3, "(iii)")
    v = evaluate_case(SR, 3, iii, OCT)
    assert v.test == "parameter-existence"
    assert not _attempt(v, "valuation")["fired"]
    assert v.evidence["point_count"] == "59960979"
    assert group_order(SR, 3) // stabiliser_order(iii, 3) == 59_960_979
    assert brute_solve_orders(OCT, 59_960_979) == set()
    (row,) = [r for r in paper_crosscheck(SR, 3)
              if r["case"] == "2G2:(iii)" and r["kinds"] == ["octagon"]]
    assert not row["match"]
    criterion["detail"] = f"{total} definitive eliminations; m=3 pinned sub-checks hold"


def test_large_ree_replication(criterion):
    counts = {"Classical": 0, "subdegree": 0, "valuation": 0}
    for m in (3, 5, 7):
        for case in enumerate_cases(LR, m):
            for kind in PolygonKind:
                v = evaluate_case(LR, m, case, kind)
                if case.is_parabolic and kind is OCT:
                    assert v.outcome is Outcome.CLASSICAL
                    counts["Classical"] += 1
                elif case.is_parabolic:
                    assert (v.outcome, v.test) == (Outcome.ELIMINATED, "subdegree-partition")
                    counts["subdegree"] += 1
                else:
                    assert (v.outcome, v.test) == (Outcome.ELIMINATED, "valuation"), (m, case.label)
                    counts["valuation"] += 1
    for label in ("P1", "P2"):
        subs = parabolic_subdegrees(find_case(LR, 3, label), 3)
        assert brute_subdegree_check(subs, HEX, 10**4) == set()
    v = evaluate_case(LR, 3, find_case(LR, 3, "(iii)"), HEX)
    assert v.evidence["a"] == 9 * 3 - 1 == 26
    criterion["detail"] = ", ".join(f"{k}={c}" for k, c in counts.items()) + "; (iii) a=26"


def test_classical_sanity(criterion):
    p1 = find_case(LR, 3, "P1")
    n = point_count(OCT, PolygonOrder(8, 64))
    assert n == case_point_count(LR, 3, p1) == 1_210_323_465
    assert 1 + sum(parabolic_subdegrees(p1, 3)) == n
    criterion["detail"] = f"n={n}"


@pytest.fixture(scope="module")
def full_sweeps(tmp_path_factory):
    d = tmp_path_factory.mktemp("sweep")
    runs = []
    for i in range(2):
        out = d / f"run{i}.json"
        t0 = time.perf_counter()
        rc = main(["sweep", "--family", "all", "--m", "3..13", "--kind", "both",
                   "--out", str(out)])
        runs.append((rc, time.perf_counter() - t0, out.read_bytes()))
    return runs


def test_full_sweep_health(criterion, full_sweeps):
    rc, elapsed, data = full_sweeps[0]
    assert rc in (0, 2)
    payload = json.loads(data)
    inconclusive = [c for c in payload["cases"] if c["verdict"]["outcome"] == "Inconclusive"]
    for c in inconclusive:
        assert c["m"] > 7
        reasons = c["verdict"]["reasons"]
        assert len(reasons) == 1 and "incomplete factorization" in reasons[0]
    s = payload["summary"]
    criterion["detail"] = (f"exit {rc} in {elapsed:.1f}s; {s['total']} verdicts, "
                           f"{len(inconclusive)} Inconclusive")
    assert elapsed < 600


def test_determinism(criterion, full_sweeps):
    (_, _, a), (_, _, b) = full_sweeps
    criterion["detail"] = f"{len(a)} bytes each"
    assert a == b
