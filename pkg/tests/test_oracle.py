from polygon_elim.catalogue import Family, find_case, parabolic_subdegrees
from polygon_elim.oracle import (
    brute_solve_orders,
    brute_subdegree_check,
    count_index,
    enumerate_admissible_orders,
)
from polygon_elim.polygon import PolygonKind, PolygonOrder, order_admissible, point_count

HEX, OCT = PolygonKind.HEXAGON, PolygonKind.OCTAGON


def test_enumerate_examples():
    assert enumerate_admissible_orders(HEX, 63) == [(PolygonOrder(2, 2), 63)]
    assert enumerate_admissible_orders(OCT, 1755) == [(PolygonOrder(2, 4), 1755)]
    assert enumerate_admissible_orders(HEX, 62) == []
    assert enumerate_admissible_orders(OCT, 62) == []


def test_enumerate_sorted_and_valid():
    for kind in PolygonKind:
        items = enumerate_admissible_orders(kind, 10**7)
        keys = [(n, o.s) for o, n in items]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)
        for o, n in items:
            assert order_admissible(kind, o) and point_count(kind, o) == n


def test_brute_solve_examples():
    assert brute_solve_orders(HEX, 63) == {PolygonOrder(2, 2)}
    assert brute_solve_orders(OCT, 59_960_979) == set()
    assert brute_solve_orders(HEX, 64) == set()


def test_brute_solve_matches_index():
    for kind in PolygonKind:
        idx = count_index(kind, 10**6)
        for n in list(idx)[:50]:
            assert brute_solve_orders(kind, n) == idx[n]


def test_brute_subdegree_parabolics_empty():
    for label in ("P1", "P2"):
        subs = parabolic_subdegrees(find_case(Family.LARGE_REE, 3, label), 3)
        assert brute_subdegree_check(subs, HEX, 10**4) == set()


def test_brute_subdegree_positive_control():
    hits = brute_subdegree_check([6, 24, 16, 16], HEX, 100)
    assert {o for o, _ in hits} == {PolygonOrder(2, 2)}
    assert (PolygonOrder(2, 2), (0, 1, 2, 2)) in hits
