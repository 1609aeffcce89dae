import pytest

from polygon_elim.arith import Factorization, IncompleteFactorizationError, factorize
from polygon_elim.oracle import brute_solve_orders
from polygon_elim.polygon import (
    PolygonKind,
    PolygonOrder,
    distance_class_sizes,
    order_admissible,
    point_count,
    solve_orders,
)

HEX, OCT = PolygonKind.HEXAGON, PolygonKind.OCTAGON


@pytest.mark.parametrize(
    "kind, order, n",
    [
        (HEX, (2, 2), 63),
        (OCT, (2, 4), 1755),
        (OCT, (8, 64), 1_210_323_465),
    ],
)
def test_point_count(kind, order, n):
    assert point_count(kind, PolygonOrder(*order)) == n


def test_point_count_literal_substitution():
    # 3*21, 3*9*65
    assert point_count(HEX, PolygonOrder(2, 2)) == 3 * 21
    assert point_count(OCT, PolygonOrder(2, 4)) == 3 * 9 * 65


@pytest.mark.parametrize(
    "kind, order, ok",
    [
        (HEX, (2, 2), True),
        (OCT, (2, 2), False),
        (OCT, (8, 64), True),
        (HEX, (1, 4), False),
    ],
)
def test_order_admissible(kind, order, ok):
    assert order_admissible(kind, PolygonOrder(*order)) is ok


def test_distance_class_examples():
    assert distance_class_sizes(HEX, PolygonOrder(2, 2)) == [6, 24, 32]
    assert distance_class_sizes(HEX, PolygonOrder(8, 64))[:2] == [520, 266240]
    assert distance_class_sizes(OCT, PolygonOrder(2, 4)) == [10, 80, 640, 1024]


def test_distance_classes_partition_points():
    for kind in PolygonKind:
        for s in range(2, 101):
            for t in range(2, 101):
                o = PolygonOrder(s, t)
                assert 1 + sum(distance_class_sizes(kind, o)) == point_count(kind, o)


def test_point_count_never_prime():
    from polygon_elim.arith import is_prime

    for kind in PolygonKind:
        for s in range(2, 60):
            for t in range(2, 60):
                assert not is_prime(point_count(kind, PolygonOrder(s, t)))


def test_solve_examples():
    assert solve_orders(HEX, 63, factorize(63)) == {PolygonOrder(2, 2)}
    assert solve_orders(OCT, 59_960_979, factorize(59_960_979)) == set()
    assert solve_orders(HEX, 64, factorize(64)) == set()
    assert solve_orders(HEX, 10, factorize(10)) == set()


def test_solve_round_trip():
    for kind in PolygonKind:
        for s in range(2, 41):
            for t in range(2, 41):
                o = PolygonOrder(s, t)
                if not order_admissible(kind, o):
                    continue
                n = point_count(kind, o)
                assert o in solve_orders(kind, n, factorize(n))


def test_solve_needs_complete_factorization():
    n = 10141 * 797161
    partial = Factorization(n=n, factors=(), cofactor=n)
    with pytest.raises(IncompleteFactorizationError):
        solve_orders(OCT, n, partial)
    with pytest.raises(ValueError):
        solve_orders(HEX, 63, factorize(64))


def test_solve_agrees_with_brute_on_sample():
    for n in list(range(1, 3000)) + [18525, 24700, 43225, 1_210_323_465 // 1000]:
        f = factorize(n)
        for kind in PolygonKind:
            assert solve_orders(kind, n, f) == brute_solve_orders(kind, n), (kind, n)
