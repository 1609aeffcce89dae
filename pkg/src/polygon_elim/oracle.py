"""Naive brute-force scans used as independent cross-checks.

Nothing here factorizes or solves equations: every routine walks (s, t)
upwards and compares. Keep it that way so correctness stays obvious.
"""

from __future__ import annotations

from itertools import product

from .polygon import (
    PolygonKind,
    PolygonOrder,
    distance_class_sizes,
    order_admissible,
    point_count,
)

__all__ = [
    "brute_solve_orders",
    "brute_subdegree_check",
    "count_index",
    "enumerate_admissible_orders",
]

BRUTE_CAP = 10**9


def enumerate_admissible_orders(kind: PolygonKind, cap: int) -> list[tuple[PolygonOrder, int]]:
    """All (order, point count) with an admissible order and count <= cap,
    sorted by count then s."""
    if cap > BRUTE_CAP:
        raise ValueError(f"cap {cap} exceeds {BRUTE_CAP}")
    out = []
    s = 2
    while point_count(kind, PolygonOrder(s, 2)) <= cap:
        t = 2
        while True:
            order = PolygonOrder(s, t)
            n = point_count(kind, order)
            if n > cap:
                break
            if order_admissible(kind, order):
                out.append((order, n))
            t += 1
        s += 1
    out.sort(key=lambda item: (item[1], item[0].s))
    return out


def count_index(kind: PolygonKind, cap: int) -> dict[int, set[PolygonOrder]]:
    """Map point count -> admissible orders, for every count <= cap."""
    index: dict[int, set[PolygonOrder]] = {}
    for order, n in enumerate_admissible_orders(kind, cap):
        index.setdefault(n, set()).add(order)
    return index


def brute_solve_orders(kind: PolygonKind, n: int) -> set[PolygonOrder]:
    if n > BRUTE_CAP:
        raise ValueError(f"n={n} exceeds brute-force cap {BRUTE_CAP}")
    found = set()
    s = 2
    while point_count(kind, PolygonOrder(s, 2)) <= n:
        t = 2
        while True:
            order = PolygonOrder(s, t)
            c = point_count(kind, order)
            if c == n and order_admissible(kind, order):
                found.add(order)
            if c >= n:
                break
            t += 1
        s += 1
    return found


def brute_subdegree_check(
    subdegrees: list[int],
    kind: PolygonKind = PolygonKind.HEXAGON,
    bound: int = 10**4,
) -> set[tuple[PolygonOrder, tuple[int, ...]]]:
    """Orders with s, t <= bound whose distance classes are unions of the
    given orbit sizes.

    An assignment maps each subdegree (by position) to a distance class
    index 0, 1, ...; every class must receive at least one orbit.
    """
    total = sum(subdegrees)
    nclasses = kind.num_distance_classes - 1
    found = set()
    for s in range(2, bound + 1):
        if sum(distance_class_sizes(kind, PolygonOrder(s, 2))) > total:
            break
        for t in range(2, bound + 1):
            order = PolygonOrder(s, t)
            sizes = distance_class_sizes(kind, order)
            if sum(sizes) > total:
                break
            if sum(sizes) != total or not order_admissible(kind, order):
                continue
            for assignment in product(range(nclasses), repeat=len(subdegrees)):
                sums = [0] * nclasses
                for k, cls in enumerate(assignment):
                    sums[cls] += subdegrees[k]
                if sums == sizes and all(cls in assignment for cls in range(nclasses)):
                    found.add((order, assignment))
    return found
