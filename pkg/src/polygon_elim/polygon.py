"""Parameter arithmetic for thick generalised hexagons and octagons."""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .arith import (
    Factorization,
    IncompleteFactorizationError,
    divisors,
    is_perfect_square,
)

__all__ = [
    "PolygonKind",
    "PolygonOrder",
    "distance_class_sizes",
    "order_admissible",
    "point_count",
    "solve_orders",
]


class PolygonKind(Enum):
    HEXAGON = "hexagon"
    OCTAGON = "octagon"

    @property
    def num_distance_classes(self) -> int:
        """Number of point distance classes, the point itself included."""
        return 4 if self is PolygonKind.HEXAGON else 5

    @classmethod
    def parse(cls, text: str) -> PolygonKind:
        return cls(text.strip().lower())


class PolygonOrder(NamedTuple):
    s: int
    t: int

    def __str__(self) -> str:
        return f"({self.s},{self.t})"


def point_count(kind: PolygonKind, order: PolygonOrder) -> int:
    s, t = order
    st = s * t
    if kind is PolygonKind.HEXAGON:
        return (s + 1) * (st * st + st + 1)
    return (s + 1) * (st + 1) * (st * st + 1)


def order_admissible(kind: PolygonKind, order: PolygonOrder) -> bool:
    """Thick, and st (hexagon) or 2st (octagon) a perfect square."""
    s, t = order
    if s < 2 or t < 2:
        return False
    k = s * t if kind is PolygonKind.HEXAGON else 2 * s * t
    return is_perfect_square(k)[0]


def distance_class_sizes(kind: PolygonKind, order: PolygonOrder) -> list[int]:
    """Sizes of the points at incidence distance 2, 4, ... from a fixed point."""
    s, t = order
    sizes = [s * (t + 1), s * s * t * (t + 1)]
    if kind is PolygonKind.HEXAGON:
        sizes.append(s**3 * t**2)
    else:
        sizes += [s**3 * t**2 * (t + 1), s**4 * t**3]
    return sizes


def solve_orders(kind: PolygonKind, n: int, f: Factorization) -> set[PolygonOrder]:
    """All admissible thick orders whose point count is ``n``.

    ``f`` must be a complete factorization of ``n``; otherwise
    :class:`IncompleteFactorizationError` is raised, since a missing divisor
    could hide a solution.
    """
    if f.n != n:
        raise ValueError(f"factorization is of {f.n}, not {n}")
    if not f.complete:
        raise IncompleteFactorizationError(
            f"cannot decide orders for {n}: cofactor {f.cofactor} unsplit"
        )
    if kind is PolygonKind.HEXAGON:
        return _solve_hexagon(n, f)
    return _solve_octagon(n, f)


def _solve_hexagon(n: int, f: Factorization) -> set[PolygonOrder]:
    found = set()
    for u in divisors(f):
        if u < 3:
            continue
        m = n // u
        # x^2 + x + 1 = m with x = st
        ok, root = is_perfect_square(4 * m - 3)
        if not ok or root % 2 == 0:
            continue
        x = (root - 1) // 2
        s = u - 1
        if x % s:
            continue
        t = x // s
        order = PolygonOrder(s, t)
        if t >= 2 and order_admissible(PolygonKind.HEXAGON, order):
            found.add(order)
    return found


def _solve_octagon(n: int, f: Factorization) -> set[PolygonOrder]:
    found = set()
    all_divs = list(divisors(f))
    for u in all_divs:
        if u < 3:
            continue
        w = n // u
        # v * ((v-1)^2 + 1) = w forces v <= cbrt(w) + 1
        vmax = _icbrt(w) + 1
        for v in all_divs:
            if v > vmax:
                break
            if v < 5 or w % v:
                continue
            x = v - 1
            if w // v != x * x + 1:
                continue
            s = u - 1
            if x % s:
                continue
            t = x // s
            order = PolygonOrder(s, t)
            if t >= 2 and order_admissible(PolygonKind.OCTAGON, order):
                found.add(order)
    return found


def _icbrt(n: int) -> int:
    if n < 8:
        return 1 if n >= 1 else 0
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x

