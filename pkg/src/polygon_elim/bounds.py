"""Divisibility lower bounds on point counts and the elimination test built on them.

For a thick hexagon or octagon with point count N:

* if 2**a divides N (a >= 1) then N > 2**(3a);
* hexagon: if 3**b divides N (b >= 1) then N > 3**(3b - 4);
* octagon: if 2**a * 3**b divides N (b >= 1) then N > 2**a * 3**(2b).

Each bound is non-decreasing in the exponents, so evaluating it at the full
valuations gives the strongest instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import p_valuation
from .polygon import PolygonKind, order_admissible, point_count, PolygonOrder

__all__ = [
    "LemmaReport",
    "ValuationProfile",
    "lemma_clauses",
    "lemma_oracle",
    "lemma_threshold",
    "threshold_with_part",
    "valuation_profile",
    "valuation_test",
]


@dataclass(frozen=True)
class ValuationProfile:
    a: int  # v_2(N)
    b: int  # v_3(N)


def valuation_profile(n: int) -> ValuationProfile:
    return ValuationProfile(p_valuation(2, n), p_valuation(3, n))


def lemma_clauses(kind: PolygonKind, profile: ValuationProfile) -> list[tuple[str, int]]:
    """Applicable (part, strict lower bound) pairs.

    A bound 3**(3b-4) below 1 is reported as 0; "N > 1/3" and "N > 0" agree
    on positive integers.
    """
    a, b = profile.a, profile.b
    out = []
    if a >= 1:
        out.append(("i", 2 ** (3 * a)))
    if kind is PolygonKind.HEXAGON:
        if b >= 1:
            e = 3 * b - 4
            out.append(("ii", 3**e if e >= 0 else 0))
    elif b >= 1:
        out.append(("iii", 2**a * 3 ** (2 * b)))
    return out


def threshold_with_part(kind: PolygonKind, profile: ValuationProfile) -> tuple[int, str | None]:
    best, part = 0, None
    for name, bound in lemma_clauses(kind, profile):
        if bound > best:
            best, part = bound, name
    return best, part


def lemma_threshold(kind: PolygonKind, profile: ValuationProfile) -> int:
    """Largest applicable strict lower bound for N (0 when nothing applies)."""
    return threshold_with_part(kind, profile)[0]


def valuation_test(kind: PolygonKind, n: int) -> dict | None:
    """Elimination evidence when n cannot exceed its own divisibility bound."""
    if n < 2:
        raise ValueError("point count must be at least 2")
    profile = valuation_profile(n)
    threshold, part = threshold_with_part(kind, profile)
    if n > threshold:
        return None
    return {
        "point_count": str(n),
        "a": profile.a,
        "b": profile.b,
        "threshold": str(threshold),
        "part": part,
    }


@dataclass
class LemmaReport:
    kind: PolygonKind
    cap: int
    orders_checked: int
    violations: list[tuple[PolygonOrder, int, str]]


def lemma_oracle(kind: PolygonKind, cap: int) -> LemmaReport:
    """Check every bound clause on every admissible order with count <= cap.

    Clauses are tested at every exponent up to the full valuation, not just
    the full one, so the check does not lean on monotonicity.
    """
    from .oracle import enumerate_admissible_orders

    if cap > 10**9:
        raise ValueError("cap above 10**9 is outside the brute-force range")
    violations = []
    checked = 0
    for order, n in enumerate_admissible_orders(kind, cap):
        checked += 1
        assert order_admissible(kind, order) and point_count(kind, order) == n
        full = valuation_profile(n)
        for a in range(full.a + 1):
            for b in range(full.b + 1):
                for part, bound in lemma_clauses(kind, ValuationProfile(a, b)):
                    if not n > bound:
                        violations.append((order, n, f"{part}@a={a},b={b}"))
    return LemmaReport(kind, cap, checked, violations)
