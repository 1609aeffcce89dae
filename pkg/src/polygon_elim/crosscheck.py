"""Closed-form index expressions as printed in the source derivations.

This table is documentation that can be checked, nothing more: the verdict
path never reads it. Each row evaluates a printed expression for |S : S_x|
(and any 2-/3-adic exponent stated alongside it) so the report can flag
places where print and exact quotient disagree.

Notation in the lambdas: q is the field size, rt is sqrt(2q) or sqrt(3q),
sg is the case sign (+1 for the C_{q+rt+1} torus), sub is (l, r) or None.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arith import p_valuation
from .catalogue import CatalogueCase, Family, case_point_count, field_size
from .polygon import PolygonKind, PolygonOrder, distance_class_sizes

BOTH = (PolygonKind.HEXAGON, PolygonKind.OCTAGON)
HEX = (PolygonKind.HEXAGON,)
OCT = (PolygonKind.OCTAGON,)


@dataclass(frozen=True)
class Display:
    family: Family
    roman: str
    kinds: tuple[PolygonKind, ...]
    text: str
    index: Callable[..., Fraction | int] | None = None
    # prime -> stated exponent (function of m and sub)
    exponents: tuple[tuple[int, Callable[[int, tuple | None], int]], ...] = ()
    min_v2: Callable[[int], int] | None = None
    minus_one: Callable[[int], int] | None = None


def _sub_ratio(p: int, l: int, r: int, parts) -> Fraction:  # noqa: E741
    num = den = 1
    for mult, sgn in parts:
        num *= p ** (mult * l * r) + sgn
        den *= p ** (mult * l) + sgn
    return Fraction(num, den)


F = Fraction
SZ, SR, LR = Family.SUZUKI, Family.SMALL_REE, Family.LARGE_REE

DISPLAYS: tuple[Display, ...] = (
    # index q^2(q^2+1)/2 = 2^(2m-1)(2^(2m)+1), 2-adic exponent 2m-1
    Display(SZ, "(ii)", BOTH, "q^2(q^2+1)/2",
            lambda q, rt, sg, sub: F(q**2 * (q**2 + 1), 2),
            ((2, lambda m, sub: 2 * m - 1),)),
    # index q^2(q -/+ sqrt(2q) + 1)(q-1)/4, 2-adic exponent 2m-2
    Display(SZ, "(iii)", BOTH, "q^2(q∓√(2q)+1)(q-1)/4",
            lambda q, rt, sg, sub: F(q**2 * (q - sg * rt + 1) * (q - 1), 4),
            ((2, lambda m, sub: 2 * m - 2),)),
    Display(SZ, "(iv)", BOTH, "2^(2l(r-1)) (2^(2lr)+1)(2^(lr)-1) / ((2^(2l)+1)(2^l-1))",
            lambda q, rt, sg, sub: 2 ** (2 * sub[0] * (sub[1] - 1))
            * _sub_ratio(2, sub[0], sub[1], ((2, 1), (1, -1))),
            ((2, lambda m, sub: 2 * sub[0] * (sub[1] - 1)),)),
    Display(SR, "(ii)", HEX, "q^2(q^2-q+1)",
            lambda q, rt, sg, sub: q**2 * (q**2 - q + 1),
            ((3, lambda m, sub: 2 * m),)),
    Display(SR, "(ii)", OCT, "3^(2m)(3^(2m)-3^m+1)",
            lambda q, rt, sg, sub: q**2 * (q**2 - q + 1),
            ((2, lambda m, sub: 0), (3, lambda m, sub: 2 * m))),
    # hexagon: q^3(q-1)(q^2-q+1)/6 with 3-adic exponent 3m-1
    Display(SR, "(iii)", HEX, "q^3(q-1)(q^2-q+1)/6",
            lambda q, rt, sg, sub: F(q**3 * (q - 1) * (q**2 - q + 1), 6),
            ((3, lambda m, sub: 3 * m - 1),)),
    # octagon: 2 * 3^(3m-1) * (3^(3m)+1)/4 with a=1, b=3m-1
    Display(SR, "(iii)", OCT, "2·3^(3m-1)(3^(3m)+1)/4",
            lambda q, rt, sg, sub: F(2 * (q**3 // 3) * (q**3 + 1), 4),
            ((2, lambda m, sub: 1), (3, lambda m, sub: 3 * m - 1))),
    # q^3(q^2-1)(q -/+ sqrt(3q) + 1); hexagon exponent 3m, octagon a=4, b=3m
    Display(SR, "(iv)", HEX, "q^3(q^2-1)(q∓√(3q)+1)",
            lambda q, rt, sg, sub: q**3 * (q**2 - 1) * (q - sg * rt + 1),
            ((3, lambda m, sub: 3 * m),)),
    Display(SR, "(iv)", OCT, "2^4 3^(3m) (3^(2m)-1)(3^m∓3^((m+1)/2)+1)/2^4",
            lambda q, rt, sg, sub: q**3 * (q**2 - 1) * (q - sg * rt + 1),
            ((2, lambda m, sub: 4), (3, lambda m, sub: 3 * m))),
    Display(SR, "(v)", BOTH, "3^(3l(r-1)) (3^(3lr)+1)(3^(lr)-1) / ((3^(3l)+1)(3^l-1))",
            lambda q, rt, sg, sub: 3 ** (3 * sub[0] * (sub[1] - 1))
            * _sub_ratio(3, sub[0], sub[1], ((3, 1), (1, -1))),
            ((3, lambda m, sub: 3 * sub[0] * (sub[1] - 1)),)),
    # P1: (q^4-q^2+1)(q^3+1)(q^2+1)(q+1); N-1 = q^10+q^9+q^7+q^6+q^4+q^3+q
    Display(LR, "P1", BOTH, "(q^4-q^2+1)(q^3+1)(q^2+1)(q+1)",
            lambda q, rt, sg, sub: (q**4 - q**2 + 1) * (q**3 + 1) * (q**2 + 1) * (q + 1),
            minus_one=lambda q: q**10 + q**9 + q**7 + q**6 + q**4 + q**3 + q),
    # P2: (q^4-q^2+1)(q^2+1)^2(q^3+1); N-1 = q^11+q^9+q^8+q^6+q^5+q^3+q^2
    Display(LR, "P2", BOTH, "(q^4-q^2+1)(q^2+1)^2(q^3+1)",
            lambda q, rt, sg, sub: (q**4 - q**2 + 1) * (q**2 + 1) ** 2 * (q**3 + 1),
            minus_one=lambda q: q**11 + q**9 + q**8 + q**6 + q**5 + q**3 + q**2),
    Display(LR, "(iii)", BOTH, "q^9(q^6+1)(q^2+1)(q-1)/2",
            lambda q, rt, sg, sub: F(q**9 * (q**6 + 1) * (q**2 + 1) * (q - 1), 2),
            ((2, lambda m, sub: 9 * m - 1),)),
    Display(LR, "(iv)", BOTH, "q^9(q^6+1)(q^2+1)(q-1)/2",
            lambda q, rt, sg, sub: F(q**9 * (q**6 + 1) * (q**2 + 1) * (q - 1), 2),
            ((2, lambda m, sub: 9 * m - 1),)),
    Display(LR, "(v)", BOTH, "q^8(q^4-q^2+1)(q^3+1)(q+1)/2",
            lambda q, rt, sg, sub: F(q**8 * (q**4 - q**2 + 1) * (q**3 + 1) * (q + 1), 2),
            ((2, lambda m, sub: 8 * m - 1),)),
    Display(LR, "(vi)", BOTH, "q^8(q^6+1)(q^2-q+1)/2",
            lambda q, rt, sg, sub: F(q**8 * (q**6 + 1) * (q**2 - q + 1), 2),
            ((2, lambda m, sub: 8 * m - 1),)),
    Display(LR, "(vii)", BOTH,
            "2^(12l(r-1)) (2^(6rl)+1)(2^(4rl)-1)(2^(3rl)+1)(2^(rl)-1) / ((2^(6l)+1)(2^(4l)-1)(2^(3l)+1)(2^l-1))",
            lambda q, rt, sg, sub: 2 ** (12 * sub[0] * (sub[1] - 1))
            * _sub_ratio(2, sub[0], sub[1], ((6, 1), (4, -1), (3, 1), (1, -1))),
            ((2, lambda m, sub: 12 * sub[0] * (sub[1] - 1)),)),
    # only a divisibility claim: 2^(12m-5) divides the index
    Display(LR, "(viii)", BOTH, "2^(12m-5) | N", min_v2=lambda m: 12 * m - 5),
    Display(LR, "(ix)", BOTH, "2^(12m-5) | N", min_v2=lambda m: 12 * m - 5),
    Display(LR, "(x)", BOTH, "2^(12m-5) | N", min_v2=lambda m: 12 * m - 5),
)


def _rows_for(case: CatalogueCase, kind: PolygonKind | None) -> list[Display]:
    return [
        d for d in DISPLAYS
        if d.family is case.family and d.roman == case.roman
        and (kind is None or kind in d.kinds)
    ]


def check_display(d: Display, case: CatalogueCase, m: int) -> dict:
    fam = case.family
    q = field_size(fam, m)
    rt = fam.prime ** ((m + 1) // 2)
    sub = (case.subfield.l, case.subfield.r) if case.subfield else None
    exact = case_point_count(fam, m, case)
    row: dict = {
        "case": case.label,
        "kinds": [k.value for k in d.kinds],
        "displayed": d.text,
        "exact_index": str(exact),
    }
    ok = True
    if d.index is not None:
        val = Fraction(d.index(q, rt, case.sign, sub))
        row["displayed_value"] = str(val)
        ok &= val == exact
    if d.minus_one is not None:
        val = d.minus_one(q)
        row["displayed_minus_one"] = str(val)
        ok &= val == exact - 1
    stated = {}
    for prime, fn in d.exponents:
        want, got = fn(m, sub), p_valuation(prime, exact)
        stated[f"v{prime}"] = {"stated": want, "exact": got}
        ok &= want == got
    if d.min_v2 is not None:
        want, got = d.min_v2(m), p_valuation(2, exact)
        stated["v2>="] = {"stated": want, "exact": got}
        ok &= got >= want
    if stated:
        row["exponents"] = stated
    row["match"] = bool(ok)
    return row


def class_size_identity_row(q: int) -> dict:
    """The printed left side s^3t^2 + s^2(t+1) + s(t+1) against the true
    hexagon class-size sum s(t+1) + s^2t(t+1) + s^3t^2, at (s, t) = (q, q^2)."""
    s, t = q, q * q
    printed = s**3 * t**2 + s**2 * (t + 1) + s * (t + 1)
    true = sum(distance_class_sizes(PolygonKind.HEXAGON, PolygonOrder(s, t)))
    return {
        "case": "2F4:P1/P2 class-size sum",
        "kinds": ["hexagon"],
        "displayed": "s^3t^2 + s^2(t+1) + s(t+1)",
        "displayed_value": str(printed),
        "exact_index": str(true),
        "match": printed == true,
    }


def case_crosscheck(case: CatalogueCase, m: int, kind: PolygonKind) -> str:
    rows = _rows_for(case, kind)
    if not rows:
        return "n/a"
    return "match" if all(check_display(d, case, m)["match"] for d in rows) else "mismatch"
