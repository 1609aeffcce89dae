"""Verdict pipeline for (family, m, maximal subgroup case, polygon kind).

Tests run in a fixed order and the first decisive one wins:

1. two-transitive      -- the action is 2-transitive, so distances collapse
2. rank-pigeonhole     -- rank 5 on an octagon forces distance-transitivity
3. subdegree-partition -- distance classes of a hexagon as unions of orbits
4. valuation           -- divisibility lower bounds (module ``bounds``)
5. refined-octagon     -- 3-adic split analysis for 2G2 subfield octagons
6. parameter-existence -- solve the point-count equation for (s, t)

Every attempted test is logged in the verdict's evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from math import gcd

from .arith import DEFAULT_EFFORT, Factorization, cmp_scaled_power, factorize, p_valuation
from .bounds import valuation_test
from .catalogue import (
    SUBFIELD,
    TWO_TRANSITIVE,
    CatalogueCase,
    Family,
    case_point_count,
    field_size,
    parabolic_subdegrees,
)
from .polygon import (
    PolygonKind,
    PolygonOrder,
    distance_class_sizes,
    order_admissible,
    point_count,
    solve_orders,
)

__all__ = [
    "Outcome",
    "Verdict",
    "evaluate_case",
    "parameter_existence_test",
    "rank_pigeonhole_test",
    "refined_octagon_test",
    "subdegree_assignments",
    "subdegree_partition_test",
    "two_transitive_test",
]

TEST_TWO_TRANSITIVE = "two-transitive"
TEST_RANK = "rank-pigeonhole"
TEST_SUBDEGREE = "subdegree-partition"
TEST_VALUATION = "valuation"
TEST_REFINED = "refined-octagon"
TEST_PARAMETERS = "parameter-existence"


class Outcome(Enum):
    CLASSICAL = "Classical"
    ELIMINATED = "Eliminated"
    SURVIVES = "Survives"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    test: str | None = None
    witnesses: tuple[PolygonOrder, ...] = ()
    reasons: tuple[str, ...] = ()
    evidence: dict = field(default_factory=dict, compare=False)

    @property
    def definitive(self) -> bool:
        return self.outcome is not Outcome.INCONCLUSIVE


# -- structural tests ------------------------------------------------------


def two_transitive_test(case: CatalogueCase) -> dict | None:
    if TWO_TRANSITIVE not in case.traits:
        return None
    return {
        "rationale": "2-transitive on points: all point pairs at one distance, "
        "so the incidence graph has diameter <= 3 < 6",
    }


def rank_pigeonhole_test(case: CatalogueCase, kind: PolygonKind) -> Verdict | None:
    """Classical verdict when the rank equals the number of distance classes.

    Each distance class is a nonempty union of stabiliser orbits; with as many
    orbits as classes every class is a single orbit, so the action is
    distance-transitive and the octagon is the classical one (or its dual).
    """
    if kind is not PolygonKind.OCTAGON or not case.is_parabolic or case.rank is None:
        return None
    if case.family is not Family.LARGE_REE or case.rank != kind.num_distance_classes:
        return None
    return Verdict(
        Outcome.CLASSICAL,
        TEST_RANK,
        evidence={
            "rank": case.rank,
            "distance_classes": kind.num_distance_classes,
            "rationale": "orbits = distance classes, hence distance-transitive; "
            "classical generalised octagon or its dual",
        },
    )


def subdegree_assignments(subdegrees: list[int], n: int | None = None) -> dict:
    """Try every surjective assignment of orbit sizes to hexagon distance classes.

    For class sizes A = s(t+1), B = s^2 t(t+1), C = s^3 t^2 the order is
    recovered exactly: st = B/A, s = C A^2 / B^2, t = st/s.
    """
    nclasses = PolygonKind.HEXAGON.num_distance_classes - 1
    total = sum(subdegrees)
    target = total + 1 if n is None else n
    transcript = []
    witnesses = []
    for assignment in product(range(nclasses), repeat=len(subdegrees)):
        if set(assignment) != set(range(nclasses)):
            continue
        sums = [0] * nclasses
        for k, cls in enumerate(assignment):
            sums[cls] += subdegrees[k]
        a, b, c = sums
        record = {"assignment": list(assignment), "sizes": [str(x) for x in sums]}
        transcript.append(record)
        if b % a:
            record["result"] = "B/A not integral"
            continue
        st = b // a
        num, den = c * a * a, b * b
        if num % den:
            record["result"] = "C*A^2/B^2 not integral"
            continue
        s = num // den
        if s == 0 or st % s:
            record["result"] = "st/s not integral"
            continue
        order = PolygonOrder(s, st // s)
        if order.s < 2 or order.t < 2:
            record["result"] = f"not thick {order}"
            continue
        if not order_admissible(PolygonKind.HEXAGON, order):
            record["result"] = f"st not a square for {order}"
            continue
        if distance_class_sizes(PolygonKind.HEXAGON, order) != sums:
            record["result"] = f"class sizes of {order} differ"
            continue
        if point_count(PolygonKind.HEXAGON, order) != target:
            record["result"] = f"point count of {order} differs"
            continue
        record["result"] = f"consistent {order}"
        witnesses.append((order, assignment))
    return {
        "subdegrees": [str(x) for x in subdegrees],
        "assignments_tried": len(transcript),
        "transcript": transcript,
        "witnesses": [[str(o), list(a)] for o, a in witnesses],
        "eliminated": not witnesses,
        "_orders": sorted({o for o, _ in witnesses}),
    }


def subdegree_partition_test(
    case: CatalogueCase, m: int, kind: PolygonKind = PolygonKind.HEXAGON
) -> dict | None:
    """Run :func:`subdegree_assignments` on a 2F4 parabolic hexagon case."""
    if kind is not PolygonKind.HEXAGON or not case.is_parabolic:
        return None
    if case.family is not Family.LARGE_REE:
        return None
    n = case_point_count(case.family, m, case)
    return subdegree_assignments(parabolic_subdegrees(case, m), n)


# -- refined 3-adic test ---------------------------------------------------

# Exact stand-ins for the irrational exponents: 3**eps = 81/52,
# 3**delta = 27/26, 3**delta' = 243/242, 3**delta'' = 81/80.
THREE_POW_EPS = Fraction(81, 52)
THREE_POW_DELTA = Fraction(27, 26)
THREE_POW_DELTA1 = Fraction(243, 242)
THREE_POW_DELTA2 = Fraction(81, 80)


def _cmp_pow3(e6_x: int, cx: Fraction, e6_y: int, cy: Fraction) -> int:
    """Compare 3**(e6_x/6) * cx with 3**(e6_y/6) * cy exactly (sixth powers)."""
    lo = min(e6_x, e6_y)
    lhs = Fraction(3 ** (e6_x - lo)) * cx**6
    rhs = Fraction(3 ** (e6_y - lo)) * cy**6
    return (lhs > rhs) - (lhs < rhs)


def refined_constants() -> dict[str, bool]:
    """The three constant gaps the split argument needs, checked exactly."""
    return {
        "4/3-2delta>eps": _cmp_pow3(8, THREE_POW_DELTA**-2, 0, THREE_POW_EPS) > 0,
        "2/3-2delta'>eps": _cmp_pow3(4, THREE_POW_DELTA1**-2, 0, THREE_POW_EPS) > 0,
        "1-2delta''>eps": _cmp_pow3(6, THREE_POW_DELTA2**-2, 0, THREE_POW_EPS) > 0,
    }


def _split_subcase(c: int, d: int) -> str:
    if c >= d:
        return "c>=d"
    if 2 * c >= d + 1:
        return "d/2+1/2<=c<d"
    if 2 * c <= d - 1:
        return "c<=d/2-1/2"
    return "c=d/2"


def _close_split(n: int, b: int, c: int, d: int) -> dict:
    """Replay one (c, d) split; closed means |P| would exceed 3**(7b/3+eps)."""
    sub = _split_subcase(c, d)
    rec: dict = {"c": c, "d": d, "subcase": sub}
    p3c, p3d = 3**c, 3**d
    if sub == "c>=d":
        # s >= 3^c - 1 > 3^(c-1/2), t > 3^d  =>  |P| > 3^b (st)^2 > 3^(3b-1)
        need = c >= 1 and (p3c - 1) ** 2 * 3 > p3c * p3c
        e6, coef = 6 * (3 * b - 1), Fraction(1)
    elif sub == "d/2+1/2<=c<d":
        # s >= 3^c - 1 >= 3^(c-delta) needs c >= 3; t > 3^c
        need = c >= 3 and 27 * (p3c - 1) >= 26 * p3c
        e6, coef = 6 * (b + 4 * c), THREE_POW_DELTA**-2
    elif sub == "c<=d/2-1/2":
        # st >= 3^d - 1 >= 3^(d-delta') needs d >= 5
        need = d >= 5 and 243 * (p3d - 1) >= 242 * p3d
        e6, coef = 6 * (b + 2 * d), THREE_POW_DELTA1**-2
    else:
        # (s+1)(st+1) = 3^b exactly would force n = 3^b((3^d-1)^2+1)
        k = n // 3**b
        exact = 3**b * ((p3d - 1) ** 2 + 1)
        rec["n/3^b mod 3"] = k % 3
        rec["equality_excluded_by"] = (
            "congruence" if k % 3 != 2 else ("value" if n != exact else None)
        )
        # cofactor coprime to 6 makes (s+1)(st+1) >= 5*3^b, then st >= 3^(d-delta'')
        need = (
            n != exact
            and gcd(k, 6) == 1
            and d >= 4
            and 81 * (p3d - 1) >= 80 * p3d
        )
        e6, coef = 6 * (b + 1 + 2 * d), THREE_POW_DELTA2**-2
    beats = _cmp_pow3(e6, coef, 14 * b, THREE_POW_EPS) >= 0
    rec["requirements_met"] = bool(need)
    rec["bound_exceeds_target"] = beats
    rec["closed"] = bool(need and beats)
    return rec


def refined_octagon_test(n: int) -> dict:
    """3-adic split argument for an octagon point count ``n``.

    Preconditions (checked, never assumed): b = v_3(n) >= 6, n odd,
    n / 3**b prime to 6, and n < 3**(7b/3 + eps), i.e. 52^3 n^3 < 3^(7b+12).
    Every split b = c + d with 3^c || s+1 and 3^d || st+1 is then shown to
    force n > 3**(7b/3 + eps). Returns evidence with ``eliminated`` set only
    when every split closes; otherwise the failing precondition or split is
    recorded and the test abstains.
    """
    b = p_valuation(3, n)
    a = p_valuation(2, n)
    k = n // 3**b
    pre = {
        "b": b,
        "b>=6": b >= 6,
        "v2(n)=0": a == 0,
        "n/3^b prime to 6": gcd(k, 6) == 1,
        "52^3 n^3 < 3^(7b+12)": cmp_scaled_power(n**3, 3, 7 * b, 81**3, 52**3) < 0,
    }
    ev: dict = {"point_count": str(n), "preconditions": pre, "eliminated": False}
    failed = [name for name, ok in pre.items() if name != "b" and not ok]
    if failed:
        ev["abstain"] = "precondition failed: " + ", ".join(failed)
        return ev
    ev["constants"] = refined_constants()
    splits = [_close_split(n, b, c, b - c) for c in range(b + 1)]
    subcases: dict[str, dict] = {}
    for name in ("c>=d", "d/2+1/2<=c<d", "c<=d/2-1/2", "c=d/2"):
        mine = [s for s in splits if s["subcase"] == name]
        subcases[name] = {
            "splits": [[s["c"], s["d"]] for s in mine],
            "closed": all(s["closed"] for s in mine),
        }
    ev["subcases"] = subcases
    ev["splits"] = splits
    open_splits = [s for s in splits if not s["closed"]]
    if open_splits or not all(ev["constants"].values()):
        ev["abstain"] = "unclosed splits: " + ", ".join(
            f"(c={s['c']},d={s['d']})" for s in open_splits
        )
        return ev
    ev["eliminated"] = True
    return ev


# -- parameter existence ---------------------------------------------------


def parameter_existence_test(
    kind: PolygonKind, n: int, factorization: Factorization | None = None, effort: int = DEFAULT_EFFORT
) -> dict:
    """Solve the point-count equation for admissible (s, t).

    ``result`` is "eliminated" (no solution), "survives" (witnesses listed)
    or "undecidable" (factorization incomplete).
    """
    f = factorization if factorization is not None else factorize(n, effort)
    ev: dict = {"point_count": str(n), "factorization": f.as_dict()}
    if not f.complete:
        ev["result"] = "undecidable"
        ev["reason"] = f"incomplete factorization: cofactor {f.cofactor} unsplit"
        return ev
    found = sorted(solve_orders(kind, n, f))
    ev["divisors_examined"] = f.num_divisors()
    ev["solutions"] = [str(o) for o in found]
    ev["result"] = "survives" if found else "eliminated"
    ev["_orders"] = found
    return ev


# -- pipeline --------------------------------------------------------------


def _public(ev: dict) -> dict:
    return {k: v for k, v in ev.items() if not k.startswith("_")}


def evaluate_case(
    family: Family,
    m: int,
    case: CatalogueCase,
    kind: PolygonKind,
    effort: int = DEFAULT_EFFORT,
) -> Verdict:
    n = case_point_count(family, m, case)
    attempts: list[dict] = []
    evidence: dict = {"point_count": str(n), "q": str(field_size(family, m)), "attempts": attempts}

    def done(outcome, test=None, witnesses=(), reasons=()):
        return Verdict(outcome, test, tuple(witnesses), tuple(reasons), evidence)

    ev = two_transitive_test(case)
    attempts.append({"test": TEST_TWO_TRANSITIVE, "fired": ev is not None, **(ev or {})})
    if ev is not None:
        return done(Outcome.ELIMINATED, TEST_TWO_TRANSITIVE)

    if kind is PolygonKind.OCTAGON:
        v = rank_pigeonhole_test(case, kind)
        attempts.append({"test": TEST_RANK, "fired": v is not None, **(v.evidence if v else {})})
        if v is not None:
            q = field_size(family, m)
            evidence["classical_order"] = str(
                PolygonOrder(q, q * q) if case.roman == "P1" else PolygonOrder(q * q, q)
            )
            return done(Outcome.CLASSICAL, TEST_RANK)

    survivors: list[PolygonOrder] = []
    if kind is PolygonKind.HEXAGON and case.is_parabolic and family is Family.LARGE_REE:
        ev = subdegree_partition_test(case, m, kind)
        attempts.append({"test": TEST_SUBDEGREE, "fired": ev["eliminated"], **_public(ev)})
        if ev["eliminated"]:
            return done(Outcome.ELIMINATED, TEST_SUBDEGREE)
        survivors = ev["_orders"]

    ev = valuation_test(kind, n)
    attempts.append({"test": TEST_VALUATION, "fired": ev is not None, **(ev or {})})
    if ev is not None:
        evidence.update(a=ev["a"], b=ev["b"], threshold=ev["threshold"], part=ev["part"])
        return done(Outcome.ELIMINATED, TEST_VALUATION)
    evidence.update(a=p_valuation(2, n), b=p_valuation(3, n))

    if (
        kind is PolygonKind.OCTAGON
        and family is Family.SMALL_REE
        and SUBFIELD in case.traits
    ):
        ev = refined_octagon_test(n)
        attempts.append({"test": TEST_REFINED, "fired": ev["eliminated"], **ev})
        if ev["eliminated"]:
            return done(Outcome.ELIMINATED, TEST_REFINED)

    ev = parameter_existence_test(kind, n, effort=effort)
    attempts.append(
        {"test": TEST_PARAMETERS, "fired": ev["result"] == "eliminated", **_public(ev)}
    )
    if ev["result"] == "eliminated":
        return done(Outcome.ELIMINATED, TEST_PARAMETERS)
    if ev["result"] == "undecidable":
        return done(Outcome.INCONCLUSIVE, reasons=[ev["reason"]])
    return done(Outcome.SURVIVES, TEST_PARAMETERS, witnesses=ev["_orders"] or survivors)
