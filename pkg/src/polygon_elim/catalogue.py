"""Orders of Sz(q), 2G2(q), 2F4(q) and of their maximal subgroups.

Each maximal subgroup class (up to conjugacy in the simple group) becomes a
:class:`CatalogueCase`. Torus classes carrying a +/- sign are separate rows,
and subfield classes are expanded over every admissible (l, r) with m = l*r.
Dihedral groups follow the D_n = order n convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .arith import is_prime

__all__ = [
    "CatalogueCase",
    "CatalogueError",
    "Family",
    "SubfieldParams",
    "case_point_count",
    "enumerate_cases",
    "find_case",
    "group_order",
    "parabolic_subdegrees",
    "stabiliser_order",
]


class CatalogueError(ValueError):
    """A catalogue lookup or consistency failure (a bug, not a math outcome)."""


class Family(Enum):
    SUZUKI = "Sz"
    SMALL_REE = "2G2"
    LARGE_REE = "2F4"

    @property
    def prime(self) -> int:
        return 3 if self is Family.SMALL_REE else 2

    @property
    def cli_name(self) -> str:
        return _CLI_NAMES[self]

    @classmethod
    def parse(cls, text: str) -> Family:
        key = text.strip().lower()
        for fam, name in _CLI_NAMES.items():
            if key in (name, fam.value.lower(), fam.name.lower()):
                return fam
        raise ValueError(f"unknown family {text!r}")


_CLI_NAMES = {
    Family.SUZUKI: "sz",
    Family.SMALL_REE: "ree-small",
    Family.LARGE_REE: "ree-large",
}

FAMILY_ORDER = (Family.SUZUKI, Family.SMALL_REE, Family.LARGE_REE)


@dataclass(frozen=True)
class SubfieldParams:
    l: int  # noqa: E741  q0 = p**l
    r: int

    def __str__(self) -> str:
        return f"l={self.l},r={self.r}"


TWO_TRANSITIVE = "two-transitive"
PARABOLIC = "parabolic"
SUBFIELD = "subfield"
SIGN_VARIANT = "sign-variant"
TORUS_NORMALISER = "torus-normaliser"


@dataclass(frozen=True)
class CatalogueCase:
    family: Family
    roman: str  # "(ii)", "P1", ...
    structure: str
    sign: int = 0
    subfield: SubfieldParams | None = None
    traits: frozenset[str] = field(default_factory=frozenset)
    rank: int | None = None
    position: int = 0  # canonical catalogue order

    @property
    def label(self) -> str:
        text = f"{self.family.value}:{self.roman}"
        if self.sign:
            text += "+" if self.sign > 0 else "-"
        if self.subfield is not None:
            text += f"[{self.subfield}]"
        return text

    @property
    def is_parabolic(self) -> bool:
        return PARABOLIC in self.traits

    def sort_key(self) -> tuple:
        sub = (self.subfield.l, self.subfield.r) if self.subfield else (0, 0)
        return (self.position, -self.sign, sub)


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 3 or m % 2 == 0:
        raise ValueError(f"field exponent m must be odd and >= 3, got {m!r}")


def _field(family: Family, m: int) -> int:
    return family.prime**m


def _root(family: Family, m: int) -> int:
    """sqrt(2q) for q = 2**m or sqrt(3q) for q = 3**m (m odd)."""
    return family.prime ** ((m + 1) // 2)


def _order_formula(family: Family, q: int) -> int:
    if family is Family.SUZUKI:
        return q**2 * (q**2 + 1) * (q - 1)
    if family is Family.SMALL_REE:
        return q**3 * (q**3 + 1) * (q - 1)
    return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)


def group_order(family: Family, m: int) -> int:
    _check_m(m)
    return _order_formula(family, _field(family, m))


def _subfield_params(family: Family, m: int) -> list[SubfieldParams]:
    out = []
    for r in range(3, m + 1, 2):
        if m % r == 0 and is_prime(r):
            l = m // r  # noqa: E741
            if family is Family.SUZUKI and l < 2:  # q0 > 2
                continue
            out.append(SubfieldParams(l, r))
    return out


# (roman, structure, traits, signed, rank)
_ROWS: dict[Family, list[tuple]] = {
    Family.SUZUKI: [
        ("(i)", "E_q.E_q.C_{q-1}", {TWO_TRANSITIVE, PARABOLIC}, False, 2),
        ("(ii)", "D_{2(q-1)}", {TORUS_NORMALISER}, False, None),
        ("(iii)", "C_{q±√(2q)+1}:C_4", {TORUS_NORMALISER}, True, None),
        ("(iv)", "Sz(q_0)", {SUBFIELD}, False, None),
    ],
    Family.SMALL_REE: [
        ("(i)", "E_q.E_q.E_q.C_{q-1}", {TWO_TRANSITIVE, PARABOLIC}, False, 2),
        ("(ii)", "C_2 x PSL_2(q)", set(), False, None),
        ("(iii)", "(E_4 x D_{(q+1)/2}):C_3", {TORUS_NORMALISER}, False, None),
        ("(iv)", "C_{q±√(3q)+1}:C_6", {TORUS_NORMALISER}, True, None),
        ("(v)", "2G2(q_0)", {SUBFIELD}, False, None),
    ],
    Family.LARGE_REE: [
        ("P1", "[q^10]:(Sz(q) x C_{q-1})", {PARABOLIC}, False, 5),
        ("P2", "[q^11]:GL_2(q)", {PARABOLIC}, False, 5),
        ("(iii)", "SU_3(q):C_2", set(), False, None),
        ("(iv)", "PGU_3(q):C_2", set(), False, None),
        ("(v)", "Sz(q) wr C_2", set(), False, None),
        ("(vi)", "Sp_4(q):C_2", set(), False, None),
        ("(vii)", "2F4(q_0)", {SUBFIELD}, False, None),
        ("(viii)", "(C_{q+1} x C_{q+1}):GL_2(3)", {TORUS_NORMALISER}, False, None),
        ("(ix)", "C_{(q±√(2q)+1)^2}:[96]", {TORUS_NORMALISER}, True, None),
        ("(x)", "C_{q^2+q+1±√(2q)(q+1)}:C_12", {TORUS_NORMALISER}, True, None),
    ],
}


def enumerate_cases(family: Family, m: int) -> list[CatalogueCase]:
    """Every maximal subgroup class of the simple group, in catalogue order."""
    _check_m(m)
    cases = []
    for pos, (roman, structure, traits, signed, rank) in enumerate(_ROWS[family]):
        base = dict(family=family, roman=roman, structure=structure, rank=rank, position=pos)
        if SUBFIELD in traits:
            for params in _subfield_params(family, m):
                cases.append(CatalogueCase(subfield=params, traits=frozenset(traits), **base))
        elif signed:
            for sign in (1, -1):
                cases.append(
                    CatalogueCase(sign=sign, traits=frozenset(traits | {SIGN_VARIANT}), **base)
                )
        else:
            cases.append(CatalogueCase(traits=frozenset(traits), **base))
    return cases


def find_case(family: Family, m: int, label: str) -> CatalogueCase:
    """Look a case up by label; the family prefix is optional."""
    want = label.strip().replace(" ", "")
    for case in enumerate_cases(family, m):
        if want in (case.label, case.label.split(":", 1)[1]):
            return case
    known = ", ".join(c.label for c in enumerate_cases(family, m))
    raise CatalogueError(f"no case {label!r} for {family.value} m={m}; known: {known}")


def stabiliser_order(case: CatalogueCase, m: int) -> int:
    """|S_x| for the case, read off its stated structure."""
    _check_m(m)
    fam = case.family
    q = _field(fam, m)
    rt = _root(fam, m)
    sg = case.sign
    key = case.roman
    if case.subfield is not None:
        return _order_formula(fam, fam.prime**case.subfield.l)
    if fam is Family.SUZUKI:
        if key == "(i)":
            return q**2 * (q - 1)
        if key == "(ii)":
            return 2 * (q - 1)
        if key == "(iii)":
            return 4 * (q + sg * rt + 1)
    elif fam is Family.SMALL_REE:
        if key == "(i)":
            return q**3 * (q - 1)
        if key == "(ii)":
            return 2 * (q * (q**2 - 1) // 2)  # C_2 x PSL_2(q), |PSL_2(q)| = q(q^2-1)/2
        if key == "(iii)":
            return 4 * ((q + 1) // 2) * 3
        if key == "(iv)":
            return 6 * (q + sg * rt + 1)
    else:
        if key == "P1":
            return q**10 * (q**2 * (q**2 + 1) * (q - 1)) * (q - 1)
        if key == "P2":
            return q**11 * (q * (q**2 - 1) * (q - 1))
        if key in ("(iii)", "(iv)"):
            return 2 * q**3 * (q**3 + 1) * (q**2 - 1)
        if key == "(v)":
            return 2 * (q**2 * (q**2 + 1) * (q - 1)) ** 2
        if key == "(vi)":
            return 2 * q**4 * (q**4 - 1) * (q**2 - 1)
        if key == "(viii)":
            return 48 * (q + 1) ** 2
        if key == "(ix)":
            return 96 * (q + sg * rt + 1) ** 2
        if key == "(x)":
            return 12 * (q**2 + q + 1 + sg * rt * (q + 1))
    raise CatalogueError(f"no order formula for {case.label}")


def case_point_count(family: Family, m: int, case: CatalogueCase) -> int:
    """|S : S_x|; non-divisibility is a catalogue bug and raises."""
    if case.family is not family:
        raise CatalogueError(f"{case.label} is not a {family.value} case")
    g = group_order(family, m)
    h = stabiliser_order(case, m)
    if g % h:
        raise CatalogueError(f"|S_x|={h} does not divide |S|={g} for {case.label}, m={m}")
    return g // h


def parabolic_subdegrees(case: CatalogueCase, m: int) -> list[int]:
    """Nontrivial subdegrees of 2F4(q) on the cosets of P1 or P2."""
    if case.family is not Family.LARGE_REE or case.roman not in ("P1", "P2"):
        raise CatalogueError(f"{case.label} is not a 2F4 parabolic")
    q = _field(Family.LARGE_REE, m)
    if case.roman == "P1":
        return [q * (q**2 + 1), q**4 * (q**2 + 1), q**7 * (q**2 + 1), q**10]
    return [q**2 * (q + 1), q**5 * (q + 1), q**8 * (q + 1), q**11]


def field_size(family: Family, m: int) -> int:
    _check_m(m)
    return _field(family, m)
