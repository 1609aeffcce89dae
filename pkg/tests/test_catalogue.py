import pytest

from polygon_elim.catalogue import (
    PARABOLIC,
    SUBFIELD,
    TWO_TRANSITIVE,
    CatalogueError,
    Family,
    SubfieldParams,
    case_point_count,
    enumerate_cases,
    find_case,
    group_order,
    parabolic_subdegrees,
    stabiliser_order,
)
from polygon_elim.polygon import PolygonKind, PolygonOrder, point_count

SZ, SR, LR = Family.SUZUKI, Family.SMALL_REE, Family.LARGE_REE


def test_group_orders():
    assert group_order(SZ, 3) == 29_120 == 64 * 65 * 7
    assert group_order(SR, 3) == 10_073_444_472 == 19683 * 19684 * 26
    assert group_order(LR, 3) == 8**12 * (8**6 + 1) * (8**4 - 1) * (8**3 + 1) * 7


@pytest.mark.parametrize("m", [1, 2, 4, 0])
def test_group_order_rejects_bad_m(m):
    with pytest.raises(ValueError):
        group_order(SZ, m)


def test_suzuki_m3_cases():
    labels = [c.label for c in enumerate_cases(SZ, 3)]
    assert labels == ["Sz:(i)", "Sz:(ii)", "Sz:(iii)+", "Sz:(iii)-"]


def test_suzuki_m9_has_subfield():
    subs = [c for c in enumerate_cases(SZ, 9) if SUBFIELD in c.traits]
    assert [c.subfield for c in subs] == [SubfieldParams(3, 3)]


def test_small_ree_m3_subfield_q0_3():
    subs = [c for c in enumerate_cases(SR, 3) if SUBFIELD in c.traits]
    assert [c.subfield for c in subs] == [SubfieldParams(1, 3)]


def test_case_counts():
    assert len(enumerate_cases(SR, 3)) == 6
    assert len(enumerate_cases(LR, 3)) == 12
    assert len(enumerate_cases(LR, 15)) == 13  # (l, r) = (5, 3) and (3, 5)


def test_stabiliser_examples():
    assert stabiliser_order(find_case(SZ, 3, "(ii)"), 3) == 14
    assert stabiliser_order(find_case(SR, 3, "(iii)"), 3) == 168 == 4 * 14 * 3
    assert stabiliser_order(find_case(LR, 3, "(ix)+"), 3) == 16_224 == 96 * 13**2


def test_point_count_examples():
    assert case_point_count(SZ, 3, find_case(SZ, 3, "(ii)")) == 2080 == 29120 // 14
    q = 27
    assert case_point_count(SR, 3, find_case(SR, 3, "(ii)")) == q**2 * (q**2 - q + 1) == 512_487
    q = 8
    assert (
        case_point_count(LR, 3, find_case(LR, 3, "P1"))
        == 1_210_323_465
        == (q**4 - q**2 + 1) * (q**3 + 1) * (q**2 + 1) * (q + 1)
    )


@pytest.mark.parametrize("m", [3, 5, 7, 9, 11, 13])
@pytest.mark.parametrize("family", list(Family))
def test_stabilisers_divide_group(family, m):
    g = group_order(family, m)
    for case in enumerate_cases(family, m):
        assert g % stabiliser_order(case, m) == 0, case.label


def test_subdegrees_examples():
    p1, p2 = find_case(LR, 3, "P1"), find_case(LR, 3, "P2")
    assert parabolic_subdegrees(p1, 3) == [8 * 65, 8**4 * 65, 8**7 * 65, 8**10]
    assert parabolic_subdegrees(p2, 3) == [64 * 9, 8**5 * 9, 8**8 * 9, 8**11]
    for m in (3, 5, 7, 9):
        assert parabolic_subdegrees(find_case(LR, m, "P1"), m)[3] == 2 ** (10 * m)
    with pytest.raises(CatalogueError):
        parabolic_subdegrees(find_case(LR, 3, "(iii)"), 3)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_subdegree_partition_and_classical_counts(m):
    q = 2**m
    for label, order in (("P1", (q, q * q)), ("P2", (q * q, q))):
        case = find_case(LR, m, label)
        n = case_point_count(LR, m, case)
        assert 1 + sum(parabolic_subdegrees(case, m)) == n
        assert point_count(PolygonKind.OCTAGON, PolygonOrder(*order)) == n


@pytest.mark.parametrize("m", [3, 5, 7])
def test_suzuki_dihedral_index(m):
    q = 2**m
    assert case_point_count(SZ, m, find_case(SZ, m, "(ii)")) * 2 == q * q * (q * q + 1)


def test_traits():
    assert TWO_TRANSITIVE in find_case(SZ, 3, "(i)").traits
    assert TWO_TRANSITIVE in find_case(SR, 3, "(i)").traits
    p1 = find_case(LR, 3, "P1")
    assert PARABOLIC in p1.traits and TWO_TRANSITIVE not in p1.traits and p1.rank == 5


def test_find_case_unknown():
    with pytest.raises(CatalogueError):
        find_case(SZ, 3, "(iv)")


def test_mismatched_family_is_a_hard_error():
    with pytest.raises(CatalogueError):
        case_point_count(SR, 3, find_case(SZ, 3, "(ii)"))
